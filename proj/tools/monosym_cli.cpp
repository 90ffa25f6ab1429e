#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monosym/json_io.hpp"
#include "monosym/oracle.hpp"
#include "monosym/parser.hpp"
#include "monosym/tn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

monosym::Poly lower_input(const std::string& src, int n) {
  return monosym::lang::lower(monosym::lang::parse(src, n), n);
}

std::string powersum_string(const monosym::symfunc::PowerSumExpr& e) {
  std::vector<std::string> names;
  for (int k = 1; k <= e.n_vars; ++k) names.push_back("p" + std::to_string(k));
  return e.expr.to_string_names(names);
}

int cmd_check(int n, const std::string& src) {
  const monosym::Poly p = lower_input(src, n);
  const monosym::Membership mem = monosym::check_member(p);
  if (mem.member) {
    std::cout << "in T_" << n << "\n";
    return kExitOk;
  }
  std::cout << "NOT in T_" << n << ": " << mem.reason << "\n";
  return kExitVerifyFailed;
}

int cmd_decompose(int n, const std::string& src, bool as_json, bool verify) {
  const monosym::Poly p = lower_input(src, n);
  const monosym::Decomposition d = monosym::decompose(p);
  if (verify && d.expand() != p) {
    std::cerr << "self-check failed: re-expansion does not match the input\n";
    return kExitVerifyFailed;
  }
  if (as_json)
    std::cout << monosym::decomposition_to_json(d).dump() << "\n";
  else
    std::cout << d.to_string() << "\n";
  return kExitOk;
}

int cmd_dim(int n, int d, bool with_oracle) {
  const long proper = monosym::dim_Tn(n, d);
  if (!with_oracle) {
    std::cout << "proper=" << proper << "\n";
    return kExitOk;
  }
  const int kernel = monosym::oracle::dim_kernel(n, d);
  const bool ok = proper == kernel;
  std::cout << "proper=" << proper << " kernel=" << kernel << (ok ? " OK" : " MISMATCH") << "\n";
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_basis(int n, int d) {
  for (const auto& pp : monosym::enumerate_proper_products(n, d))
    std::cout << pp.to_string() << "\n";
  return kExitOk;
}

int cmd_repr(int n, const std::string& src, bool as_json) {
  const monosym::Poly p = lower_input(src, n);
  const auto repr = monosym::symfunc::repr_in_power_sums(p);
  if (as_json)
    std::cout << monosym::powersum_to_json(repr).dump() << "\n";
  else
    std::cout << powersum_string(repr) << "\n";
  return kExitOk;
}

int cmd_verify(const monosym::oracle::SuiteConfig& config, const std::string& jsonl_path) {
  const auto certs = monosym::oracle::run_suite(config);
  if (!jsonl_path.empty()) {
    std::ofstream out(jsonl_path);
    if (!out) {
      std::cerr << "cannot open " << jsonl_path << "\n";
      return kExitUsage;
    }
    for (const auto& c : certs) out << c.to_json().dump() << "\n";
  }
  std::cout << monosym::oracle::summary_table(certs);
  for (const auto& c : certs)
    if (!c.verified) return kExitVerifyFailed;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for the algebra generated by odd power sums"};
  app.require_subcommand(1);

  int n = 2;
  int d = 0;
  std::string expr;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Membership test for T_n");
  check->add_option("-n", n, "variable count")->required();
  check->add_option("expr", expr, "polynomial expression")->required();

  auto* dec = app.add_subcommand("decompose", "Decompose into the proper-product basis");
  dec->add_option("-n", n, "variable count")->required();
  dec->add_option("expr", expr, "polynomial expression")->required();
  dec->add_flag("--json", as_json, "emit JSON");
  bool verify_flag = true;
  dec->add_flag("--verify,!--no-verify", verify_flag, "re-expand and compare (default on)");

  auto* dim = app.add_subcommand("dim", "Dimension of T_n^d");
  dim->add_option("-n", n, "variable count")->required();
  dim->add_option("-d", d, "degree")->required();
  bool with_oracle = false;
  dim->add_flag("--oracle", with_oracle, "cross-check against the kernel dimension");

  auto* basis = app.add_subcommand("basis", "Ordered proper-product list");
  basis->add_option("-n", n, "variable count")->required();
  basis->add_option("-d", d, "degree")->required();

  auto* repr = app.add_subcommand("repr", "Power-sum representation of a symmetric input");
  repr->add_option("-n", n, "variable count")->required();
  repr->add_option("expr", expr, "polynomial expression")->required();
  repr->add_flag("--json", as_json, "emit JSON");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  monosym::oracle::SuiteConfig config;
  if (const char* env_seed = std::getenv("MONOSYM_SEED")) config.seed = std::strtoull(env_seed, nullptr, 10);
  std::string claims_csv, jsonl_path;
  verify->add_option("--claims", claims_csv, "comma-separated claim list (default: all)");
  verify->add_option("--nmax", config.nmax, "largest variable count");
  verify->add_option("--dmax", config.dmax, "largest degree");
  verify->add_option("--seed", config.seed, "seed for randomized trials");
  verify->add_option("--trials", config.trials, "randomized trials per cell");
  verify->add_option("--jsonl", jsonl_path, "write certificates as JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(n, expr);
    if (dec->parsed()) return cmd_decompose(n, expr, as_json, verify_flag);
    if (dim->parsed()) return cmd_dim(n, d, with_oracle);
    if (basis->parsed()) return cmd_basis(n, d);
    if (repr->parsed()) return cmd_repr(n, expr, as_json);
    if (verify->parsed()) {
      if (!claims_csv.empty()) {
        config.claims.clear();
        std::stringstream ss(claims_csv);
        std::string claim;
        while (std::getline(ss, claim, ',')) config.claims.push_back(claim);
      }
      return cmd_verify(config, jsonl_path);
    }
  } catch (const monosym::lang::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
