#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "monosym/tn.hpp"

namespace monosym::oracle {

/// Machine-readable verdict of one brute-force check. Status is
/// "verified" only when every exact equality held; a failure carries the
/// offending object in evidence.
struct Certificate {
  std::string claim;
  nlohmann::json params;
  bool verified = false;
  nlohmann::json evidence;
  double runtime_sec = 0.0;

  nlohmann::json to_json() const;
};

// dim T_n^d from scratch: coordinates are the monomial-symmetric functions,
// constraints the vanishing of every positive power of t in the image under
// x1 -> t, x2 -> -t. Independent of the proper-product machinery.
int dim_kernel(int n, int d);

// Main theorem at one (n,d) cell: membership of every proper product, full
// column rank of the expansion matrix, and column count = dim_kernel.
Certificate verify_basis(int n, int d);

// reduce_mod_I(r_{n,2k+2j+1}) = ((2k+2j+1)/(2j+1)) h_{(i,k)}(x_1^2,...,x_i^2).
Certificate verify_r_formula(int n, int k_max);

// The reduction table: p_{2k+1} -> 0, p_{2k} -> 2*sum x_l^{2k},
// e_{2k+1} -> 0, e_{2k} -> (-1)^k e_k(x_1^2,...,x_i^2).
Certificate verify_reduction_table(int n, int k_max);

// Seeded random members of T_n: exact divisibility of f - expand(PreIm(f))
// by delta for d >= C(n,2), exact equality below.
Certificate verify_div_delta(int n, int d, int trials, std::uint64_t seed);

// delta = alpha (p_{2j+1}^i - PreIm(p_{2j+1}^i)) with alpha != 0.
Certificate verify_delta_preim(int n);

// expand((p_1^3 - p_3)/3) = delta(3).
Certificate verify_delta_n3();

// The spanning family g = p_{2m_1+1}...p_{2m_i+1}, m >= j: divisibility of
// g - expand(PreIm(g)) by delta, independence of the even parts of the
// quotients, and the Young-diagram count.
Certificate verify_spanning_family(int n, int d);

// Ascending i-tuples summing to s vs. weighted solutions sum l*v_l = s,
// both by brute enumeration.
Certificate verify_counting(int i_max, int s_max);

// Every registered claim name, in suite order.
std::vector<std::string> all_claims();

struct SuiteConfig {
  std::vector<std::string> claims = all_claims();  // empty runs nothing
  int nmax = 6;
  int dmax = 12;
  int trials = 20;
  std::uint64_t seed = 20240915;
};

// Runs every registered verification within budget; failures are data,
// not exceptions.
std::vector<Certificate> run_suite(const SuiteConfig& config);

// One summary line per certificate plus a final verdict.
std::string summary_table(const std::vector<Certificate>& certs);

}  // namespace monosym::oracle
