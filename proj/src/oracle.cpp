#include "monosym/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "monosym/json_io.hpp"
#include "monosym/qlinalg.hpp"

namespace monosym::oracle {

using symfunc::power_sum;

nlohmann::json Certificate::to_json() const {
  return {{"claim", claim},
          {"params", params},
          {"status", verified ? "verified" : "failed"},
          {"evidence", evidence},
          {"runtime_sec", runtime_sec}};
}

namespace {

class Timer {
 public:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Row-by-row elimination; enough for rank, no back substitution.
int rank_of_rows(std::vector<QVector> rows, int cols) {
  std::map<int, QVector> echelon;  // leading column -> normalized row
  int rank = 0;
  for (auto& r : rows) {
    for (const auto& [lead, er] : echelon) {
      if (r[lead] == 0) continue;
      const Rational f = r[lead];
      for (int c = lead; c < cols; ++c)
        if (er[c] != 0) r[c] -= f * er[c];
    }
    int lead = -1;
    for (int c = 0; c < cols; ++c)
      if (r[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    const Rational inv = Rational(1) / r[lead];
    for (int c = lead; c < cols; ++c) r[c] *= inv;
    echelon.emplace(lead, std::move(r));
    if (++rank == cols) break;
  }
  return rank;
}

// Image under x1 -> t, x2 -> -t, x_k -> x_k; target variable 0 is t.
Poly t_substitution(const Poly& p) {
  const int n = p.n_vars();
  const int m = n - 1;
  std::vector<Poly> images;
  images.push_back(Poly::variable(m, 0));
  images.push_back(-Poly::variable(m, 0));
  for (int v = 2; v < n; ++v) images.push_back(Poly::variable(m, v - 1));
  return p.substitute(images);
}

Rational random_coef(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  return Rational(dist(rng));
}

// Random polynomial in odd power sums, homogeneous of degree d.
Poly random_odd_power_poly(int n, int d, std::mt19937_64& rng) {
  Poly acc(n);
  for (const auto& lam : partitions_of(d, d)) {
    if (std::any_of(lam.parts.begin(), lam.parts.end(), [](int p) { return p % 2 == 0; }))
      continue;
    const Rational c = random_coef(rng);
    if (c == 0) continue;
    Poly prod = Poly::constant(n, c);
    for (int part : lam.parts) prod = prod * power_sum(n, part);
    acc += prod;
  }
  return acc;
}

Poly random_symmetric(int n, int s, std::mt19937_64& rng) {
  Poly acc(n);
  for (const auto& lam : partitions_of(s, n)) {
    const Rational c = random_coef(rng);
    if (c == 0) continue;
    acc += symfunc::monomial_sym(n, lam).scaled(c);
  }
  return acc;
}

long count_ascending_rec(int slots, int min_val, int s) {
  if (slots == 0) return s == 0 ? 1 : 0;
  long total = 0;
  for (int u = min_val; u <= s; ++u) total += count_ascending_rec(slots - 1, u, s - u);
  return total;
}

long count_weighted_rec(int weight, int s) {
  if (weight == 0) return s == 0 ? 1 : 0;
  long total = 0;
  for (int v = 0; weight * v <= s; ++v) total += count_weighted_rec(weight - 1, s - weight * v);
  return total;
}

}  // namespace

int dim_kernel(int n, int d) {
  if (n < 2 || d < 0) throw std::invalid_argument("dim_kernel: bad arguments");
  const auto parts = partitions_of(d, n);
  const int cols = static_cast<int>(parts.size());
  std::map<Exponents, QVector> constraint;  // image monomial with t-exp >= 1 -> row
  for (int col = 0; col < cols; ++col) {
    const Poly image = t_substitution(symfunc::monomial_sym(n, parts[col]));
    for (const auto& [e, c] : image.terms()) {
      if (e[0] == 0) continue;
      auto [it, inserted] = constraint.try_emplace(e, QVector(cols, Rational(0)));
      it->second[col] += c;
    }
  }
  std::vector<QVector> rows;
  rows.reserve(constraint.size());
  for (auto& [e, r] : constraint) rows.push_back(std::move(r));
  return cols - rank_of_rows(std::move(rows), cols);
}

Certificate verify_basis(int n, int d) {
  Timer timer;
  Certificate cert{"basis", {{"n", n}, {"d", d}}, false, {}, 0.0};
  const auto prods = enumerate_proper_products(n, d);
  const auto parts = partitions_of(d, n);
  const int cols = static_cast<int>(parts.size());

  std::vector<QVector> rows;
  bool all_members = true;
  std::string offender;
  for (const auto& pp : prods) {
    const Poly exp = pp.expand();
    if (!is_member(exp)) {
      all_members = false;
      offender = pp.to_string();
      break;
    }
    QVector row(cols, Rational(0));
    for (int c = 0; c < cols; ++c) {
      Exponents e(n, 0);
      std::copy(parts[c].parts.begin(), parts[c].parts.end(), e.begin());
      row[c] = exp.coeff(e);
    }
    rows.push_back(std::move(row));
  }

  const int count = static_cast<int>(prods.size());
  int matrix_rank = -1;
  int kernel_dim = -1;
  if (all_members) {
    matrix_rank = rank_of_rows(std::move(rows), cols);
    kernel_dim = dim_kernel(n, d);
  }
  cert.verified = all_members && matrix_rank == count && kernel_dim == count;
  cert.evidence = {{"count", count}, {"rank", matrix_rank}, {"kernel_dim", kernel_dim}};
  if (!offender.empty()) cert.evidence["non_member"] = offender;
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_r_formula(int n, int k_max) {
  Timer timer;
  Certificate cert{"r_formula", {{"n", n}, {"k_max", k_max}}, true, {}, 0.0};
  const NParams P = params(n);
  nlohmann::json checked = nlohmann::json::array();
  for (int k = 0; k <= k_max; ++k) {
    const int deg = 2 * k + 2 * P.j + 1;
    const Poly lhs = reduce_mod_I(symfunc::r_nk(n, deg));
    // h_{(i,k)} with squared variables
    std::vector<Poly> squares;
    for (int v = 0; v < P.i; ++v) squares.push_back(Poly::variable(P.i, v).pow(2));
    const Poly rhs =
        symfunc::complete_h(P.i, k).substitute(squares).scaled(Rational(deg, 2 * P.j + 1));
    const bool ok = lhs == rhs;
    checked.push_back({{"k", k}, {"ok", ok}});
    if (!ok) {
      cert.verified = false;
      cert.evidence["counterexample"] = poly_to_json(lhs - rhs);
    }
  }
  cert.evidence["checked"] = std::move(checked);
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_reduction_table(int n, int k_max) {
  Timer timer;
  Certificate cert{"reduction_table", {{"n", n}, {"k_max", k_max}}, true, {}, 0.0};
  const NParams P = params(n);
  std::vector<Poly> squares;
  for (int v = 0; v < P.i; ++v) squares.push_back(Poly::variable(P.i, v).pow(2));
  int checks = 0;
  auto expect = [&](const Poly& got, const Poly& want, const std::string& what) {
    ++checks;
    if (got == want) return;
    cert.verified = false;
    cert.evidence["failed"] = what;
  };
  for (int k = 0; k <= k_max; ++k) {
    expect(reduce_mod_I(power_sum(n, 2 * k + 1)), Poly(P.i), "p_odd");
    if (k >= 1) {
      Poly two_even(P.i);
      for (int v = 0; v < P.i; ++v) {
        Exponents e(P.i, 0);
        e[v] = 2 * k;
        two_even.add_term(e, 2);
      }
      expect(reduce_mod_I(power_sum(n, 2 * k)), two_even, "p_even");
      expect(reduce_mod_I(symfunc::elementary(n, 2 * k + 1)), Poly(P.i), "e_odd");
      Poly e_rhs = symfunc::elementary(P.i, k).substitute(squares);
      if (k % 2 == 1) e_rhs = -e_rhs;
      expect(reduce_mod_I(symfunc::elementary(n, 2 * k)), e_rhs, "e_even");
    }
  }
  cert.evidence["checks"] = checks;
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_div_delta(int n, int d, int trials, std::uint64_t seed) {
  Timer timer;
  Certificate cert{"div_delta",
                   {{"n", n}, {"d", d}, {"trials", trials}, {"seed", seed}},
                   true,
                   {},
                   0.0};
  const int choose2 = n * (n - 1) / 2;
  std::mt19937_64 rng(seed + 1000003ULL * n + d);
  const Poly del = delta(n);
  int checked = 0;
  for (int t = 0; t < trials; ++t) {
    Poly f = random_odd_power_poly(n, d, rng);
    if (d >= choose2) f += del * random_symmetric(n, d - choose2, rng);
    if (f.is_zero()) continue;
    ++checked;
    const Poly diff = f - preimage_lift(f).expand();
    bool ok;
    if (d < choose2)
      ok = diff.is_zero();
    else
      ok = diff.is_zero() || divide_by_delta(diff).has_value();
    if (!ok) {
      cert.verified = false;
      cert.evidence["counterexample"] = poly_to_json(f);
      break;
    }
  }
  cert.evidence["checked"] = checked;
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_delta_preim(int n) {
  Timer timer;
  Certificate cert{"delta_preim", {{"n", n}}, false, {}, 0.0};
  try {
    const auto [alpha, witness] = delta_preim_identity(n);
    cert.verified = alpha != 0 && witness.scaled(alpha) == delta(n);
    cert.evidence = {{"alpha", rat_to_string(alpha)}};
  } catch (const std::exception& e) {
    cert.evidence = {{"error", e.what()}};
  }
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_delta_n3() {
  Timer timer;
  Certificate cert{"delta_n3", nlohmann::json::object(), false, {}, 0.0};
  const Poly lhs = (power_sum(3, 1).pow(3) - power_sum(3, 3)).scaled(Rational(1, 3));
  cert.verified = lhs == delta(3);
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_spanning_family(int n, int d) {
  Timer timer;
  Certificate cert{"spanning_family", {{"n", n}, {"d", d}}, false, {}, 0.0};
  const NParams P = params(n);
  const int choose2 = P.i * (2 * P.j + 1);
  const int excess = d - choose2;
  const long expected =
      (excess >= 0 && excess % 2 == 0) ? count_partitions_max_parts(excess / 2, P.i) : 0;

  // ascending i-tuples (m_1..m_i), each >= j, with sum of 2m+1 equal to d
  std::vector<std::vector<int>> family;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int min_m, int rem) -> void {
    if (static_cast<int>(cur.size()) == P.i) {
      if (rem == 0) family.push_back(cur);
      return;
    }
    for (int m = min_m; 2 * m + 1 <= rem; ++m) {
      cur.push_back(m);
      self(self, m, rem - (2 * m + 1));
      cur.pop_back();
    }
  };
  rec(rec, P.j, d);

  bool all_divisible = true;
  std::map<Exponents, int> col_of;
  std::vector<std::map<Exponents, Rational>> sparse_rows;
  for (const auto& tuple : family) {
    Poly g = Poly::constant(n, 1);
    for (int m : tuple) g = g * power_sum(n, 2 * m + 1);
    const Poly diff = g - preimage_lift(g).expand();
    auto q = divide_by_delta(diff);
    if (!q) {
      all_divisible = false;
      break;
    }
    const Poly even_part = split_even_odd(*q).first;
    std::map<Exponents, Rational> row;
    for (const auto& [e, c] : even_part.terms()) {
      col_of.try_emplace(e, static_cast<int>(col_of.size()));
      row[e] = c;
    }
    sparse_rows.push_back(std::move(row));
  }

  int family_rank = 0;
  if (all_divisible) {
    const int cols = static_cast<int>(col_of.size());
    std::vector<QVector> rows;
    for (const auto& sr : sparse_rows) {
      QVector row(cols, Rational(0));
      for (const auto& [e, c] : sr) row[col_of[e]] = c;
      rows.push_back(std::move(row));
    }
    family_rank = rank_of_rows(std::move(rows), std::max(cols, 1));
  }

  cert.verified = all_divisible &&
                  family_rank == static_cast<int>(family.size()) &&
                  static_cast<long>(family.size()) == expected;
  cert.evidence = {{"family_size", family.size()},
                   {"rank", family_rank},
                   {"young_count", expected},
                   {"divisible", all_divisible}};
  cert.runtime_sec = timer.elapsed();
  return cert;
}

Certificate verify_counting(int i_max, int s_max) {
  Timer timer;
  Certificate cert{"counting", {{"i_max", i_max}, {"s_max", s_max}}, true, {}, 0.0};
  for (int i = 1; i <= i_max && cert.verified; ++i)
    for (int s = 0; s <= s_max; ++s) {
      const long lhs = count_ascending_rec(i, 0, s);
      const long rhs = count_weighted_rec(i, s);
      if (lhs != rhs) {
        cert.verified = false;
        cert.evidence = {{"i", i}, {"s", s}, {"ascending", lhs}, {"weighted", rhs}};
        break;
      }
    }
  cert.runtime_sec = timer.elapsed();
  return cert;
}

std::vector<std::string> all_claims() {
  return {"delta_n3",  "basis",     "delta_preim",     "r_formula",
          "reduction_table", "div_delta", "spanning_family", "counting"};
}

std::vector<Certificate> run_suite(const SuiteConfig& config) {
  auto wanted = [&](const std::string& claim) {
    return std::find(config.claims.begin(), config.claims.end(), claim) != config.claims.end();
  };
  std::vector<Certificate> certs;

  if (wanted("delta_n3")) certs.push_back(verify_delta_n3());

  if (wanted("basis")) {
    for (int n = 2; n <= config.nmax; ++n)
      for (int d = 0; d <= config.dmax; ++d) {
        const long rows = count_partitions_max_parts(d, n);
        const long cols = dim_Tn(n, d);
        if (rows * cols > 10000) continue;  // desk-scale budget
        certs.push_back(verify_basis(n, d));
      }
  }

  if (wanted("delta_preim"))
    for (int n = 3; n <= std::min(config.nmax, 5); ++n) certs.push_back(verify_delta_preim(n));

  if (wanted("r_formula"))
    for (int n = 2; n <= std::min(config.nmax, 5); ++n) certs.push_back(verify_r_formula(n, 4));

  if (wanted("reduction_table"))
    for (int n = 2; n <= config.nmax; ++n) certs.push_back(verify_reduction_table(n, 4));

  if (wanted("div_delta"))
    for (int n = 2; n <= std::min(config.nmax, 5); ++n)
      for (int d = 1; d <= std::min(config.dmax, 10); ++d)
        certs.push_back(verify_div_delta(n, d, config.trials, config.seed));

  if (wanted("spanning_family"))
    for (int n = 2; n <= std::min(config.nmax, 5); ++n) {
      const NParams P = params(n);
      for (int d = P.i * (2 * P.j + 1); d <= config.dmax; ++d)
        certs.push_back(verify_spanning_family(n, d));
    }

  if (wanted("counting")) certs.push_back(verify_counting(6, 30));

  return certs;
}

std::string summary_table(const std::vector<Certificate>& certs) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& c : certs) {
    out << (c.verified ? "verified" : "FAILED  ") << "  " << c.claim << " "
        << c.params.dump() << "\n";
    if (!c.verified) ++failed;
  }
  out << certs.size() << " certificates, " << failed << " failed\n";
  return out.str();
}

}  // namespace monosym::oracle
