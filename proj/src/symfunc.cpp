#include "monosym/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monosym {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << "]";
  return out.str();
}

namespace {

void partitions_rec(int d, int max_len, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (d == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(d, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(d - p, max_len - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_len) {
  if (d < 0) throw std::invalid_argument("negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(d, max_len, d, cur, out);
  return out;
}

long count_partitions_max_parts(int s, int max_parts) {
  // P(v,k) = partitions of v into exactly k parts
  std::vector<std::vector<long>> P(s + 1, std::vector<long>(max_parts + 1, 0));
  P[0][0] = 1;
  for (int v = 1; v <= s; ++v)
    for (int k = 1; k <= max_parts; ++k) {
      P[v][k] = P[v - 1][k - 1];
      if (v >= k) P[v][k] += P[v - k][k];
    }
  long total = 0;
  for (int k = 0; k <= max_parts; ++k) total += P[s][k];
  return total;
}

long count_partitions_max_part(int s, int max_part) {
  std::vector<long> dp(s + 1, 0);
  dp[0] = 1;
  for (int p = 1; p <= max_part; ++p)
    for (int v = p; v <= s; ++v) dp[v] += dp[v - p];
  return dp[s];
}

namespace symfunc {

Poly power_sum(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("power_sum: bad arguments");
  if (k == 0) return Poly::constant(n, n);
  Poly p(n);
  for (int v = 0; v < n; ++v) {
    Exponents e(n, 0);
    e[v] = k;
    p.add_term(e, 1);
  }
  return p;
}

Poly elementary(int n, int k) {
  if (n < 1 || k < 0) throw std::invalid_argument("elementary: bad arguments");
  if (k == 0) return Poly::constant(n, 1);
  if (k > n) return Poly(n);
  Poly p(n);
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Exponents e(n, 0);
    for (int v : idx) e[v] = 1;
    p.add_term(e, 1);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
  return p;
}

namespace {

void all_monomials(int rem, int pos, Exponents& e, Poly& p) {
  const int n = static_cast<int>(e.size());
  if (pos == n - 1) {
    e[pos] = rem;
    p.add_term(e, 1);
    return;
  }
  for (int v = 0; v <= rem; ++v) {
    e[pos] = v;
    all_monomials(rem - v, pos + 1, e, p);
  }
}

}  // namespace

Poly complete_h(int n, int l) {
  if (n < 1 || l < 0) throw std::invalid_argument("complete_h: bad arguments");
  Poly p(n);
  Exponents e(n, 0);
  all_monomials(l, 0, e, p);
  return p;
}

Poly monomial_sym(int n, const Partition& lam) {
  if (lam.length() > n) throw std::invalid_argument("partition longer than variable count");
  Exponents e(n, 0);
  std::copy(lam.parts.begin(), lam.parts.end(), e.begin());
  std::sort(e.begin(), e.end());
  Poly p(n);
  do {
    p.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

namespace {

Poly det_expand(const std::vector<std::vector<Poly>>& m, std::vector<int> cols, int n_vars) {
  const int k = static_cast<int>(cols.size());
  const int row = static_cast<int>(m.size()) - k;
  if (k == 0) return Poly::constant(n_vars, 1);
  Poly acc(n_vars);
  for (int t = 0; t < k; ++t) {
    const Poly& entry = m[row][cols[t]];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(k - 1);
    for (int s = 0; s < k; ++s)
      if (s != t) rest.push_back(cols[s]);
    Poly minor = det_expand(m, std::move(rest), n_vars);
    if (t % 2 == 0)
      acc += entry * minor;
    else
      acc -= entry * minor;
  }
  return acc;
}

}  // namespace

Poly schur(int n, const Partition& lam) {
  if (lam.length() > n) throw std::invalid_argument("partition longer than variable count");
  const int k = lam.length();
  if (k == 0) return Poly::constant(n, 1);
  std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k, Poly(n)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int deg = lam.parts[i] + j - i;
      if (deg >= 0) m[i][j] = complete_h(n, deg);
    }
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  return det_expand(m, std::move(cols), n);
}

bool is_symmetric(const Poly& p) {
  const int n = p.n_vars();
  if (n <= 1) return true;
  std::vector<int> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  if (p.permute_vars(swap01) != p) return false;
  std::vector<int> cycle(n);
  for (int v = 0; v < n; ++v) cycle[v] = (v + 1) % n;
  return p.permute_vars(cycle) == p;
}

std::vector<Poly> elementary_in_power_sums(int n) {
  // E[k] in slot variables; k e_k = sum_{m=1..k} (-1)^{m-1} e_{k-m} p_m
  std::vector<Poly> E(n + 1, Poly(n));
  E[0] = Poly::constant(n, 1);
  for (int k = 1; k <= n; ++k) {
    Poly acc(n);
    for (int m = 1; m <= k; ++m) {
      Poly t = E[k - m] * Poly::variable(n, m - 1);
      if (m % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    E[k] = acc.scaled(Rational(1, k));
  }
  return E;
}

PowerSumExpr repr_in_power_sums(const Poly& f) {
  if (!is_symmetric(f)) throw std::invalid_argument("repr: input is not symmetric");
  const int n = f.n_vars();
  if (n == 0) return {0, f};

  // Step 1: elementary basis by lex-leading-term subtraction.
  auto lex_leading = [&](const Poly& p) {
    auto it = p.terms().begin();
    auto best = it;
    for (; it != p.terms().end(); ++it)
      if (std::lexicographical_compare(best->first.begin(), best->first.end(),
                                       it->first.begin(), it->first.end()))
        best = it;
    return *best;
  };

  std::vector<Poly> e_cache;  // e_1..e_n expanded in x
  for (int k = 1; k <= n; ++k) e_cache.push_back(elementary(n, k));

  Poly in_e(n);  // polynomial in e-slots
  Poly work = f;
  while (!work.is_zero()) {
    auto [lead, c] = lex_leading(work);
    Exponents slot(n, 0);
    for (int k = 0; k < n; ++k) {
      const int next = (k + 1 < n) ? lead[k + 1] : 0;
      if (lead[k] < next)
        throw std::logic_error("repr: lex-leading exponent not weakly decreasing");
      slot[k] = lead[k] - next;
    }
    Poly prod = Poly::constant(n, c);
    for (int k = 0; k < n; ++k)
      if (slot[k] > 0) prod = prod * e_cache[k].pow(slot[k]);
    work -= prod;
    in_e.add_term(slot, c);
  }

  // Step 2: rewrite each e_k in power-sum slots.
  std::vector<Poly> E = elementary_in_power_sums(n);
  std::vector<Poly> images(E.begin() + 1, E.end());
  return {n, in_e.substitute(images)};
}

Poly expand(const PowerSumExpr& e) {
  const int n = e.n_vars;
  if (n == 0) return e.expr;
  std::vector<Poly> images;
  images.reserve(n);
  for (int k = 1; k <= n; ++k) images.push_back(power_sum(n, k));
  return e.expr.substitute(images);
}

Poly newton_identity(int n, int k) {
  if (k < n) throw std::invalid_argument("newton_identity needs k >= n");
  Poly acc(n);
  for (int l = 0; l <= n; ++l) {
    Poly t = elementary(n, l) * power_sum(n, k - l);
    if (l % 2 == 0)
      acc += t;
    else
      acc -= t;
  }
  return acc;
}

Poly newton_step(int n, int k) {
  if (k <= n) throw std::invalid_argument("newton_step needs k > n");
  Poly acc(n);
  for (int l = 1; l <= n; ++l) {
    Poly t = elementary(n, l) * power_sum(n, k - l);
    if (l % 2 == 1)
      acc += t;
    else
      acc -= t;
  }
  return acc;
}

Poly multiplier_raw(const Poly& f, const std::vector<int>& odd_exps) {
  const int n = f.n_vars();
  const int j = (n - 1) / 2;
  if (static_cast<int>(odd_exps.size()) != j + 1)
    throw std::invalid_argument("multiplier index must have j(n)+1 entries");
  PowerSumExpr R = repr_in_power_sums(f);
  Poly out(n);
  for (const auto& [e, c] : R.expr.terms()) {
    bool match = true;
    for (int t = 0; t <= j && match; ++t)
      if (e[2 * t] != odd_exps[t]) match = false;
    if (!match) continue;
    Exponents even = e;
    for (int t = 0; t <= j; ++t) even[2 * t] = 0;
    out.add_term(even, c);
  }
  return out;
}

Poly multiplier_at(const Poly& f, const std::vector<int>& odd_exps) {
  return expand({f.n_vars(), multiplier_raw(f, odd_exps)});
}

Poly q_raw(int n, int k) {
  if (k < 1) throw std::invalid_argument("q is defined for k >= 1");
  const int j = (n - 1) / 2;
  return multiplier_raw(power_sum(n, k), std::vector<int>(j + 1, 0));
}

Poly r_raw(int n, int k) {
  const int j = (n - 1) / 2;
  if (k < 2 * j + 1) throw std::invalid_argument("r is defined for k >= 2j(n)+1");
  std::vector<int> idx(j + 1, 0);
  idx[j] = 1;
  return multiplier_raw(power_sum(n, k), idx);
}

Poly q_nk(int n, int k) { return expand({n, q_raw(n, k)}); }
Poly r_nk(int n, int k) { return expand({n, r_raw(n, k)}); }

}  // namespace symfunc
}  // namespace monosym
