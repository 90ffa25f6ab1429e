#include "monosym/tn.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "monosym/qlinalg.hpp"

namespace monosym {

using symfunc::power_sum;

NParams params(int n) {
  if (n < 1) throw std::invalid_argument("params: n must be positive");
  return {n, n / 2, (n - 1) / 2};
}

int ProperProduct::degree() const {
  int d = 0;
  for (std::size_t t = 0; t < low_exps.size(); ++t) d += low_exps[t] * (2 * static_cast<int>(t) + 1);
  for (int m : elders) d += 2 * m + 1;
  return d;
}

Poly ProperProduct::expand() const {
  Poly p = Poly::constant(n, 1);
  for (std::size_t t = 0; t < low_exps.size(); ++t)
    if (low_exps[t] > 0) p = p * power_sum(n, 2 * static_cast<int>(t) + 1).pow(low_exps[t]);
  for (int m : elders) p = p * power_sum(n, 2 * m + 1);
  return p;
}

std::string ProperProduct::to_string() const {
  std::vector<std::string> factors;
  for (std::size_t t = 0; t < low_exps.size(); ++t) {
    if (low_exps[t] == 0) continue;
    std::string f = "p" + std::to_string(2 * t + 1);
    if (low_exps[t] > 1) f += "^" + std::to_string(low_exps[t]);
    factors.push_back(f);
  }
  for (int m : elders) factors.push_back("p" + std::to_string(2 * m + 1));
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += "*";
    out += factors[i];
  }
  return out;
}

bool proper_product_less(const ProperProduct& a, const ProperProduct& b) {
  if (a.low_exps != b.low_exps)
    return std::lexicographical_compare(a.low_exps.begin(), a.low_exps.end(),
                                        b.low_exps.begin(), b.low_exps.end());
  return std::lexicographical_compare(a.elders.begin(), a.elders.end(),
                                      b.elders.begin(), b.elders.end());
}

Poly Decomposition::expand() const {
  Poly acc(n);
  for (std::size_t t = 0; t < basis.size(); ++t) acc += basis[t].expand().scaled(coeffs[t]);
  return acc;
}

std::string Decomposition::to_string() const {
  if (basis.empty()) return "0";
  std::ostringstream out;
  for (std::size_t t = 0; t < basis.size(); ++t) {
    Rational c = coeffs[t];
    if (t == 0) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    const std::string prod = basis[t].to_string();
    if (prod == "1")
      out << rat_to_string(c);
    else
      out << rat_to_string(c) << "*" << prod;
  }
  return out.str();
}

Poly OddPowerExpr::expand() const {
  const int slots = expr.n_vars();
  if (slots == 0) {
    return Poly::constant(n, expr.is_zero() ? Rational(0) : expr.coeff(Exponents{}));
  }
  std::vector<Poly> images;
  images.reserve(slots);
  for (int t = 0; t < slots; ++t) images.push_back(power_sum(n, 2 * t + 1));
  return expr.substitute(images);
}

Membership check_member(const Poly& p) {
  if (!symfunc::is_symmetric(p)) return {false, "not symmetric"};
  const int n = p.n_vars();
  if (n < 2) return {true, ""};
  // x1 -> t, x2 -> -t, x_k -> x_k; target variable 0 is t
  const int m = n - 1;
  std::vector<Poly> images;
  images.push_back(Poly::variable(m, 0));
  images.push_back(-Poly::variable(m, 0));
  for (int v = 2; v < n; ++v) images.push_back(Poly::variable(m, v - 1));
  const Poly image = p.substitute(images);
  for (const auto& [e, c] : image.terms()) {
    if (e[0] == 0) continue;
    std::ostringstream term;
    term << rat_to_string(c) << "*t^" << e[0];
    for (int v = 1; v < m; ++v) {
      if (e[v] == 0) continue;
      term << "*x" << (v + 2);
      if (e[v] > 1) term << "^" << e[v];
    }
    return {false, "substitution image depends on t (term " + term.str() + ")"};
  }
  return {true, ""};
}

bool is_member(const Poly& p) { return check_member(p).member; }

Poly delta(int n) {
  if (n < 2) throw std::invalid_argument("delta needs n >= 2");
  Poly d = Poly::constant(n, 1);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      d = d * (Poly::variable(n, k) + Poly::variable(n, l));
  return d;
}

std::optional<Poly> divide_by_delta(const Poly& p) {
  const int n = p.n_vars();
  if (n < 2) throw std::invalid_argument("divide_by_delta needs n >= 2");
  Poly q = p;
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      auto next = q.divide_linear(k, l);
      if (!next) return std::nullopt;
      q = std::move(*next);
    }
  return q;
}

Poly pi_project(const Poly& p) {
  const int n = p.n_vars();
  if (n < 2) throw std::invalid_argument("pi_project needs n >= 2");
  const int m = n - 2;
  std::vector<Poly> images;
  for (int v = 0; v < n; ++v)
    images.push_back(v < m ? Poly::variable(m, v) : Poly(m));
  return p.substitute(images);
}

namespace {

// Accumulates proper-product coefficients in canonical order.
class DecompBuilder {
 public:
  void add(const ProperProduct& pp, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.try_emplace(pp, c);
    if (!inserted) it->second += c;
  }

  void add_scaled(const Decomposition& d, const std::vector<int>& low_shift,
                  const Rational& scale) {
    for (std::size_t t = 0; t < d.basis.size(); ++t) {
      ProperProduct pp = d.basis[t];
      for (std::size_t s = 0; s < low_shift.size(); ++s) pp.low_exps[s] += low_shift[s];
      add(pp, d.coeffs[t] * scale);
    }
  }

  Decomposition build(int n, int d) const {
    Decomposition out{n, d, {}, {}};
    for (const auto& [pp, c] : entries_) {
      if (c == 0) continue;
      out.basis.push_back(pp);
      out.coeffs.push_back(c);
    }
    return out;
  }

 private:
  struct Less {
    bool operator()(const ProperProduct& a, const ProperProduct& b) const {
      return proper_product_less(a, b);
    }
  };
  std::map<ProperProduct, Rational, Less> entries_;
};

Decomposition constructive_n2_rec(const Poly& f) {
  DecompBuilder out;
  const int d = f.total_degree().value_or(0);
  if (f.is_zero()) return out.build(2, 0);
  if (d == 0) {
    out.add({2, {0}, {}}, f.coeff({0, 0}));
    return out.build(2, 0);
  }
  auto g = f.divide_linear(0, 1);
  if (!g) throw std::logic_error("constructive n=2: input not divisible by x1+x2");
  if (d % 2 == 1) {
    const Poly u = *power_sum(2, d).divide_linear(0, 1);
    const Rational alpha = g->eval({1, -1}) / u.eval({1, -1});
    // f - alpha*p_d is divisible by (x1+x2)^2
    const Poly f1 = *g - u.scaled(alpha);
    if (d == 1)
      out.add({2, {1}, {}}, alpha);
    else
      out.add({2, {0}, {(d - 1) / 2}}, alpha);
    out.add_scaled(constructive_n2_rec(f1), {1}, 1);
  } else {
    out.add_scaled(constructive_n2_rec(*g), {1}, 1);
  }
  return out.build(2, d);
}

// Decomposition of delta(3) * p_2^k through proper products, following the
// induction on k from the three-variable base case.
const Decomposition& delta_p2_decomp(int k) {
  static std::map<int, Decomposition> cache;
  static std::recursive_mutex mtx;
  std::lock_guard<std::recursive_mutex> lock(mtx);
  if (auto it = cache.find(k); it != cache.end()) return it->second;

  DecompBuilder out;
  if (k == 0) {
    // delta = (p_1^3 - p_3)/3
    out.add({3, {3, 0}, {}}, Rational(1, 3));
    out.add({3, {0, 1}, {}}, Rational(-1, 3));
  } else {
    const Poly diff = power_sum(3, 2 * k + 3) - power_sum(3, 1).pow(2 * k + 3);
    auto g = divide_by_delta(diff);
    if (!g) throw std::logic_error("p_{2k+3} - p_1^{2k+3} not divisible by delta");
    const symfunc::PowerSumExpr R = symfunc::repr_in_power_sums(*g);
    Rational beta = 0;
    for (const auto& [e, c] : R.expr.terms())
      if (e[0] == 0 && e[2] == 0 && e[1] == k) beta = c;
    if (beta == 0) throw std::logic_error("vanishing p_2^k coefficient in delta recursion");
    const Rational inv = Rational(1) / beta;
    out.add({3, {0, 0}, {k + 1}}, inv);
    out.add({3, {2 * k + 3, 0}, {}}, -inv);
    for (const auto& [e, c] : R.expr.terms()) {
      const int a = e[0], b = e[1], cc = e[2];
      if (a == 0 && cc == 0 && b == k) continue;
      out.add_scaled(delta_p2_decomp(b), {a, cc}, -c * inv);
    }
  }
  auto [it, inserted] = cache.emplace(k, out.build(3, 2 * k + 3));
  return it->second;
}

Decomposition constructive_n3_rec(const Poly& f) {
  DecompBuilder out;
  if (f.is_zero()) return out.build(3, 0);
  const int d = *f.total_degree();
  const Rational c = f.coeff({d, 0, 0});
  out.add({3, {d, 0}, {}}, c);
  const Poly diff = f - power_sum(3, 1).pow(d).scaled(c);
  if (diff.is_zero()) return out.build(3, d);
  auto s = divide_by_delta(diff);
  if (!s) throw std::logic_error("constructive n=3: f - PreIm(f) not divisible by delta");
  const symfunc::PowerSumExpr R = symfunc::repr_in_power_sums(*s);
  for (const auto& [e, coef] : R.expr.terms())
    out.add_scaled(delta_p2_decomp(e[1]), {e[0], e[2]}, coef);
  return out.build(3, d);
}

}  // namespace

OddPowerExpr preimage_lift(const Poly& f) {
  const Membership mem = check_member(f);
  if (!mem.member) throw std::domain_error("preimage_lift: input not in T_n: " + mem.reason);
  const int n = f.n_vars();
  if (n < 2) throw std::invalid_argument("preimage_lift needs n >= 2");
  const int m = n - 2;
  const Poly g = pi_project(f);

  // collect odd-slot monomials with varying slot counts, then pad
  std::vector<std::pair<Exponents, Rational>> raw;
  int slots = 0;
  auto record = [&](Exponents e, const Rational& c) {
    while (!e.empty() && e.back() == 0) e.pop_back();
    slots = std::max(slots, static_cast<int>(e.size()));
    raw.emplace_back(std::move(e), c);
  };

  if (m == 0) {
    if (!g.is_zero()) record({}, g.coeff(Exponents{}));
  } else if (m == 1) {
    for (const auto& [e, c] : g.terms()) record(Exponents{e[0]}, c);
  } else {
    const auto deg = g.total_degree();
    if (deg) {
      for (int d = 0; d <= *deg; ++d) {
        const Poly comp = g.homogeneous_component(d);
        if (comp.is_zero()) continue;
        Decomposition D;
        if (m == 2)
          D = decompose_constructive_n2(comp);
        else if (m == 3)
          D = decompose_constructive_n3(comp);
        else
          D = decompose(comp);
        for (std::size_t t = 0; t < D.basis.size(); ++t) {
          const ProperProduct& pp = D.basis[t];
          Exponents e(pp.low_exps.begin(), pp.low_exps.end());
          for (int elder : pp.elders) {
            if (static_cast<int>(e.size()) <= elder) e.resize(elder + 1, 0);
            e[elder] += 1;
          }
          record(std::move(e), D.coeffs[t]);
        }
      }
    }
  }

  Poly expr(slots);
  for (auto& [e, c] : raw) {
    e.resize(slots, 0);
    expr.add_term(e, c);
  }
  return {n, expr};
}

Poly div_delta_witness(const Poly& f) {
  if (!f.is_homogeneous()) throw std::invalid_argument("div_delta_witness expects homogeneous input");
  const Poly diff = f - preimage_lift(f).expand();
  if (diff.is_zero()) return Poly(f.n_vars());
  auto q = divide_by_delta(diff);
  if (!q)
    throw std::logic_error("internal inconsistency: f - PreIm(f) not divisible by delta");
  return *q;
}

namespace {

void gen_low(int t, int rem, const NParams& P, std::vector<int>& low,
             const std::vector<int>& elders, std::vector<ProperProduct>& out) {
  if (t == P.j + 1) {
    if (rem == 0) out.push_back({P.n, low, elders});
    return;
  }
  const int step = 2 * t + 1;
  for (int c = 0; c * step <= rem; ++c) {
    low[t] = c;
    gen_low(t + 1, rem - c * step, P, low, elders, out);
  }
  low[t] = 0;
}

void gen_elders(int m_min, int slots_left, int rem, const NParams& P,
                std::vector<int>& elders, std::vector<ProperProduct>& out) {
  std::vector<int> low(P.j + 1, 0);
  gen_low(0, rem, P, low, elders, out);
  if (slots_left == 0) return;
  for (int m = m_min; 2 * m + 1 <= rem; ++m) {
    elders.push_back(m);
    gen_elders(m, slots_left - 1, rem - (2 * m + 1), P, elders, out);
    elders.pop_back();
  }
}

}  // namespace

std::vector<ProperProduct> enumerate_proper_products(int n, int d) {
  if (n < 2 || d < 0) throw std::invalid_argument("enumerate_proper_products: bad arguments");
  const NParams P = params(n);
  std::vector<ProperProduct> out;
  std::vector<int> elders;
  gen_elders(P.j + 1, P.i, d, P, elders, out);
  std::sort(out.begin(), out.end(), proper_product_less);
  return out;
}

long dim_Tn(int n, int d) {
  return static_cast<long>(enumerate_proper_products(n, d).size());
}

Decomposition decompose(const Poly& f) {
  const int n = f.n_vars();
  if (n < 2) throw std::invalid_argument("decompose needs n >= 2");
  const Membership mem = check_member(f);
  if (!mem.member) throw std::domain_error("decompose: input not in T_n: " + mem.reason);
  if (f.is_zero()) return {n, 0, {}, {}};
  if (!f.is_homogeneous()) throw std::invalid_argument("decompose expects homogeneous input");
  const int d = *f.total_degree();

  const auto prods = enumerate_proper_products(n, d);
  const auto parts = partitions_of(d, n);
  QMatrix M(static_cast<int>(parts.size()), static_cast<int>(prods.size()));
  for (std::size_t col = 0; col < prods.size(); ++col) {
    const Poly exp = prods[col].expand();
    for (std::size_t row = 0; row < parts.size(); ++row) {
      Exponents e(n, 0);
      std::copy(parts[row].parts.begin(), parts[row].parts.end(), e.begin());
      M.at(static_cast<int>(row), static_cast<int>(col)) = exp.coeff(e);
    }
  }
  QVector b(parts.size());
  for (std::size_t row = 0; row < parts.size(); ++row) {
    Exponents e(n, 0);
    std::copy(parts[row].parts.begin(), parts[row].parts.end(), e.begin());
    b[row] = f.coeff(e);
  }
  auto sol = solve(M, b);
  if (!sol)
    throw std::logic_error("decompose: expansion system inconsistent for a member of T_n");

  Decomposition out{n, d, {}, {}};
  for (std::size_t t = 0; t < prods.size(); ++t) {
    if ((*sol)[t] == 0) continue;
    out.basis.push_back(prods[t]);
    out.coeffs.push_back((*sol)[t]);
  }
  return out;
}

Decomposition decompose_constructive_n2(const Poly& f) {
  if (f.n_vars() != 2) throw std::invalid_argument("decompose_constructive_n2 needs two variables");
  const Membership mem = check_member(f);
  if (!mem.member) throw std::domain_error("input not in T_2: " + mem.reason);
  if (!f.is_homogeneous()) throw std::invalid_argument("expects homogeneous input");
  return constructive_n2_rec(f);
}

Decomposition decompose_constructive_n3(const Poly& f) {
  if (f.n_vars() != 3) throw std::invalid_argument("decompose_constructive_n3 needs three variables");
  const Membership mem = check_member(f);
  if (!mem.member) throw std::domain_error("input not in T_3: " + mem.reason);
  if (!f.is_homogeneous()) throw std::invalid_argument("expects homogeneous input");
  return constructive_n3_rec(f);
}

std::pair<Poly, Poly> split_even_odd(const Poly& s) {
  const symfunc::PowerSumExpr R = symfunc::repr_in_power_sums(s);
  const int n = s.n_vars();
  Poly even_slots(n), odd_slots(n);
  for (const auto& [e, c] : R.expr.terms()) {
    bool pure_even = true;
    for (int t = 0; 2 * t < n; ++t)
      if (e[2 * t] != 0) pure_even = false;
    (pure_even ? even_slots : odd_slots).add_term(e, c);
  }
  return {symfunc::expand({n, even_slots}), symfunc::expand({n, odd_slots})};
}

Poly reduce_mod_I(const Poly& p) {
  const int n = p.n_vars();
  if (n < 2) throw std::invalid_argument("reduce_mod_I needs n >= 2");
  const int i = n / 2;
  std::vector<Poly> images;
  for (int v = 0; v < n; ++v) {
    if (v < i)
      images.push_back(Poly::variable(i, v));
    else if (v < 2 * i)
      images.push_back(-Poly::variable(i, v - i));
    else
      images.push_back(Poly(i));  // x_n -> 0 for odd n
  }
  return p.substitute(images);
}

std::pair<Rational, Poly> delta_preim_identity(int n) {
  if (n < 3) throw std::invalid_argument("delta_preim_identity needs n >= 3");
  const NParams P = params(n);
  const Poly f = power_sum(n, 2 * P.j + 1).pow(P.i);
  const Poly g = f - preimage_lift(f).expand();
  auto q = divide_by_delta(g);
  if (!q) throw std::logic_error("p_{2j+1}^i - PreIm is not divisible by delta");
  if (!q->is_zero() && q->total_degree() != std::optional<int>(0))
    throw std::logic_error("quotient by delta is not a scalar");
  const Rational beta = q->coeff(Exponents(n, 0));
  if (beta == 0) throw std::logic_error("p_{2j+1}^i - PreIm vanished");
  return {Rational(1) / beta, g};
}

}  // namespace monosym
