#include "monosym/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace monosym {

int exponents_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const int da = exponents_degree(a);
  const int db = exponents_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Poly::Poly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

Poly Poly::constant(int n_vars, const Rational& c) {
  Poly p(n_vars);
  p.add_term(Exponents(n_vars, 0), c);
  return p;
}

Poly Poly::variable(int n_vars, int v) {
  if (v < 0 || v >= n_vars) throw std::invalid_argument("variable index out of range");
  Exponents e(n_vars, 0);
  e[v] = 1;
  return monomial(n_vars, std::move(e), 1);
}

Poly Poly::monomial(int n_vars, Exponents exps, const Rational& c) {
  Poly p(n_vars);
  p.add_term(std::move(exps), c);
  return p;
}

Rational Poly::coeff(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != n_vars_)
    throw std::invalid_argument("exponent vector length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_vars_ != o.n_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_vars_ != o.n_vars_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r(n_vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.n_vars_ != b.n_vars_) throw std::invalid_argument("variable count mismatch");
  Poly r(a.n_vars_);
  Exponents e(a.n_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int v = 0; v < a.n_vars_; ++v) e[v] = ea[v] + eb[v];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r(n_vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Poly acc = Poly::constant(n_vars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::optional<int> Poly::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  // graded order: the last term carries the maximal degree
  return exponents_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = exponents_degree(terms_.begin()->first);
  return exponents_degree(terms_.rbegin()->first) == d;
}

Poly Poly::homogeneous_component(int d) const {
  Poly r(n_vars_);
  for (const auto& [e, c] : terms_)
    if (exponents_degree(e) == d) r.terms_.emplace(e, c);
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != n_vars_)
    throw std::invalid_argument("evaluation point length mismatch");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < n_vars_; ++v)
      for (int k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (static_cast<int>(images.size()) != n_vars_)
    throw std::invalid_argument("substitution must cover every variable");
  int target_n = images.empty() ? 0 : images[0].n_vars();
  for (const auto& im : images)
    if (im.n_vars() != target_n)
      throw std::invalid_argument("substitution images disagree on variable count");

  // power cache per variable
  std::vector<std::vector<Poly>> powers(n_vars_);
  auto power_of = [&](int v, int e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(target_n, 1));
    while (static_cast<int>(cache.size()) <= e)
      cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  Poly r(target_n);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(target_n, c);
    for (int v = 0; v < n_vars_; ++v)
      if (e[v] > 0) t = t * power_of(v, e[v]);
    r += t;
  }
  return r;
}

Poly Poly::permute_vars(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_vars_)
    throw std::invalid_argument("permutation length mismatch");
  std::vector<bool> seen(n_vars_, false);
  for (int v : perm) {
    if (v < 0 || v >= n_vars_ || seen[v])
      throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  Poly r(n_vars_);
  Exponents img(n_vars_);
  for (const auto& [e, c] : terms_) {
    for (int v = 0; v < n_vars_; ++v) img[perm[v]] = e[v];
    r.terms_.emplace(img, c);
  }
  return r;
}

Poly Poly::embed(int new_n) const {
  if (new_n < n_vars_) throw std::invalid_argument("embed cannot drop variables");
  Poly r(new_n);
  for (const auto& [e, c] : terms_) {
    Exponents ne(new_n, 0);
    std::copy(e.begin(), e.end(), ne.begin());
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

std::optional<Poly> Poly::divide_linear(int k, int l) const {
  if (k == l || k < 0 || l < 0 || k >= n_vars_ || l >= n_vars_)
    throw std::invalid_argument("bad linear factor indices");
  if (is_zero()) return Poly(n_vars_);

  // Split by the x_k degree: p = sum_c a_c * x_k^c with a_c free of x_k.
  std::map<int, Poly> by_deg;
  int top = 0;
  for (const auto& [e, c] : terms_) {
    Exponents stripped = e;
    const int dk = stripped[k];
    stripped[k] = 0;
    auto [it, inserted] = by_deg.try_emplace(dk, Poly(n_vars_));
    it->second.add_term(stripped, c);
    top = std::max(top, dk);
  }
  if (top == 0) return std::nullopt;  // nonzero and free of x_k

  auto part = [&](int d) {
    auto it = by_deg.find(d);
    return it == by_deg.end() ? Poly(n_vars_) : it->second;
  };

  const Poly xl = Poly::variable(n_vars_, l);
  // synthetic division by (x_k + x_l), highest degree first
  std::vector<Poly> q(top);  // q[c] = coefficient of x_k^c in the quotient
  q[top - 1] = part(top);
  for (int c = top - 1; c >= 1; --c) q[c - 1] = part(c) - xl * q[c];
  const Poly remainder = part(0) - xl * q[0];
  if (!remainder.is_zero()) return std::nullopt;

  Poly result(n_vars_);
  for (int c = 0; c < top; ++c) {
    for (const auto& [e, coef] : q[c].terms()) {
      Exponents ne = e;
      ne[k] += c;
      result.add_term(ne, coef);
    }
  }
  return result;
}

std::string Poly::to_string() const {
  std::vector<std::string> names;
  names.reserve(n_vars_);
  for (int v = 0; v < n_vars_; ++v) names.push_back("x" + std::to_string(v + 1));
  return to_string_names(names);
}

std::string Poly::to_string_names(const std::vector<std::string>& names) const {
  if (static_cast<int>(names.size()) != n_vars_)
    throw std::invalid_argument("variable name list length mismatch");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // leading (highest graded-lex) term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    if (a != 1 || exponents_degree(e) == 0) factors.push_back(rat_to_string(a));
    for (int v = 0; v < n_vars_; ++v) {
      if (e[v] == 0) continue;
      std::string f = names[v];
      if (e[v] > 1) f += "^" + std::to_string(e[v]);
      factors.push_back(f);
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out << "*";
      out << factors[i];
    }
  }
  return out.str();
}

}  // namespace monosym
