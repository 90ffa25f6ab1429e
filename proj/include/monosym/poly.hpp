#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monosym/rational.hpp"

namespace monosym {

// Exponent vector of a monomial; length equals the ambient variable count.
using Exponents = std::vector<int>;

int exponents_degree(const Exponents& e);

// Graded lexicographic order: total degree first, then lex on the tuple.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse exact multivariate polynomial over the rationals.
///
/// Terms are kept in graded-lex order with no stored zero coefficients,
/// so iteration and serialization are deterministic. Variable indices are
/// 0-based in this API; the textual form renders index v as "x<v+1>".
/// All operations are pure; a Poly never mutates after it escapes.
class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  Poly() = default;
  explicit Poly(int n_vars);

  static Poly constant(int n_vars, const Rational& c);
  static Poly variable(int n_vars, int v);
  static Poly monomial(int n_vars, Exponents exps, const Rational& c);

  int n_vars() const { return n_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponents& exps) const;

  // Merges a term in, dropping the entry if the sum cancels.
  void add_term(const Exponents& exps, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  Poly operator-() const;
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;
  bool operator==(const Poly& o) const = default;

  // nullopt encodes the degree of the zero polynomial (minus infinity).
  std::optional<int> total_degree() const;
  bool is_homogeneous() const;
  Poly homogeneous_component(int d) const;

  Rational eval(const std::vector<Rational>& point) const;

  // Ring homomorphism: images[v] replaces variable v; all images must share
  // one target variable count.
  Poly substitute(const std::vector<Poly>& images) const;

  // perm[v] is the new index of variable v; must be a bijection.
  Poly permute_vars(const std::vector<int>& perm) const;

  // Pads exponent vectors with zeros up to new_n variables.
  Poly embed(int new_n) const;

  // Exact division by (x_k + x_l), k != l, via synthetic division in x_k.
  // Returns nullopt when the remainder is nonzero.
  std::optional<Poly> divide_linear(int k, int l) const;

  std::string to_string() const;

  // Rendering with caller-supplied variable names (e.g. power-sum slots).
  std::string to_string_names(const std::vector<std::string>& names) const;

 private:
  int n_vars_ = 0;
  TermMap terms_;
};

}  // namespace monosym
