#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monosym/poly.hpp"
#include "monosym/symfunc.hpp"

namespace monosym {

// i = floor(n/2), j = floor((n-1)/2); note i*(2j+1) = n(n-1)/2.
struct NParams {
  int n;
  int i;
  int j;
};
NParams params(int n);

/// Basis element of T_n: a product of odd power sums with no long
/// subproduct. low_exps[t] is the exponent of p_{2t+1}, t in [0..j];
/// elders holds the m of each elder factor p_{2m+1}, m > j, ascending,
/// at most i of them.
struct ProperProduct {
  int n = 0;
  std::vector<int> low_exps;
  std::vector<int> elders;

  int degree() const;
  Poly expand() const;
  std::string to_string() const;  // e.g. "p1^3*p5", empty product -> "1"
  bool operator==(const ProperProduct&) const = default;
};

// Deterministic order: low_exps lexicographic, then elder list lexicographic.
bool proper_product_less(const ProperProduct& a, const ProperProduct& b);

struct Decomposition {
  int n = 0;
  int d = 0;
  std::vector<ProperProduct> basis;  // nonzero-coefficient entries, ordered
  std::vector<Rational> coeffs;

  Poly expand() const;
  std::string to_string() const;
  bool operator==(const Decomposition&) const = default;
};

/// Polynomial in odd power sums: slot t (variable index t) stands for
/// p_{2t+1}. Carrier of PreIm, where indices may exceed the ambient n.
struct OddPowerExpr {
  int n = 0;        // ambient variable count of the expansion
  Poly expr;        // slot polynomial, expr.n_vars() slots
  Poly expand() const;
  bool operator==(const OddPowerExpr&) const = default;
};

struct Membership {
  bool member = false;
  std::string reason;  // empty when member
};

// Condition check: symmetric, and the image under x1 -> t, x2 -> -t is
// independent of t. The diagnostic names the failing condition.
Membership check_member(const Poly& p);
bool is_member(const Poly& p);

// Product of (x_k + x_l) over unordered pairs k < l; degree C(n,2).
Poly delta(int n);

// Exact quotient p / delta(n), or nullopt when not divisible.
std::optional<Poly> divide_by_delta(const Poly& p);

// x_{n-1}, x_n -> 0, mapping T_n into T_{n-2} and p_k to the smaller p_k.
Poly pi_project(const Poly& p);

// Canonical preimage: decompose pi(f) through odd power sums, reread the
// same expression with n-variable power sums. For target variable counts
// 2 and 3 the constructive decomposers are used, so the result never
// depends on the linear solver below.
OddPowerExpr preimage_lift(const Poly& f);

// The exact symmetric quotient (f - expand(PreIm(f))) / delta.
Poly div_delta_witness(const Poly& f);

std::vector<ProperProduct> enumerate_proper_products(int n, int d);
long dim_Tn(int n, int d);

// Unique coefficients of f on the degree-d proper products, by exact
// linear solve in monomial-symmetric coordinates.
Decomposition decompose(const Poly& f);

// The explicit recursions for two and three variables; must agree with
// decompose coefficientwise.
Decomposition decompose_constructive_n2(const Poly& f);
Decomposition decompose_constructive_n3(const Poly& f);

// Splits a symmetric polynomial along Repr: slot monomials free of odd
// slots vs. the rest. even + odd = s.
std::pair<Poly, Poly> split_even_odd(const Poly& s);

// Substitutes x_{i+l} -> -x_l (and x_n -> 0 for odd n), landing in i vars.
Poly reduce_mod_I(const Poly& p);

// Finds the unique alpha with delta = alpha*(p_{2j+1}^i - expand(PreIm(p_{2j+1}^i))).
// Returns alpha and the difference polynomial; throws if the difference is
// not a nonzero scalar multiple of delta.
std::pair<Rational, Poly> delta_preim_identity(int n);

}  // namespace monosym
