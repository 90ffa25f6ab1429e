#pragma once

#include <string>
#include <vector>

#include "monosym/poly.hpp"

namespace monosym {

/// Weakly decreasing tuple of positive integers.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int length() const { return static_cast<int>(parts.size()); }
  int weight() const;
  bool operator==(const Partition&) const = default;
  std::string to_string() const;
};

// All partitions of d with at most max_len parts, deterministic order.
std::vector<Partition> partitions_of(int d, int max_len);

// #partitions of s with at most max_parts parts.
long count_partitions_max_parts(int s, int max_parts);
// #partitions of s with every part at most max_part (conjugate count).
long count_partitions_max_part(int s, int max_part);

namespace symfunc {

// p_k = x_1^k + ... + x_n^k, with p_0 = n.
Poly power_sum(int n, int k);
// e_k, zero for k > n, e_0 = 1.
Poly elementary(int n, int k);
// complete homogeneous h_l.
Poly complete_h(int n, int l);
// orbit sum of the monomial x^lambda.
Poly monomial_sym(int n, const Partition& lam);
// Jacobi-Trudi determinant det(h_{lam_i + j - i}), expanded exactly over
// the polynomial ring.
Poly schur(int n, const Partition& lam);

// True iff p is fixed by the transposition (1 2) and the full cycle,
// which generate the symmetric group.
bool is_symmetric(const Poly& p);

/// Polynomial in abstract power-sum slots: slot k (variable index k-1)
/// stands for p_k, k in [1..n_vars].
struct PowerSumExpr {
  int n_vars = 0;
  Poly expr;  // expr.n_vars() == n_vars

  bool operator==(const PowerSumExpr&) const = default;
};

// The unique E with E(p_1,...,p_n) = f. Conversion goes through the
// elementary basis (leading-term subtraction), then Newton's triangular
// system rewrites each e_k in power sums.
PowerSumExpr repr_in_power_sums(const Poly& f);

// Substitutes the concrete power sums into the slots.
Poly expand(const PowerSumExpr& e);

// e_k for k in [0..n] written in power-sum slots (Newton's identities).
std::vector<Poly> elementary_in_power_sums(int n);

// Sum_{l=0..n} (-1)^l e_l p_{k-l}, expanded in the x variables. Vanishes
// identically for k > n; for k <= n the p_0 = n convention makes it vanish
// as well once the (-1)^k k e_k term is accounted for, see tests.
Poly newton_identity(int n, int k);

// p_k rebuilt from p_{k-1},...,p_{k-n} via the recurrence
// p_k = sum_{l=1..n} (-1)^{l-1} e_l p_{k-l}; valid for k > n.
Poly newton_step(int n, int k);

// Coefficient of the odd-slot monomial p_1^{c_1} p_3^{c_3} ... p_{2j+1}^{c_{2j+1}}
// in Repr(f): a polynomial in the even slots. odd_exps has length j(n)+1.
Poly multiplier_raw(const Poly& f, const std::vector<int>& odd_exps);
// Same with the even power sums substituted back, expanded in x.
Poly multiplier_at(const Poly& f, const std::vector<int>& odd_exps);

// Multipliers of p_k at (0,...,0) and (0,...,0,1). r is defined only for
// k >= 2j(n)+1, with r at p_{2j+1} equal to 1.
Poly q_raw(int n, int k);
Poly r_raw(int n, int k);
Poly q_nk(int n, int k);
Poly r_nk(int n, int k);

}  // namespace symfunc
}  // namespace monosym
