#pragma once

#include <random>
#include <vector>

#include "monosym/qlinalg.hpp"
#include "monosym/symfunc.hpp"

namespace monosym::testutil {

inline Rational rnd_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  return Rational(num(rng), den(rng));
}

inline Poly rnd_poly(std::mt19937_64& rng, int n, int max_deg, int n_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  Poly p(n);
  for (int t = 0; t < n_terms; ++t) {
    Exponents e(n, 0);
    int budget = deg(rng);
    for (int v = 0; v < n && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      e[v] = part(rng);
      budget -= e[v];
    }
    p.add_term(e, rnd_rational(rng));
  }
  return p;
}

inline QVector rnd_point(std::mt19937_64& rng, int n) {
  QVector pt;
  for (int v = 0; v < n; ++v) pt.push_back(rnd_rational(rng));
  return pt;
}

inline Poly rnd_symmetric(std::mt19937_64& rng, int n, int d) {
  Poly s(n);
  for (const auto& lam : partitions_of(d, n))
    s += symfunc::monomial_sym(n, lam).scaled(rnd_rational(rng));
  return s;
}

// Random element of the span of products of odd power sums, homogeneous of
// degree d.
inline Poly rnd_member(std::mt19937_64& rng, int n, int d) {
  Poly f(n);
  for (const auto& lam : partitions_of(d, d)) {
    bool all_odd = true;
    for (int part : lam.parts) all_odd = all_odd && (part % 2 == 1);
    if (!all_odd) continue;
    Poly prod = Poly::constant(n, 1);
    for (int part : lam.parts) prod *= symfunc::power_sum(n, part);
    f += prod.scaled(rnd_rational(rng));
  }
  return f;
}

}  // namespace monosym::testutil
