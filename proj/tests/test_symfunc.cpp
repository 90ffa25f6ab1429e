#include <doctest.h>

#include "monosym/symfunc.hpp"
#include "test_util.hpp"

using namespace monosym;
using namespace monosym::symfunc;

TEST_CASE("partitions") {
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{2, 0}), std::invalid_argument);
  CHECK(Partition(std::vector<int>{3, 1}).weight() == 4);
  CHECK(Partition(std::vector<int>{}).weight() == 0);

  const auto parts = partitions_of(4, 2);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Partition(std::vector<int>{4}));
  CHECK(parts[1] == Partition(std::vector<int>{3, 1}));
  CHECK(parts[2] == Partition(std::vector<int>{2, 2}));
  CHECK(partitions_of(0, 3).size() == 1);
  CHECK(partitions_of(5, 0).empty());
}

TEST_CASE("partition counts agree with enumeration and conjugation") {
  for (int s = 0; s <= 18; ++s)
    for (int k = 0; k <= 6; ++k) {
      CHECK(count_partitions_max_parts(s, k) ==
            static_cast<long>(partitions_of(s, k).size()));
      // Conjugation swaps the two constraints.
      CHECK(count_partitions_max_parts(s, k) == count_partitions_max_part(s, k));
    }
  CHECK(count_partitions_max_parts(5, 2) == 3);
  CHECK(count_partitions_max_part(6, 3) == 7);
}

TEST_CASE("classical bases on small examples") {
  CHECK(power_sum(3, 0) == Poly::constant(3, 3));
  CHECK(power_sum(2, 3).to_string() == "x1^3 + x2^3");
  CHECK(elementary(3, 2).to_string() == "x1*x2 + x1*x3 + x2*x3");
  CHECK(elementary(2, 3).is_zero());
  CHECK(elementary(4, 0) == Poly::constant(4, 1));
  CHECK(complete_h(2, 2).to_string() == "x1^2 + x1*x2 + x2^2");
  CHECK(complete_h(3, 0) == Poly::constant(3, 1));
  CHECK(monomial_sym(3, Partition(std::vector<int>{2, 1})).to_string() ==
        "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x3^2 + x2^2*x3 + x2*x3^2");
  CHECK(monomial_sym(2, Partition(std::vector<int>{1, 1})) == elementary(2, 2));
  CHECK_THROWS_AS(monomial_sym(2, Partition(std::vector<int>{1, 1, 1})), std::invalid_argument);
}

TEST_CASE("monomial symmetric functions span: e and h expand correctly") {
  // h_3 in 2 vars = m_(3) + m_(2,1).
  CHECK(complete_h(2, 3) ==
        monomial_sym(2, Partition(std::vector<int>{3})) + monomial_sym(2, Partition(std::vector<int>{2, 1})));
  // p_2 = m_(2).
  CHECK(power_sum(3, 2) == monomial_sym(3, Partition(std::vector<int>{2})));
}

TEST_CASE("schur polynomials") {
  CHECK(schur(2, Partition(std::vector<int>{1, 1})) == elementary(2, 2));
  CHECK(schur(3, Partition(std::vector<int>{1, 1, 1})).to_string() == "x1*x2*x3");
  for (int k = 0; k <= 4; ++k) CHECK(schur(3, Partition(k == 0 ? std::vector<int>{} : std::vector<int>{k})) == complete_h(3, k));
  // Kostka expansion s_(2,1) = m_(2,1) + 2 m_(1,1,1).
  CHECK(schur(3, Partition(std::vector<int>{2, 1})) ==
        monomial_sym(3, Partition(std::vector<int>{2, 1})) +
            monomial_sym(3, Partition(std::vector<int>{1, 1, 1})).scaled(Rational(2)));
  CHECK(is_symmetric(schur(4, Partition(std::vector<int>{2, 2}))));
  CHECK_THROWS_AS(schur(2, Partition(std::vector<int>{1, 1, 1})), std::invalid_argument);
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric(power_sum(4, 3)));
  CHECK(is_symmetric(Poly(3)));
  CHECK(is_symmetric(Poly::constant(2, Rational(1, 7))));
  CHECK_FALSE(is_symmetric(Poly::variable(2, 0)));
  Poly p(3);
  p.add_term({2, 1, 0}, Rational(1));
  CHECK_FALSE(is_symmetric(p));
}

TEST_CASE("repr in power sums on worked examples") {
  {
    // e_2 = (p_1^2 - p_2)/2 in two variables.
    const PowerSumExpr r = repr_in_power_sums(elementary(2, 2));
    Poly want(2);
    want.add_term({2, 0}, Rational(1, 2));
    want.add_term({0, 1}, Rational(-1, 2));
    CHECK(r.expr == want);
  }
  {
    // p_3 = (3/2) p_1 p_2 - (1/2) p_1^3 in two variables.
    const PowerSumExpr r = repr_in_power_sums(power_sum(2, 3));
    Poly want(2);
    want.add_term({1, 1}, Rational(3, 2));
    want.add_term({3, 0}, Rational(-1, 2));
    CHECK(r.expr == want);
  }
  {
    // With three variables p_3 is its own representation.
    const PowerSumExpr r = repr_in_power_sums(power_sum(3, 3));
    CHECK(r.expr == Poly::monomial(3, {0, 0, 1}, Rational(1)));
  }
  CHECK_THROWS_AS(repr_in_power_sums(Poly::variable(2, 0)), std::invalid_argument);
}

TEST_CASE("repr round trips on random symmetric polynomials") {
  std::mt19937_64 rng(9001);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = static_cast<int>(rng() % 7);
    const Poly f = testutil::rnd_symmetric(rng, n, d);
    const PowerSumExpr r = repr_in_power_sums(f);
    CHECK(expand(r) == f);
  }
  // Inhomogeneous inputs round trip too.
  const Poly f = elementary(3, 2) + power_sum(3, 4) + Poly::constant(3, Rational(1, 3));
  CHECK(expand(repr_in_power_sums(f)) == f);
}

TEST_CASE("elementary_in_power_sums matches the elementary polynomials") {
  for (int n = 1; n <= 5; ++n) {
    const auto e = elementary_in_power_sums(n);
    REQUIRE(static_cast<int>(e.size()) == n + 1);
    for (int k = 0; k <= n; ++k)
      CHECK(expand(PowerSumExpr{n, e[k]}) == elementary(n, k));
  }
}

TEST_CASE("newton identities vanish") {
  for (int n = 1; n <= 5; ++n)
    for (int k = n; k <= 10; ++k) CHECK(newton_identity(n, k).is_zero());
  CHECK_THROWS_AS(newton_identity(3, 2), std::invalid_argument);
}

TEST_CASE("newton_step rebuilds high power sums") {
  for (int n = 1; n <= 4; ++n)
    for (int k = n + 1; k <= 10; ++k) CHECK(newton_step(n, k) == power_sum(n, k));
  CHECK_THROWS_AS(newton_step(3, 3), std::invalid_argument);
}

TEST_CASE("multipliers of p_3 in two variables") {
  const Poly f = power_sum(2, 3);
  // p_3 = (3/2) p_1 p_2 - (1/2) p_1^3, so the multiplier of p_1 is (3/2) p_2.
  CHECK(multiplier_at(f, {1}) == power_sum(2, 2).scaled(Rational(3, 2)));
  CHECK(multiplier_at(f, {3}) == Poly::constant(2, Rational(-1, 2)));
  CHECK(multiplier_at(f, {0}).is_zero());
  CHECK(multiplier_at(f, {2}).is_zero());
  CHECK_THROWS_AS(multiplier_at(f, {1, 0}), std::invalid_argument);
}

TEST_CASE("q and r multipliers") {
  // p_4 = (1/6) p_1^4 - p_1^2 p_2 + (4/3) p_1 p_3 + (1/2) p_2^2 in three
  // variables, so q_(3,4) = (1/2) p_2^2.
  CHECK(q_nk(3, 4) == power_sum(3, 2).pow(2).scaled(Rational(1, 2)));
  CHECK(q_nk(2, 2) == power_sum(2, 2));
  CHECK(q_nk(3, 3).is_zero());

  CHECK(r_nk(2, 1) == Poly::constant(2, 1));
  CHECK(r_nk(3, 3) == Poly::constant(3, 1));
  CHECK(r_nk(3, 5) == power_sum(3, 2).scaled(Rational(5, 6)));
  CHECK_THROWS_AS(r_nk(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(r_raw(5, 3), std::invalid_argument);
}
