#include <doctest.h>

#include "monosym/tn.hpp"
#include "test_util.hpp"

using namespace monosym;
using symfunc::power_sum;

TEST_CASE("params") {
  CHECK(params(2).i == 1);
  CHECK(params(2).j == 0);
  CHECK(params(4).i == 2);
  CHECK(params(4).j == 1);
  CHECK(params(5).i == 2);
  CHECK(params(5).j == 2);
  for (int n = 2; n <= 9; ++n) {
    const NParams P = params(n);
    CHECK(P.i * (2 * P.j + 1) == n * (n - 1) / 2);
  }
  CHECK_THROWS_AS(params(0), std::invalid_argument);
}

TEST_CASE("membership") {
  CHECK(is_member(power_sum(4, 3)));
  CHECK(is_member(power_sum(2, 5) * power_sum(2, 1)));
  CHECK(is_member(Poly::constant(3, Rational(2, 7))));
  CHECK(is_member(Poly(2)));

  const Membership even = check_member(power_sum(2, 2));
  CHECK_FALSE(even.member);
  CHECK(even.reason.find("depends on t") != std::string::npos);

  const Membership asym = check_member(Poly::variable(2, 0));
  CHECK_FALSE(asym.member);
  CHECK(asym.reason.find("symmetric") != std::string::npos);

  CHECK_FALSE(is_member(symfunc::elementary(2, 2)));
}

TEST_CASE("membership is closed under sum and product") {
  std::mt19937_64 rng(10001);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Poly f = testutil::rnd_member(rng, n, 3 + static_cast<int>(rng() % 4));
    const Poly g = testutil::rnd_member(rng, n, 1 + static_cast<int>(rng() % 4));
    CHECK(is_member(f));
    CHECK(is_member(f + g));
    CHECK(is_member(f * g));
  }
}

TEST_CASE("delta") {
  CHECK(delta(2) == Poly::variable(2, 0) + Poly::variable(2, 1));
  const Poly d3 = delta(3);
  CHECK(d3.total_degree() == 3);
  CHECK(d3.coeff({1, 1, 1}) == Rational(2));
  CHECK(d3.coeff({2, 1, 0}) == Rational(1));
  // delta = (p_1^3 - p_3)/3 in three variables.
  CHECK((power_sum(3, 1).pow(3) - power_sum(3, 3)).scaled(Rational(1, 3)) == d3);
  CHECK(delta(4).total_degree() == 6);
  CHECK(is_member(d3));
  CHECK(is_member(delta(4)));
}

TEST_CASE("delta divides delta-multiples exactly") {
  std::mt19937_64 rng(10002);
  for (int n = 2; n <= 4; ++n) {
    const Poly d = delta(n);
    for (int trial = 0; trial < 8; ++trial) {
      const Poly s = testutil::rnd_symmetric(rng, n, static_cast<int>(rng() % 5));
      const auto q = divide_by_delta(d * s);
      REQUIRE(q.has_value());
      CHECK(*q == s);
    }
  }
  CHECK_FALSE(divide_by_delta(power_sum(3, 3)).has_value());
  CHECK_FALSE(divide_by_delta(Poly::constant(2, 1)).has_value());
}

TEST_CASE("pi projection") {
  CHECK(pi_project(power_sum(5, 3)) == power_sum(3, 3));
  CHECK(pi_project(power_sum(4, 7)) == power_sum(2, 7));
  CHECK(pi_project(delta(4)).is_zero());
  CHECK(pi_project(Poly::constant(3, Rational(5))) == Poly::constant(1, Rational(5)));
  // Ring homomorphism property.
  const Poly f = power_sum(4, 3) * power_sum(4, 1);
  CHECK(pi_project(f) == power_sum(2, 3) * power_sum(2, 1));
}

TEST_CASE("preimage lift") {
  // Below the degree of delta the lift reproduces the input exactly.
  std::mt19937_64 rng(10003);
  for (int n = 4; n <= 5; ++n) {
    const int dcrit = n * (n - 1) / 2;
    for (int d = 1; d < dcrit; ++d) {
      const Poly f = testutil::rnd_member(rng, n, d);
      CHECK(preimage_lift(f).expand() == f);
    }
  }
  // At degree C(3,2): PreIm(p_3) = p_1^3 since pi(p_3) = p_1^3 in one variable.
  CHECK(preimage_lift(power_sum(3, 3)).expand() == power_sum(3, 1).pow(3));
  CHECK_THROWS_AS(preimage_lift(power_sum(3, 2)), std::domain_error);
}

TEST_CASE("div_delta witness") {
  // p_1^3 - p_3 = 3*delta in three variables, so the witness of p_3 is -3.
  CHECK(div_delta_witness(power_sum(3, 3)) == Poly::constant(3, Rational(-3)));
  // Below the critical degree the witness vanishes.
  CHECK(div_delta_witness(power_sum(4, 5)).is_zero());
  // delta * e_2 projects to zero, so the witness is e_2 itself.
  CHECK(div_delta_witness(delta(3) * symfunc::elementary(3, 2)) == symfunc::elementary(3, 2));
  // f = expand(PreIm(f)) + delta * witness in all cases.
  std::mt19937_64 rng(10004);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 8);
    const Poly f = testutil::rnd_member(rng, n, d);
    CHECK(preimage_lift(f).expand() + delta(n) * div_delta_witness(f) == f);
  }
}

TEST_CASE("proper product basics") {
  const ProperProduct pp{3, {3, 0}, {2}};  // p_1^3 * p_5
  CHECK(pp.degree() == 8);
  CHECK(pp.to_string() == "p1^3*p5");
  CHECK(pp.expand() == power_sum(3, 1).pow(3) * power_sum(3, 5));
  CHECK(ProperProduct{2, {0}, {}}.to_string() == "1");
  CHECK(ProperProduct{2, {0}, {}}.expand() == Poly::constant(2, 1));
}

TEST_CASE("proper product enumeration") {
  {
    const auto b = enumerate_proper_products(2, 3);
    REQUIRE(b.size() == 2);
    CHECK(b[0].to_string() == "p3");
    CHECK(b[1].to_string() == "p1^3");
  }
  {
    // p_3^2 has two elder factors with i(2) = 1, so it is long and excluded.
    const auto b = enumerate_proper_products(2, 6);
    REQUIRE(b.size() == 3);
    for (const auto& pp : b) {
      CHECK(pp.degree() == 6);
      CHECK(static_cast<int>(pp.elders.size()) <= 1);
    }
  }
  {
    const auto b = enumerate_proper_products(3, 5);
    REQUIRE(b.size() == 3);
    CHECK(b[0].to_string() == "p5");
    CHECK(b[1].to_string() == "p1^2*p3");
    CHECK(b[2].to_string() == "p1^5");
  }
  CHECK(enumerate_proper_products(4, 0).size() == 1);
  CHECK(enumerate_proper_products(4, 1).size() == 1);  // p_1
  // Enumeration is sorted and duplicate-free.
  const auto b = enumerate_proper_products(4, 9);
  for (std::size_t k = 1; k < b.size(); ++k) CHECK(proper_product_less(b[k - 1], b[k]));
  CHECK(dim_Tn(4, 9) == static_cast<long>(b.size()));
}

TEST_CASE("decompose on worked examples") {
  {
    // p_3^2 = (9/5) p_1 p_5 - p_1^3 p_3 + (1/5) p_1^6 in two variables.
    const Decomposition d = decompose(power_sum(2, 3).pow(2));
    REQUIRE(d.basis.size() == 3);
    CHECK(d.basis[0].to_string() == "p1*p5");
    CHECK(d.coeffs[0] == Rational(9, 5));
    CHECK(d.basis[1].to_string() == "p1^3*p3");
    CHECK(d.coeffs[1] == Rational(-1));
    CHECK(d.basis[2].to_string() == "p1^6");
    CHECK(d.coeffs[2] == Rational(1, 5));
    CHECK(d.expand() == power_sum(2, 3).pow(2));
  }
  {
    // delta = (1/3) p_1^3 - (1/3) p_3 in three variables.
    const Decomposition d = decompose(delta(3));
    REQUIRE(d.basis.size() == 2);
    CHECK(d.basis[0].to_string() == "p3");
    CHECK(d.coeffs[0] == Rational(-1, 3));
    CHECK(d.basis[1].to_string() == "p1^3");
    CHECK(d.coeffs[1] == Rational(1, 3));
  }
  {
    const Decomposition d = decompose(power_sum(3, 5));
    REQUIRE(d.basis.size() == 1);
    CHECK(d.basis[0] == ProperProduct{3, {0, 0}, {2}});
    CHECK(d.coeffs[0] == Rational(1));
  }
  CHECK(decompose(Poly(4)).basis.empty());
  CHECK_THROWS_AS(decompose(power_sum(2, 2)), std::domain_error);
}

TEST_CASE("constructive decomposers agree with the solver") {
  std::mt19937_64 rng(10005);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 9);
    const Poly f2 = testutil::rnd_member(rng, 2, d);
    CHECK(decompose_constructive_n2(f2) == decompose(f2));
    const Poly f3 = testutil::rnd_member(rng, 3, d);
    CHECK(decompose_constructive_n3(f3) == decompose(f3));
  }
  CHECK_THROWS_AS(decompose_constructive_n2(power_sum(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(decompose_constructive_n3(symfunc::elementary(3, 2)), std::domain_error);
}

TEST_CASE("split_even_odd") {
  {
    const Poly s = power_sum(3, 2) + power_sum(3, 3);
    const auto [even, odd] = split_even_odd(s);
    CHECK(even == power_sum(3, 2));
    CHECK(odd == power_sum(3, 3));
  }
  {
    // p_1 p_2 touches an odd slot, so the whole product lands on the odd side.
    const Poly s = power_sum(4, 1) * power_sum(4, 2);
    const auto [even, odd] = split_even_odd(s);
    CHECK(even.is_zero());
    CHECK(odd == s);
  }
  std::mt19937_64 rng(10006);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const Poly s = testutil::rnd_symmetric(rng, n, static_cast<int>(rng() % 6));
    const auto [even, odd] = split_even_odd(s);
    CHECK(even + odd == s);
    CHECK(symfunc::is_symmetric(even));
  }
}

TEST_CASE("reduction modulo the pairing ideal") {
  // Even n: x_{i+l} -> -x_l.
  CHECK(reduce_mod_I(power_sum(4, 3)).is_zero());
  CHECK(reduce_mod_I(power_sum(4, 2)) ==
        (power_sum(2, 2)).scaled(Rational(2)));
  CHECK(reduce_mod_I(symfunc::elementary(4, 2)) == power_sum(2, 2).scaled(Rational(-1)));
  // Odd n: additionally x_n -> 0.
  CHECK(reduce_mod_I(power_sum(3, 2)) == Poly::monomial(1, {2}, Rational(2)));
  CHECK(reduce_mod_I(power_sum(3, 5)).is_zero());
  CHECK(reduce_mod_I(delta(3)).is_zero());
  // The reduction is a ring homomorphism.
  const Poly a = power_sum(4, 2);
  const Poly b = symfunc::elementary(4, 2);
  CHECK(reduce_mod_I(a * b) == reduce_mod_I(a) * reduce_mod_I(b));
  CHECK(reduce_mod_I(a + b) == reduce_mod_I(a) + reduce_mod_I(b));
}

TEST_CASE("delta as a scaled preimage defect") {
  {
    const auto [alpha, g] = delta_preim_identity(3);
    CHECK(alpha == Rational(-1, 3));
    CHECK(g.scaled(alpha) == delta(3));
  }
  for (int n = 4; n <= 5; ++n) {
    const auto [alpha, g] = delta_preim_identity(n);
    CHECK(alpha != Rational(0));
    CHECK(g.scaled(alpha) == delta(n));
  }
}
