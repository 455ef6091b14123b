#include <doctest.h>

#include <random>

#include "ehrhart/errors.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/quasi_polynomial.hpp"
#include "support/oracles.hpp"

using namespace ehrhart;

namespace {

QuasiPolynomial odd_even_triangle() {
  return QuasiPolynomial({Polynomial({1, 0, 1}), Polynomial({1, 1, 1})}, 2);
}

}  // namespace

TEST_CASE("rational canonical form") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> val(-40, 40);
  std::uniform_int_distribution<long> mult(-9, 9);
  for (int iter = 0; iter < 500; ++iter) {
    long a = val(rng), b = val(rng), k = mult(rng);
    if (b == 0 || k == 0) continue;
    const Integer g = gcd(Integer(a), Integer(b));
    const Rational r(Integer(k * a), Integer(k * b));
    CHECK(gcd(r.numerator(), r.denominator()) == 1);
    CHECK(r.denominator() > 0);
    // Same value as a/b in lowest terms, sign on the numerator.
    const long sign = b < 0 ? -1 : 1;
    CHECK(r.numerator() == Integer(sign * a) / g);
    CHECK(r.denominator() == Integer(sign * b) / g);
  }
  CHECK(Rational(Integer(0), Integer(-5)).denominator() == 1);
  CHECK(Rational(Integer(0), Integer(-5)).numerator() == 0);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ParameterError);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse("+2/4").to_string() == "1/2");
  CHECK(Rational(-4, 6).to_string() == "-2/3");
  CHECK(Rational(10, 5).to_string() == "2");
  CHECK(Rational::parse("123456789012345678901234567890/2").to_string() == "61728394506172839450617283945");
  CHECK_THROWS_AS(Rational::parse("1//2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
}

TEST_CASE("rational floor and ceil") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-3).floor() == -3);
  CHECK(Rational(-7, 2).fractional_part() == Rational(1, 2));
}

TEST_CASE("poly_eval") {
  CHECK(Polynomial({1, 2, 1}).evaluate(3) == Rational(16));
  CHECK(Polynomial({Rational(1), Rational(3, 2), Rational(1, 2)}).evaluate(2) == Rational(6));
  CHECK(Polynomial().evaluate(7) == Rational(0));
}

TEST_CASE("polynomial canonical form and degree") {
  const Polynomial p({1, 2, 0, 0});
  CHECK(p.coefficients().size() == 2);
  CHECK(p.degree() == 1);
  CHECK(Polynomial({0, 0}).degree() == std::nullopt);
  CHECK(Polynomial({0, 0}) == Polynomial());
  CHECK((Polynomial({1, 1}) * Polynomial({-1, 1})) == Polynomial({-1, 0, 1}));
  CHECK((Polynomial({1, 1}) - Polynomial({1, 1})).is_zero());
}

TEST_CASE("polynomial rendering") {
  CHECK(Polynomial({Rational(1), Rational(3, 2), Rational(1, 2)}).to_string() == "1/2 n^2 + 3/2 n + 1");
  CHECK(Polynomial({1, 0, 1}).to_string() == "n^2 + 1");
  CHECK(Polynomial({0, -1}).to_string() == "-n");
  CHECK(Polynomial({Rational(-3, 4), 0, Rational(-2)}).to_string() == "-2 n^2 - 3/4");
  CHECK(Polynomial().to_string() == "0");
}

TEST_CASE("lagrange interpolation reproduces random polynomials") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    std::vector<Rational> c;
    for (int k = 0; k < 5; ++k) c.push_back(testing::random_rational(rng, 9, 7));
    const Polynomial p(c);
    std::vector<Rational> xs, ys;
    for (long x = -2; x < 3; ++x) {
      xs.emplace_back(x * 3 + 1);
      ys.push_back(p.evaluate(xs.back()));
    }
    CHECK(lagrange_interpolate(xs, ys) == p);
  }
  const std::vector<Rational> dup = {1, 1};
  CHECK_THROWS_AS(lagrange_interpolate(dup, dup), ParameterError);
}

TEST_CASE("qp_eval residue convention") {
  const auto q = odd_even_triangle();
  CHECK(q.evaluate(3) == Rational(10));
  CHECK(q.evaluate(-1) == Rational(2));
  CHECK(q.evaluate(0) == Rational(1));
  CHECK(q.residue(-1) == 1);
  CHECK(q.residue(0) == 2);
  CHECK(q.residue(-4) == 2);
  const auto unit = QuasiPolynomial::polynomial(Polynomial({1, 1}));
  CHECK(unit.evaluate(5) == Rational(6));
}

TEST_CASE("qp_minimal_period") {
  SUBCASE("collapsed triangle constituents") {
    const Polynomial f({Rational(1), Rational(5, 2), Rational(3, 2)});
    const QuasiPolynomial q({f, f, f, f}, 2);
    CHECK(minimal_period(q) == 1);
    CHECK(reduce_to_minimal_period(q) == QuasiPolynomial::polynomial(f, 2));
    CHECK(q.period() == 4);
  }
  SUBCASE("distinct constituents") { CHECK(minimal_period(odd_even_triangle()) == 2); }
  SUBCASE("period one") { CHECK(minimal_period(QuasiPolynomial::polynomial(Polynomial({3}))) == 1); }
  SUBCASE("period 6 with structure of period 3") {
    const Polynomial a({1}), b({2}), c({3});
    CHECK(minimal_period(QuasiPolynomial({a, b, c, a, b, c})) == 3);
    CHECK(minimal_period(QuasiPolynomial({a, b, a, b, a, c})) == 6);
  }
}

TEST_CASE("qp_coefficient_periods") {
  CHECK(coefficient_periods(odd_even_triangle()) == std::vector<std::int64_t>{1, 2, 1});
  const QuasiPolynomial ex3({Polynomial({Rational(3, 4), 1, Rational(1, 4)}), Polynomial({1, 1, Rational(1, 4)})}, 2);
  CHECK(coefficient_periods(ex3) == std::vector<std::int64_t>{2, 1, 1});
  const Polynomial t({Rational(1), Rational(7, 2), Rational(5, 2)});
  CHECK(coefficient_periods(QuasiPolynomial({t, t, t, t, t, t}, 2)) == std::vector<std::int64_t>{1, 1, 1});
}

TEST_CASE("quasi-polynomial rendering") {
  CHECK(odd_even_triangle().to_string() == "1: n^2 + 1\n2: n^2 + n + 1\n");
}

TEST_CASE("dimension hint is enforced") {
  CHECK_THROWS_AS(QuasiPolynomial({Polynomial({0, 0, 1})}, 1), ParameterError);
  CHECK_THROWS_AS(QuasiPolynomial(std::vector<Polynomial>{}), ParameterError);
}

TEST_CASE("property: reduction preserves evaluation; lcm of coefficient periods is the minimal period") {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const QuasiPolynomial q = testing::random_quasipolynomial(rng, 12, 4);
    const QuasiPolynomial r = reduce_to_minimal_period(q);
    const auto p = q.period();
    for (std::int64_t n = -3 * p; n <= 3 * p; ++n) REQUIRE(q.evaluate(n) == r.evaluate(n));

    std::int64_t l = 1;
    for (const auto s : coefficient_periods(q)) {
      CHECK(p % s == 0);
      l = std::lcm(l, s);
    }
    CHECK(l == minimal_period(q));

    for (std::int64_t m = 1; m <= 3; ++m) CHECK(minimal_period(expand_period(q, m)) == minimal_period(q));
  }
}
