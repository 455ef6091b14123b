#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

// Univariate polynomial in n with exact rational coefficients.
// coefficients()[k] is the coefficient of n^k; trailing zeros are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  // c * n^k
  static Polynomial monomial(const Rational& c, int k);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero for k beyond the stored range.
  Rational coefficient(int k) const;
  // Empty for the zero polynomial.
  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  Rational evaluate(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // e.g. `1/2 n^2 + 3/2 n + 1`; the zero polynomial renders as `0`.
  std::string to_string(std::string_view var = "n") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& p, int e);

// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]).
// Abscissae must be distinct.
Polynomial lagrange_interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace ehrhart
