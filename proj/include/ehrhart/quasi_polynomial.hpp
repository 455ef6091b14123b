#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehrhart/polynomial.hpp"

namespace ehrhart {

// Quasi-polynomial with period p: constituent j (1 <= j <= p) applies when
// n ≡ j (mod p), so constituent p serves the residue class of 0. Evaluation is
// defined on all of Z.
class QuasiPolynomial {
 public:
  // Throws ParameterError if `constituents` is empty or a constituent exceeds
  // the dimension hint.
  explicit QuasiPolynomial(std::vector<Polynomial> constituents,
                           std::optional<int> dimension_hint = std::nullopt);

  static QuasiPolynomial polynomial(Polynomial p, std::optional<int> dimension_hint = std::nullopt);

  std::int64_t period() const { return static_cast<std::int64_t>(constituents_.size()); }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  // 1-based, j in [1, period].
  const Polynomial& constituent(std::int64_t j) const;
  std::optional<int> dimension_hint() const { return dimension_hint_; }

  // Residue of n in {1, ..., period}.
  std::int64_t residue(const Integer& n) const;
  Rational evaluate(const Integer& n) const;

  // Highest constituent degree, or the hint when set; 0 for the zero function.
  int degree_bound() const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

  // One line per constituent: `j: <polynomial>`.
  std::string to_string() const;

 private:
  std::vector<Polynomial> constituents_;
  std::optional<int> dimension_hint_;
};

// Smallest divisor p' of q.period() with constituent j == constituent j + p'.
std::int64_t minimal_period(const QuasiPolynomial& q);

// Equivalent quasi-polynomial stored with its minimal period.
QuasiPolynomial reduce_to_minimal_period(const QuasiPolynomial& q);

// The same function stored with period m * q.period().
QuasiPolynomial expand_period(const QuasiPolynomial& q, std::int64_t m);

// [s_0, ..., s_d] with d = q.degree_bound(); s_k is the minimal period of the
// n^k coefficient across constituents.
std::vector<std::int64_t> coefficient_periods(const QuasiPolynomial& q);

std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace ehrhart
