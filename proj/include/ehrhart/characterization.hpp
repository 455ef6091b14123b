#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/enumeration.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasi_polynomial.hpp"

namespace ehrhart {

// Pick's relation for nP: i(n) == A n^2 + boundary(n)/2 + 1.
struct PickCheck {
  bool holds = false;
  Rational residual;  // i(n) - (A n^2 + boundary(n)/2 + 1)
  Integer count;
  Integer boundary;
};

// Linearity of the boundary count: boundary(n) == n * boundary(1).
struct BoundaryLinearityCheck {
  bool holds = false;
  Integer boundary_n;
  Integer n_times_boundary_1;
};

PickCheck check_pick(const Polytope& polygon, const Integer& n, const EnumerationOptions& options = {});
BoundaryLinearityCheck check_boundary_linear(const Polytope& polygon, const Integer& n,
                                             const EnumerationOptions& options = {});

struct CharacterizationRow {
  std::int64_t n = 0;
  Integer count;
  Integer boundary;
  bool pick_holds = false;
  bool linear_holds = false;

  friend bool operator==(const CharacterizationRow&, const CharacterizationRow&) = default;
};

struct CharacterizationReport {
  Rational area;
  Integer denominator;
  std::vector<CharacterizationRow> rows;  // n = 1..D
  // Pick's relation and boundary linearity hold for every n = 1..D.
  bool verdict_conditions = false;
  // The fitted quasi-polynomial has minimal period 1.
  bool verdict_polynomial = false;
  // The fitted quasi-polynomial equals A n^2 + boundary(1)/2 n + 1.
  bool verdict_predicted = false;
  Polynomial predicted;
  QuasiPolynomial fitted = QuasiPolynomial::polynomial({});  // reduced to its minimal period

  friend bool operator==(const CharacterizationReport&, const CharacterizationReport&) = default;
};

// Runs both checks for n = 1..D and fits the Ehrhart quasi-polynomial. The
// three verdicts are equivalent for every rational polygon; if they disagree
// an InvariantViolation is thrown.
CharacterizationReport characterize_polygon(const Polytope& polygon, const EnumerationOptions& options = {});

}  // namespace ehrhart
