#pragma once

#include <cstdint>
#include <vector>

#include "ehrhart/enumeration.hpp"
#include "ehrhart/polytope.hpp"
#include "ehrhart/quasi_polynomial.hpp"

namespace ehrhart {

// i_P(1..N) by enumeration.
CountSeries sample_counts(const Polytope& p, std::int64_t N, const EnumerationOptions& options = {});
CountSeries sample_counts(const Polytope& p, std::int64_t N, CountKind kind,
                          const EnumerationOptions& options = {});

// Number of samples fit_quasipolynomial needs for a degree-d fit with the given
// period, plus one full period of validation samples.
std::int64_t default_sample_horizon(std::int64_t period, int dim);

// For each residue j in 1..D interpolates the degree <= dim polynomial through
// (j + mD, i(j + mD)), m = 0..dim. Samples beyond those are checked against the
// fit; any disagreement throws FitError (the period hint is too small, or the
// data is not an Ehrhart series).
QuasiPolynomial fit_quasipolynomial(const CountSeries& series, int dim, std::int64_t period_hint);

// Closed-form constituents of a segment [lo, hi]:
// f_j(n) = (hi - lo) n + 1 - ({ceil(j lo) - j lo}) - (j hi - floor(j hi)).
QuasiPolynomial segment_constituents(const Rational& lo, const Rational& hi);

struct ReciprocityWitness {
  Integer n;
  Integer interior;   // #(interior(nP) ∩ Z^d)
  Rational signed_value;  // (-1)^d q(-n)

  friend bool operator==(const ReciprocityWitness&, const ReciprocityWitness&) = default;
};

struct ReciprocityResult {
  bool holds = true;
  std::vector<ReciprocityWitness> failures;
};

// Checks #(interior(nP) ∩ Z^d) == (-1)^d q(-n) for n = 1..N.
ReciprocityResult verify_reciprocity(const Polytope& p, const QuasiPolynomial& q, std::int64_t N,
                                     const EnumerationOptions& options = {});

struct PeriodReport {
  Integer denominator;
  std::int64_t minimal_period = 1;
  std::vector<std::int64_t> coefficient_periods;
  bool collapse = false;
  // Stored at the minimal period.
  QuasiPolynomial quasipolynomial = QuasiPolynomial::polynomial({});

  friend bool operator==(const PeriodReport&, const PeriodReport&) = default;
};

// Fits with the denominator as period hint (a true period), then reduces.
PeriodReport period_report(const Polytope& p, const EnumerationOptions& options = {});

// Fitted Ehrhart quasi-polynomial at period D(P), not reduced.
QuasiPolynomial ehrhart_quasipolynomial(const Polytope& p, const EnumerationOptions& options = {});

}  // namespace ehrhart
