#include "ehrhart/characterization.hpp"

#include "ehrhart/engine.hpp"
#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

void require_polygon(const Polytope& p) {
  if (p.ambient_dim() != 2 || p.is_product()) throw ParameterError("characterization applies to polygons only");
}

PickCheck pick_from_counts(const Rational& area, const Integer& n, const Integer& count,
                           const Integer& boundary) {
  const Rational rhs = area * Rational(n * n) + Rational(boundary, 2) + Rational(1);
  PickCheck out;
  out.residual = Rational(count) - rhs;
  out.holds = out.residual.is_zero();
  out.count = count;
  out.boundary = boundary;
  return out;
}

}  // namespace

PickCheck check_pick(const Polytope& polygon, const Integer& n, const EnumerationOptions& options) {
  require_polygon(polygon);
  const Integer closed = count_closed(polygon, n, options);
  const Integer boundary = closed - count_interior(polygon, n, options);
  return pick_from_counts(area_2d(polygon), n, closed, boundary);
}

BoundaryLinearityCheck check_boundary_linear(const Polytope& polygon, const Integer& n,
                                             const EnumerationOptions& options) {
  require_polygon(polygon);
  BoundaryLinearityCheck out;
  out.boundary_n = count_boundary(polygon, n, options);
  out.n_times_boundary_1 = n * count_boundary(polygon, 1, options);
  out.holds = out.boundary_n == out.n_times_boundary_1;
  return out;
}

CharacterizationReport characterize_polygon(const Polytope& polygon, const EnumerationOptions& options) {
  require_polygon(polygon);
  CharacterizationReport report;
  report.area = area_2d(polygon);
  report.denominator = denominator(polygon);
  const std::int64_t D = report.denominator.get_si();

  const Integer boundary_1 = count_boundary(polygon, 1, options);
  report.verdict_conditions = true;
  for (std::int64_t n = 1; n <= D; ++n) {
    const Integer closed = count_closed(polygon, n, options);
    const Integer boundary = closed - count_interior(polygon, n, options);
    CharacterizationRow row;
    row.n = n;
    row.count = closed;
    row.boundary = boundary;
    row.pick_holds = pick_from_counts(report.area, n, closed, boundary).holds;
    row.linear_holds = boundary == Integer(n) * boundary_1;
    report.verdict_conditions = report.verdict_conditions && row.pick_holds && row.linear_holds;
    report.rows.push_back(std::move(row));
  }

  report.predicted = Polynomial({Rational(1), Rational(boundary_1, 2), report.area});
  const QuasiPolynomial fitted = ehrhart_quasipolynomial(polygon, options);
  report.fitted = reduce_to_minimal_period(fitted);
  report.verdict_polynomial = report.fitted.period() == 1;
  report.verdict_predicted = report.verdict_polynomial && report.fitted.constituent(1) == report.predicted;

  if (report.verdict_conditions != report.verdict_polynomial ||
      report.verdict_polynomial != report.verdict_predicted) {
    throw InvariantViolation(
        "polynomiality verdicts disagree: conditions=" + std::string(report.verdict_conditions ? "yes" : "no") +
        " minimal-period-1=" + (report.verdict_polynomial ? "yes" : "no") +
        " matches-predicted=" + (report.verdict_predicted ? "yes" : "no"));
  }
  return report;
}

}  // namespace ehrhart
