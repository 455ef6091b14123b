#include "ehrhart/engine.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

CountSeries sample_counts(const Polytope& p, std::int64_t N, const EnumerationOptions& options) {
  return sample_counts(p, N, CountKind::closed, options);
}

CountSeries sample_counts(const Polytope& p, std::int64_t N, CountKind kind,
                          const EnumerationOptions& options) {
  if (N < 1) throw ParameterError("sample horizon must be positive");
  CountSeries series;
  series.kind = kind;
  series.method = CountMethod::enumeration;
  series.values.reserve(static_cast<std::size_t>(N));
  for (std::int64_t n = 1; n <= N; ++n) series.values.push_back(count(p, Integer(n), kind, options));
  return series;
}

std::int64_t default_sample_horizon(std::int64_t period, int dim) {
  return period * (dim + 1) + period;
}

QuasiPolynomial fit_quasipolynomial(const CountSeries& series, int dim, std::int64_t period_hint) {
  if (series.kind != CountKind::closed) throw FitError("only closed-count series can be fitted");
  if (period_hint < 1) throw FitError("period hint must be positive");
  if (dim < 0) throw FitError("dimension must be nonnegative");
  const auto N = static_cast<std::int64_t>(series.values.size());
  if (N < period_hint * (dim + 1)) {
    throw FitError("need at least " + std::to_string(period_hint * (dim + 1)) + " samples, got " +
                   std::to_string(N));
  }
  auto value_at = [&](std::int64_t n) { return Rational(series.values[static_cast<std::size_t>(n - 1)]); };

  std::vector<Polynomial> constituents;
  constituents.reserve(static_cast<std::size_t>(period_hint));
  for (std::int64_t j = 1; j <= period_hint; ++j) {
    std::vector<Rational> xs, ys;
    for (int m = 0; m <= dim; ++m) {
      const std::int64_t n = j + m * period_hint;
      xs.emplace_back(static_cast<long>(n));
      ys.push_back(value_at(n));
    }
    Polynomial f = lagrange_interpolate(xs, ys);
    if (f.degree().value_or(0) > dim) throw FitError("interpolant exceeds the dimension");
    constituents.push_back(std::move(f));
  }
  QuasiPolynomial q(std::move(constituents), dim);

  for (std::int64_t n = 1; n <= N; ++n) {
    if (q.evaluate(Integer(n)) != value_at(n)) {
      throw FitError("period hint too small or not an Ehrhart series (sample n = " + std::to_string(n) +
                     " disagrees with the fit)");
    }
  }
  return q;
}

QuasiPolynomial segment_constituents(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw GeometryError("segment [" + lo.to_string() + ", " + hi.to_string() + "] is empty or a point");
  const Integer D = lcm(lo.denominator(), hi.denominator());
  const Rational slope = hi - lo;
  std::vector<Polynomial> constituents;
  for (Integer j = 1; j <= D; ++j) {
    const Rational jlo = Rational(j) * lo;
    const Rational jhi = Rational(j) * hi;
    const Rational constant =
        Rational(1) - (Rational(jlo.ceil()) - jlo) - (jhi - Rational(jhi.floor()));
    constituents.push_back(Polynomial({constant, slope}));
  }
  return QuasiPolynomial(std::move(constituents), 1);
}

ReciprocityResult verify_reciprocity(const Polytope& p, const QuasiPolynomial& q, std::int64_t N,
                                     const EnumerationOptions& options) {
  ReciprocityResult result;
  const Rational sign = p.dimension() % 2 == 0 ? Rational(1) : Rational(-1);
  for (std::int64_t n = 1; n <= N; ++n) {
    const Integer interior = count_interior(p, Integer(n), options);
    const Rational rhs = sign * q.evaluate(Integer(-n));
    if (Rational(interior) != rhs) {
      result.holds = false;
      result.failures.push_back({Integer(n), interior, rhs});
    }
  }
  return result;
}

QuasiPolynomial ehrhart_quasipolynomial(const Polytope& p, const EnumerationOptions& options) {
  const Integer D = denominator(p);
  if (!D.fits_slong_p()) throw ParameterError("denominator too large to sample");
  const std::int64_t period = D.get_si();
  const int dim = p.dimension();
  const auto series = sample_counts(p, default_sample_horizon(period, dim), options);
  return fit_quasipolynomial(series, dim, period);
}

PeriodReport period_report(const Polytope& p, const EnumerationOptions& options) {
  const QuasiPolynomial fitted = ehrhart_quasipolynomial(p, options);
  PeriodReport report;
  report.denominator = denominator(p);
  report.minimal_period = minimal_period(fitted);
  report.coefficient_periods = coefficient_periods(fitted);
  report.collapse = Integer(report.minimal_period) != report.denominator;
  report.quasipolynomial = reduce_to_minimal_period(fitted);
  return report;
}

}  // namespace ehrhart
