#include "ehrhart/quasi_polynomial.hpp"

#include <functional>

#include "ehrhart/errors.hpp"

namespace ehrhart {

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents,
                                 std::optional<int> dimension_hint)
    : constituents_(std::move(constituents)), dimension_hint_(dimension_hint) {
  if (constituents_.empty()) throw ParameterError("quasi-polynomial needs at least one constituent");
  if (dimension_hint_) {
    for (const auto& c : constituents_) {
      if (c.degree().value_or(0) > *dimension_hint_) {
        throw ParameterError("constituent degree exceeds dimension hint");
      }
    }
  }
}

QuasiPolynomial QuasiPolynomial::polynomial(Polynomial p, std::optional<int> dimension_hint) {
  return QuasiPolynomial(std::vector<Polynomial>{std::move(p)}, dimension_hint);
}

const Polynomial& QuasiPolynomial::constituent(std::int64_t j) const {
  if (j < 1 || j > period()) throw ParameterError("constituent index out of range");
  return constituents_[static_cast<std::size_t>(j - 1)];
}

std::int64_t QuasiPolynomial::residue(const Integer& n) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(period()));
  const auto res = static_cast<std::int64_t>(r.get_si());
  return res == 0 ? period() : res;
}

Rational QuasiPolynomial::evaluate(const Integer& n) const {
  return constituent(residue(n)).evaluate(Rational(n));
}

int QuasiPolynomial::degree_bound() const {
  if (dimension_hint_) return *dimension_hint_;
  int d = 0;
  for (const auto& c : constituents_) d = std::max(d, c.degree().value_or(0));
  return d;
}

std::string QuasiPolynomial::to_string() const {
  std::string out;
  for (std::int64_t j = 1; j <= period(); ++j) {
    out += std::to_string(j) + ": " + constituent(j).to_string() + "\n";
  }
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

namespace {

// Smallest divisor s of `period` such that same(j, j + s) for all valid j.
std::int64_t smallest_repeating_divisor(std::int64_t period,
                                        const std::function<bool(std::int64_t, std::int64_t)>& same) {
  for (std::int64_t s : divisors(period)) {
    bool repeats = true;
    for (std::int64_t j = 1; j + s <= period && repeats; ++j) repeats = same(j, j + s);
    if (repeats) return s;
  }
  return period;
}

}  // namespace

std::int64_t minimal_period(const QuasiPolynomial& q) {
  return smallest_repeating_divisor(q.period(), [&](std::int64_t a, std::int64_t b) {
    return q.constituent(a) == q.constituent(b);
  });
}

QuasiPolynomial reduce_to_minimal_period(const QuasiPolynomial& q) {
  const auto p = minimal_period(q);
  std::vector<Polynomial> head(q.constituents().begin(), q.constituents().begin() + p);
  return QuasiPolynomial(std::move(head), q.dimension_hint());
}

QuasiPolynomial expand_period(const QuasiPolynomial& q, std::int64_t m) {
  if (m < 1) throw ParameterError("period multiplier must be positive");
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(q.period() * m));
  for (std::int64_t i = 0; i < m; ++i) {
    out.insert(out.end(), q.constituents().begin(), q.constituents().end());
  }
  return QuasiPolynomial(std::move(out), q.dimension_hint());
}

std::vector<std::int64_t> coefficient_periods(const QuasiPolynomial& q) {
  std::vector<std::int64_t> out;
  for (int k = 0; k <= q.degree_bound(); ++k) {
    out.push_back(smallest_repeating_divisor(q.period(), [&](std::int64_t a, std::int64_t b) {
      return q.constituent(a).coefficient(k) == q.constituent(b).coefficient(k);
    }));
  }
  return out;
}

}  // namespace ehrhart
