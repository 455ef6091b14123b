// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ehrhart/characterization.hpp"
#include "ehrhart/constructions.hpp"
#include "ehrhart/engine.hpp"
#include "ehrhart/enumeration.hpp"
#include "ehrhart/errors.hpp"
#include "support/oracles.hpp"

using namespace ehrhart;

namespace {

// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_ < 5) notes_ << (failures_ ? "; " : "") << what;
    ++failures_;
  }
  bool ok() const { return failures_ == 0; }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string str(const Integer& v) { return v.get_str(); }

void triangle_family(Check& c) {
  for (std::int64_t D = 2; D <= 12; ++D) {
    const auto r = period_report(triangle(D).polytope);
    const Polynomial want({Rational(1), Rational(D + 1, 2), Rational(D - 1, 2)});
    c.expect(r.denominator == D, "D=" + std::to_string(D) + " denominator " + str(r.denominator));
    c.expect(r.minimal_period == 1, "D=" + std::to_string(D) + " period " + std::to_string(r.minimal_period));
    c.expect(r.quasipolynomial == QuasiPolynomial::polynomial(want, 2),
             "D=" + std::to_string(D) + " fit " + r.quasipolynomial.to_string());
  }
}

void pentagon_family(Check& c) {
  for (std::int64_t s : {1, 2, 3, 6}) {
    const auto pent = pentagon(6, s).polytope;
    const auto r = period_report(pent);
    c.expect(r.denominator == 6, "s=" + std::to_string(s) + " denominator " + str(r.denominator));
    c.expect(r.minimal_period == s, "s=" + std::to_string(s) + " period " + std::to_string(r.minimal_period));
    const auto tri = triangle(6).polytope;
    for (long n = 1; n <= 18; ++n) {
      const Integer want = count_closed(tri, n) + (n / s) * (6 * n + 1);
      c.expect(count_closed(pent, n) == want, "s=" + std::to_string(s) + " n=" + std::to_string(n));
    }
  }
}

void prism_family(Check& c) {
  struct Case {
    std::int64_t D, s;
    int d;
  };
  for (const Case k : {Case{2, 2, 3}, Case{3, 1, 4}}) {
    const auto pr = prism(k.D, k.s, k.d).polytope;
    const auto pent = pentagon(k.D, k.s).polytope;
    const std::string tag = "(" + std::to_string(k.D) + "," + std::to_string(k.s) + "," + std::to_string(k.d) + ")";
    for (long n = 1; n <= 8; ++n) {
      Integer factor = 1;
      for (int i = 0; i < k.d - 2; ++i) factor *= n + 1;
      c.expect(testing::naive_count_contains(pr, n, Containment::closed) == factor * count_closed(pent, n),
               tag + " n=" + std::to_string(n));
    }
    c.expect(period_report(pr).minimal_period == k.s, tag + " period");
  }
}

void segments_full_period(Check& c) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 100; ++i) {
    const auto [lo, hi] = testing::random_segment(rng, 12, 30);
    const std::string tag = "[" + lo.to_string() + "," + hi.to_string() + "]";
    const Polytope seg = Polytope::segment(lo, hi);
    const Integer D = lcm(lo.denominator(), hi.denominator());
    const auto r = period_report(seg);
    c.expect(r.denominator == D && Integer(r.minimal_period) == D, tag + " period");
    const auto closed_form = segment_constituents(lo, hi);
    c.expect(ehrhart_quasipolynomial(seg) == closed_form, tag + " constituents");
    for (std::int64_t j = 1; j <= closed_form.period(); ++j) {
      const bool one = closed_form.constituent(j).coefficient(0) == Rational(1);
      c.expect(one == (j == closed_form.period()), tag + " constant term j=" + std::to_string(j));
    }
  }
}

void halfopen_parallelogram(Check& c) {
  for (long D = 2; D <= 8; ++D) {
    for (long n = 1; n <= 8; ++n) {
      const std::string tag = "D=" + std::to_string(D) + " n=" + std::to_string(n);
      c.expect(count_halfopen_parallelogram(D, n, 0) == (D - 1) * n * n, tag + " half-open");
      c.expect(count_closed_parallelogram(D, n) == (D - 1) * n * n + n + 1, tag + " closed");
    }
    for (long t = 0; t < D; ++t) {
      c.expect(count_halfopen_parallelogram(D, 1, t) == D - 1, "D=" + std::to_string(D) + " t=" + std::to_string(t));
    }
  }
}

void pyramid(Check& c) {
  const auto p = stanley_pyramid().polytope;
  for (long n = 1; n <= 10; ++n) {
    c.expect(count_closed(p, n) == testing::binomial(n + 3, 3), "n=" + std::to_string(n));
  }
  const auto r = period_report(p);
  c.expect(r.denominator == 2, "denominator");
  c.expect(r.minimal_period == 1, "period");
}

void linear_coefficient_period(Check& c) {
  const auto q = ehrhart_quasipolynomial(example_triangle(2).polytope);
  c.expect(q.period() == 2, "period");
  c.expect(q.constituent(1) == Polynomial({1, 0, 1}), "odd constituent " + q.constituent(1).to_string());
  c.expect(q.constituent(2) == Polynomial({1, 1, 1}), "even constituent " + q.constituent(2).to_string());
  const auto s = coefficient_periods(q);
  c.expect(s == std::vector<std::int64_t>{1, 2, 1}, "coefficient periods");
}

void example_three(Check& c) {
  const auto p = example_triangle(3).polytope;
  const auto q = ehrhart_quasipolynomial(p);
  c.expect(q.constituent(1) == Polynomial({Rational(3, 4), Rational(1), Rational(1, 4)}), "odd constituent");
  c.expect(q.constituent(2) == Polynomial({Rational(1), Rational(1), Rational(1, 4)}), "even constituent");
  c.expect(check_boundary_linear(p, 1).holds, "boundary linearity at n=1");
  c.expect(!check_pick(p, 1).holds, "Pick at n=1");
}

std::vector<Polytope> reciprocity_fixtures() {
  std::vector<Polytope> out;
  for (std::int64_t D = 2; D <= 6; ++D) out.push_back(triangle(D).polytope);
  for (std::int64_t s : {1, 2, 3, 6}) out.push_back(pentagon(6, s).polytope);
  out.push_back(prism(2, 2, 3).polytope);
  out.push_back(prism(3, 1, 4).polytope);
  out.push_back(stanley_pyramid().polytope);
  out.push_back(example_triangle(2).polytope);
  out.push_back(example_triangle(3).polytope);
  std::mt19937_64 rng(777);
  for (int i = 0; i < 50; ++i) out.push_back(testing::random_polygon(rng, 6, 3));
  return out;
}

void reciprocity(Check& c) {
  int index = 0;
  for (const auto& p : reciprocity_fixtures()) {
    const long D = denominator(p).get_si();
    const auto r = verify_reciprocity(p, ehrhart_quasipolynomial(p), 2 * D);
    c.expect(r.holds, "fixture " + std::to_string(index));
    ++index;
  }
}

void characterization_equivalence(Check& c) {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) {
    const Polytope p = testing::random_polygon(rng, 6, 3);
    try {
      const auto r = characterize_polygon(p);
      c.expect(r.verdict_conditions == r.verdict_polynomial && r.verdict_polynomial == r.verdict_predicted,
               "polygon " + std::to_string(i));
    } catch (const InvariantViolation& e) {
      c.expect(false, "polygon " + std::to_string(i) + ": " + e.what());
    }
  }
}

void structural_invariants(Check& c) {
  int index = 0;
  for (const auto& p : reciprocity_fixtures()) {
    const std::string tag = "fixture " + std::to_string(index++);
    const auto q = ehrhart_quasipolynomial(p);
    for (const auto& f : q.constituents()) {
      c.expect(f.degree() == p.dimension(), tag + " degree");
      if (p.ambient_dim() == 2 && !p.is_product()) c.expect(f.coefficient(2) == area_2d(p), tag + " leading");
    }
    c.expect(q.evaluate(0) == Rational(1), tag + " q(0)");
    const long D = denominator(p).get_si();
    for (long n = 1; n <= 2 * D; ++n) {
      c.expect(count_closed(p, n) == count_interior(p, n) + count_boundary(p, n), tag + " n=" + std::to_string(n));
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"triangle family collapses to (D-1)/2 n^2 + (D+1)/2 n + 1", triangle_family},
      {"pentagon family has minimal period s", pentagon_family},
      {"prism family counts factor through the pentagon", prism_family},
      {"segments have full period", segments_full_period},
      {"half-open parallelogram counts", halfopen_parallelogram},
      {"pyramid counts are C(n+3, 3)", pyramid},
      {"coefficient of n has larger period than the constant term", linear_coefficient_period},
      {"triangle with Pick failure at n = 1", example_three},
      {"reciprocity on all fixtures", reciprocity},
      {"polygon polynomiality verdicts agree", characterization_equivalence},
      {"structural invariants on all fixtures", structural_invariants},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first;
    if (!check.ok()) {
      std::cout << " (" << check.notes() << ")";
      ++failed;
    }
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
