#include <doctest.h>

#include <random>

#include "ehrhart/constructions.hpp"
#include "ehrhart/enumeration.hpp"
#include "ehrhart/errors.hpp"
#include "support/oracles.hpp"

using namespace ehrhart;

namespace {

Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

Polytope unit_square() { return Polytope::from_vertices(2, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}); }

std::vector<Polytope> fixtures() {
  return {unit_square(),
          triangle(2).polytope,
          triangle(3).polytope,
          triangle(5).polytope,
          pentagon(6, 2).polytope,
          example_triangle(2).polytope,
          example_triangle(3).polytope,
          Polytope::segment(Rational(1, 2), Rational(3, 2)),
          Polytope::segment(Rational(-2, 3), Rational(1, 4)),
          stanley_pyramid().polytope,
          prism(2, 2, 3).polytope};
}

}  // namespace

TEST_CASE("count_closed") {
  CHECK(count_closed(triangle(3).polytope, 1) == 4);
  CHECK(count_closed(triangle(3).polytope, 2) == 9);
  CHECK(count_closed(stanley_pyramid().polytope, 1) == 4);
  CHECK(count_closed(stanley_pyramid().polytope, 2) == 10);
  CHECK(count_closed(example_triangle(2).polytope, 1) == 2);
  CHECK(count_closed(example_triangle(2).polytope, 2) == 7);
}

TEST_CASE("count_interior") {
  CHECK(count_interior(example_triangle(2).polytope, 1) == 2);
  CHECK(count_interior(unit_square(), 2) == 1);
  CHECK(count_interior(triangle(2).polytope, 1) == 0);
}

TEST_CASE("count_boundary") {
  CHECK(count_boundary(unit_square(), 1) == 4);
  CHECK(count_boundary(example_triangle(2).polytope, 1) == 0);
  CHECK(count_boundary(example_triangle(2).polytope, 2) == 4);
  const Polytope ex3 = example_triangle(3).polytope;
  CHECK(count_boundary(ex3, 1) == 2);
  CHECK(count_boundary(ex3, 2) == 4);
  CHECK(count_boundary(ex3, 3) == 6);
}

TEST_CASE("fiber enumeration agrees with cell-by-cell oracles") {
  for (const auto& p : fixtures()) {
    const long limit = p.ambient_dim() >= 3 ? 5 : 9;
    for (long n = 1; n <= limit; ++n) {
      CHECK(count_closed(p, n) == testing::naive_count_contains(p, n, Containment::closed));
      CHECK(count_interior(p, n) == testing::naive_count_contains(p, n, Containment::open));
      if (p.ambient_dim() == 2) {
        CHECK(count_closed(p, n) == testing::naive_count_polygon(p.vertices(), n, false));
        CHECK(count_interior(p, n) == testing::naive_count_polygon(p.vertices(), n, true));
      }
    }
  }
}

TEST_CASE("boundary edge walk matches closed minus interior") {
  std::mt19937_64 rng(11);
  std::vector<Polytope> polys = {unit_square(), triangle(4).polytope, pentagon(6, 3).polytope,
                                 example_triangle(2).polytope, example_triangle(3).polytope};
  for (int i = 0; i < 40; ++i) polys.push_back(testing::random_polygon(rng));
  for (const auto& p : polys) {
    for (long n = 1; n <= 8; ++n) {
      REQUIRE(count_boundary_edge_walk_2d(p, n) == count_boundary(p, n));
    }
  }
}

TEST_CASE("closed = interior + boundary on fixtures") {
  for (const auto& p : fixtures()) {
    const long D = denominator(p).get_si();
    const long horizon = std::min<long>(2 * D * (p.dimension() + 1), 12);
    for (long n = 1; n <= horizon; ++n) {
      CHECK(count_closed(p, n) == count_interior(p, n) + count_boundary(p, n));
    }
  }
}

TEST_CASE("count_segment_1d") {
  CHECK(count_segment_1d(Rational(1, 2), Rational(3, 2), 1) == 1);
  CHECK(count_segment_1d(Rational(1, 2), Rational(3, 2), 2) == 3);
  for (long n = 1; n <= 10; ++n) {
    CHECK(count_segment_1d(0, 1, n) == n + 1);
    CHECK(count_segment_1d(4, 4, n) == 1);
  }
  CHECK_THROWS_AS(count_segment_1d(1, 0, 1), GeometryError);
}

TEST_CASE("property: 1-D closed form equals enumeration") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto [lo, hi] = testing::random_segment(rng);
    const Polytope seg = Polytope::segment(lo, hi);
    for (long n = 1; n <= 30; ++n) REQUIRE(count_segment_1d(lo, hi, n) == count_closed(seg, n));
  }
}

TEST_CASE("count_halfopen_parallelogram") {
  CHECK(count_halfopen_parallelogram(3, 1, 0) == 2);
  CHECK(count_halfopen_parallelogram(3, 1, 1) == 2);
  CHECK(count_halfopen_parallelogram(3, 1, 2) == 2);
  const long expected[] = {2, 8, 18, 32};
  for (long n = 1; n <= 4; ++n) CHECK(count_halfopen_parallelogram(3, n, 0) == expected[n - 1]);
  CHECK_THROWS_AS(count_halfopen_parallelogram(1, 1, 0), ParameterError);
  CHECK_THROWS_AS(count_halfopen_parallelogram(3, 1, 3), ParameterError);
}

TEST_CASE("parallelogram closure and triangle tiling identities") {
  for (long D = 2; D <= 8; ++D) {
    for (long n = 1; n <= 8; ++n) {
      CHECK(count_closed_parallelogram(D, n) == (D - 1) * n * n + n + 1);
      CHECK(count_closed_parallelogram(D, n) - count_halfopen_parallelogram(D, n, 0) == n + 1);
      CHECK(2 * count_closed(triangle(D).polytope, n) - (D * n + 1) == (D - 1) * n * n + n + 1);
    }
  }
}

TEST_CASE("product factorization") {
  const Polytope base = pentagon(4, 2).polytope;
  for (int k = 1; k <= 2; ++k) {
    const Polytope p = product_with_box(base, k);
    for (long n = 1; n <= 6; ++n) {
      Integer box = 1;
      for (int i = 0; i < k; ++i) box *= n + 1;
      CHECK(count_closed(p, n) == count_closed(base, n) * box);
      // Interior factorizes with (n-1)^k.
      Integer inner = 1;
      for (int i = 0; i < k; ++i) inner *= n - 1;
      CHECK(count_interior(p, n) == count_interior(base, n) * inner);
    }
  }
}

TEST_CASE("resource limit") {
  EnumerationOptions tight;
  tight.cell_limit = 50;
  CHECK_THROWS_AS(count_closed(triangle(5).polytope, 10, tight), ResourceLimitError);
  CHECK_NOTHROW(count_closed(triangle(5).polytope, 1, tight));
}
