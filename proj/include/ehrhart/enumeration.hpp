#pragma once

#include <span>
#include <vector>

#include "ehrhart/polytope.hpp"
#include "ehrhart/rational.hpp"

namespace ehrhart {

struct EnumerationOptions {
  // Largest integer bounding box (in cells) that will be enumerated.
  Integer cell_limit = 100'000'000;
};

// normal . x <= offset, or < when strict. Normals are integral.
struct LinearConstraint {
  std::vector<Integer> normal;
  Rational offset;
  bool strict = false;
};

// Inclusive integer ranges per coordinate.
struct IntegerBox {
  std::vector<Integer> lo;
  std::vector<Integer> hi;

  Integer cells() const;
};

IntegerBox bounding_box(std::span<const Point> points);

// Integer points of `box` satisfying every constraint. The first d-1
// coordinates are enumerated; the admissible range of the last one is solved
// exactly per fiber. Throws ResourceLimitError if box.cells() exceeds the limit.
Integer count_lattice_points(std::span<const LinearConstraint> constraints, const IntegerBox& box,
                             const EnumerationOptions& options = {});

std::vector<LinearConstraint> to_constraints(std::span<const HalfSpace> facets, bool strict);

enum class CountKind { closed, interior, boundary };
enum class CountMethod { enumeration, formula };

// values[n - 1] holds the count for the n-th dilate.
struct CountSeries {
  std::vector<Integer> values;
  CountKind kind = CountKind::closed;
  CountMethod method = CountMethod::enumeration;
};

// #(nP ∩ Z^d)
Integer count_closed(const Polytope& p, const Integer& n, const EnumerationOptions& options = {});
// #(interior(nP) ∩ Z^d)
Integer count_interior(const Polytope& p, const Integer& n, const EnumerationOptions& options = {});
// closed minus interior.
Integer count_boundary(const Polytope& p, const Integer& n, const EnumerationOptions& options = {});
Integer count(const Polytope& p, const Integer& n, CountKind kind, const EnumerationOptions& options = {});

// Boundary count of a polygon's n-th dilate by walking its edges: lattice
// points per closed edge, minus lattice vertices counted twice. Independent
// of enumeration.
Integer count_boundary_edge_walk_2d(const Polytope& polygon, const Integer& n);

// floor(n * hi) - ceil(n * lo) + 1. Throws GeometryError when lo > hi.
Integer count_segment_1d(const Rational& lo, const Rational& hi, const Integer& n);

// Half-open parallelogram Q with vertices (0,0), (1,(D-1)/D), (D,0),
// (D-1,-(D-1)/D); both edges at (1,(D-1)/D) are open, the other two closed.
// Counts lattice points in nQ - (0, t/D).
Integer count_halfopen_parallelogram(long D, const Integer& n, long t,
                                     const EnumerationOptions& options = {});
// Same region with all four edges closed.
Integer count_closed_parallelogram(long D, const Integer& n, long t = 0,
                                   const EnumerationOptions& options = {});

}  // namespace ehrhart
