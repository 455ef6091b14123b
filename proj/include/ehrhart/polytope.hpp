#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "ehrhart/rational.hpp"

namespace ehrhart {

using Point = std::vector<Rational>;

// The constraint normal . x <= offset.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational offset;

  bool satisfied_by(std::span<const Rational> x, bool strict) const;
  bool tight_at(std::span<const Rational> x) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// Scales a half-space so its normal has coprime integer entries. Throws
// GeometryError on a zero normal.
HalfSpace normalize(HalfSpace h);

enum class Containment { closed, open };

// Full-dimensional rational polytope in R^d.
//
// 1-D polytopes are segments [lo, hi] with lo < hi. 2-D polytopes are stored
// with hull-ordered vertices and derived edge half-spaces. Explicit polytopes
// in d >= 3 must be supplied with facets, which are validated against the
// vertices. Products P x [0, m]^k keep their structure so membership can be
// decided factor-wise.
class Polytope {
 public:
  static Polytope segment(const Rational& lo, const Rational& hi);
  // d = 1 takes the extreme points, d = 2 hull-orders (dropping non-extreme
  // points), d >= 3 requires `facets`. Any supplied facets are validated.
  static Polytope from_vertices(int ambient_dim, std::vector<Point> vertices,
                                std::vector<HalfSpace> facets = {});

  int ambient_dim() const { return ambient_dim_; }
  // Every polytope accepted by the model is full-dimensional.
  int dimension() const { return ambient_dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  // Always populated; normals are coprime integer vectors.
  const std::vector<HalfSpace>& facets() const { return facets_; }

  bool is_product() const { return base_ != nullptr; }
  // Only meaningful when is_product().
  const Polytope& base() const { return *base_; }
  int box_dims() const { return box_dims_; }
  // Side length of the box factor; n after dilating a unit product by n.
  const Integer& box_side() const { return box_side_; }

  friend Polytope product_with_box(const Polytope& p, int k);
  friend Polytope dilate(const Polytope& p, const Integer& n);

 private:
  Polytope() = default;
  void validate_facets() const;

  int ambient_dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<HalfSpace> facets_;
  std::shared_ptr<const Polytope> base_;
  int box_dims_ = 0;
  Integer box_side_ = 0;
};

// lcm of the reduced denominators of all vertex coordinates.
Integer denominator(const Polytope& p);

Polytope dilate(const Polytope& p, const Integer& n);

// P x [0,1]^k.
Polytope product_with_box(const Polytope& p, int k);

bool contains(const Polytope& p, std::span<const Rational> x, Containment mode);

// Counterclockwise hull vertices starting at the lexicographically smallest
// point. Throws GeometryError when the points are collinear.
std::vector<Point> hull_order_2d(std::vector<Point> points);

// One outward half-space per edge of a hull-ordered polygon; normals are
// coprime integers.
std::vector<HalfSpace> vrep_to_hrep_2d(std::span<const Point> hull);
std::vector<HalfSpace> vrep_to_hrep_2d(const Polytope& polygon);

Rational area_2d(const Polytope& p);

}  // namespace ehrhart
