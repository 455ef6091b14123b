#include "ehrhart/enumeration.hpp"

#include <algorithm>

#include "ehrhart/errors.hpp"

namespace ehrhart {

Integer IntegerBox::cells() const {
  Integer total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) return 0;
    total *= hi[i] - lo[i] + 1;
  }
  return total;
}

IntegerBox bounding_box(std::span<const Point> points) {
  if (points.empty()) throw ParameterError("bounding box of an empty point set");
  IntegerBox box;
  const std::size_t d = points.front().size();
  for (std::size_t i = 0; i < d; ++i) {
    Rational lo = points.front()[i];
    Rational hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    box.lo.push_back(lo.ceil());
    box.hi.push_back(hi.floor());
  }
  return box;
}

std::vector<LinearConstraint> to_constraints(std::span<const HalfSpace> facets, bool strict) {
  std::vector<LinearConstraint> out;
  out.reserve(facets.size());
  for (const auto& h : facets) {
    const HalfSpace n = normalize(h);
    LinearConstraint c;
    for (const auto& a : n.normal) c.normal.push_back(a.numerator());
    c.offset = n.offset;
    c.strict = strict;
    out.push_back(std::move(c));
  }
  return out;
}

Integer count_lattice_points(std::span<const LinearConstraint> constraints, const IntegerBox& box,
                             const EnumerationOptions& options) {
  const std::size_t d = box.lo.size();
  if (d == 0) throw ParameterError("zero-dimensional enumeration");
  const Integer cells = box.cells();
  if (cells > options.cell_limit) {
    throw ResourceLimitError("bounding box has " + cells.get_str() + " cells, limit is " +
                             options.cell_limit.get_str());
  }
  if (cells == 0) return 0;

  // For integral normal a and integral x: a.x <= b iff a.x <= floor(b), and
  // a.x < b iff a.x <= ceil(b) - 1.
  std::vector<Integer> threshold;
  threshold.reserve(constraints.size());
  for (const auto& c : constraints) {
    if (c.normal.size() != d) throw ParameterError("constraint dimension mismatch");
    threshold.push_back(c.strict ? c.offset.ceil() - 1 : c.offset.floor());
  }

  const std::size_t last = d - 1;
  std::vector<Integer> x(box.lo.begin(), box.lo.begin() + static_cast<std::ptrdiff_t>(last));
  Integer total = 0;
  Integer partial;
  Integer bound;
  while (true) {
    Integer lo = box.lo[last];
    Integer hi = box.hi[last];
    for (std::size_t k = 0; k < constraints.size() && lo <= hi; ++k) {
      const auto& a = constraints[k].normal;
      partial = threshold[k];
      for (std::size_t i = 0; i < last; ++i) partial -= a[i] * x[i];
      const int s = sgn(a[last]);
      if (s > 0) {
        bound = floor_div(partial, a[last]);
        if (bound < hi) hi = bound;
      } else if (s < 0) {
        bound = ceil_div(partial, a[last]);
        if (bound > lo) lo = bound;
      } else if (partial < 0) {
        hi = lo - 1;
      }
    }
    if (lo <= hi) total += hi - lo + 1;

    // Odometer over the leading coordinates.
    std::size_t i = 0;
    for (; i < last; ++i) {
      if (x[i] < box.hi[i]) {
        ++x[i];
        break;
      }
      x[i] = box.lo[i];
    }
    if (i == last) break;
  }
  return total;
}

namespace {

Integer count_dilate(const Polytope& p, const Integer& n, bool strict, const EnumerationOptions& options) {
  if (n < 1) throw ParameterError("dilation factor must be positive");
  const Polytope q = dilate(p, n);
  const auto constraints = to_constraints(q.facets(), strict);
  return count_lattice_points(constraints, bounding_box(q.vertices()), options);
}

}  // namespace

Integer count_closed(const Polytope& p, const Integer& n, const EnumerationOptions& options) {
  return count_dilate(p, n, false, options);
}

Integer count_interior(const Polytope& p, const Integer& n, const EnumerationOptions& options) {
  return count_dilate(p, n, true, options);
}

Integer count_boundary(const Polytope& p, const Integer& n, const EnumerationOptions& options) {
  return count_closed(p, n, options) - count_interior(p, n, options);
}

Integer count(const Polytope& p, const Integer& n, CountKind kind, const EnumerationOptions& options) {
  switch (kind) {
    case CountKind::closed: return count_closed(p, n, options);
    case CountKind::interior: return count_interior(p, n, options);
    case CountKind::boundary: return count_boundary(p, n, options);
  }
  throw ParameterError("unknown count kind");
}

namespace {

// Lattice points on the closed segment [a, b] in the plane.
Integer lattice_points_on_segment(const Point& a, const Point& b) {
  if (a == b) return a[0].is_integer() && a[1].is_integer() ? 1 : 0;
  // Primitive integer direction w of the segment.
  HalfSpace dir = normalize({{b[0] - a[0], b[1] - a[1]}, Rational()});
  const Integer wx = dir.normal[0].numerator();
  const Integer wy = dir.normal[1].numerator();
  // Line: wy*x - wx*y = c; it carries lattice points only if c is integral.
  const Rational c = Rational(wy) * a[0] - Rational(wx) * a[1];
  if (!c.is_integer()) return 0;
  // gcd(wy, wx) = 1, so u*wy + v*wx = 1 and (c*u, -c*v) lies on the line.
  Integer g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), wy.get_mpz_t(), wx.get_mpz_t());
  const Integer px = c.numerator() * u;
  const Integer py = -c.numerator() * v;
  // Lattice points are (px, py) + m*(wx, wy); restrict m along a nonzero axis.
  const bool use_x = wx != 0;
  const Integer& base = use_x ? px : py;
  const Integer& step = use_x ? wx : wy;
  const std::size_t axis = use_x ? 0 : 1;
  const Rational lo = std::min(a[axis], b[axis]) - Rational(base);
  const Rational hi = std::max(a[axis], b[axis]) - Rational(base);
  Integer m_lo, m_hi;
  if (step > 0) {
    m_lo = (lo / Rational(step)).ceil();
    m_hi = (hi / Rational(step)).floor();
  } else {
    m_lo = (hi / Rational(step)).ceil();
    m_hi = (lo / Rational(step)).floor();
  }
  return m_hi >= m_lo ? Integer(m_hi - m_lo + 1) : Integer(0);
}

}  // namespace

Integer count_boundary_edge_walk_2d(const Polytope& polygon, const Integer& n) {
  if (polygon.ambient_dim() != 2 || polygon.is_product()) {
    throw ParameterError("edge walk needs a polygon");
  }
  const Polytope q = dilate(polygon, n);
  const auto& v = q.vertices();
  Integer total = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    total += lattice_points_on_segment(v[i], v[(i + 1) % v.size()]);
    if (v[i][0].is_integer() && v[i][1].is_integer()) total -= 1;
  }
  return total;
}

Integer count_segment_1d(const Rational& lo, const Rational& hi, const Integer& n) {
  if (hi < lo) throw GeometryError("empty segment [" + lo.to_string() + ", " + hi.to_string() + "]");
  if (n < 1) throw ParameterError("dilation factor must be positive");
  return (Rational(n) * hi).floor() - (Rational(n) * lo).ceil() + 1;
}

namespace {

Integer count_parallelogram(long D, const Integer& n, long t, bool half_open,
                            const EnumerationOptions& options) {
  if (D < 2) throw ParameterError("parallelogram needs D >= 2");
  if (t < 0 || t >= D) throw ParameterError("translate index t must lie in [0, D-1]");
  if (n < 1) throw ParameterError("dilation factor must be positive");
  const Rational top(D - 1, D);
  // Counterclockwise: (0,0), (D-1,-(D-1)/D), (D,0), (1,(D-1)/D).
  std::vector<Point> hull = {{0, 0}, {Rational(D - 1), -top}, {Rational(D), 0}, {1, top}};
  const Rational scale(n);
  const Rational shift(t, D);
  for (auto& p : hull) {
    p[0] *= scale;
    p[1] = p[1] * scale - shift;
  }
  auto constraints = to_constraints(vrep_to_hrep_2d(hull), false);
  // Edges (D,0)->(1,(D-1)/D) and (1,(D-1)/D)->(0,0) are the open ones.
  constraints[2].strict = half_open;
  constraints[3].strict = half_open;
  return count_lattice_points(constraints, bounding_box(hull), options);
}

}  // namespace

Integer count_halfopen_parallelogram(long D, const Integer& n, long t, const EnumerationOptions& options) {
  return count_parallelogram(D, n, t, true, options);
}

Integer count_closed_parallelogram(long D, const Integer& n, long t, const EnumerationOptions& options) {
  return count_parallelogram(D, n, t, false, options);
}

}  // namespace ehrhart
