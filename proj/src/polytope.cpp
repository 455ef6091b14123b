#include "ehrhart/polytope.hpp"

#include <algorithm>
#include <string>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Orientation of (b - a) x (c - a).
Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

void check_point_dims(int d, const std::vector<Point>& pts) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != d) {
      throw GeometryError("vertex has " + std::to_string(p.size()) + " coordinates, expected " +
                          std::to_string(d));
    }
  }
}

}  // namespace

bool HalfSpace::satisfied_by(std::span<const Rational> x, bool strict) const {
  const Rational lhs = dot(normal, x);
  return strict ? lhs < offset : lhs <= offset;
}

bool HalfSpace::tight_at(std::span<const Rational> x) const { return dot(normal, x) == offset; }

HalfSpace normalize(HalfSpace h) {
  Integer den = 1;
  Integer g = 0;
  for (const auto& a : h.normal) den = lcm(den, a.denominator());
  for (const auto& a : h.normal) g = gcd(g, (a * Rational(den)).numerator());
  if (g == 0) throw GeometryError("half-space with zero normal");
  const Rational scale = Rational(den, g);
  for (auto& a : h.normal) a *= scale;
  h.offset *= scale;
  return h;
}

std::vector<Point> hull_order_2d(std::vector<Point> points) {
  check_point_dims(2, points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) throw GeometryError("fewer than three distinct points; polygon is degenerate");

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<Point> hull;
  hull.reserve(points.size() * 2);
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t floor_size = hull.size();
    for (const auto& p : points) {
      while (hull.size() >= floor_size + 2 &&
             cross(hull[hull.size() - 2], hull.back(), p).sign() <= 0) {
        hull.pop_back();
      }
      hull.push_back(p);
    }
    hull.pop_back();
    std::reverse(points.begin(), points.end());
  }
  if (hull.size() < 3) throw GeometryError("points are collinear; polygon is degenerate");
  return hull;
}

std::vector<HalfSpace> vrep_to_hrep_2d(std::span<const Point> hull) {
  std::vector<HalfSpace> out;
  out.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    // Counterclockwise traversal: the outward normal of direction (dx, dy) is (dy, -dx).
    HalfSpace h{{b[1] - a[1], a[0] - b[0]}, Rational()};
    h.offset = dot(h.normal, a);
    out.push_back(normalize(std::move(h)));
  }
  return out;
}

std::vector<HalfSpace> vrep_to_hrep_2d(const Polytope& polygon) {
  if (polygon.ambient_dim() != 2) throw ParameterError("vrep_to_hrep_2d needs a polygon");
  return vrep_to_hrep_2d(polygon.vertices());
}

Polytope Polytope::segment(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw GeometryError("segment [" + lo.to_string() + ", " + hi.to_string() + "] is empty or a point");
  Polytope p;
  p.ambient_dim_ = 1;
  p.vertices_ = {{lo}, {hi}};
  p.facets_ = {normalize({{Rational(-1)}, -lo}), normalize({{Rational(1)}, hi})};
  return p;
}

Polytope Polytope::from_vertices(int ambient_dim, std::vector<Point> vertices,
                                 std::vector<HalfSpace> facets) {
  if (ambient_dim < 1) throw GeometryError("ambient dimension must be positive");
  if (vertices.empty()) throw GeometryError("polytope has no vertices");
  check_point_dims(ambient_dim, vertices);

  Polytope p;
  if (ambient_dim == 1) {
    const auto [lo, hi] = std::minmax_element(vertices.begin(), vertices.end());
    p = segment((*lo)[0], (*hi)[0]);
  } else if (ambient_dim == 2) {
    p.ambient_dim_ = 2;
    p.vertices_ = hull_order_2d(std::move(vertices));
    p.facets_ = vrep_to_hrep_2d(p.vertices_);
  } else {
    if (facets.empty()) {
      throw GeometryError("explicit polytopes of dimension >= 3 need a facet list");
    }
    p.ambient_dim_ = ambient_dim;
    p.vertices_ = std::move(vertices);
  }

  if (!facets.empty()) {
    for (auto& h : facets) {
      if (static_cast<int>(h.normal.size()) != ambient_dim) {
        throw GeometryError("facet normal has wrong length");
      }
      h = normalize(std::move(h));
    }
    Polytope check = p;
    check.facets_ = facets;
    check.validate_facets();
    // Lower dimensions keep the derived edges; supplied facets only had to agree.
    if (ambient_dim >= 3) p.facets_ = std::move(facets);
  }
  return p;
}

void Polytope::validate_facets() const {
  for (const auto& h : facets_) {
    int tight = 0;
    for (const auto& v : vertices_) {
      if (!h.satisfied_by(v, false)) throw GeometryError("a vertex violates a supplied facet");
      if (h.tight_at(v)) ++tight;
    }
    if (tight < ambient_dim_) throw GeometryError("a supplied facet is tight at fewer than d vertices");
  }
  for (const auto& v : vertices_) {
    const auto tight = std::count_if(facets_.begin(), facets_.end(),
                                     [&](const HalfSpace& h) { return h.tight_at(v); });
    if (tight < ambient_dim_) throw GeometryError("a vertex lies on fewer than d supplied facets");
  }
}

Integer denominator(const Polytope& p) {
  Integer d = 1;
  for (const auto& v : p.vertices()) {
    for (const auto& c : v) d = lcm(d, c.denominator());
  }
  return d;
}

Polytope dilate(const Polytope& p, const Integer& n) {
  if (n < 1) throw ParameterError("dilation factor must be positive");
  Polytope out = p;
  const Rational scale(n);
  for (auto& v : out.vertices_) {
    for (auto& c : v) c *= scale;
  }
  for (auto& h : out.facets_) h.offset *= scale;
  if (p.base_) {
    out.base_ = std::make_shared<const Polytope>(dilate(*p.base_, n));
    out.box_side_ = p.box_side_ * n;
  }
  return out;
}

Polytope product_with_box(const Polytope& p, int k) {
  if (k < 1) throw ParameterError("box dimension must be positive");
  Polytope out;
  out.ambient_dim_ = p.ambient_dim_ + k;
  out.base_ = std::make_shared<const Polytope>(p);
  out.box_dims_ = k;
  out.box_side_ = 1;

  for (const auto& v : p.vertices_) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      Point w = v;
      for (int i = 0; i < k; ++i) w.emplace_back(static_cast<long>((mask >> i) & 1u));
      out.vertices_.push_back(std::move(w));
    }
  }
  for (const auto& h : p.facets_) {
    HalfSpace w = h;
    w.normal.resize(static_cast<std::size_t>(out.ambient_dim_));
    out.facets_.push_back(std::move(w));
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> e(static_cast<std::size_t>(out.ambient_dim_));
    e[static_cast<std::size_t>(p.ambient_dim_ + i)] = 1;
    out.facets_.push_back({e, Rational(1)});
    e[static_cast<std::size_t>(p.ambient_dim_ + i)] = -1;
    out.facets_.push_back({e, Rational(0)});
  }
  return out;
}

bool contains(const Polytope& p, std::span<const Rational> x, Containment mode) {
  if (static_cast<int>(x.size()) != p.ambient_dim()) throw ParameterError("point has wrong dimension");
  const bool strict = mode == Containment::open;
  if (p.is_product()) {
    const auto base_dim = static_cast<std::size_t>(p.base().ambient_dim());
    if (!contains(p.base(), x.subspan(0, base_dim), mode)) return false;
    const Rational side(p.box_side());
    for (std::size_t i = base_dim; i < x.size(); ++i) {
      if (strict ? !(Rational() < x[i] && x[i] < side) : !(Rational() <= x[i] && x[i] <= side)) {
        return false;
      }
    }
    return true;
  }
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const HalfSpace& h) { return h.satisfied_by(x, strict); });
}

Rational area_2d(const Polytope& p) {
  if (p.ambient_dim() != 2 || p.is_product()) throw ParameterError("area_2d needs a polygon");
  const auto& v = p.vertices();
  Rational twice;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - b[0] * a[1];
  }
  if (twice.is_zero()) throw GeometryError("polygon has zero area");
  return abs(twice) / Rational(2);
}

}  // namespace ehrhart
