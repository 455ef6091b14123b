#include "ehrhart/constructions.hpp"

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

Polynomial triangle_polynomial(std::int64_t D) {
  return Polynomial({Rational(1), Rational(D + 1, 2), Rational(D - 1, 2)});
}

// floor(n/s) * (Dn + 1) added to the triangle count, expanded per residue:
// for n ≡ j (mod s), floor(n/s) = (n - (j mod s)) / s.
QuasiPolynomial pentagon_quasipolynomial(std::int64_t D, std::int64_t s) {
  std::vector<Polynomial> constituents;
  const Polynomial line({Rational(1), Rational(D)});
  for (std::int64_t j = 1; j <= s; ++j) {
    const Polynomial quotient({Rational(-(j % s), s), Rational(1, s)});
    constituents.push_back(triangle_polynomial(D) + quotient * line);
  }
  return QuasiPolynomial(std::move(constituents), 2);
}

void require_D(std::int64_t D) {
  if (D < 2) throw ParameterError("D must be at least 2, got " + std::to_string(D));
}

void require_divides(std::int64_t s, std::int64_t D) {
  if (s < 1 || D % s != 0) {
    throw ParameterError("s must be a positive divisor of D (D = " + std::to_string(D) +
                         ", s = " + std::to_string(s) + ")");
  }
}

Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }

}  // namespace

ConstructionSpec triangle(std::int64_t D) {
  require_D(D);
  auto polygon = Polytope::from_vertices(2, {pt(0, 0), pt(1, Rational(D - 1, D)), pt(D, 0)});
  return {"triangle", {{"D", D}}, std::move(polygon),
          QuasiPolynomial::polynomial(triangle_polynomial(D), 2), Integer(D), 1};
}

ConstructionSpec pentagon(std::int64_t D, std::int64_t s) {
  require_D(D);
  require_divides(s, D);
  const Rational below(-1, s);
  auto polygon = Polytope::from_vertices(
      2, {pt(0, 0), pt(1, Rational(D - 1, D)), pt(D, 0), pt(D, below), pt(0, below)});
  return {"pentagon", {{"D", D}, {"s", s}}, std::move(polygon), pentagon_quasipolynomial(D, s),
          Integer(D), s};
}

ConstructionSpec prism(std::int64_t D, std::int64_t s, int d) {
  if (d < 3) throw ParameterError("prism dimension must be at least 3");
  ConstructionSpec base = pentagon(D, s);
  const Polynomial box_factor = pow(Polynomial({Rational(1), Rational(1)}), d - 2);
  std::vector<Polynomial> constituents;
  for (const auto& c : base.expected.constituents()) constituents.push_back(box_factor * c);
  return {"prism",
          {{"D", D}, {"s", s}, {"dim", d}},
          product_with_box(base.polytope, d - 2),
          QuasiPolynomial(std::move(constituents), d),
          Integer(D),
          s};
}

ConstructionSpec stanley_pyramid() {
  std::vector<Point> vertices = {
      {0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {Rational(1, 2), 0, Rational(1, 2)}};
  // Base, the face y = 0 through the apex, and the three faces joining the apex
  // to the remaining base edges.
  std::vector<HalfSpace> facets = {
      {{0, 0, -1}, 0},
      {{0, -1, 0}, 0},
      {{-1, 0, 1}, 0},
      {{1, 0, 1}, 1},
      {{0, 1, 2}, 1},
  };
  auto pyramid = Polytope::from_vertices(3, std::move(vertices), std::move(facets));
  // (n+1)(n+2)(n+3)/6
  const Polynomial binomial =
      Polynomial({Rational(1), Rational(11, 6), Rational(1), Rational(1, 6)});
  return {"pyramid", {}, std::move(pyramid), QuasiPolynomial::polynomial(binomial, 3), Integer(2), 1};
}

ConstructionSpec example_triangle(int id, std::int64_t D) {
  switch (id) {
    case 1: {
      ConstructionSpec spec = triangle(D);
      spec.name = "example1";
      return spec;
    }
    case 2: {
      auto polygon = Polytope::from_vertices(
          2, {pt(Rational(-1, 2), Rational(-1, 2)), pt(Rational(1, 2), Rational(-1, 2)), pt(0, Rational(3, 2))});
      QuasiPolynomial expected({Polynomial({1, 0, 1}), Polynomial({1, 1, 1})}, 2);
      return {"example2", {}, std::move(polygon), std::move(expected), Integer(2), 2};
    }
    case 3: {
      auto polygon = Polytope::from_vertices(2, {pt(0, 0), pt(1, 0), pt(0, Rational(1, 2))});
      QuasiPolynomial expected({Polynomial({Rational(3, 4), 1, Rational(1, 4)}),
                                Polynomial({1, 1, Rational(1, 4)})},
                               2);
      return {"example3", {}, std::move(polygon), std::move(expected), Integer(2), 2};
    }
    default:
      throw ParameterError("example id must be 1, 2 or 3, got " + std::to_string(id));
  }
}

ConstructionSpec construction_by_name(const std::string& name,
                                      const std::map<std::string, std::int64_t>& params) {
  auto get = [&](const char* key, std::int64_t fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  const std::int64_t D = get("D", 3);
  const std::int64_t s = get("s", 1);
  const auto dim = get("dim", 3);
  if (name == "triangle") return triangle(D);
  if (name == "pentagon") return pentagon(D, s);
  if (name == "prism") return prism(D, s, static_cast<int>(dim));
  if (name == "pyramid") return stanley_pyramid();
  if (name == "example1") return example_triangle(1, D);
  if (name == "example2") return example_triangle(2);
  if (name == "example3") return example_triangle(3);
  throw ParameterError("unknown construction '" + name +
                       "' (expected triangle, pentagon, prism, pyramid, example1, example2, example3)");
}

}  // namespace ehrhart
