#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ehrhart/polytope.hpp"
#include "ehrhart/quasi_polynomial.hpp"

namespace ehrhart {

// A named polytope family member together with its closed-form Ehrhart
// quasi-polynomial.
struct ConstructionSpec {
  std::string name;
  std::map<std::string, std::int64_t> parameters;
  Polytope polytope;
  // Stored at the claimed period.
  QuasiPolynomial expected;
  Integer claimed_denominator;
  std::int64_t claimed_period = 1;
};

// Triangle (0,0), (1,(D-1)/D), (D,0): denominator D, yet
// i(n) = (D-1)/2 n^2 + (D+1)/2 n + 1.
ConstructionSpec triangle(std::int64_t D);

// Pentagon (0,0), (1,(D-1)/D), (D,0), (D,-1/s), (0,-1/s) for s | D:
// i(n) = i_triangle(n) + floor(n/s) (Dn + 1), minimum period s.
ConstructionSpec pentagon(std::int64_t D, std::int64_t s);

// pentagon(D, s) x [0,1]^(d-2): i(n) = (n+1)^(d-2) i_pentagon(n).
ConstructionSpec prism(std::int64_t D, std::int64_t s, int d);

// Pyramid over the unit square with apex (1/2,0,1/2): denominator 2,
// i(n) = C(n+3, 3).
ConstructionSpec stanley_pyramid();

// id 1: triangle(D); id 2: (-1/2,-1/2), (1/2,-1/2), (0,3/2) with constituents
// n^2+1 (odd) and n^2+n+1 (even); id 3: (0,0), (1,0), (0,1/2) with
// constituents n^2/4+n+3/4 (odd) and n^2/4+n+1 (even).
ConstructionSpec example_triangle(int id, std::int64_t D = 3);

// Lookup by CLI name: triangle, pentagon, prism, pyramid, example1..3.
// Parameters are looked up as "D", "s", "dim"; missing ones fall back to
// D = 3, s = 1, dim = 3. Throws ParameterError for unknown names.
ConstructionSpec construction_by_name(const std::string& name, const std::map<std::string, std::int64_t>& params);

}  // namespace ehrhart
