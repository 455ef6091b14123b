#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ehrhart/polytope.hpp"

namespace ehrhart {

// Text format, one directive per line; `#` starts a comment:
//
//   dim <d>
//   vertex <c1> ... <cd>
//   facet <a1> ... <ad> <b>      (a . x <= b; required when d >= 3)
//
// Coordinates are `p/q` or integers. Parse failures throw ParseError carrying
// the offending line number; geometric rejections throw GeometryError.
Polytope read_polytope(std::istream& in);
Polytope parse_polytope(std::string_view text);

// Writes vertices and, for d >= 3, facets. Products are flattened.
std::string format_polytope(const Polytope& p);

}  // namespace ehrhart
