#include "ehrhart/polytope_io.hpp"

#include <istream>
#include <sstream>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehrhart {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string f; ss >> f;) out.push_back(f);
  return out;
}

Rational parse_field(const std::string& f, int line) {
  try {
    return Rational::parse(f);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

Polytope read_polytope(std::istream& in) {
  int dim = 0;
  int dim_line = 0;
  std::vector<Point> vertices;
  std::vector<HalfSpace> facets;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto fields = split_fields(raw);
    if (fields.empty()) continue;
    const std::string& key = fields[0];

    if (key == "dim") {
      if (dim != 0) throw ParseError("duplicate 'dim' directive", line);
      if (fields.size() != 2) throw ParseError("'dim' takes one argument", line);
      try {
        std::size_t used = 0;
        dim = std::stoi(fields[1], &used);
        if (used != fields[1].size()) dim = 0;
      } catch (const std::exception&) {
        dim = 0;
      }
      if (dim < 1) throw ParseError("dimension must be a positive integer", line);
      dim_line = line;
      continue;
    }
    if (key != "vertex" && key != "facet") throw ParseError("unknown directive '" + key + "'", line);
    if (dim == 0) throw ParseError("'" + key + "' before 'dim'", line);

    const std::size_t expected = static_cast<std::size_t>(dim) + (key == "facet" ? 1 : 0);
    if (fields.size() - 1 != expected) {
      throw ParseError("'" + key + "' expects " + std::to_string(expected) + " values, got " +
                           std::to_string(fields.size() - 1),
                       line);
    }
    std::vector<Rational> values;
    for (std::size_t i = 1; i < fields.size(); ++i) values.push_back(parse_field(fields[i], line));
    if (key == "vertex") {
      vertices.push_back(std::move(values));
    } else {
      Rational b = values.back();
      values.pop_back();
      bool all_zero = true;
      for (const auto& a : values) all_zero = all_zero && a.is_zero();
      if (all_zero) throw ParseError("facet with zero normal", line);
      facets.push_back({std::move(values), std::move(b)});
    }
  }

  if (dim == 0) throw ParseError("missing 'dim' directive", line);
  if (vertices.empty()) throw ParseError("no vertices", line);
  if (dim >= 3 && facets.empty()) {
    throw ParseError("facet lines are required for dimension >= 3", dim_line);
  }
  return Polytope::from_vertices(dim, std::move(vertices), std::move(facets));
}

Polytope parse_polytope(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_polytope(in);
}

std::string format_polytope(const Polytope& p) {
  std::ostringstream out;
  out << "dim " << p.ambient_dim() << "\n";
  for (const auto& v : p.vertices()) {
    out << "vertex";
    for (const auto& c : v) out << ' ' << c;
    out << "\n";
  }
  if (p.ambient_dim() >= 3) {
    for (const auto& h : p.facets()) {
      out << "facet";
      for (const auto& a : h.normal) out << ' ' << a;
      out << ' ' << h.offset << "\n";
    }
  }
  return out.str();
}

}  // namespace ehrhart
