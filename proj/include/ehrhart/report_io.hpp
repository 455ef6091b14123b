#pragma once

#include <string>
#include <string_view>

#include "ehrhart/characterization.hpp"
#include "ehrhart/engine.hpp"
#include "ehrhart/quasi_polynomial.hpp"

namespace ehrhart {

// Human-readable renderings.
std::string format_period_report(const PeriodReport& report);
std::string format_characterization(const CharacterizationReport& report);
std::string format_reciprocity(const ReciprocityResult& result, std::int64_t max_n);

// Structured output: one record per line, whitespace-separated fields, the
// first field a key. Each report opens with `report <kind>` and closes with
// `end`. Rationals are `p/q` or integers, booleans `true`/`false`. A
// quasi-polynomial block is
//
//   quasipolynomial <period> <dimension hint or ->
//   constituent <j> <c_0> <c_1> ... <c_deg>      (j = 1..period)
//
// See README.md for the full key list of each report.
std::string structured_quasipolynomial(const QuasiPolynomial& q);
std::string structured_period_report(const PeriodReport& report);
std::string structured_characterization(const CharacterizationReport& report);
std::string structured_reciprocity(const ReciprocityResult& result, std::int64_t max_n);
std::string structured_count(CountKind kind, const Integer& n, const Integer& value);

QuasiPolynomial parse_structured_quasipolynomial(std::string_view text);
PeriodReport parse_structured_period_report(std::string_view text);
CharacterizationReport parse_structured_characterization(std::string_view text);

std::string_view to_string(CountKind kind);

}  // namespace ehrhart
