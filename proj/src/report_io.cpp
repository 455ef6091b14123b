#include "ehrhart/report_io.hpp"

#include <iomanip>
#include <sstream>
#include <vector>

#include "ehrhart/errors.hpp"

namespace ehrhart {

std::string_view to_string(CountKind kind) {
  switch (kind) {
    case CountKind::closed: return "closed";
    case CountKind::interior: return "interior";
    case CountKind::boundary: return "boundary";
  }
  return "?";
}

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }
const char* boolean(bool b) { return b ? "true" : "false"; }

std::string join_periods(const std::vector<std::int64_t>& v) {
  std::string out;
  for (const auto x : v) out += " " + std::to_string(x);
  return out;
}

std::string coefficient_fields(const Polynomial& p) {
  std::string out;
  for (const auto& c : p.coefficients()) out += " " + c.to_string();
  return out;
}

}  // namespace

std::string format_period_report(const PeriodReport& report) {
  std::ostringstream out;
  out << "denominator " << report.denominator << ", minimal period " << report.minimal_period
      << ", collapse: " << yes_no(report.collapse) << "\n";
  out << "coefficient periods:";
  for (std::size_t k = 0; k < report.coefficient_periods.size(); ++k) {
    out << " s_" << k << "=" << report.coefficient_periods[k];
  }
  out << "\n";
  out << "quasi-polynomial (period " << report.quasipolynomial.period() << "):\n";
  out << report.quasipolynomial.to_string();
  return out.str();
}

std::string format_characterization(const CharacterizationReport& report) {
  std::ostringstream out;
  out << "area: " << report.area << "\n";
  out << "denominator: " << report.denominator << "\n";
  out << std::setw(6) << "n" << std::setw(12) << "i_P(n)" << std::setw(14) << "boundary(n)"
      << std::setw(8) << "pick" << std::setw(8) << "linear" << "\n";
  for (const auto& row : report.rows) {
    out << std::setw(6) << row.n << std::setw(12) << row.count.get_str() << std::setw(14)
        << row.boundary.get_str() << std::setw(8) << yes_no(row.pick_holds) << std::setw(8)
        << yes_no(row.linear_holds) << "\n";
  }
  out << "predicted polynomial: " << report.predicted.to_string() << "\n";
  out << "fitted quasi-polynomial (period " << report.fitted.period() << "):\n";
  out << report.fitted.to_string();
  out << "pick and linear boundary for n = 1.." << report.denominator << ": "
      << (report.verdict_conditions ? "hold" : "fail") << "\n";
  out << "minimal period 1: " << yes_no(report.verdict_polynomial) << "\n";
  out << "fitted equals predicted: " << yes_no(report.verdict_predicted) << "\n";
  out << "verdict: " << (report.verdict_polynomial ? "polynomial" : "NOT polynomial") << "\n";
  return out.str();
}

std::string format_reciprocity(const ReciprocityResult& result, std::int64_t max_n) {
  std::ostringstream out;
  out << "reciprocity for n = 1.." << max_n << ": " << (result.holds ? "pass" : "FAIL") << "\n";
  for (const auto& w : result.failures) {
    out << "  n = " << w.n << ": interior count " << w.interior << " != (-1)^d q(-n) = "
        << w.signed_value << "\n";
  }
  return out.str();
}

std::string structured_quasipolynomial(const QuasiPolynomial& q) {
  std::ostringstream out;
  out << "quasipolynomial " << q.period() << " "
      << (q.dimension_hint() ? std::to_string(*q.dimension_hint()) : std::string("-")) << "\n";
  for (std::int64_t j = 1; j <= q.period(); ++j) {
    out << "constituent " << j << coefficient_fields(q.constituent(j)) << "\n";
  }
  return out.str();
}

std::string structured_period_report(const PeriodReport& report) {
  std::ostringstream out;
  out << "report period\n";
  out << "denominator " << report.denominator << "\n";
  out << "minimal_period " << report.minimal_period << "\n";
  out << "collapse " << boolean(report.collapse) << "\n";
  out << "coefficient_periods" << join_periods(report.coefficient_periods) << "\n";
  out << structured_quasipolynomial(report.quasipolynomial);
  out << "end\n";
  return out.str();
}

std::string structured_characterization(const CharacterizationReport& report) {
  std::ostringstream out;
  out << "report characterization\n";
  out << "area " << report.area << "\n";
  out << "denominator " << report.denominator << "\n";
  for (const auto& row : report.rows) {
    out << "row " << row.n << " " << row.count << " " << row.boundary << " " << boolean(row.pick_holds)
        << " " << boolean(row.linear_holds) << "\n";
  }
  out << "verdict_conditions " << boolean(report.verdict_conditions) << "\n";
  out << "verdict_polynomial " << boolean(report.verdict_polynomial) << "\n";
  out << "verdict_predicted " << boolean(report.verdict_predicted) << "\n";
  out << "predicted" << coefficient_fields(report.predicted) << "\n";
  out << structured_quasipolynomial(report.fitted);
  out << "end\n";
  return out.str();
}

std::string structured_reciprocity(const ReciprocityResult& result, std::int64_t max_n) {
  std::ostringstream out;
  out << "report reciprocity\n";
  out << "max_n " << max_n << "\n";
  out << "holds " << boolean(result.holds) << "\n";
  for (const auto& w : result.failures) {
    out << "witness " << w.n << " " << w.interior << " " << w.signed_value << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string structured_count(CountKind kind, const Integer& n, const Integer& value) {
  std::ostringstream out;
  out << "report count\n";
  out << "kind " << to_string(kind) << "\n";
  out << "n " << n << "\n";
  out << "value " << value << "\n";
  out << "end\n";
  return out.str();
}

namespace {

struct Record {
  int line;
  std::vector<std::string> fields;
};

class RecordReader {
 public:
  explicit RecordReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
      ++line;
      std::istringstream ss(raw);
      Record r{line, {}};
      for (std::string f; ss >> f;) r.fields.push_back(f);
      if (!r.fields.empty()) records_.push_back(std::move(r));
    }
  }

  const Record& next(std::string_view key, std::size_t min_fields = 1) {
    if (pos_ >= records_.size()) {
      throw ParseError("unexpected end of report, expected '" + std::string(key) + "'");
    }
    const Record& r = records_[pos_++];
    if (r.fields[0] != key) {
      throw ParseError("expected '" + std::string(key) + "', found '" + r.fields[0] + "'", r.line);
    }
    if (r.fields.size() < min_fields) throw ParseError("too few fields for '" + std::string(key) + "'", r.line);
    return r;
  }

  bool peek(std::string_view key) const {
    return pos_ < records_.size() && records_[pos_].fields[0] == key;
  }

  void finish() {
    next("end");
    if (pos_ != records_.size()) throw ParseError("trailing content after 'end'", records_[pos_].line);
  }

 private:
  std::vector<Record> records_;
  std::size_t pos_ = 0;
};

Integer parse_integer(const std::string& s, int line) {
  const Rational r = [&] {
    try {
      return Rational::parse(s);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }();
  if (!r.is_integer()) throw ParseError("expected an integer, got '" + s + "'", line);
  return r.numerator();
}

std::int64_t parse_small(const std::string& s, int line) {
  const Integer v = parse_integer(s, line);
  if (!v.fits_slong_p()) throw ParseError("integer out of range: " + s, line);
  return v.get_si();
}

Rational parse_rational(const std::string& s, int line) {
  try {
    return Rational::parse(s);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  }
}

bool parse_bool(const std::string& s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true/false, got '" + s + "'", line);
}

Polynomial parse_coefficients(const Record& r, std::size_t first) {
  std::vector<Rational> coeffs;
  for (std::size_t i = first; i < r.fields.size(); ++i) coeffs.push_back(parse_rational(r.fields[i], r.line));
  return Polynomial(std::move(coeffs));
}

QuasiPolynomial read_quasipolynomial(RecordReader& reader) {
  const Record& head = reader.next("quasipolynomial", 3);
  const std::int64_t period = parse_small(head.fields[1], head.line);
  if (period < 1) throw ParseError("period must be positive", head.line);
  std::optional<int> hint;
  if (head.fields[2] != "-") hint = static_cast<int>(parse_small(head.fields[2], head.line));
  std::vector<Polynomial> constituents;
  for (std::int64_t j = 1; j <= period; ++j) {
    const Record& r = reader.next("constituent", 2);
    if (parse_small(r.fields[1], r.line) != j) throw ParseError("constituents out of order", r.line);
    constituents.push_back(parse_coefficients(r, 2));
  }
  try {
    return QuasiPolynomial(std::move(constituents), hint);
  } catch (const ParameterError& e) {
    throw ParseError(e.what(), head.line);
  }
}

void expect_kind(RecordReader& reader, std::string_view kind) {
  const Record& r = reader.next("report", 2);
  if (r.fields[1] != kind) throw ParseError("expected a " + std::string(kind) + " report", r.line);
}

}  // namespace

QuasiPolynomial parse_structured_quasipolynomial(std::string_view text) {
  RecordReader reader(text);
  return read_quasipolynomial(reader);
}

PeriodReport parse_structured_period_report(std::string_view text) {
  RecordReader reader(text);
  expect_kind(reader, "period");
  PeriodReport report;
  const Record& d = reader.next("denominator", 2);
  report.denominator = parse_integer(d.fields[1], d.line);
  const Record& m = reader.next("minimal_period", 2);
  report.minimal_period = parse_small(m.fields[1], m.line);
  const Record& c = reader.next("collapse", 2);
  report.collapse = parse_bool(c.fields[1], c.line);
  const Record& s = reader.next("coefficient_periods");
  for (std::size_t i = 1; i < s.fields.size(); ++i) report.coefficient_periods.push_back(parse_small(s.fields[i], s.line));
  report.quasipolynomial = read_quasipolynomial(reader);
  reader.finish();
  return report;
}

CharacterizationReport parse_structured_characterization(std::string_view text) {
  RecordReader reader(text);
  expect_kind(reader, "characterization");
  CharacterizationReport report;
  const Record& a = reader.next("area", 2);
  report.area = parse_rational(a.fields[1], a.line);
  const Record& d = reader.next("denominator", 2);
  report.denominator = parse_integer(d.fields[1], d.line);
  while (reader.peek("row")) {
    const Record& r = reader.next("row", 6);
    CharacterizationRow row;
    row.n = parse_small(r.fields[1], r.line);
    row.count = parse_integer(r.fields[2], r.line);
    row.boundary = parse_integer(r.fields[3], r.line);
    row.pick_holds = parse_bool(r.fields[4], r.line);
    row.linear_holds = parse_bool(r.fields[5], r.line);
    report.rows.push_back(std::move(row));
  }
  const Record& vc = reader.next("verdict_conditions", 2);
  report.verdict_conditions = parse_bool(vc.fields[1], vc.line);
  const Record& vp = reader.next("verdict_polynomial", 2);
  report.verdict_polynomial = parse_bool(vp.fields[1], vp.line);
  const Record& vq = reader.next("verdict_predicted", 2);
  report.verdict_predicted = parse_bool(vq.fields[1], vq.line);
  report.predicted = parse_coefficients(reader.next("predicted"), 1);
  report.fitted = read_quasipolynomial(reader);
  reader.finish();
  return report;
}

}  // namespace ehrhart
