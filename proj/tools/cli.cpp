#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ehrhart/characterization.hpp"
#include "ehrhart/constructions.hpp"
#include "ehrhart/engine.hpp"
#include "ehrhart/enumeration.hpp"
#include "ehrhart/errors.hpp"
#include "ehrhart/polytope_io.hpp"
#include "ehrhart/report_io.hpp"

namespace ehrhart::cli {

namespace {

constexpr const char* kCellLimitEnv = "EHRHART_CELL_LIMIT";

// Options shared by every command that consumes a polytope.
struct SourceOptions {
  std::string path;
  std::string construction;
  std::int64_t D = 3;
  std::int64_t s = 1;
  int dim = 3;
};

struct GlobalOptions {
  std::string format = "text";
  std::optional<std::string> cell_limit;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void add_source(CLI::App* cmd, SourceOptions& src) {
  cmd->add_option("source", src.path, "Polytope file, or - for standard input");
  cmd->add_option("--construction", src.construction,
                  "Named construction: triangle, pentagon, prism, pyramid, example1, example2, example3");
  cmd->add_option("--D", src.D, "Denominator parameter of the construction");
  cmd->add_option("--s", src.s, "Period parameter of the construction (must divide D)");
  cmd->add_option("--dim", src.dim, "Dimension of the prism construction");
}

std::map<std::string, std::int64_t> construction_params(const SourceOptions& src) {
  return {{"D", src.D}, {"s", src.s}, {"dim", src.dim}};
}

Polytope load_source(const SourceOptions& src, std::istream& in) {
  const bool has_path = !src.path.empty();
  const bool has_construction = !src.construction.empty();
  if (has_path == has_construction) {
    throw UsageError("exactly one source is required: a polytope file (or -) or --construction NAME");
  }
  if (has_construction) return construction_by_name(src.construction, construction_params(src)).polytope;
  if (src.path == "-") return read_polytope(in);
  std::ifstream file(src.path);
  if (!file) throw UsageError("cannot read '" + src.path + "'");
  try {
    return read_polytope(file);
  } catch (const ParseError& e) {
    throw ParseError(src.path + ": " + e.what());
  }
}

EnumerationOptions enumeration_options(const GlobalOptions& global) {
  EnumerationOptions options;
  std::optional<std::string> text = global.cell_limit;
  if (!text) {
    if (const char* env = std::getenv(kCellLimitEnv)) text = std::string(env);
  }
  if (text) {
    Integer limit;
    if (limit.set_str(*text, 10) != 0 || limit < 1) {
      throw UsageError("cell limit must be a positive integer, got '" + *text + "'");
    }
    options.cell_limit = limit;
  }
  return options;
}

std::int64_t small_denominator(const Polytope& p) {
  const Integer D = denominator(p);
  if (!D.fits_slong_p()) throw ParameterError("denominator too large");
  return D.get_si();
}

CountKind parse_mode(const std::string& mode) {
  if (mode == "closed") return CountKind::closed;
  if (mode == "interior") return CountKind::interior;
  if (mode == "boundary") return CountKind::boundary;
  throw UsageError("mode must be closed, interior or boundary");
}

std::string expected_comment_block(const ConstructionSpec& spec) {
  std::ostringstream out;
  out << "# construction " << spec.name;
  for (const auto& [key, value] : spec.parameters) out << " " << key << "=" << value;
  out << "\n# expected quasi-polynomial (period " << spec.expected.period() << "):\n";
  std::istringstream lines(spec.expected.to_string());
  for (std::string line; std::getline(lines, line);) out << "# " << line << "\n";
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ehrhart quasi-polynomials of rational polytopes by exact lattice-point counting"};
  app.name("ehrhart");
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--cell-limit", global.cell_limit,
                 std::string("Largest bounding box to enumerate (overrides ") + kCellLimitEnv + ")");

  SourceOptions src;
  std::int64_t count_n = 0;
  std::string mode = "closed";
  std::optional<std::int64_t> max_n;
  std::string construct_name;
  std::string out_path;

  auto* count_cmd = app.add_subcommand("count", "Count lattice points of the n-th dilate");
  add_source(count_cmd, src);
  count_cmd->add_option("--n", count_n, "Dilation factor")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--mode", mode, "closed, interior or boundary")
      ->check(CLI::IsMember({"closed", "interior", "boundary"}));

  auto* fit_cmd = app.add_subcommand("fit", "Fit the Ehrhart quasi-polynomial at period D(P)");
  add_source(fit_cmd, src);
  fit_cmd->add_option("--max-n", max_n, "Sample horizon (default D*(dim+1) + D)")->check(CLI::PositiveNumber);

  auto* period_cmd = app.add_subcommand("period", "Denominator, minimal period and coefficient periods");
  add_source(period_cmd, src);

  auto* recip_cmd = app.add_subcommand("reciprocity", "Check interior counts against q(-n)");
  add_source(recip_cmd, src);
  recip_cmd->add_option("--max-n", max_n, "Check n = 1..N (default D*(dim+1) + D)")->check(CLI::PositiveNumber);

  auto* char_cmd = app.add_subcommand("characterize", "Decide polynomiality of a polygon's counting function");
  add_source(char_cmd, src);

  auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction as a polytope file");
  construct_cmd->add_option("name", construct_name, "triangle, pentagon, prism, pyramid, example1..3")->required();
  construct_cmd->add_option("--D", src.D, "Denominator parameter");
  construct_cmd->add_option("--s", src.s, "Period parameter (must divide D)");
  construct_cmd->add_option("--dim", src.dim, "Prism dimension");
  construct_cmd->add_option("--out", out_path, "Write the polytope file here instead of standard output");

  std::vector<const char*> argv{"ehrhart"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const bool structured = global.format == "structured";
  try {
    const EnumerationOptions options = enumeration_options(global);

    if (count_cmd->parsed()) {
      const Polytope p = load_source(src, in);
      const CountKind kind = parse_mode(mode);
      const Integer value = count(p, count_n, kind, options);
      if (structured) {
        out << structured_count(kind, count_n, value);
      } else {
        out << value << "\n";
      }
    } else if (fit_cmd->parsed()) {
      const Polytope p = load_source(src, in);
      const std::int64_t D = small_denominator(p);
      const std::int64_t N = max_n.value_or(default_sample_horizon(D, p.dimension()));
      const QuasiPolynomial q = fit_quasipolynomial(sample_counts(p, N, options), p.dimension(), D);
      if (structured) {
        out << "report fit\n" << structured_quasipolynomial(q) << "end\n";
      } else {
        out << q.to_string();
      }
    } else if (period_cmd->parsed()) {
      const PeriodReport report = period_report(load_source(src, in), options);
      out << (structured ? structured_period_report(report) : format_period_report(report));
    } else if (recip_cmd->parsed()) {
      const Polytope p = load_source(src, in);
      const std::int64_t N = max_n.value_or(default_sample_horizon(small_denominator(p), p.dimension()));
      const ReciprocityResult result = verify_reciprocity(p, ehrhart_quasipolynomial(p, options), N, options);
      out << (structured ? structured_reciprocity(result, N) : format_reciprocity(result, N));
      if (!result.holds) return kInvariantViolation;
    } else if (char_cmd->parsed()) {
      const CharacterizationReport report = characterize_polygon(load_source(src, in), options);
      out << (structured ? structured_characterization(report) : format_characterization(report));
    } else if (construct_cmd->parsed()) {
      const ConstructionSpec spec = construction_by_name(construct_name, construction_params(src));
      const std::string body = expected_comment_block(spec) + format_polytope(spec.polytope);
      if (out_path.empty()) {
        out << body;
      } else {
        std::ofstream file(out_path);
        if (!file || !(file << body)) throw UsageError("cannot write '" + out_path + "'");
        if (structured) {
          out << "report construct\n" << structured_quasipolynomial(spec.expected) << "end\n";
        } else {
          out << "expected quasi-polynomial (period " << spec.expected.period() << "):\n"
              << spec.expected.to_string();
        }
      }
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ParameterError& e) {
    err << "invalid parameter: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvariantViolation& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInvariantViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace ehrhart::cli
