#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmproj/ashm.hpp"
#include "asmproj/bijection.hpp"
#include "asmproj/enumeration.hpp"
#include "asmproj/galeryser.hpp"
#include "asmproj/io.hpp"
#include "asmproj/polytope.hpp"
#include "asmproj/synthesis.hpp"

using namespace asmproj;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kFalse = 1, kInfeasible = 2, kParse = 3, kUsage = 4 };

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
      return kParse;
    case ErrorKind::NotMajorized:
    case ErrorKind::ProjectionMismatch:
    case ErrorKind::Infeasible:
      return kInfeasible;
    case ErrorKind::LimitExceeded:
      return kUsage;
    default:
      return kFalse;
  }
}

struct Options {
  std::string format = "text";
  std::string kind;
  std::string file;
  std::string file_b;
  std::string from;
  std::string to;
  std::string projection;
  std::string left;
  std::string right;
  std::size_t order = 0;
  std::size_t limit = 0;
  unsigned jobs = 1;
  int value = 0;
  bool trace = false;
  bool count_only = false;
  bool paired = false;

  bool json() const { return format == "json"; }
};

void print(const Options& o, const std::string& text, const json& doc) {
  if (o.json()) {
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << text;
  }
}

Asm read_asm(const std::string& path) { return validate_asm(parse_matrix(read_file(path))); }

int run_verify(const Options& o) {
  const std::string text = read_file(o.file);
  if (o.kind == "asm") {
    validate_asm(parse_matrix(text));
  } else if (o.kind == "triangle") {
    validate_row_increasing(parse_triangle(text));
  } else if (o.kind == "monotone") {
    validate_monotone(parse_triangle(text));
  } else if (o.kind == "polytope") {
    validate_polytope(parse_rational_matrix(text));
  } else {
    parse_ashm(text);
  }
  print(o, "valid\n", {{"valid", true}});
  return kOk;
}

int run_project(const Options& o) {
  const IntVector v = weighted_projection(read_asm(o.file));
  print(o, format_vector(v) + "\n", {{"projection", vector_to_json(v)}});
  return kOk;
}

int run_construct(const Options& o) {
  const SynthesisResult result = synthesize(parse_vector(o.projection), o.trace);
  if (o.json()) {
    json doc = {{"asm", matrix_to_json(result.matrix.matrix())}};
    if (result.trace) {
      const SynthesisTrace& t = *result.trace;
      doc["zero_one"] = matrix_to_json(t.zero_one);
      doc["row_increasing"] = triangle_to_json(t.row_increasing.rows());
      json switches = json::array();
      for (const auto& s : t.switches) {
        switches.push_back({{"height", s.trapezoid.height},
                            {"rows", {s.trapezoid.top_row, s.trapezoid.bottom_row}},
                            {"f", s.f_after},
                            {"triangle", triangle_to_json(s.after.rows())}});
      }
      doc["switches"] = switches;
      doc["monotone"] = triangle_to_json(t.monotone.rows());
    }
    std::cout << doc.dump() << '\n';
    return kOk;
  }
  if (result.trace) std::cout << format_synthesis_trace(*result.trace) << "# ASM\n";
  std::cout << format_matrix(result.matrix.matrix());
  return kOk;
}

int run_convert(const Options& o) {
  const std::string text = read_file(o.file);
  const Asm a = [&] {
    if (o.from == "psm") return asm_from_partial_sum(PartialSumMatrix::from_matrix(parse_matrix(text)));
    if (o.from == "monotone") return asm_from_monotone(validate_monotone(parse_triangle(text)));
    return validate_asm(parse_matrix(text));
  }();
  if (o.to == "psm") {
    const PartialSumMatrix psm = partial_sum(a);
    const IntMatrix& p = psm.matrix();
    print(o, format_matrix(p), matrix_to_json(p));
  } else if (o.to == "monotone") {
    const MonotoneTriangle t = monotone_from_asm(a);
    print(o, format_triangle(t), triangle_to_json(t.rows()));
  } else {
    print(o, format_matrix(a.matrix()), matrix_to_json(a.matrix()));
  }
  return kOk;
}

int run_majorize(const Options& o) {
  const bool result = majorized_by(parse_vector(o.left), parse_vector(o.right));
  print(o, result ? "true\n" : "false\n", {{"majorized", result}});
  return result ? kOk : kFalse;
}

template <typename T, typename Format, typename ToJson>
void emit_all(const Options& o, const std::vector<T>& items, Format format, ToJson to_json) {
  if (o.count_only) {
    print(o, std::to_string(items.size()) + "\n", {{"count", items.size()}});
    return;
  }
  if (o.json()) {
    json list = json::array();
    for (const auto& x : items) list.push_back(to_json(x));
    std::cout << list.dump() << '\n';
    return;
  }
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) std::cout << '\n';
    std::cout << format(items[k]);
  }
}

int run_enumerate(const Options& o) {
  const auto limit = [&](std::size_t fallback) { return o.limit ? o.limit : fallback; };
  if (o.kind == "asm") {
    if (o.count_only) {
      const std::size_t count = count_asms(o.order, o.jobs, limit(kDefaultAsmLimit));
      print(o, std::to_string(count) + "\n", {{"count", count}});
      return kOk;
    }
    emit_all(o, enumerate_asms(o.order, limit(kDefaultAsmLimit)),
             [](const Asm& a) { return format_matrix(a.matrix()); },
             [](const Asm& a) { return matrix_to_json(a.matrix()); });
  } else if (o.kind == "monotone") {
    emit_all(o, enumerate_monotone(o.order, limit(kDefaultTriangleLimit)),
             [](const MonotoneTriangle& t) { return format_triangle(t); },
             [](const MonotoneTriangle& t) { return triangle_to_json(t.rows()); });
  } else if (o.kind == "rit") {
    emit_all(o, enumerate_row_increasing(o.order, limit(kDefaultRowIncreasingLimit)),
             [](const RowIncreasingTriangle& t) { return format_triangle(t); },
             [](const RowIncreasingTriangle& t) { return triangle_to_json(t.rows()); });
  } else {
    emit_all(o, enumerate_majorized_vectors(o.order, limit(kDefaultVectorLimit)),
             [](const IntVector& v) { return format_vector(v) + "\n"; },
             [](const IntVector& v) { return vector_to_json(v); });
  }
  return kOk;
}

json block_to_json(const TBlock& b) {
  return {{"i1", b.i1}, {"j1", b.j1}, {"i2", b.i2}, {"j2", b.j2}, {"sign", b.sign}};
}

int run_decompose(const Options& o) {
  const PolytopeMatrix a = validate_polytope(parse_rational_matrix(read_file(o.file)));
  const PolytopeMatrix b = validate_polytope(parse_rational_matrix(read_file(o.file_b)));
  const auto terms = o.paired ? decompose_paired(a, b) : decompose_tblocks(a, b);
  json list = json::array();
  for (const auto& t : terms) {
    json term = {{"coefficient", format_rational(t.coefficient)}, {"block", block_to_json(t.block)}};
    if (t.partner) term["partner"] = block_to_json(*t.partner);
    list.push_back(term);
  }
  print(o, format_terms(terms), list);
  return kOk;
}

int run_ashl(const Options& o) {
  const IntMatrix l = ashl(parse_ashm(read_file(o.file)));
  print(o, format_matrix(l), matrix_to_json(l));
  return kOk;
}

int run_grid(const Options& o) {
  const Ashm a = parse_ashm(read_file(o.file));
  print(o, grid_notation(a), ashm_to_json(a));
  return kOk;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out;
}

int run_search3(const Options& o) {
  if (o.value < 1 || o.value > 3) throw Error(ErrorKind::ValueOutOfRange, "value must lie in 1..3");
  const auto ashms = enumerate_ashms_order3();
  std::vector<IntMatrix> ls;
  for (const auto& a : ashms) ls.push_back(ashl(a));
  const std::size_t distinct = std::set<IntMatrix>(ls.begin(), ls.end()).size();
  const OccurrenceProfile p = occurrence_profile(o.value, ls);
  std::string text = "ashms " + std::to_string(ashms.size()) + "\nashls " + std::to_string(distinct) +
                     "\nrow_max " + join(p.row_max) + "\ncolumn_max " + join(p.column_max) +
                     "\nline_max " + join(p.line_max) + "\n";
  print(o, text,
        {{"ashms", ashms.size()},
         {"ashls", distinct},
         {"row_max", p.row_max},
         {"column_max", p.column_max},
         {"line_max", p.line_max}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Alternating sign matrices with prescribed weighted projections"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output serialization")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Validate an object read from a file");
  verify->add_option("kind", o.kind)->required()->check(
      CLI::IsMember({"asm", "triangle", "monotone", "polytope", "ashm"}));
  verify->add_option("file", o.file)->required();

  auto* project = app.add_subcommand("project", "Weighted projection of an ASM");
  project->add_option("file", o.file)->required();

  auto* construct = app.add_subcommand("construct", "ASM with a prescribed weighted projection");
  construct->add_option("--projection", o.projection, "Comma-separated target")->required();
  construct->add_flag("--trace", o.trace, "Print every intermediate object");

  auto* convert = app.add_subcommand("convert", "Convert between ASM, partial sums and monotone triangle");
  const auto forms = CLI::IsMember({"asm", "psm", "monotone"});
  convert->add_option("--from", o.from)->required()->check(forms);
  convert->add_option("--to", o.to)->required()->check(forms);
  convert->add_option("file", o.file)->required();

  auto* majorize = app.add_subcommand("majorize", "Is the first vector majorized by the second");
  majorize->add_option("x", o.left)->required();
  majorize->add_option("y", o.right)->required();

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive generation at small order");
  enumerate->add_option("--order", o.order)->required();
  enumerate->add_option("--kind", o.kind)->required()->check(
      CLI::IsMember({"asm", "monotone", "rit", "vectors"}));
  enumerate->add_flag("--count-only", o.count_only);
  enumerate->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
  enumerate->add_option("--limit", o.limit, "Override the order limit");

  auto* polytope = app.add_subcommand("polytope", "ASM polytope members");
  polytope->require_subcommand(1);
  auto* decompose = polytope->add_subcommand("decompose", "T-block decomposition of b - a");
  decompose->add_flag("--paired", o.paired, "Opposite-depth pairs for equal projections");
  decompose->add_option("a", o.file)->required();
  decompose->add_option("b", o.file_b)->required();

  auto* ashm_cmd = app.add_subcommand("ashm", "Alternating sign hypermatrices");
  ashm_cmd->require_subcommand(1);
  auto* ashl_cmd = ashm_cmd->add_subcommand("ashl", "Latin-like square of an ASHM");
  ashl_cmd->add_option("file", o.file)->required();
  auto* grid_cmd = ashm_cmd->add_subcommand("grid", "Grid notation of an ASHM");
  grid_cmd->add_option("file", o.file)->required();
  auto* search3 = ashm_cmd->add_subcommand("search3", "Occurrence profile over all order-3 ASHLs");
  search3->add_option("--value", o.value)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) return run_verify(o);
    if (*project) return run_project(o);
    if (*construct) return run_construct(o);
    if (*convert) return run_convert(o);
    if (*majorize) return run_majorize(o);
    if (*enumerate) return run_enumerate(o);
    if (*decompose) return run_decompose(o);
    if (*ashl_cmd) return run_ashl(o);
    if (*grid_cmd) return run_grid(o);
    if (*search3) return run_search3(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kUsage;
}
