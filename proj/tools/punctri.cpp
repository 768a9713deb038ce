// punctri: command-line front end for the triangulation library.
//
// Exit codes: 0 success, 1 invalid input or failed computation (including an
// incomplete basis run), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "punctri/canon.hpp"
#include "punctri/enumerate.hpp"
#include "punctri/homotopy.hpp"
#include "punctri/parallel.hpp"
#include "punctri/pipeline.hpp"
#include "punctri/report.hpp"
#include "punctri/tri_io.hpp"

namespace {

using namespace punctri;

constexpr int kFailure = 1;
constexpr int kUsage = 2;

std::string display(const std::string& label) { return label.empty() ? "-" : label; }

void emit(const std::string& path, const std::vector<Triangulation>& items) {
  if (path.empty() || path == "-") {
    write_tri(std::cout, items);
  } else {
    save_tri(path, items);
  }
}

int run_validate(const std::string& input) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open " + input);
  int bad = 0;
  for (auto& r : parse_tri(in)) {
    InvalidTriangulation error(Violation::Empty, "");
    const std::string name = display(r.label);
    if (Triangulation::try_build(r.vertex_count, std::move(r.faces), r.label, &error)) {
      std::cout << name << " OK\n";
    } else {
      ++bad;
      std::cout << name << " INVALID " << to_string(error.kind()) << ": " << error.what() << '\n';
    }
  }
  return bad == 0 ? 0 : kFailure;
}

std::string describe(const SurfaceClass& c) {
  std::ostringstream out;
  out << c.name << " chi=" << c.euler_characteristic
      << " orientable=" << (c.orientable ? "yes" : "no") << " boundary=[";
  for (std::size_t i = 0; i < c.boundary_cycles.size(); ++i) {
    out << (i ? "," : "") << c.boundary_cycles[i].size();
  }
  out << ']';
  return out.str();
}

int run_classify(const std::string& input) {
  for (const auto& t : load_tri(input)) std::cout << display(t.label()) << ' ' << describe(classify(t)) << '\n';
  return 0;
}

int run_canon(const std::string& input, const std::string& output, bool dedupe_records) {
  const auto items = load_tri(input);
  std::vector<Triangulation> out;
  if (dedupe_records) {
    out = dedupe(items);
  } else {
    for (const auto& t : items) out.push_back(canonical_key(t).to_triangulation(t.label()));
  }
  emit(output, out);
  return 0;
}

int run_expand(const std::string& input, const std::string& output, int steps) {
  const auto items = load_tri(input);
  for (const auto& t : items) {
    if (!t.is_closed()) throw std::invalid_argument(display(t.label()) + " is not closed");
  }
  XiLevel level = make_base_level(items);
  for (int n = 0; n < steps; ++n) {
    level = expand(level);
    std::cerr << "level " << level.n << ": " << level.members.size() << " classes, pylonic "
              << level.histogram.none << '/' << level.histogram.one << '/' << level.histogram.two << '\n';
  }
  emit(output, level.members);
  return 0;
}

int run_edges(const std::string& input, const std::string& mode_name) {
  const RodMode mode = parse_rod_mode(mode_name);
  for (const auto& t : load_tri(input)) {
    for (const EdgeClass& e : classify_edges(t, mode)) {
      std::cout << display(t.label()) << ' ' << e.edge.a << '-' << e.edge.b << ' '
                << (e.is_rod() ? "rod" : "cable");
      if (e.is_rod()) std::cout << ' ' << describe_reasons(e.reasons);
      std::cout << '\n';
    }
  }
  return 0;
}

int run_enumerate(const std::string& surface, int max_vertices, bool irreducible_only,
                  const std::string& output) {
  EnumerateOptions options;
  options.max_vertices = max_vertices;
  options.irreducible_only = irreducible_only;
  EnumerationStats stats;
  const auto found = enumerate_closed(ClosedTarget::from_name(surface), options, &stats);
  emit(output, found);
  std::cerr << found.size() << " triangulations (" << stats.nodes << " search nodes, "
            << stats.leaves << " complete gluings)\n";
  return 0;
}

int run_basis(const std::string& surface, const std::string& input, const std::string& output,
              const std::string& report_path, std::optional<int> level_cap) {
  const SurfaceName wanted = parse_surface_name(surface);
  if (wanted.punctured) throw std::invalid_argument("--surface takes the closed surface, got " + surface);
  const auto inputs = load_tri(input);
  for (const auto& t : inputs) {
    const SurfaceClass c = classify(t);
    if (c.name != surface) {
      throw PipelineError(display(t.label()) + " is " + c.name + ", expected " + surface);
    }
  }
  const auto result = punctured_basis(inputs, level_cap.value_or(default_level_cap(surface)));
  emit(output, result.basis);
  if (!report_path.empty()) save_report(report_path, result.report);
  std::cerr << result.report.basis_count << " irreducible triangulations of " << surface << "-D\n";
  if (!result.report.complete) {
    std::cerr << "level cap " << result.report.level_cap << " reached with pylonic triangulations left\n";
    return kFailure;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Irreducible triangulations of closed and once-punctured surfaces"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0 = all cores)");

  std::string input, output, mode = "agreement", surface, report;
  int steps = 1, max_vertices = 0;
  std::optional<int> level_cap;
  bool dedupe_flag = false, irreducible_only = false;

  auto* validate = app.add_subcommand("validate", "Check every record of a .tri file");
  validate->add_option("input", input)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print the surface type of each record");
  classify_cmd->add_option("input", input)->required();

  auto* canon = app.add_subcommand("canon", "Rewrite records in canonical form");
  canon->add_option("input", input)->required();
  canon->add_option("-o,--output", output);
  canon->add_flag("--dedupe", dedupe_flag, "Keep one record per isomorphism class");

  auto* expand_cmd = app.add_subcommand("expand", "Split every corner, repeatedly, up to isomorphism");
  expand_cmd->add_option("input", input)->required();
  expand_cmd->add_option("--steps", steps)->check(CLI::NonNegativeNumber);
  expand_cmd->add_option("-o,--output", output);

  auto* edges = app.add_subcommand("edges", "Cable/rod table for every edge");
  edges->add_option("input", input)->required();
  edges->add_option("--mode", mode)->check(CLI::IsMember({"literal", "agreement"}));

  auto* enumerate = app.add_subcommand("enumerate", "All closed triangulations of a surface up to a size");
  enumerate->add_option("--surface", surface)->required();
  enumerate->add_option("--max-vertices", max_vertices)->required()->check(CLI::Range(3, 16));
  enumerate->add_flag("--irreducible-only", irreducible_only);
  enumerate->add_option("-o,--output", output);

  auto* basis = app.add_subcommand("basis", "Irreducible triangulations of the once-punctured surface");
  basis->add_option("--surface", surface)->required();
  basis->add_option("--input", input)->required();
  basis->add_option("-o,--output", output);
  basis->add_option("--report", report);
  basis->add_option("--level-cap", level_cap)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  set_thread_count(threads);

  try {
    if (*validate) return run_validate(input);
    if (*classify_cmd) return run_classify(input);
    if (*canon) return run_canon(input, output, dedupe_flag);
    if (*expand_cmd) return run_expand(input, output, steps);
    if (*edges) return run_edges(input, mode);
    if (*enumerate) return run_enumerate(surface, max_vertices, irreducible_only, output);
    if (*basis) return run_basis(surface, input, output, report, level_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}
