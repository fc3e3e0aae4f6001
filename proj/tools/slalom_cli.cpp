#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "slalom/slalom.hpp"

namespace {

using namespace slalom;

double default_tolerance() {
  if (const char* env = std::getenv("SLALOM_TOLERANCE")) {
    try {
      double t = std::stod(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring SLALOM_TOLERANCE=" << env << "\n";
  }
  return 1e-9;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

void report_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ') << "^\n";
}

int run_analyze(const std::string& code_text, bool json, bool geometry, double tolerance, int samples) {
  AnalyzeOptions opt;
  opt.with_geometry = geometry;
  opt.tolerance = tolerance;
  if (samples > 0) opt.layout.samples_per_segment = samples;
  AnalysisReport r;
  try {
    r = analyze(CayleyCode::from_string(code_text), opt);
  } catch (const ParseError& e) {
    report_parse_error(code_text, e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  if (r.geometry && !r.geometry->ok())
    std::cerr << "error: geometry failed at " << r.geometry->failed_stage << ": " << *r.geometry->error << "\n";
  return r.success() ? 0 : 1;
}

int run_enumerate(int max_vertices, int cap, bool csv, double tolerance, unsigned threads) {
  if (max_vertices < 2 || max_vertices > cap) {
    std::cerr << "error: max vertices must lie in [2, " << cap << "]\n";
    return 2;
  }
  const auto rows = survey(max_vertices, tolerance, threads);
  int hyperbolic = 0, disagreements = 0;
  if (csv) std::cout << "code,shape,hyperbolic,lambda_max\n";
  for (const auto& row : rows) {
    hyperbolic += row.hyperbolic;
    disagreements += !row.agrees();
    if (csv) {
      std::cout << csv_row(row) << "\n";
    } else {
      std::cout << row.code.to_string() << "  " << row.shape << "  " << (row.hyperbolic ? "hyperbolic" : "torus");
      if (row.lambda_midpoint) std::cout << "  lambda=" << *row.lambda_midpoint;
      std::cout << "\n";
    }
  }
  const std::size_t other = rows.size() - static_cast<std::size_t>(hyperbolic);
  (csv ? std::cerr : std::cout) << "# " << rows.size() << " trees, " << hyperbolic << " hyperbolic, " << other
                                << " non-hyperbolic; non-hyperbolic exactly A2k/E6/E8: "
                                << (disagreements == 0 ? "yes" : "NO") << "\n";
  return disagreements == 0 ? 0 : 1;
}

int run_render(const std::string& code_text, const std::string& svg, const std::string& knot_csv,
               const std::string& knot_obj, const std::string& gauss, double fan_angle, double clearance, int samples) {
  if (svg.empty() && knot_csv.empty() && knot_obj.empty() && gauss.empty()) {
    std::cerr << "error: nothing to render; pass --svg, --knot-csv, --knot-obj or --gauss-json\n";
    return 2;
  }
  RootedPlanarTree tree;
  try {
    tree = parse_cayley(code_text);
  } catch (const ParseError& e) {
    report_parse_error(code_text, e);
    return 2;
  }
  LayoutConfig cfg;
  if (fan_angle > 0) cfg.fan_angle_deg = fan_angle;
  if (clearance > 0) cfg.clearance = clearance;
  if (samples > 0) cfg.samples_per_segment = samples;
  try {
    const auto imm = layout_immersion(build_divide(tree), cfg);
    if (!svg.empty() && !write_file(svg, render_immersion_svg(imm))) return 1;
    if (knot_csv.empty() && knot_obj.empty() && gauss.empty()) return 0;
    const auto knot = tangent_lift(imm, 0, cfg.sphere_tolerance);
    const auto pk = project_diagram(knot, cfg);
    if (!knot_csv.empty() && !write_file(knot_csv, export_knot(pk.image, KnotFormat::Csv))) return 1;
    if (!knot_obj.empty() && !write_file(knot_obj, export_knot(pk.image, KnotFormat::Obj))) return 1;
    if (!gauss.empty() && !write_file(gauss, pk.simplified.gauss_json() + "\n")) return 1;
    std::cerr << "knot: " << knot.size() << " vertices, diagram " << pk.info.raw_crossings << " crossings, "
              << pk.simplified.crossing_count() << " after reduction\n";
  } catch (const LayoutError& e) {
    std::cerr << "error: layout violates " << e.what()
              << "\n  try a wider --fan-angle, a smaller --clearance or more --samples\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted planar trees, their slalom divides and knots"};
  app.require_subcommand(1);
  double tolerance = default_tolerance();
  app.add_option("--tolerance", tolerance, "Enclosure width for lambda_max (env SLALOM_TOLERANCE)")
      ->check(CLI::PositiveNumber);

  std::string code;
  bool json = false, geometry = false, csv = false;
  int samples = 0, max_vertices = 0, cap = 12;
  unsigned threads = 0;
  std::string svg, knot_csv, knot_obj, gauss;
  double fan_angle = 0, clearance = 0;

  auto* an = app.add_subcommand("analyze", "Report every invariant of one tree");
  an->add_option("code", code, "Cayley code, e.g. [0,1,1,2]")->required();
  an->add_flag("--json", json, "Print the report as JSON");
  an->add_flag("--with-geometry", geometry, "Also build the curve, the knot and its diagram");
  an->add_option("--tolerance", tolerance, "Enclosure width for lambda_max")->check(CLI::PositiveNumber);
  an->add_option("--samples", samples, "Samples per curve segment")->check(CLI::Range(LayoutConfig::kMinSamples, 4096));

  auto* en = app.add_subcommand("enumerate", "Survey all rooted trees up to a size");
  en->add_option("max_vertices", max_vertices, "Largest tree size")->required();
  en->add_flag("--csv", csv, "CSV rows with a header");
  en->add_option("--cap", cap, "Refuse sizes above this")->capture_default_str();
  en->add_option("--threads", threads, "Worker threads (0: all cores)");
  en->add_option("--tolerance", tolerance, "Enclosure width for lambda_max")->check(CLI::PositiveNumber);

  auto* re = app.add_subcommand("render", "Draw the slalom and export the knot");
  re->add_option("code", code, "Cayley code")->required();
  re->add_option("--svg", svg, "Divide drawing");
  re->add_option("--knot-csv", knot_csv, "Knot in 3-space as x,y,z rows");
  re->add_option("--knot-obj", knot_obj, "Knot as a Wavefront line object");
  re->add_option("--gauss-json", gauss, "Reduced diagram as a signed Gauss code");
  re->add_option("--fan-angle", fan_angle, "Opening of the tree layout in degrees")->check(CLI::Range(1.0, 179.0));
  re->add_option("--clearance", clearance, "Distance of the curve from the tree")->check(CLI::PositiveNumber);
  re->add_option("--samples", samples, "Samples per curve segment")->check(CLI::Range(LayoutConfig::kMinSamples, 4096));

  CLI11_PARSE(app, argc, argv);

  if (an->parsed()) return run_analyze(code, json, geometry, tolerance, samples);
  if (en->parsed()) return run_enumerate(max_vertices, cap, csv, tolerance, threads);
  return run_render(code, svg, knot_csv, knot_obj, gauss, fan_angle, clearance, samples);
}
