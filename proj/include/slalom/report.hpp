#pragma once

// Whole-tree analysis and survey rows, with JSON and CSV output.

#include <algorithm>
#include <atomic>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "slalom/coxeter.hpp"
#include "slalom/decomposition.hpp"
#include "slalom/divide.hpp"
#include "slalom/enumerate.hpp"
#include "slalom/geometry.hpp"
#include "slalom/knot.hpp"
#include "slalom/shape.hpp"
#include "slalom/spectral.hpp"
#include "slalom/tree.hpp"

namespace slalom {

struct GeometryReport {
  std::optional<std::string> error;  // set when some stage failed
  std::string failed_stage;
  int double_points = 0;
  double clearance = 0;
  double sphere_residual = 0;
  std::size_t knot_vertices = 0;
  int raw_crossings = 0;
  PlanarDiagram diagram;  // reduced
  IntPolynomial alexander;

  bool ok() const { return !error.has_value(); }
};

struct AnalysisReport {
  CayleyCode code;
  int tree_vertices = 0;
  int dynkin_vertices = 0;
  std::string shape;
  bool hyperbolic = true;
  std::optional<std::pair<int, int>> torus;
  int gordian = 0;
  int genus = 0;
  int crossings = 0;
  SpectralReport spectral;
  bool spectral_consistent = true;
  IntPolynomial alexander;  // det(tI - sC), normalized
  std::vector<Edge> bs_edges;
  std::string arborescent;
  std::optional<std::string> identification;
  std::vector<std::string> twist_word;
  ComplexityReport complexity;
  std::optional<GeometryReport> geometry;
  double tolerance = 1e-9;

  std::optional<bool> cross_check() const {
    if (!geometry || !geometry->ok()) return std::nullopt;
    return geometry->alexander == alexander;
  }

  /// Internal identities that must hold for every tree.
  bool consistent() const {
    return genus * 2 == dynkin_vertices && gordian == tree_vertices - 1 && spectral_consistent &&
           complexity.a_plus_b == complexity.four_delta_minus_one && cross_check().value_or(true);
  }

  /// Every requested computation ran and every cross-check passed.
  bool success() const { return consistent() && (!geometry || geometry->ok()); }
};

struct AnalyzeOptions {
  bool with_geometry = false;
  double tolerance = 1e-9;
  LayoutConfig layout;
};

inline GeometryReport analyze_geometry(const SlalomDivide& divide, const LayoutConfig& cfg) {
  GeometryReport g;
  std::string stage = "layout";
  try {
    auto imm = layout_immersion(divide, cfg);
    g.double_points = static_cast<int>(imm.double_points().size());
    g.clearance = imm.clearance();
    stage = "lift";
    auto knot = tangent_lift(imm, 0, cfg.sphere_tolerance);
    g.sphere_residual = knot.sphere_residual();
    g.knot_vertices = knot.size();
    stage = "projection";
    auto pk = project_diagram(knot, cfg);
    g.raw_crossings = pk.info.raw_crossings;
    g.diagram = pk.simplified;
    stage = "alexander";
    g.alexander = alexander_from_diagram(pk.simplified);
  } catch (const std::exception& e) {
    g.error = e.what();
    g.failed_stage = stage;
  }
  return g;
}

inline AnalysisReport analyze(const CayleyCode& code, const AnalyzeOptions& opt = {}) {
  AnalysisReport r;
  r.tolerance = opt.tolerance;
  const auto tree = parse_cayley(code);
  r.code = code;
  r.tree_vertices = tree.vertex_count();
  const auto delta = dynkin_of(tree);
  r.dynkin_vertices = delta.size();
  const auto verdict = spectral_verdict(delta, opt.tolerance);
  r.shape = verdict.shape.label();
  r.hyperbolic = verdict.shape_rule.hyperbolic;
  r.torus = verdict.shape_rule.torus;
  r.spectral = verdict.lambda;
  r.spectral_consistent = verdict.consistent;
  const auto divide = build_divide(tree);
  r.gordian = gordian_number(divide);
  r.crossings = static_cast<int>(divide.crossings().size());
  const auto gamma = gamma_graph(divide);
  const auto fiber = fiber_surface(gamma);
  r.genus = fiber.genus;
  const auto word = monodromy_word(divide);
  r.twist_word = word.labels();
  r.complexity = complexity_report(word, fiber);
  r.alexander = normalize_alexander(alexander_polynomial(delta));
  r.bs_edges = conway_decomposition(tree).bs_edges;
  r.arborescent = arborescent_notation(delta).expression;
  r.identification = known_identification(tree);
  if (opt.with_geometry) r.geometry = analyze_geometry(divide, opt.layout);
  return r;
}

namespace detail {

inline nlohmann::ordered_json coefficients_json(const IntPolynomial& p) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) a.push_back(static_cast<long long>(c));
  return a;
}

inline nlohmann::ordered_json edges_json(const std::vector<Edge>& edges) {
  auto a = nlohmann::ordered_json::array();
  for (auto [x, y] : edges) a.push_back({x, y});
  return a;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AnalysisReport& r) {
  using J = nlohmann::ordered_json;
  const int digits = decimal_digits_for(r.tolerance);
  J j;
  j["cayley_code"] = r.code.to_string();
  j["tree_vertices"] = r.tree_vertices;
  j["dynkin"] = {{"vertices", r.dynkin_vertices}, {"shape", r.shape}};
  j["hyperbolic"] = r.hyperbolic;
  j["torus"] = r.torus ? J{r.torus->first, r.torus->second} : J(nullptr);
  j["gordian"] = r.gordian;
  j["genus"] = r.genus;
  j["crossings"] = r.crossings;
  if (r.spectral.lambda_max)
    j["lambda_max"] = {{"lower", r.spectral.lambda_max->lower_decimal(digits)},
                       {"upper", r.spectral.lambda_max->upper_decimal(digits)}};
  else
    j["lambda_max"] = nullptr;
  j["entropy_lower_bound"] = r.spectral.homological_entropy;
  j["alexander"] = detail::coefficients_json(r.alexander);
  j["bs_edges"] = detail::edges_json(r.bs_edges);
  j["arborescent"] = r.arborescent;
  j["identification"] = r.identification ? J(*r.identification) : J(nullptr);
  j["twist_word"] = r.twist_word;
  j["complexity"] = {{"a", r.complexity.a},
                     {"b", r.complexity.b},
                     {"a_plus_b", r.complexity.a_plus_b},
                     {"four_delta_minus_one", r.complexity.four_delta_minus_one}};
  if (r.geometry) {
    const auto& g = *r.geometry;
    J geo;
    geo["ok"] = g.ok();
    if (g.ok()) {
      geo["double_points"] = g.double_points;
      geo["clearance"] = g.clearance;
      geo["sphere_residual"] = g.sphere_residual;
      geo["knot_vertices"] = g.knot_vertices;
      geo["raw_crossings"] = g.raw_crossings;
      geo["diagram"] = {{"gauss", g.diagram.gauss_code()}, {"crossings", g.diagram.crossing_count()}};
      geo["signs"] = g.diagram.signs();
      geo["alexander"] = detail::coefficients_json(g.alexander);
    } else {
      geo["stage"] = g.failed_stage;
      geo["error"] = *g.error;
    }
    j["geometry"] = geo;
  } else {
    j["geometry"] = nullptr;
  }
  auto cc = r.cross_check();
  j["cross_check"] = cc ? J(*cc) : J(nullptr);
  j["consistent"] = r.consistent();
  return j;
}

inline std::string to_text(const AnalysisReport& r) {
  const int digits = decimal_digits_for(r.tolerance);
  std::ostringstream os;
  os << "tree            " << r.code.to_string() << " (" << r.tree_vertices << " vertices)\n";
  os << "dynkin          " << r.shape << ", " << r.dynkin_vertices << " vertices\n";
  os << "hyperbolic      " << (r.hyperbolic ? "yes" : "no");
  if (r.torus) os << ", torus knot (" << r.torus->first << "," << r.torus->second << ")";
  os << "\n";
  if (r.identification) os << "known as        " << *r.identification << "\n";
  os << "gordian         " << r.gordian << "\n";
  os << "genus           " << r.genus << "\n";
  os << "lambda_max      ";
  if (r.spectral.lambda_max)
    os << "[" << r.spectral.lambda_max->lower_decimal(digits) << ", " << r.spectral.lambda_max->upper_decimal(digits) << "]";
  else
    os << "none (spectral radius 1)";
  os << "\nentropy >=      " << r.spectral.homological_entropy << "\n";
  os << "alexander       " << r.alexander.to_string() << "\n";
  os << "bs edges       ";
  for (auto [a, b] : r.bs_edges) os << " " << a << "-" << b;
  os << "\narborescent     " << r.arborescent << "\n";
  os << "twist word     ";
  for (const auto& l : r.twist_word) os << " " << l;
  os << "\na + b           " << r.complexity.a_plus_b << " (4 genus - 1 = " << r.complexity.four_delta_minus_one << ")\n";
  if (r.geometry) {
    const auto& g = *r.geometry;
    if (g.ok()) {
      os << "double points   " << g.double_points << "\n";
      os << "diagram         " << g.raw_crossings << " crossings, " << g.diagram.crossing_count() << " after reduction\n";
      os << "diagram poly    " << g.alexander.to_string() << "\n";
      os << "cross check     " << (*r.cross_check() ? "agree" : "DISAGREE") << "\n";
    } else {
      os << "geometry        failed at " << g.failed_stage << ": " << *g.error << "\n";
    }
  }
  if (!r.consistent()) os << "INCONSISTENT report\n";
  return os.str();
}

struct SurveyRow {
  CayleyCode code;
  std::string shape;
  bool hyperbolic = true;
  std::optional<double> lambda_midpoint;
  bool exceptional_shape = false;  // A_{2k}, E6 or E8

  /// The spectral route and the shape rule agree on this tree.
  bool agrees() const { return lambda_midpoint.has_value() == hyperbolic && hyperbolic == !exceptional_shape; }
};

inline SurveyRow survey_row(const CayleyCode& code, double tolerance = 1e-9) {
  const auto delta = dynkin_of(parse_cayley(code));
  const auto v = spectral_verdict(delta, tolerance);
  SurveyRow row;
  row.code = code;
  row.shape = v.shape.label();
  row.hyperbolic = v.shape_rule.hyperbolic;
  if (v.lambda.lambda_max) row.lambda_midpoint = v.lambda.lambda_max->midpoint();
  using K = ShapeClass::Kind;
  row.exceptional_shape =
      (v.shape.kind == K::A && v.shape.n % 2 == 0) || v.shape.kind == K::E6 || v.shape.kind == K::E8;
  return row;
}

/// Rows in enumeration order, computed on `threads` workers.
inline std::vector<SurveyRow> survey(int max_vertices, double tolerance = 1e-9, unsigned threads = 0) {
  const auto codes = enumerate_trees(max_vertices);
  std::vector<SurveyRow> rows(codes.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < codes.size();) rows[i] = survey_row(codes[i], tolerance);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string csv_row(const SurveyRow& r) {
  std::ostringstream os;
  os.precision(12);
  os << '"' << r.code.to_string() << "\"," << r.shape << ',' << (r.hyperbolic ? "true" : "false") << ',';
  if (r.lambda_midpoint) os << *r.lambda_midpoint;
  return os.str();
}

}  // namespace slalom
