#pragma once

// SVG drawings of the slalom: disk, tree, curve and its double points.

#include <cstdio>
#include <sstream>
#include <string>

#include "slalom/divide.hpp"
#include "slalom/geometry.hpp"

namespace slalom {

struct SvgStyle {
  double size = 480;  // pixels, square
  double margin = 0.06;
  bool label_vertices = true;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace detail

inline std::string render_immersion_svg(const DivideImmersion& imm, const SvgStyle& style = {}) {
  const double s = style.size, scale = s / (2 + 2 * style.margin);
  auto X = [&](const Vec2& p) { return detail::fmt(s / 2 + scale * p.x()); };
  auto Y = [&](const Vec2& p) { return detail::fmt(s / 2 - scale * p.y()); };
  const auto& tree = imm.tree();
  const auto& pos = imm.vertex_positions();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << s << "\" height=\"" << s
     << "\" viewBox=\"0 0 " << s << ' ' << s << "\">\n";
  os << "  <circle cx=\"" << detail::fmt(s / 2) << "\" cy=\"" << detail::fmt(s / 2) << "\" r=\"" << detail::fmt(scale)
     << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1\"/>\n";
  os << "  <g stroke=\"#888\" stroke-width=\"1\">\n";
  for (auto [a, b] : tree.edges())
    os << "    <line x1=\"" << X(pos[static_cast<std::size_t>(a)]) << "\" y1=\"" << Y(pos[static_cast<std::size_t>(a)])
       << "\" x2=\"" << X(pos[static_cast<std::size_t>(b)]) << "\" y2=\"" << Y(pos[static_cast<std::size_t>(b)]) << "\"/>\n";
  os << "  </g>\n";
  os << "  <path fill=\"none\" stroke=\"#c03\" stroke-width=\"1.4\" stroke-linejoin=\"round\" d=\"";
  const auto& smp = imm.samples();
  for (std::size_t i = 0; i < smp.size(); ++i) os << (i ? " L" : "M") << X(smp[i].point) << ',' << Y(smp[i].point);
  os << "\"/>\n";
  os << "  <g fill=\"#000\">\n";
  for (std::size_t v = 0; v < pos.size(); ++v) {
    os << "    <circle cx=\"" << X(pos[v]) << "\" cy=\"" << Y(pos[v]) << "\" r=\"" << (v == 0 ? 4 : 3) << "\"/>\n";
    if (style.label_vertices)
      os << "    <text x=\"" << detail::fmt(s / 2 + scale * pos[v].x() + 5) << "\" y=\""
         << detail::fmt(s / 2 - scale * pos[v].y() - 5) << "\" font-size=\"10\" font-family=\"sans-serif\">" << v
         << "</text>\n";
  }
  os << "  </g>\n";
  os << "  <g fill=\"none\" stroke=\"#06c\" stroke-width=\"1\">\n";
  for (const auto& dp : imm.double_points())
    os << "    <circle cx=\"" << X(dp.point) << "\" cy=\"" << Y(dp.point) << "\" r=\"4\"/>\n";
  os << "  </g>\n</svg>\n";
  return os.str();
}

/// Layout plus drawing; layout failures surface as LayoutError naming the axiom.
inline std::string render_divide_svg(const SlalomDivide& divide, const LayoutConfig& cfg = {}, const SvgStyle& style = {}) {
  return render_immersion_svg(layout_immersion(divide, cfg), style);
}

}  // namespace slalom
