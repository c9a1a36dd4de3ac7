#pragma once

// SVG and ASCII pictures of a maximal lattice path, its marked points and
// the corner-cut subdivision recorded by both multiplicity traces.

#include <cmath>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "tz/complex_multiplicity.hpp"

namespace tz {

enum class RenderFormat { Svg, Ascii };

struct RenderSpec {
  RenderFormat format = RenderFormat::Svg;
  bool path = true;
  bool marked_points = true;
  bool subdivision = true;
  bool labels = true;
  int scale = 60;  ///< pixels per lattice unit, svg only
};

struct PathPicture {
  MarkedConfig config;
  LatticePath path;
  SideMultiplicity plus;
  SideMultiplicity minus;

  explicit PathPicture(MarkedConfig cfg)
      : config(std::move(cfg)),
        path(build_maximal_path(config)),
        plus(mu_side(path, Side::Plus)),
        minus(mu_side(path, Side::Minus)) {}

  std::int64_t mu() const noexcept { return plus.value * minus.value; }
};

namespace detail {

inline std::string fmt_coord(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  auto s = os.str();
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

inline std::string caption(const PathPicture& pic) {
  std::ostringstream os;
  os << "degree " << pic.config.degree() << ", marked";
  if (pic.config.marked().empty()) os << " none";
  for (const auto& m : pic.config.marked()) os << ' ' << m.point;
  return os.str();
}

inline std::string totals_line(const PathPicture& pic) {
  std::ostringstream os;
  os << "mu+ = " << pic.plus.value << ", mu- = " << pic.minus.value << ", mu = " << pic.mu();
  return os.str();
}

}  // namespace detail

inline std::string render_svg(const PathPicture& pic, const RenderSpec& spec) {
  const int d = pic.config.degree();
  const int s = spec.scale > 0 ? spec.scale : 60;
  const double margin = s * 0.75;
  const double width = 2 * margin + d * s;
  const double height = width + 24;
  auto px = [&](LatticePoint p) { return margin + p.x * s; };
  auto py = [&](LatticePoint p) { return margin + (d - p.y) * s; };
  auto pts = [&](auto begin, auto end) {
    std::string out;
    for (auto it = begin; it != end; ++it) {
      if (!out.empty()) out += ' ';
      out += detail::fmt_coord(px(*it)) + ',' + detail::fmt_coord(py(*it));
    }
    return out;
  };
  using detail::fmt_coord;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt_coord(width) << "\" height=\""
     << fmt_coord(height) << "\" viewBox=\"0 0 " << fmt_coord(width) << ' ' << fmt_coord(height)
     << "\">\n";
  os << "  <title>" << detail::caption(pic) << "</title>\n";
  const LatticePoint corners[] = {{0, 0}, {d, 0}, {0, d}};
  os << "  <polygon class=\"triangle\" points=\"" << pts(std::begin(corners), std::end(corners))
     << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  if (spec.subdivision) {
    os << "  <g class=\"subdivision\">\n";
    for (const auto* side : {&pic.plus, &pic.minus}) {
      const bool plus = side->trace.side == Side::Plus;
      for (const auto& cut : side->trace.steps) {
        os << "    <polygon class=\"cut " << to_string(side->trace.side) << "\" points=\""
           << pts(cut.triangle.begin(), cut.triangle.end()) << "\" fill=\""
           << (plus ? "#dbe8f7" : "#f7e6d2") << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
        if (spec.labels) {
          const double cx = (px(cut.triangle[0]) + px(cut.triangle[1]) + px(cut.triangle[2])) / 3;
          const double cy = (py(cut.triangle[0]) + py(cut.triangle[1]) + py(cut.triangle[2])) / 3;
          os << "    <text class=\"factor\" x=\"" << fmt_coord(cx) << "\" y=\""
             << fmt_coord(cy + 5) << "\" font-size=\"14\" text-anchor=\"middle\">" << cut.factor
             << "</text>\n";
        }
      }
    }
    os << "  </g>\n";
  }

  if (spec.path) {
    const auto p = pic.path.points();
    os << "  <polyline class=\"path\" points=\"" << pts(p.begin(), p.end())
       << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\"/>\n";
  }

  os << "  <g class=\"lattice\">\n";
  for (auto p : lattice_points(pic.config.triangle())) {
    if (pic.config.is_marked(p)) continue;
    os << "    <circle cx=\"" << fmt_coord(px(p)) << "\" cy=\"" << fmt_coord(py(p))
       << "\" r=\"4\" fill=\"#000000\"/>\n";
  }
  os << "  </g>\n";

  if (spec.marked_points && !pic.config.marked().empty()) {
    const double r = 7;
    os << "  <g class=\"marked\">\n";
    for (const auto& m : pic.config.marked()) {
      const double x = px(m.point), y = py(m.point);
      os << "    <path d=\"M " << fmt_coord(x - r) << ' ' << fmt_coord(y - r) << " L "
         << fmt_coord(x + r) << ' ' << fmt_coord(y + r) << " M " << fmt_coord(x - r) << ' '
         << fmt_coord(y + r) << " L " << fmt_coord(x + r) << ' ' << fmt_coord(y - r)
         << "\" stroke=\"#1a5fb4\" stroke-width=\"3\"/>\n";
    }
    os << "  </g>\n";
  }

  if (spec.labels)
    os << "  <text class=\"caption\" x=\"" << fmt_coord(margin) << "\" y=\""
       << fmt_coord(height - 8) << "\" font-size=\"14\">" << detail::totals_line(pic)
       << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

/// Grid with 4 columns and 2 rows per lattice unit. Path vertices are '@',
/// other lattice points 'o', marked points 'x'; path segments are '#',
/// triangle and subdivision edges use slope characters.
inline std::string render_ascii(const PathPicture& pic, const RenderSpec& spec) {
  const int d = pic.config.degree();
  const int cols = 4 * d + 1;
  const int rows = 2 * d + 1;
  std::vector<std::string> grid(static_cast<std::size_t>(rows), std::string(static_cast<std::size_t>(cols), ' '));
  auto col = [](LatticePoint p) { return 4 * p.x; };
  auto row = [d](LatticePoint p) { return 2 * (d - p.y); };
  auto segment = [&](LatticePoint a, LatticePoint b, char fill) {
    const auto v = b - a;
    char c = fill;
    if (c == 0) c = v.dx == 0 ? '|' : v.dy == 0 ? '-' : (v.dx > 0) == (v.dy > 0) ? '/' : '\\';
    const int c0 = col(a), r0 = row(a), dc = col(b) - c0, dr = row(b) - r0;
    const int steps = std::max(std::abs(dc), std::abs(dr));
    for (int i = 1; i < steps; ++i) {
      const auto cc = static_cast<std::size_t>(std::lround(c0 + double(dc) * i / steps));
      const auto rr = static_cast<std::size_t>(std::lround(r0 + double(dr) * i / steps));
      grid[rr][cc] = c;
    }
  };

  const LatticePoint corners[] = {{0, 0}, {d, 0}, {0, d}};
  for (int i = 0; i < 3; ++i) segment(corners[i], corners[(i + 1) % 3], 0);
  if (spec.subdivision)
    for (const auto* side : {&pic.plus, &pic.minus})
      for (const auto& cut : side->trace.steps)
        for (int i = 0; i < 3; ++i) segment(cut.triangle[i], cut.triangle[(i + 1) % 3], 0);
  if (spec.path)
    for (std::size_t j = 1; j < pic.path.size(); ++j) segment(pic.path[j - 1], pic.path[j], '#');
  for (auto p : lattice_points(pic.config.triangle()))
    grid[static_cast<std::size_t>(row(p))][static_cast<std::size_t>(col(p))] = 'o';
  if (spec.path)
    for (auto p : pic.path.points())
      grid[static_cast<std::size_t>(row(p))][static_cast<std::size_t>(col(p))] = '@';
  if (spec.marked_points)
    for (const auto& m : pic.config.marked())
      grid[static_cast<std::size_t>(row(m.point))][static_cast<std::size_t>(col(m.point))] = 'x';

  std::ostringstream os;
  os << detail::caption(pic) << '\n';
  for (int r = 0; r < rows; ++r) {
    std::string label = r % 2 == 0 ? std::to_string(d - r / 2) : "";
    std::string line = std::string(4 - std::min<std::size_t>(4, label.size()), ' ') + label + " " +
                       grid[static_cast<std::size_t>(r)];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  std::string axis(5, ' ');
  for (int x = 0; x <= d; ++x) {
    std::string n = std::to_string(x);
    axis += n;
    if (x < d) axis += std::string(4 - std::min<std::size_t>(3, n.size()), ' ');
  }
  os << axis << '\n';

  if (spec.labels) {
    os << "path:";
    for (auto p : pic.path.points()) os << ' ' << p;
    os << '\n';
    for (const auto* side : {&pic.plus, &pic.minus}) {
      os << to_string(side->trace.side) << " cuts:";
      if (side->trace.steps.empty()) os << " none";
      for (const auto& cut : side->trace.steps)
        os << " [k=" << cut.pivot << ' ' << cut.triangle[0] << cut.triangle[1] << cut.triangle[2]
           << " x" << cut.factor << ']';
      os << (side->trace.terminal == Terminal::Dead ? " -> dead end" : " -> chain") << '\n';
    }
    os << detail::totals_line(pic) << '\n';
  }
  return os.str();
}

inline std::string render(const PathPicture& pic, const RenderSpec& spec) {
  return spec.format == RenderFormat::Svg ? render_svg(pic, spec) : render_ascii(pic, spec);
}

}  // namespace tz
