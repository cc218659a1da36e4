#include "sgasket/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "sgasket/geometry.hpp"
#include "sgasket/metric.hpp"

namespace sgasket {

namespace {

// SVG y grows downwards; flip so P2 sits at the top.
std::string format_point(const CartesianPoint& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f,%.7f", p.x, kSqrt3Over2 - p.y);
  return buf;
}

CartesianPoint lattice_point(double u, double v, double scale) {
  return CartesianPoint{(u + 0.5 * v) * scale, v * scale * kSqrt3Over2};
}

void append_wireframe(std::ostringstream& svg, std::size_t level) {
  const double scale = 1.0 / static_cast<double>(1u << level);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> origins{{0, 0}};
  for (std::size_t j = 1; j <= level; ++j) {
    const std::uint32_t step = 1u << (level - j);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    next.reserve(origins.size() * 3);
    for (const auto& [u, v] : origins) {
      next.emplace_back(u, v);
      next.emplace_back(u + step, v);
      next.emplace_back(u, v + step);
    }
    origins.swap(next);
  }
  svg << "  <path class=\"gasket\" fill=\"none\" stroke=\"#8a8a8a\" stroke-width=\"0.0012\" d=\"";
  for (const auto& [u, v] : origins) {
    svg << 'M' << format_point(lattice_point(u, v, scale)) << 'L' << format_point(lattice_point(u + 1, v, scale))
        << 'L' << format_point(lattice_point(u, v + 1, scale)) << 'Z';
  }
  svg << "\"/>\n";
}

}  // namespace

std::string render_svg(const Code& a, const Code& b, const Geodesic& path, const Rational& exact_distance) {
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1 0.8660254\" "
         "width=\"1000\" height=\"866\">\n"
      << "  <desc>geodesic " << to_string(a) << " to " << to_string(b) << ", route " << to_string(path.route)
      << ", depth " << path.depth << "</desc>\n";
  append_wireframe(svg, std::min(path.depth, kMaxWireframeLevel));

  svg << "  <polyline class=\"geodesic\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.004\" "
      << "stroke-linejoin=\"round\" data-route=\"" << to_string(path.route) << "\" data-length=\""
      << path.length.str() << "\" data-distance=\"" << exact_distance.str() << "\" points=\"";
  for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
    if (i != 0) svg << ' ';
    svg << format_point(to_cartesian(to_barycentric(path.waypoints[i])));
  }
  svg << "\"/>\n";

  for (const Code* endpoint : {&a, &b}) {
    const CartesianPoint p = to_cartesian(to_barycentric(*endpoint));
    char buf[128];
    std::snprintf(buf, sizeof buf, "cx=\"%.7f\" cy=\"%.7f\"", p.x, kSqrt3Over2 - p.y);
    svg << "  <circle class=\"endpoint\" " << buf << " r=\"0.008\" fill=\"#1f4e79\" data-code=\"" << to_string(*endpoint)
        << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sgasket
