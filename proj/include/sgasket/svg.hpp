#pragma once

#include <cstddef>
#include <string>

#include "sgasket/code.hpp"
#include "sgasket/geodesic.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

inline constexpr std::size_t kMaxWireframeLevel = 7;

/// SVG 1.1 document: the gasket wireframe to min(geodesic depth, 7) levels,
/// the geodesic polyline, and markers at a and b. The polyline carries its
/// exact length and the exact distance as data-length / data-distance.
std::string render_svg(const Code& a, const Code& b, const Geodesic& path, const Rational& exact_distance);

}  // namespace sgasket
