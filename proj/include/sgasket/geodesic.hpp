#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sgasket/code.hpp"
#include "sgasket/metric.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

/// The three junctions of the cell S_sigma: p between children 0 and 1,
/// q between 1 and 2, r between 0 and 2.
struct JunctionTriple {
  Word sigma;
  Code p;
  Code q;
  Code r;
};

JunctionTriple junction_triple(std::span<const Symbol> sigma);

/// Junction shared by children s and t of S_sigma, written through the
/// smaller of the two children: sigma min(s,t) (max(s,t)).
Code junction_between(std::span<const Symbol> sigma, Symbol s, Symbol t);

/// A leg reached an endpoint that is a junction with two equally short
/// continuations; the path through the smaller child was emitted.
struct SubTie {
  std::size_t level = 0;
  Code junction;
};

struct Geodesic {
  /// Vertex codes; the first and last approximate the endpoints to within
  /// 2^(-depth) each (exactly, when an endpoint is itself a vertex of
  /// level <= depth).
  std::vector<Code> waypoints;
  /// segment_levels[i] = j means waypoints i, i+1 are corners of one
  /// level-j cell and the segment has length 2^(-j).
  std::vector<std::size_t> segment_levels;
  Rational length;
  std::size_t depth = 0;
  Route route = Route::P;
  std::vector<SubTie> sub_ties;
};

/// Depth-truncated shortest path between a and b following the route that
/// realizes distance(a, b). Ties emit the P route tagged Route::Tie.
/// Throws SamePoint, or DepthTooSmall when depth < split_index(a, b).
Geodesic geodesic(const Code& a, const Code& b, std::size_t depth);

/// True when u and w are distinct corners of one level-`level` cell.
bool share_cell(const Code& u, const Code& w, std::size_t level);

/// {"route", "length": {"num","den"}, "waypoints", "depth", "sub_ties"}.
std::string to_json(const Geodesic& g);

}  // namespace sgasket
