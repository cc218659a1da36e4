#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgasket/code.hpp"
#include "sgasket/geometry.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

inline constexpr std::size_t kMaxOracleLevel = 14;

/// Level-n approximation graph: the vertices of all 3^n elementary triangles
/// of level n, joined along triangle edges (each hop has length 2^(-n)).
///
/// Vertices are stored on the integer lattice u = 2^n b1, v = 2^n b2, so
/// deduplication is exact. Immutable after construction; concurrent queries
/// are safe.
class LevelGraph {
 public:
  struct LatticePoint {
    std::uint32_t u = 0;
    std::uint32_t v = 0;
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  };

  /// Throws LevelTooLarge unless 1 <= level <= kMaxOracleLevel.
  explicit LevelGraph(std::size_t level);

  std::size_t level() const noexcept { return level_; }
  std::size_t vertex_count() const noexcept { return points_.size(); }
  std::size_t edge_count() const noexcept { return neighbors_.size() / 2; }

  std::size_t degree(std::size_t vertex) const { return offsets_[vertex + 1] - offsets_[vertex]; }
  std::span<const std::uint32_t> neighbors(std::size_t vertex) const;

  LatticePoint lattice(std::size_t vertex) const { return points_[vertex]; }
  Barycentric coordinates(std::size_t vertex) const;

  std::optional<std::size_t> find(const LatticePoint& p) const;
  /// Vertex index of an exact barycentric point, if it is a level-n vertex.
  std::optional<std::size_t> find(const Barycentric& p) const;

  /// Hop counts from `source` to every vertex (breadth-first search).
  std::vector<std::uint32_t> hops_from(std::size_t source) const;
  std::uint32_t hops(std::size_t from, std::size_t to) const;

  bool connected() const;

 private:
  std::uint64_t key(const LatticePoint& p) const noexcept;

  std::size_t level_;
  std::vector<LatticePoint> points_;  // sorted by key
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
};

LevelGraph build_level_graph(std::size_t level);

/// f_{a1..an}(P0): the lower-left vertex of the level-n cell holding c.
Barycentric project(const Code& c, std::size_t level);

/// Shortest hop count between two vertices scaled by 2^(-n).
/// Throws VertexNotFound when either point is not a vertex of g.
Rational graph_distance(const LevelGraph& g, const Barycentric& u, const Barycentric& v);

Rational oracle_distance(const LevelGraph& g, const Code& a, const Code& b);
/// Builds the level-n graph and queries it once.
Rational oracle_distance(const Code& a, const Code& b, std::size_t level);

/// 4 * 2^(-n): accepted gap between the exact and graph distances at level n.
Rational oracle_tolerance(std::size_t level);

}  // namespace sgasket
