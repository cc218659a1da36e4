#include "sgasket/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <limits>

#include "sgasket/errors.hpp"

namespace sgasket {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::string describe(const Barycentric& p) {
  return "(" + p.b0.str() + ", " + p.b1.str() + ", " + p.b2.str() + ")";
}

// Lattice coordinate 2^n * w, if it is an integer in [0, 2^n].
std::optional<std::uint32_t> to_lattice(const Rational& w, std::size_t level) {
  const Rational scaled = w * Rational(BigInt(1) << level, BigInt(1));
  if (scaled.denominator() != 1) return std::nullopt;
  const BigInt value = scaled.numerator();
  if (value < 0 || value > (BigInt(1) << level)) return std::nullopt;
  return value.convert_to<std::uint32_t>();
}

}  // namespace

LevelGraph::LevelGraph(std::size_t level) : level_(level) {
  if (level < 1 || level > kMaxOracleLevel) {
    throw LevelTooLarge(level, kMaxOracleLevel);
  }

  // Lower-left corners of all level-n cells; the cell with word w has its
  // origin at sum_j e_{w_j} 2^(n-j) with e_0 = (0,0), e_1 = (1,0), e_2 = (0,1).
  std::vector<LatticePoint> origins{{0, 0}};
  for (std::size_t j = 1; j <= level; ++j) {
    const std::uint32_t step = 1u << (level - j);
    std::vector<LatticePoint> next;
    next.reserve(origins.size() * 3);
    for (const LatticePoint& o : origins) {
      next.push_back(o);
      next.push_back({o.u + step, o.v});
      next.push_back({o.u, o.v + step});
    }
    origins.swap(next);
  }

  std::vector<std::uint64_t> keys;
  keys.reserve(origins.size() * 3);
  for (const LatticePoint& o : origins) {
    keys.push_back(key(o));
    keys.push_back(key({o.u + 1, o.v}));
    keys.push_back(key({o.u, o.v + 1}));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const std::uint64_t side = (std::uint64_t{1} << level) + 1;
  points_.reserve(keys.size());
  for (std::uint64_t k : keys) {
    points_.push_back({static_cast<std::uint32_t>(k / side), static_cast<std::uint32_t>(k % side)});
  }

  // Each edge belongs to exactly one cell, so no edge deduplication is needed.
  std::vector<std::array<std::uint32_t, 3>> corners;
  corners.reserve(origins.size());
  for (const LatticePoint& o : origins) {
    corners.push_back({static_cast<std::uint32_t>(*find(o)),
                       static_cast<std::uint32_t>(*find(LatticePoint{o.u + 1, o.v})),
                       static_cast<std::uint32_t>(*find(LatticePoint{o.u, o.v + 1}))});
  }
  offsets_.assign(points_.size() + 1, 0);
  for (const auto& tri : corners) {
    for (std::uint32_t c : tri) offsets_[c + 1] += 2;
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  neighbors_.resize(offsets_.back());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& tri : corners) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) neighbors_[fill[tri[i]]++] = tri[j];
      }
    }
  }
}

std::uint64_t LevelGraph::key(const LatticePoint& p) const noexcept {
  const std::uint64_t side = (std::uint64_t{1} << level_) + 1;
  return static_cast<std::uint64_t>(p.u) * side + p.v;
}

std::span<const std::uint32_t> LevelGraph::neighbors(std::size_t vertex) const {
  return std::span<const std::uint32_t>(neighbors_).subspan(offsets_[vertex], degree(vertex));
}

Barycentric LevelGraph::coordinates(std::size_t vertex) const {
  const BigInt den = BigInt(1) << level_;
  const LatticePoint p = points_[vertex];
  const BigInt rest = den - p.u - p.v;
  return Barycentric{Rational(rest, den), Rational(BigInt(p.u), den), Rational(BigInt(p.v), den)};
}

std::optional<std::size_t> LevelGraph::find(const LatticePoint& p) const {
  const std::uint64_t target = key(p);
  auto it = std::lower_bound(points_.begin(), points_.end(), target,
                             [this](const LatticePoint& q, std::uint64_t k) { return key(q) < k; });
  if (it == points_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::optional<std::size_t> LevelGraph::find(const Barycentric& p) const {
  if (p.b0 + p.b1 + p.b2 != Rational(1)) return std::nullopt;
  const auto u = to_lattice(p.b1, level_);
  const auto v = to_lattice(p.b2, level_);
  if (!u || !v) return std::nullopt;
  return find(LatticePoint{*u, *v});
}

std::vector<std::uint32_t> LevelGraph::hops_from(std::size_t source) const {
  std::vector<std::uint32_t> dist(points_.size(), kUnreached);
  std::vector<std::uint32_t> queue;
  queue.reserve(points_.size());
  dist[source] = 0;
  queue.push_back(static_cast<std::uint32_t>(source));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t y : neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::uint32_t LevelGraph::hops(std::size_t from, std::size_t to) const {
  if (from == to) return 0;
  // Early-exit BFS; the full sweep is available through hops_from().
  std::vector<std::uint32_t> dist(points_.size(), kUnreached);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(from)};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (std::uint32_t y : neighbors(x)) {
      if (dist[y] != kUnreached) continue;
      dist[y] = dist[x] + 1;
      if (y == to) return dist[y];
      queue.push_back(y);
    }
  }
  return kUnreached;
}

bool LevelGraph::connected() const {
  const auto dist = hops_from(0);
  return std::none_of(dist.begin(), dist.end(), [](std::uint32_t d) { return d == kUnreached; });
}

LevelGraph build_level_graph(std::size_t level) { return LevelGraph(level); }

Barycentric project(const Code& c, std::size_t level) {
  if (level == 0) throw std::invalid_argument("project: level must be >= 1");
  BigInt u = 0;
  BigInt v = 0;
  for (std::size_t j = 1; j <= level; ++j) {
    const BigInt step = BigInt(1) << (level - j);
    const int s = c.at(j).value();
    if (s == 1) u += step;
    if (s == 2) v += step;
  }
  const BigInt den = BigInt(1) << level;
  return Barycentric{Rational(den - u - v, den), Rational(u, den), Rational(v, den)};
}

Rational graph_distance(const LevelGraph& g, const Barycentric& u, const Barycentric& v) {
  const auto from = g.find(u);
  if (!from) throw VertexNotFound(describe(u));
  const auto to = g.find(v);
  if (!to) throw VertexNotFound(describe(v));
  return Rational(BigInt(g.hops(*from, *to)), BigInt(1) << g.level());
}

Rational oracle_distance(const LevelGraph& g, const Code& a, const Code& b) {
  return graph_distance(g, project(a, g.level()), project(b, g.level()));
}

Rational oracle_distance(const Code& a, const Code& b, std::size_t level) {
  return oracle_distance(build_level_graph(level), a, b);
}

Rational oracle_tolerance(std::size_t level) { return Rational(4) * Rational::inverse_power_of_two(level); }

}  // namespace sgasket
