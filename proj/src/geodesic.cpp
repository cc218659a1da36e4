#include "sgasket/geodesic.hpp"

#include <algorithm>

#include "sgasket/errors.hpp"
#include "sgasket/geometry.hpp"
#include "sgasket/json_io.hpp"

namespace sgasket {

JunctionTriple junction_triple(std::span<const Symbol> sigma) {
  const Symbol s0(0), s1(1), s2(2);
  return JunctionTriple{Word(sigma.begin(), sigma.end()), junction_between(sigma, s0, s1),
                        junction_between(sigma, s1, s2), junction_between(sigma, s0, s2)};
}

Code junction_between(std::span<const Symbol> sigma, Symbol s, Symbol t) {
  if (s == t) throw std::invalid_argument("junction_between requires distinct children");
  Word prefix(sigma.begin(), sigma.end());
  prefix.push_back(std::min(s, t));
  return Code::vertex(prefix, std::max(s, t));
}

namespace {

// Path from the corner `target` of S_{x1..xk} down to x. points[0] is that
// corner; levels[i] is the cell level of segment points[i] -> points[i+1].
struct Leg {
  std::vector<Code> points;
  std::vector<std::size_t> levels;
};

Leg build_leg(Code x, Symbol target, std::size_t k, std::size_t depth, std::vector<SubTie>& ties) {
  // A junction tau beta (alpha) with target outside {alpha, beta} is reached
  // equally fast through child beta or child alpha of S_tau.
  if (is_junction(x)) {
    const std::size_t tau = x.preperiod().size() - 1;
    const Symbol beta = x.preperiod().back();
    const Symbol alpha = x.period().front();
    if (tau >= k && tau < depth && target != alpha && target != beta) {
      if (alpha < beta) x = twin(x);
      ties.push_back(SubTie{tau, x});
    }
  }

  Word prefix;
  for (std::size_t i = 1; i <= k; ++i) prefix.push_back(x.at(i));

  Leg leg;
  leg.points.push_back(canonicalize(Code::vertex(prefix, target)));
  for (std::size_t j = k;; ++j) {
    if (x.has_constant_tail() && x.preperiod().size() <= j) {
      // x is a corner of the current cell; finish along its edge.
      if (x.period().front() != target) {
        leg.points.push_back(x);
        leg.levels.push_back(j);
      }
      break;
    }
    if (j == depth) break;
    const Symbol next = x.at(j + 1);
    prefix.push_back(next);
    if (next != target) {
      leg.points.push_back(canonicalize(Code::vertex(prefix, target)));
      leg.levels.push_back(j + 1);
    }
  }
  return leg;
}

// All (level-prefix, corner) spellings of a vertex code at a given level.
std::vector<std::pair<Word, Symbol>> corner_spellings(const Code& c, std::size_t level) {
  std::vector<std::pair<Word, Symbol>> out;
  for (const Code& rep : representations(c)) {
    if (!rep.has_constant_tail() || rep.preperiod().size() > level) continue;
    Word prefix = rep.preperiod();
    prefix.resize(level, rep.period().front());
    out.emplace_back(std::move(prefix), rep.period().front());
  }
  return out;
}

Barycentric difference(const Barycentric& x, const Barycentric& y) {
  return Barycentric{x.b0 - y.b0, x.b1 - y.b1, x.b2 - y.b2};
}

// Joins u-w-z into u-z while both hops run the same way at the same level
// and u, z are corners of a single coarser cell.
void merge_collinear(Geodesic& g) {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i + 2 < g.waypoints.size(); ++i) {
      const std::size_t level = g.segment_levels[i];
      if (level == 0 || g.segment_levels[i + 1] != level) continue;
      const Barycentric u = to_barycentric(g.waypoints[i]);
      const Barycentric w = to_barycentric(g.waypoints[i + 1]);
      const Barycentric z = to_barycentric(g.waypoints[i + 2]);
      if (!(difference(w, u) == difference(z, w))) continue;
      if (!share_cell(g.waypoints[i], g.waypoints[i + 2], level - 1)) continue;
      g.waypoints.erase(g.waypoints.begin() + static_cast<std::ptrdiff_t>(i + 1));
      g.segment_levels.erase(g.segment_levels.begin() + static_cast<std::ptrdiff_t>(i + 1));
      g.segment_levels[i] = level - 1;
      merged = true;
    }
  }
}

}  // namespace

bool share_cell(const Code& u, const Code& w, std::size_t level) {
  for (const auto& [pu, cu] : corner_spellings(u, level)) {
    for (const auto& [pw, cw] : corner_spellings(w, level)) {
      if (pu == pw && cu != cw) return true;
    }
  }
  return false;
}

Geodesic geodesic(const Code& a, const Code& b, std::size_t depth) {
  const Code ca = canonicalize(a);
  const Code cb = canonicalize(b);
  if (same_point(ca, cb)) throw SamePoint(to_string(ca), to_string(cb));

  const DistanceResult exact = distance(ca, cb);
  const std::size_t k = exact.split_index;
  if (depth < k) throw DepthTooSmall(depth, k);

  const Symbol ak = ca.at(k);
  const Symbol bk = cb.at(k);
  Word sigma;
  for (std::size_t i = 1; i < k; ++i) sigma.push_back(ca.at(i));

  Geodesic g;
  g.depth = depth;
  g.route = exact.route;

  const bool via_edge = exact.route == Route::Edge;
  const Symbol target_a = via_edge ? Symbol::third(ak, bk) : bk;
  const Symbol target_b = via_edge ? Symbol::third(ak, bk) : ak;
  Leg leg_a = build_leg(ca, target_a, k, depth, g.sub_ties);
  Leg leg_b = build_leg(cb, target_b, k, depth, g.sub_ties);
  leg_a.points.front() = junction_between(sigma, ak, target_a);
  leg_b.points.front() = junction_between(sigma, bk, target_b);

  g.waypoints.assign(leg_a.points.rbegin(), leg_a.points.rend());
  g.segment_levels.assign(leg_a.levels.rbegin(), leg_a.levels.rend());
  if (via_edge) {
    // r -> q crosses S_{sigma c} along its edge of length 2^(-k).
    g.segment_levels.push_back(k);
    g.waypoints.insert(g.waypoints.end(), leg_b.points.begin(), leg_b.points.end());
  } else {
    g.waypoints.insert(g.waypoints.end(), leg_b.points.begin() + 1, leg_b.points.end());
  }
  g.segment_levels.insert(g.segment_levels.end(), leg_b.levels.begin(), leg_b.levels.end());

  merge_collinear(g);
  for (std::size_t level : g.segment_levels) g.length += Rational::inverse_power_of_two(level);
  return g;
}

std::string to_json(const Geodesic& g) {
  Json out;
  out["route"] = std::string(to_string(g.route));
  out["length"] = to_json(g.length);
  Json points = Json::array();
  for (const Code& c : g.waypoints) points.push_back(to_string(c));
  out["waypoints"] = std::move(points);
  out["depth"] = g.depth;
  Json ties = Json::array();
  for (const SubTie& t : g.sub_ties) {
    Json tie;
    tie["level"] = t.level;
    tie["junction"] = to_string(t.junction);
    ties.push_back(std::move(tie));
  }
  out["sub_ties"] = std::move(ties);
  return out.dump();
}

}  // namespace sgasket
