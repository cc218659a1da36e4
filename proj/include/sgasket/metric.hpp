#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sgasket/code.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

/// Which candidate route realizes the distance: through the junction p of
/// the two sibling cells, across the edge r-q of the third sibling, or both.
enum class Route { P, Edge, Tie };

std::string_view to_string(Route route);

struct DistanceResult {
  Rational distance;
  std::size_t split_index = 0;
  Rational sum_p;
  /// Includes the 2^(-k) length of the crossing edge.
  Rational sum_edge;
  Route route = Route::P;
};

/// The four 0/1 indicators at one position i > k.
struct IndicatorBits {
  std::uint8_t alpha = 0;
  std::uint8_t beta = 0;
  std::uint8_t gamma = 0;
  std::uint8_t delta = 0;

  friend bool operator==(const IndicatorBits&, const IndicatorBits&) = default;
};

/// Eventually periodic 0/1 sequence whose first element sits at index `start`.
struct BitSequence {
  std::vector<std::uint8_t> preperiod;
  std::vector<std::uint8_t> period;
  std::size_t start = 1;
};

/// First position (1-based) where the expansions differ.
/// Throws IdenticalCodes when they agree everywhere.
std::size_t split_index(const Code& a, const Code& b);

IndicatorBits indicator_bits(const Code& a, const Code& b, std::size_t k, std::size_t i);

/// sum_{i >= start} bits_i / 2^i in closed form. Throws std::invalid_argument
/// for an empty period, start == 0, or a non-0/1 entry.
Rational periodic_bit_sum(const BitSequence& bits);

/// Intrinsic distance between the points addressed by a and b.
/// Identical expansions give distance 0, split index 0 and route P.
DistanceResult distance(const Code& a, const Code& b);

}  // namespace sgasket
