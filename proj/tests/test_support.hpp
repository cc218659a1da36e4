#pragma once

// Helpers and independent oracles shared by the unit tests. Nothing here
// calls into the closed-form series evaluation of the library.

#include <string_view>

#include "sgasket/code.hpp"
#include "sgasket/rational.hpp"

namespace sgasket::testing {

inline Code C(std::string_view text) { return parse_code(text); }

/// sum_{i=from}^{to} w_i / 2^i by direct accumulation.
template <typename Weight>
Rational partial_sum(std::size_t from, std::size_t to, Weight&& weight) {
  Rational total(0);
  for (std::size_t i = from; i <= to; ++i) {
    const int w = weight(i);
    if (w != 0) total += Rational(w) * Rational::inverse_power_of_two(i);
  }
  return total;
}

struct TruncatedRoutes {
  Rational sum_p;
  Rational sum_edge;
};

/// Both route sums of the distance formula truncated after `terms` positions
/// past the split index, straight from the case definitions. The neglected
/// tails are each at most 2 * 2^(-(k + terms)).
inline TruncatedRoutes truncated_routes(const Code& a, const Code& b, std::size_t k, std::size_t terms) {
  const Symbol ak = a.at(k);
  const Symbol bk = b.at(k);
  const std::size_t last = k + terms;
  TruncatedRoutes r;
  r.sum_p = partial_sum(k + 1, last, [&](std::size_t i) {
    return static_cast<int>(a.at(i) != bk) + static_cast<int>(b.at(i) != ak);
  });
  r.sum_edge = Rational::inverse_power_of_two(k) + partial_sum(k + 1, last, [&](std::size_t i) {
                 const bool gamma = a.at(i) == ak || a.at(i) == bk;
                 const bool delta = b.at(i) == bk || b.at(i) == ak;
                 return static_cast<int>(gamma) + static_cast<int>(delta);
               });
  return r;
}

}  // namespace sgasket::testing
