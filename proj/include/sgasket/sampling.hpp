#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sgasket/code.hpp"

namespace sgasket {

using Rng = std::mt19937_64;

/// Independent generator for sample `index` of a run seeded with `seed`;
/// the stream does not depend on how samples are scheduled.
Rng sample_rng(std::uint64_t seed, std::uint64_t index);

/// Preperiod length uniform in 0..6, period length uniform in 1..3,
/// symbols uniform.
Code random_code(Rng& rng);

/// A random junction tau beta (alpha) with |tau| uniform in 0..6.
Code random_junction(Rng& rng);

}  // namespace sgasket
