#include "sgasket/sampling.hpp"

namespace sgasket {

namespace {

Word random_word(Rng& rng, std::size_t length) {
  std::uniform_int_distribution<int> symbol(0, 2);
  Word w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) w.emplace_back(symbol(rng));
  return w;
}

}  // namespace

Rng sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Code random_code(Rng& rng) {
  std::uniform_int_distribution<std::size_t> pre_len(0, 6);
  std::uniform_int_distribution<std::size_t> period_len(1, 3);
  Word pre = random_word(rng, pre_len(rng));
  Word period = random_word(rng, period_len(rng));
  return Code(std::move(pre), std::move(period));
}

Code random_junction(Rng& rng) {
  std::uniform_int_distribution<std::size_t> tau_len(0, 6);
  std::uniform_int_distribution<int> symbol(0, 2);
  std::uniform_int_distribution<int> offset(1, 2);
  Word pre = random_word(rng, tau_len(rng));
  const int beta = symbol(rng);
  const int alpha = (beta + offset(rng)) % 3;
  pre.emplace_back(beta);
  return Code(std::move(pre), Word{Symbol(alpha)});
}

}  // namespace sgasket
