#include "sgasket/metric.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "sgasket/errors.hpp"

namespace sgasket {

std::string_view to_string(Route route) {
  switch (route) {
    case Route::P:
      return "P";
    case Route::Edge:
      return "EDGE";
    case Route::Tie:
      return "TIE";
  }
  return "?";
}

namespace {

// Positions 1..window decide equality of two eventually periodic sequences.
std::size_t comparison_window(const Code& a, const Code& b) {
  return std::max(a.preperiod().size(), b.preperiod().size()) + std::lcm(a.period().size(), b.period().size());
}

}  // namespace

std::size_t split_index(const Code& a, const Code& b) {
  const std::size_t window = comparison_window(a, b);
  for (std::size_t i = 1; i <= window; ++i) {
    if (a.at(i) != b.at(i)) return i;
  }
  throw IdenticalCodes(to_string(a));
}

IndicatorBits indicator_bits(const Code& a, const Code& b, std::size_t k, std::size_t i) {
  if (k == 0 || i <= k) {
    throw std::invalid_argument("indicator_bits requires 1 <= k < i");
  }
  const Symbol ak = a.at(k);
  const Symbol bk = b.at(k);
  const Symbol ai = a.at(i);
  const Symbol bi = b.at(i);
  IndicatorBits bits;
  bits.alpha = ai != bk;
  bits.beta = bi != ak;
  bits.gamma = !(ai != ak && ai != bk);
  bits.delta = !(bi != bk && bi != ak);
  return bits;
}

Rational periodic_bit_sum(const BitSequence& bits) {
  if (bits.period.empty()) throw std::invalid_argument("periodic_bit_sum: empty period");
  if (bits.start == 0) throw std::invalid_argument("periodic_bit_sum: start index is 1-based");
  auto check = [](std::uint8_t b) {
    if (b > 1) throw std::invalid_argument("periodic_bit_sum: entries must be 0 or 1");
  };

  // Finite head: sum_j pre[j] 2^(m-1-j) / 2^(start+m-1).
  const std::size_t m = bits.preperiod.size();
  BigInt head = 0;
  for (std::uint8_t b : bits.preperiod) {
    check(b);
    head = (head << 1) + b;
  }

  // Periodic tail starting at index start+m: P / (2^(start+m-1) (2^p - 1)),
  // P the period read as a p-bit binary integer.
  const std::size_t p = bits.period.size();
  BigInt word = 0;
  for (std::uint8_t b : bits.period) {
    check(b);
    word = (word << 1) + b;
  }
  const BigInt repunit = (BigInt(1) << p) - 1;
  const BigInt scale = BigInt(1) << (bits.start + m - 1);
  return Rational(head * repunit + word, scale * repunit);
}

DistanceResult distance(const Code& a, const Code& b) {
  const std::size_t window = comparison_window(a, b);
  std::size_t k = 0;
  for (std::size_t i = 1; i <= window && k == 0; ++i) {
    if (a.at(i) != b.at(i)) k = i;
  }
  if (k == 0) {
    return DistanceResult{Rational(0), 0, Rational(0), Rational(1), Route::P};
  }

  // Beyond position `aligned` both codes repeat with the common period.
  const std::size_t aligned = std::max({a.preperiod().size(), b.preperiod().size(), k});
  const std::size_t period = std::lcm(a.period().size(), b.period().size());

  std::array<BitSequence, 4> seqs;
  for (auto& s : seqs) s.start = k + 1;
  for (std::size_t i = k + 1; i <= aligned + period; ++i) {
    const IndicatorBits bits = indicator_bits(a, b, k, i);
    const bool head = i <= aligned;
    const std::array<std::uint8_t, 4> values{bits.alpha, bits.beta, bits.gamma, bits.delta};
    for (std::size_t j = 0; j < 4; ++j) {
      (head ? seqs[j].preperiod : seqs[j].period).push_back(values[j]);
    }
  }

  DistanceResult result;
  result.split_index = k;
  result.sum_p = periodic_bit_sum(seqs[0]) + periodic_bit_sum(seqs[1]);
  result.sum_edge = Rational::inverse_power_of_two(k) + periodic_bit_sum(seqs[2]) + periodic_bit_sum(seqs[3]);
  if (result.sum_p < result.sum_edge) {
    result.route = Route::P;
    result.distance = result.sum_p;
  } else if (result.sum_edge < result.sum_p) {
    result.route = Route::Edge;
    result.distance = result.sum_edge;
  } else {
    result.route = Route::Tie;
    result.distance = result.sum_p;
  }
  return result;
}

}  // namespace sgasket
