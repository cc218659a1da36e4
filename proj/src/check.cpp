#include "sgasket/check.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "sgasket/metric.hpp"
#include "sgasket/sampling.hpp"

namespace sgasket {

std::size_t CheckReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const SampleOutcome& s) { return s.passed(); }));
}

SampleOutcome check_sample(std::size_t index, const Code& a, const Code& b, const Code& c, const LevelGraph& graph) {
  SampleOutcome out;
  out.index = index;
  out.a = canonicalize(a);
  out.b = canonicalize(b);
  out.c = canonicalize(c);

  const DistanceResult ab = distance(a, b);
  const Rational& d_ab = ab.distance;
  out.symmetric = distance(b, a).distance == d_ab;
  out.identity = (d_ab == Rational(0)) == same_point(a, b);

  out.representation_independent = true;
  for (const Code& ra : representations(a)) {
    for (const Code& rb : representations(b)) {
      out.representation_independent = out.representation_independent && distance(ra, rb).distance == d_ab;
    }
  }

  out.triangle = distance(a, c).distance <= d_ab + distance(b, c).distance;
  out.upper_bound = ab.split_index == 0 || d_ab <= Rational(2) * Rational::inverse_power_of_two(ab.split_index);

  out.oracle_gap = abs(d_ab - oracle_distance(graph, a, b));
  out.oracle_agrees = out.oracle_gap <= oracle_tolerance(graph.level());
  return out;
}

CheckReport run_check(const CheckOptions& options) {
  CheckReport report;
  report.options = options;
  const std::size_t n = options.samples;
  if (n == 0) return report;

  std::vector<std::pair<Code, Code>> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = sample_rng(options.seed, i);
    Code a = random_code(rng);
    Code b = random_code(rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  const LevelGraph graph(options.level);
  report.outcomes.resize(n);

  std::size_t workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      report.outcomes[i] = check_sample(i, pairs[i].first, pairs[i].second, pairs[(i + 1) % n].first, graph);
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  pool.clear();
  return report;
}

}  // namespace sgasket
