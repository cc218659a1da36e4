#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sgasket/code.hpp"
#include "sgasket/oracle.hpp"
#include "sgasket/rational.hpp"

namespace sgasket {

struct CheckOptions {
  std::size_t samples = 100;
  std::size_t level = 8;
  std::uint64_t seed = 1;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

/// Outcome of one sample: the pair (a, b) and the third point c taken from
/// the next sample, used for the triangle inequality.
struct SampleOutcome {
  std::size_t index = 0;
  Code a{{}, {Symbol(0)}};
  Code b{{}, {Symbol(0)}};
  Code c{{}, {Symbol(0)}};
  bool symmetric = false;
  bool identity = false;
  bool representation_independent = false;
  bool triangle = false;
  bool upper_bound = false;
  bool oracle_agrees = false;
  Rational oracle_gap;

  bool passed() const {
    return symmetric && identity && representation_independent && triangle && upper_bound && oracle_agrees;
  }
};

struct CheckReport {
  CheckOptions options;
  std::vector<SampleOutcome> outcomes;  // ordered by sample index

  std::size_t passed() const;
  bool all_passed() const { return passed() == outcomes.size(); }
};

/// Evaluates one sample against every metric property and a prebuilt oracle graph.
SampleOutcome check_sample(std::size_t index, const Code& a, const Code& b, const Code& c, const LevelGraph& graph);

/// Seeded sweep; the report is identical for any thread count.
CheckReport run_check(const CheckOptions& options);

}  // namespace sgasket
