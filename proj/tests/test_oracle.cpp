#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <thread>

#include "sgasket/errors.hpp"
#include "sgasket/metric.hpp"
#include "sgasket/oracle.hpp"
#include "sgasket/sampling.hpp"
#include "test_support.hpp"

using namespace sgasket;
using sgasket::testing::C;

namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }

Barycentric unit(int t) {
  return Barycentric{R(t == 0 ? 1 : 0), R(t == 1 ? 1 : 0), R(t == 2 ? 1 : 0)};
}

// f_{w1} o ... o f_{wn}(P0), applying the innermost map first.
Barycentric apply_maps(const Code& c, std::size_t n) {
  Barycentric x = unit(0);
  for (std::size_t j = n; j >= 1; --j) {
    const Barycentric e = unit(c.at(j).value());
    x = Barycentric{(x.b0 + e.b0) / R(2), (x.b1 + e.b1) / R(2), (x.b2 + e.b2) / R(2)};
  }
  return x;
}

const LevelGraph& graph(std::size_t level) {
  static std::map<std::size_t, LevelGraph> cache;
  auto it = cache.find(level);
  if (it == cache.end()) it = cache.emplace(level, LevelGraph(level)).first;
  return it->second;
}

}  // namespace

TEST_CASE("build_level_graph: small levels") {
  const LevelGraph g1 = build_level_graph(1);
  CHECK(g1.vertex_count() == 6);
  CHECK(g1.edge_count() == 9);
  CHECK(build_level_graph(2).vertex_count() == 15);
  CHECK(build_level_graph(3).vertex_count() == 42);
  CHECK_THROWS_AS(build_level_graph(0), LevelTooLarge);
  CHECK_THROWS_AS(build_level_graph(kMaxOracleLevel + 1), LevelTooLarge);
}

TEST_CASE("structure: counts, degrees, connectivity") {
  std::size_t pow3 = 1;
  for (std::size_t n = 1; n <= 8; ++n) {
    pow3 *= 3;
    const LevelGraph& g = graph(n);
    CAPTURE(n);
    CHECK(g.vertex_count() == 3 * (pow3 + 1) / 2);
    CHECK(g.edge_count() == 3 * pow3);
    std::size_t degree_two = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const std::size_t d = g.degree(v);
      REQUIRE((d == 2 || d == 4));
      if (d == 2) ++degree_two;
    }
    CHECK(degree_two == 3);
    CHECK(g.connected());
  }
}

TEST_CASE("graph_distance") {
  CHECK(graph_distance(graph(1), unit(0), unit(1)) == R(1));
  CHECK(graph_distance(graph(3), unit(2), unit(2)) == R(0));
  CHECK(graph_distance(graph(2), unit(0), unit(2)) == R(1));
  CHECK(graph_distance(graph(2), unit(0), Barycentric{R(1, 2), R(1, 4), R(1, 4)}) == R(1, 2));
  CHECK_THROWS_AS(graph_distance(graph(2), unit(0), Barycentric{R(1, 3), R(1, 3), R(1, 3)}), VertexNotFound);
  // Dyadic lattice point inside the removed middle triangle.
  CHECK_THROWS_AS(graph_distance(graph(3), unit(0), Barycentric{R(1, 4), R(3, 8), R(3, 8)}), VertexNotFound);
}

TEST_CASE("project") {
  CHECK(project(C("(0)"), 3) == unit(0));
  CHECK(project(C("(1)"), 1) == Barycentric{R(1, 2), R(1, 2), R(0)});
  CHECK(project(C("0(1)"), 2) == Barycentric{R(3, 4), R(1, 4), R(0)});
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = sample_rng(43, i);
    const Code c = random_code(rng);
    for (std::size_t n : {1u, 4u, 7u}) {
      const Barycentric p = project(c, n);
      REQUIRE(p == apply_maps(c, n));
      REQUIRE(graph(n).find(p).has_value());
    }
  }
}

TEST_CASE("oracle_distance: worked examples") {
  // (1) projects to f_{1...1}(P0), one level-n hop short of the corner P1.
  for (std::size_t n : {1u, 3u, 6u}) {
    const Rational d = oracle_distance(graph(n), C("(0)"), C("(1)"));
    CHECK(d == R(1) - Rational::inverse_power_of_two(n));
    CHECK(abs(d - R(1)) <= oracle_tolerance(n));
  }
  const LevelGraph g10(10);
  CHECK(abs(oracle_distance(g10, C("(012)"), C("(1)")) - R(5, 7)) <= oracle_tolerance(10));
  CHECK(abs(oracle_distance(g10, C("000(2)"), C("0122(0)")) - R(7, 16)) <= oracle_tolerance(10));
  CHECK(oracle_tolerance(10) == R(1, 256));
}

TEST_CASE("property: convergence with a single constant") {
  const std::vector<std::size_t> levels{4, 5, 6, 7, 8, 9, 10};
  Rational worst_constant(0);
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = sample_rng(47, i);
    const Code a = random_code(rng);
    const Code b = random_code(rng);
    const Rational exact = distance(a, b).distance;
    for (std::size_t n : levels) {
      const Rational gap = abs(exact - oracle_distance(graph(n), a, b));
      // Fitted constant C with gap <= C * 2^(-n).
      worst_constant = max(worst_constant, gap / Rational::inverse_power_of_two(n));
    }
  }
  MESSAGE("fitted constant C = " << worst_constant);
  CHECK(worst_constant <= R(4));
}

TEST_CASE("property: twin representations project within two hops") {
  const std::size_t n = 8;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = sample_rng(53, i);
    const Code a = random_junction(rng);
    const Code b = random_code(rng);
    const Rational d1 = oracle_distance(graph(n), a, b);
    const Rational d2 = oracle_distance(graph(n), twin(a), b);
    CAPTURE(to_string(a));
    REQUIRE(abs(d1 - d2) <= Rational(2) * Rational::inverse_power_of_two(n));
  }
}

TEST_CASE("concurrent queries match serial queries") {
  const LevelGraph& g = graph(7);
  std::vector<std::pair<Code, Code>> pairs;
  for (std::uint64_t i = 0; i < 64; ++i) {
    Rng rng = sample_rng(59, i);
    Code a = random_code(rng);
    Code b = random_code(rng);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  std::vector<Rational> serial;
  for (const auto& [a, b] : pairs) serial.push_back(oracle_distance(g, a, b));

  std::vector<Rational> parallel(pairs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < pairs.size(); i += 4) parallel[i] = oracle_distance(g, pairs[i].first, pairs[i].second);
      });
    }
  }
  CHECK(parallel == serial);
}
