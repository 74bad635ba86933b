#include <doctest.h>

#include "oracles.hpp"
#include "rankmatch/errors.hpp"
#include "rankmatch/graph.hpp"
#include "rankmatch/rng.hpp"

using namespace rankmatch;

namespace {

LoopGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  LoopGraph g(n);
  for (auto [a, b] : edges) g.add_edge(Edge::make(a - 1, b - 1));
  return g;
}

}  // namespace

TEST_CASE("matching numbers on small graphs") {
  const auto g = graph(3, {{1, 2}, {3, 3}});
  CHECK(nu(g) == 2);
  CHECK(mu(g) == 3);
  CHECK(nu(LoopGraph(4)) == 0);
  CHECK(mu(LoopGraph(4)) == 0);
  const auto path = graph(3, {{1, 2}, {2, 3}});
  CHECK(nu(path) == 1);
  CHECK(mu(path) == 2);
  // A loop counts once toward nu but covers one vertex.
  const auto loops = graph(3, {{1, 1}, {2, 2}, {1, 2}});
  CHECK(nu(loops) == 2);
  CHECK(mu(loops) == 2);
}

TEST_CASE("loopless graphs have mu = 2 nu") {
  SplitMix64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    LoopGraph g(n);
    for (const auto& e : candidate_edges(n, false))
      if (rng.below(3) == 0) g.add_edge(e);
    CHECK(mu(g) == 2 * nu(g));
  }
}

TEST_CASE("matching DP agrees with subset enumeration for n <= 5") {
  for (int n = 1; n <= 4; ++n)
    for_each_graph(n, true, [](const LoopGraph& g) {
      const auto [bn, bm] = oracle::subset_matching_numbers(g);
      CHECK(nu(g) == bn);
      CHECK(mu(g) == bm);
    });
  SplitMix64 rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    LoopGraph g(5);
    for (const auto& e : candidate_edges(5, true))
      if (rng.below(2)) g.add_edge(e);
    const auto [bn, bm] = oracle::subset_matching_numbers(g);
    CHECK(nu(g) == bn);
    CHECK(mu(g) == bm);
  }
}

TEST_CASE("maximum matching witness") {
  const auto g = graph(3, {{1, 2}, {3, 3}});
  const auto m = max_matching_witness(g);
  CHECK(m == Matching{Edge{0, 1}, Edge{2, 2}});
  CHECK(max_matching_witness(graph(2, {{1, 1}, {1, 2}})) == Matching{Edge{0, 1}});
  CHECK(max_matching_witness(LoopGraph(3)).empty());
  SplitMix64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    LoopGraph g(n);
    for (const auto& e : candidate_edges(n, true))
      if (rng.below(4) == 0) g.add_edge(e);
    const auto w = max_matching_witness(g);
    CHECK(is_matching(w));
    CHECK(covered_vertices(w) == mu(g));
    for (const auto& e : w) CHECK(g.contains(e));
  }
}

TEST_CASE("dimension bound formulas") {
  CHECK(u_a(4, 2) == 3);
  CHECK(u_a(6, 4) == 10);
  CHECK(u_a(10, 4) == 17);
  CHECK(u_s(3, 2) == 3);
  CHECK(u_s(6, 3) == 7);
  CHECK(u_s(5, 4) == 10);
  CHECK(u_a(5, 0) == 0);
  CHECK(u_s(5, 0) == 0);
  CHECK_THROWS_AS(u_a(5, 3), DomainError);
  CHECK_THROWS_AS(u_a(4, 6), DomainError);
  CHECK_THROWS_AS(u_s(4, 5), DomainError);
}

TEST_CASE("graph enumeration") {
  CHECK(graph_count(2, false) == 2);
  CHECK(graph_count(2, true) == 8);
  CHECK(graph_count(3, false) == 8);
  CHECK(graph_count(6, false) == 32768);
  CHECK(graph_count(5, true) == 32768);
  CHECK(candidate_edges(4, false).size() == 6);
  CHECK(candidate_edges(4, true).size() == 10);
  std::uint64_t visited = 0;
  for_each_graph(3, true, [&](const LoopGraph& g) {
    CHECK(g == graph_from_index(3, true, visited));
    ++visited;
  });
  CHECK(visited == 64);
  CHECK_THROWS_AS(graph_count(8, false), DomainError);
}

TEST_CASE("exhaustive maxima equal the dimension bounds") {
  // The largest graph with matching parameter k has exactly u(n, k) edges.
  for (int n = 2; n <= 5; ++n) {
    for (bool loops : {false, true}) {
      std::vector<std::int64_t> best(n + 1, -1);
      for_each_graph(n, loops, [&](const LoopGraph& g) {
        best[mu(g)] = std::max(best[mu(g)], static_cast<std::int64_t>(g.size()));
      });
      for (int k = 0; k <= n; ++k) {
        if (loops) CHECK(best[k] == u_s(n, k));
        else if (k % 2 == 0 && k < n) CHECK(best[k] == u_a(n, k));
      }
    }
  }
}

TEST_CASE("graph text format") {
  const auto g = parse_graph("# comment\n1 2\n3\n");
  CHECK(g.order() == 3);
  CHECK(g == graph(3, {{1, 2}, {3, 3}}));
  CHECK(format_edges(g.edges()) == "{ {1,2} {3} }");
  CHECK(format_edge(Edge{0, 0}) == "{1}");
  CHECK(parse_graph(serialize_graph(g)) == g);
  const auto h = parse_graph("n 5\n2 1\n");
  CHECK(h.order() == 5);
  CHECK(h.contains(Edge{0, 1}));
  CHECK_THROWS_AS(parse_graph("1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n 2\n1 3\n"), ParseError);
}
