#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rankmatch {

// An edge of the complete graph with loops: {a, b} with a <= b, a loop when
// a == b. 0-based. The defaulted ordering is the lexicographic order on the
// sorted vertex lists ({1} < {1,2} < {1,3} < {2}).
struct Edge {
  int a = 0;
  int b = 0;

  static Edge make(int u, int v) { return u <= v ? Edge{u, v} : Edge{v, u}; }
  static Edge loop(int u) { return Edge{u, u}; }

  bool is_loop() const noexcept { return a == b; }
  int size() const noexcept { return is_loop() ? 1 : 2; }
  std::uint32_t mask() const noexcept { return (1u << a) | (1u << b); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;

inline constexpr int kMaxGraphOrder = 20;

class LoopGraph {
 public:
  explicit LoopGraph(int n = 0);
  LoopGraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool has_loops() const noexcept;

  void add_edge(Edge e);
  bool contains(Edge e) const;

  friend bool operator==(const LoopGraph&, const LoopGraph&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;  // sorted, unique
};

// Maximum number of edges in a matching (a loop counts once).
int nu(const LoopGraph& g);
// Maximum number of vertices covered by a matching.
int mu(const LoopGraph& g);
// A matching attaining mu(g); among those, the lexicographically smallest
// sorted edge list.
Matching max_matching_witness(const LoopGraph& g);

bool is_matching(const Matching& m);
int covered_vertices(const Matching& m);

// Erdos-Gallai bound for loopless graphs with mu = k (k even).
std::int64_t u_a(int n, int k);
// Loop-graph analogue; any 0 <= k <= n.
std::int64_t u_s(int n, int k);

// Every subset of K_n (loops = false) or of K_n with loops, indexed by a
// bitmask over candidate_edges(n, loops).
std::vector<Edge> candidate_edges(int n, bool loops);
std::uint64_t graph_count(int n, bool loops);
LoopGraph graph_from_index(int n, bool loops, std::uint64_t index);
void for_each_graph(int n, bool loops, const std::function<void(const LoopGraph&)>& visit);

inline constexpr int kMaxEnumerateLoopless = 7;
inline constexpr int kMaxEnumerateLoops = 6;

// "{1,2}" / "{3}" with 1-based vertices.
std::string format_edge(Edge e);
// "{ {1,2} {3} }"
std::string format_edges(const std::vector<Edge>& edges);
// Line-oriented graph literal: optional "n N" header, then "i j" or "i" per line.
LoopGraph parse_graph(std::string_view text);
std::string serialize_graph(const LoopGraph& g);

}  // namespace rankmatch
