#include "rankmatch/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "rankmatch/errors.hpp"

namespace rankmatch {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxGraphOrder)
    throw DomainError("graph order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxGraphOrder) + "]");
}

// best[mask] = maximum weight of a matching using only vertices in mask, where
// an edge weighs 1 (nu) or its vertex count (mu). Each state branches on its
// lowest vertex: leave it uncovered, or cover it with an edge inside mask.
std::vector<int> matching_table(const LoopGraph& g, bool by_vertices) {
  const int n = g.order();
  std::vector<std::vector<Edge>> incident(n);
  for (const auto& e : g.edges()) incident[e.a].push_back(e);
  std::vector<int> best(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask < best.size(); ++mask) {
    const int low = std::countr_zero(mask);
    const std::uint32_t rest = mask & (mask - 1);
    int value = best[rest];
    for (const auto& e : incident[low]) {
      const auto em = e.mask();
      if ((em & mask) != em) continue;
      value = std::max(value, (by_vertices ? e.size() : 1) + best[mask & ~em]);
    }
    best[mask] = value;
  }
  return best;
}

std::uint32_t full_mask(int n) { return n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1); }

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

}  // namespace

LoopGraph::LoopGraph(int n) : n_(n) { check_order(n); }

LoopGraph::LoopGraph(int n, std::vector<Edge> edges) : n_(n) {
  check_order(n);
  for (const auto& e : edges) add_edge(e);
}

bool LoopGraph::has_loops() const noexcept {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

void LoopGraph::add_edge(Edge e) {
  e = Edge::make(e.a, e.b);
  if (e.a < 0 || e.b >= n_)
    throw DomainError("edge " + format_edge(e) + " outside vertex set [" + std::to_string(n_) + "]");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

bool LoopGraph::contains(Edge e) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge::make(e.a, e.b));
}

int nu(const LoopGraph& g) { return matching_table(g, false).back(); }

int mu(const LoopGraph& g) { return matching_table(g, true).back(); }

Matching max_matching_witness(const LoopGraph& g) {
  const auto best = matching_table(g, true);
  std::uint32_t avail = full_mask(g.order());
  int target = best[avail];
  int last_min = -1;
  Matching out;
  // The smallest edge of any later choice has a larger minimum vertex, so the
  // remaining optimum over edges after e is best[] restricted to vertices > e.a.
  while (target > 0) {
    bool picked = false;
    for (const auto& e : g.edges()) {
      if (e.a <= last_min) continue;
      const auto em = e.mask();
      if ((em & avail) != em) continue;
      const std::uint32_t above = full_mask(g.order()) & ~full_mask(e.a + 1);
      if (e.size() + best[(avail & ~em) & above] == target) {
        out.push_back(e);
        target -= e.size();
        avail = (avail & ~em) & above;
        last_min = e.a;
        picked = true;
        break;
      }
    }
    if (!picked) throw Error("max_matching_witness: inconsistent matching table");
  }
  return out;
}

bool is_matching(const Matching& m) {
  std::uint32_t seen = 0;
  for (const auto& e : m) {
    if (seen & e.mask()) return false;
    seen |= e.mask();
  }
  return true;
}

int covered_vertices(const Matching& m) {
  int total = 0;
  for (const auto& e : m) total += e.size();
  return total;
}

std::int64_t u_a(int n, int k) {
  if (k < 0 || k > n) throw DomainError("u_a: need 0 <= k <= n");
  if (k % 2 != 0) throw DomainError("u_a: k must be even");
  const std::int64_t t = k / 2;
  return std::max(choose2(2 * t + 1), t * n - choose2(t + 1));
}

std::int64_t u_s(int n, int k) {
  if (k < 0 || k > n) throw DomainError("u_s: need 0 <= k <= n");
  const std::int64_t t = k / 2;
  if (k % 2 == 0) return std::max(choose2(2 * t + 1), t * n - choose2(t));
  return std::max(choose2(2 * t + 2), t * n - choose2(t) + 1);
}

std::vector<Edge> candidate_edges(int n, bool loops) {
  check_order(n);
  std::vector<Edge> out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      if (i < j || loops) out.push_back(Edge::make(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t graph_count(int n, bool loops) {
  const int limit = loops ? kMaxEnumerateLoops : kMaxEnumerateLoopless;
  if (n < 0 || n > limit)
    throw DomainError("enumerate_graphs: n = " + std::to_string(n) + " exceeds " + std::to_string(limit) +
                      (loops ? " (with loops)" : " (loopless)"));
  return std::uint64_t{1} << candidate_edges(n, loops).size();
}

LoopGraph graph_from_index(int n, bool loops, std::uint64_t index) {
  const auto cand = candidate_edges(n, loops);
  LoopGraph g(n);
  for (std::size_t b = 0; b < cand.size(); ++b)
    if ((index >> b) & 1) g.add_edge(cand[b]);
  return g;
}

void for_each_graph(int n, bool loops, const std::function<void(const LoopGraph&)>& visit) {
  const auto count = graph_count(n, loops);
  const auto cand = candidate_edges(n, loops);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < cand.size(); ++b)
      if ((index >> b) & 1) edges.push_back(cand[b]);
    visit(LoopGraph(n, std::move(edges)));
  }
}

std::string format_edge(Edge e) {
  if (e.is_loop()) return "{" + std::to_string(e.a + 1) + "}";
  return "{" + std::to_string(e.a + 1) + "," + std::to_string(e.b + 1) + "}";
}

std::string format_edges(const std::vector<Edge>& edges) {
  std::string out = "{ ";
  for (const auto& e : edges) out += format_edge(e) + " ";
  return out + "}";
}

LoopGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<std::pair<std::size_t, std::vector<long>>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "n") {
      if (n >= 0 || !rows.empty()) throw ParseError(lineno, "'n' header must come first");
      if (!(ls >> n) || n < 0) throw ParseError(lineno, "expected vertex count after 'n'");
      continue;
    }
    std::vector<long> verts;
    try {
      std::size_t used = 0;
      verts.push_back(std::stol(first, &used));
      if (used != first.size()) throw ParseError(lineno, "bad vertex '" + first + "'");
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "bad vertex '" + first + "'");
    }
    long v;
    while (ls >> v) verts.push_back(v);
    if (!ls.eof()) throw ParseError(lineno, "bad vertex token");
    if (verts.size() > 2) throw ParseError(lineno, "an edge has one or two vertices");
    for (auto x : verts)
      if (x < 1) throw ParseError(lineno, "vertices are 1-based");
    rows.emplace_back(lineno, std::move(verts));
  }
  if (n < 0) {
    n = 0;
    for (const auto& [_, verts] : rows)
      for (auto x : verts) n = std::max<int>(n, static_cast<int>(x));
  }
  if (n > kMaxGraphOrder) throw ParseError(0, "graph order exceeds " + std::to_string(kMaxGraphOrder));
  LoopGraph g(n);
  for (const auto& [ln, verts] : rows) {
    for (auto x : verts)
      if (x > n) throw ParseError(ln, "vertex " + std::to_string(x) + " exceeds n = " + std::to_string(n));
    const int a = static_cast<int>(verts[0]) - 1;
    const int b = static_cast<int>(verts.size() == 2 ? verts[1] : verts[0]) - 1;
    if (verts.size() == 2 && a == b) throw ParseError(ln, "write a loop as a single vertex");
    g.add_edge(Edge::make(a, b));
  }
  return g;
}

std::string serialize_graph(const LoopGraph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.a + 1);
    if (!e.is_loop()) out += " " + std::to_string(e.b + 1);
    out += "\n";
  }
  return out;
}

}  // namespace rankmatch
