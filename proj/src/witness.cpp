#include "rankmatch/errors.hpp"
#include "rankmatch/theorem.hpp"

namespace rankmatch {

namespace {

LoopGraph graph_of_canonical(const AffineSpace& canonical) {
  LoopGraph g(static_cast<int>(canonical.order()));
  for (const auto& b : canonical.basis()) g.add_edge(folded(leading_cell(b)));
  return g;
}

// Visits the grid prod [0, sizes[i]) in lexicographic order (first coordinate
// slowest) until accept returns true.
bool search_grid(const std::vector<std::uint32_t>& sizes, std::vector<std::uint32_t>& point, std::uint64_t& visited,
                 const std::function<bool(const std::vector<std::uint32_t>&)>& accept) {
  point.assign(sizes.size(), 0);
  for (;;) {
    ++visited;
    if (accept(point)) return true;
    std::size_t pos = sizes.size();
    for (;;) {
      if (pos == 0) return false;
      --pos;
      if (++point[pos] < sizes[pos]) break;
      point[pos] = 0;
    }
  }
}

WitnessResult finish(const AffineSpace& canonical, WitnessResult w) {
  Matrix member = canonical.base();
  if (w.found)
    for (std::size_t i = 0; i < w.point.size(); ++i) member.add_scaled(canonical.basis()[w.selection.chosen[i]], w.point[i]);
  w.achieved_rank = rank(member);
  w.matrix = std::move(member);
  return w;
}

}  // namespace

WitnessResult witness_search_ws(const AffineSpace& s, std::uint64_t span_cap) {
  if (s.spec().modulus() < 3)
    throw DomainError("witness_search_ws: requires |F| >= 3 (the matching bound fails over GF(2))");
  check_weak_symmetry(s, span_cap);
  const auto canonical = canonicalize(s);
  const auto g = graph_of_canonical(canonical);
  WitnessResult w{false, {}, canonical.base(), 0, 0, 0, {}};
  w.selection = select_matching(canonical, max_matching_witness(g));
  w.mu = covered_vertices(w.selection.matching);
  const auto pencil = restrict_pencil(canonical, w.selection);
  // A grid side of delta_i + 1 > delta_i values suffices.
  std::vector<std::uint32_t> sizes;
  for (auto d : w.selection.deltas) sizes.push_back(static_cast<std::uint32_t>(d + 1));
  w.found = search_grid(sizes, w.point, w.search_size,
                        [&](const std::vector<std::uint32_t>& x) { return !det(pencil.at(x)).is_zero(); });
  return finish(canonical, std::move(w));
}

WitnessResult witness_search_alt(const AffineSpace& s) {
  if (s.kind() != SpaceKind::alternating)
    throw HypothesisViolation("witness_search_alt: space kind is " + std::string(to_string(s.kind())) +
                              ", expected alternating");
  if (!is_alternating(s.base()))
    throw HypothesisViolation("witness_search_alt: base matrix is not alternating", s.base().to_string());
  const auto canonical = canonicalize(s);
  const auto g = graph_of_canonical(canonical);
  WitnessResult w{false, {}, canonical.base(), 0, 0, 0, {}};
  w.selection = select_matching(canonical, max_matching_witness(g));
  w.mu = covered_vertices(w.selection.matching);
  const auto pencil = restrict_pencil(canonical, w.selection);
  const std::vector<std::uint32_t> sizes(w.selection.chosen.size(), 2);
  w.found = search_grid(sizes, w.point, w.search_size, [&](const std::vector<std::uint32_t>& x) {
    return !pfaffian_elimination(pencil.at(x)).is_zero();
  });
  return finish(canonical, std::move(w));
}

}  // namespace rankmatch
