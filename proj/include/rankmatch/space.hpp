#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rankmatch/graph.hpp"
#include "rankmatch/matrix.hpp"

namespace rankmatch {

// Declared structure of the linear part of an affine space.
enum class SpaceKind { weakly_symmetric, symmetric, alternating, general };

std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space_kind(std::string_view name);
bool satisfies_kind(const Matrix& m, SpaceKind kind);

// A cell (i, j) of the upper triangle, i <= j, 0-based.
struct Cell {
  int i = 0;
  int j = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Colexicographic order: compare j, then i.
std::strong_ordering colex_cmp(Cell a, Cell b) noexcept;
// 2^i + 2^j; increasing in colex order.
std::uint64_t colex_key(Cell c) noexcept;

// q(B): the colex-maximum nonzero cell with i <= j.
Cell leading_cell(const Matrix& b);
// The cell as a vertex set {i, j}.
Edge folded(Cell c) noexcept;

// S = base + span(basis). The base is an arbitrary n x n matrix; every basis
// element satisfies the declared kind's predicate.
class AffineSpace {
 public:
  AffineSpace(Matrix base, std::vector<Matrix> basis, SpaceKind kind);

  FieldSpec spec() const noexcept { return base_.spec(); }
  std::size_t order() const noexcept { return base_.rows(); }
  const Matrix& base() const noexcept { return base_; }
  const std::vector<Matrix>& basis() const noexcept { return basis_; }
  SpaceKind kind() const noexcept { return kind_; }

  // base + sum coeffs[r] * basis[r]
  Matrix member(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const AffineSpace&, const AffineSpace&) = default;

 private:
  Matrix base_;
  std::vector<Matrix> basis_;
  SpaceKind kind_;
};

// Rank of the basis (the affine dimension).
std::size_t dimension(const AffineSpace& s);

// Reduced basis with the same span: distinct leading cells in strictly
// decreasing colex order, unit leading entries, each leading cell zero in every
// other basis element. Dependent elements are dropped. Throws
// HypothesisViolation if some span element has a zero upper triangle but is
// nonzero (so it is not weakly symmetric).
AffineSpace canonicalize(const AffineSpace& s);

// G_S: the folded leading cells of the canonical basis.
LoopGraph leading_graph(const AffineSpace& s);

// p^d, saturating at UINT64_MAX.
std::uint64_t member_count(const AffineSpace& s);

// Visits base + sum c_r B_r over all coefficient vectors (odometer order,
// last coefficient fastest). Stops early when visit returns false.
void for_each_member(const AffineSpace& s, const std::function<bool(const Matrix&)>& visit);

// Every nonzero element of the linear span is weakly symmetric. Symmetric and
// alternating kinds are closed under addition; otherwise the span is enumerated
// when p^d <= cap, or accepted when the basis has pairwise disjoint supports.
// Throws HypothesisViolation (with the offending member) or TooLarge.
void check_weak_symmetry(const AffineSpace& s, std::uint64_t cap = 100'000);

struct MaxRankResult {
  std::size_t rank;
  Matrix member;  // first member attaining the rank
  std::uint64_t visited;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// rho(S) by enumerating all p^d members. Throws TooLarge if p^d > cap.
std::size_t max_rank_oracle(const AffineSpace& s, std::uint64_t cap = kDefaultOracleCap);
MaxRankResult max_rank_member(const AffineSpace& s, std::uint64_t cap = kDefaultOracleCap);

// Upper bound on the rank of every member: the term rank of the union support
// of base and basis, rounded down to even for alternating spaces with an
// alternating base.
std::size_t term_rank_bound(const AffineSpace& s);

// For a matching of G_S, the canonical basis elements whose folded leading
// cells are the matching edges.
struct MatchingSelection {
  Matching matching;
  std::vector<std::size_t> chosen;  // basis index per matching edge
  std::vector<int> deltas;          // |edge| per matching edge
};

// `canonical` must be the output of canonicalize().
MatchingSelection select_matching(const AffineSpace& canonical, const Matching& m);

// Extremal constructions attaining the dimension bounds at max rank k.
enum class ExtremalKind { u1a, u2a, u1s, u2s };

std::string_view to_string(ExtremalKind kind);
bool extremal_valid(ExtremalKind kind, int n, int k);
std::int64_t extremal_dimension(ExtremalKind kind, int n, int k);
AffineSpace extremal(ExtremalKind kind, FieldSpec spec, int n, int k);
Matrix extremal_max_rank_member(ExtremalKind kind, FieldSpec spec, int n, int k);

// S' = { [[0, X], [X, 0]] : X in S } over GF(2), order 2n, alternating.
AffineSpace double_symmetric(const AffineSpace& s);

enum class RandomKind { symmetric, alternating, disjoint_support_ws };
// uniform: entries uniform in GF(p). structured: a random matrix of the same
// structure as the linear part (symmetric / alternating / weakly symmetric).
enum class BaseMode { uniform, structured, zero };

std::string_view to_string(RandomKind kind);
std::size_t ambient_dimension(RandomKind kind, int n);
AffineSpace random_space(RandomKind kind, int n, std::size_t d, FieldSpec spec, std::uint64_t seed,
                         BaseMode base = BaseMode::uniform);

// Text format: "field p", "n N", "kind K", "dim d", then "A" and n rows, then
// "B r" blocks for r = 1..d. '#' comments and blank lines are ignored.
AffineSpace parse_space(std::string_view text);
std::string serialize_space(const AffineSpace& s);

}  // namespace rankmatch
