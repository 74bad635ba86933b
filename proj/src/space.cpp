#include "rankmatch/space.hpp"

#include <algorithm>
#include <limits>

#include "rankmatch/errors.hpp"

namespace rankmatch {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::weakly_symmetric: return "weakly_symmetric";
    case SpaceKind::symmetric: return "symmetric";
    case SpaceKind::alternating: return "alternating";
    case SpaceKind::general: return "general";
  }
  return "?";
}

std::optional<SpaceKind> parse_space_kind(std::string_view name) {
  for (auto k : {SpaceKind::weakly_symmetric, SpaceKind::symmetric, SpaceKind::alternating, SpaceKind::general})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

bool satisfies_kind(const Matrix& m, SpaceKind kind) {
  switch (kind) {
    case SpaceKind::weakly_symmetric: return is_weakly_symmetric(m);
    case SpaceKind::symmetric: return is_symmetric(m);
    case SpaceKind::alternating: return is_alternating(m);
    case SpaceKind::general: return true;
  }
  return false;
}

std::strong_ordering colex_cmp(Cell a, Cell b) noexcept {
  if (auto c = a.j <=> b.j; c != 0) return c;
  return a.i <=> b.i;
}

std::uint64_t colex_key(Cell c) noexcept { return (std::uint64_t{1} << c.i) + (std::uint64_t{1} << c.j); }

Cell leading_cell(const Matrix& b) {
  if (!b.is_square()) throw DomainError("leading_cell: matrix is not square");
  const int n = static_cast<int>(b.rows());
  for (int j = n - 1; j >= 0; --j)
    for (int i = j; i >= 0; --i)
      if (b(i, j) != 0) return Cell{i, j};
  if (b.is_zero()) throw DomainError("leading_cell: zero matrix");
  throw HypothesisViolation("leading_cell: nonzero matrix with zero upper triangle is not weakly symmetric",
                            b.to_string());
}

Edge folded(Cell c) noexcept { return Edge::make(c.i, c.j); }

AffineSpace::AffineSpace(Matrix base, std::vector<Matrix> basis, SpaceKind kind)
    : base_(std::move(base)), basis_(std::move(basis)), kind_(kind) {
  if (!base_.is_square()) throw DomainError("affine space: base matrix is not square");
  if (base_.rows() == 0) throw DomainError("affine space: order must be positive");
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const auto& b = basis_[r];
    if (b.spec() != base_.spec()) throw FieldMismatch("affine space: basis element " + std::to_string(r + 1) + " over a different field");
    if (b.rows() != base_.rows() || b.cols() != base_.cols())
      throw DomainError("affine space: basis element " + std::to_string(r + 1) + " has the wrong shape");
    if (!satisfies_kind(b, kind_))
      throw DomainError("affine space: basis element " + std::to_string(r + 1) + " is not " +
                        std::string(to_string(kind_)));
  }
}

Matrix AffineSpace::member(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != basis_.size()) throw DomainError("member: coefficient count differs from basis size");
  Matrix out = base_;
  for (std::size_t r = 0; r < coeffs.size(); ++r) out.add_scaled(basis_[r], coeffs[r]);
  return out;
}

namespace {

// Column order for canonical elimination: upper cells in decreasing colex
// order, then the strictly lower cells.
std::vector<std::pair<int, int>> elimination_columns(int n) {
  std::vector<std::pair<int, int>> cols;
  for (int j = n - 1; j >= 0; --j)
    for (int i = j; i >= 0; --i) cols.emplace_back(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) cols.emplace_back(i, j);
  return cols;
}

Matrix coefficient_matrix(const AffineSpace& s) {
  const auto n = s.order();
  Matrix m(s.spec(), s.basis().size(), n * n);
  for (std::size_t r = 0; r < s.basis().size(); ++r)
    for (std::size_t k = 0; k < n * n; ++k) m.set(r, k, s.basis()[r].values()[k]);
  return m;
}

}  // namespace

std::size_t dimension(const AffineSpace& s) { return rank(coefficient_matrix(s)); }

AffineSpace canonicalize(const AffineSpace& s) {
  const auto f = s.spec();
  const int n = static_cast<int>(s.order());
  const auto cols = elimination_columns(n);
  const std::size_t upper = static_cast<std::size_t>(n) * (n + 1) / 2;
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& b : s.basis()) {
    std::vector<std::uint32_t> v(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) v[c] = b(cols[c].first, cols[c].second);
    rows.push_back(std::move(v));
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    if (c >= upper) {
      Matrix offender(f, n, n);
      for (std::size_t k = 0; k < cols.size(); ++k) offender.set(cols[k].first, cols[k].second, rows[piv][k]);
      throw HypothesisViolation("span contains a nonzero matrix with zero upper triangle (not weakly symmetric)",
                                offender.to_string());
    }
    std::swap(rows[piv], rows[r]);
    const auto inv = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, inv);
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      const auto factor = rows[o][c];
      for (std::size_t k = 0; k < cols.size(); ++k) rows[o][k] = f.sub(rows[o][k], f.mul(factor, rows[r][k]));
    }
    ++r;
  }
  std::vector<Matrix> basis;
  for (std::size_t k = 0; k < r; ++k) {
    Matrix b(f, n, n);
    for (std::size_t c = 0; c < cols.size(); ++c) b.set(cols[c].first, cols[c].second, rows[k][c]);
    basis.push_back(std::move(b));
  }
  return AffineSpace(s.base(), std::move(basis), s.kind());
}

LoopGraph leading_graph(const AffineSpace& s) {
  const auto c = canonicalize(s);
  LoopGraph g(static_cast<int>(s.order()));
  for (const auto& b : c.basis()) g.add_edge(folded(leading_cell(b)));
  return g;
}

std::uint64_t member_count(const AffineSpace& s) {
  std::uint64_t total = 1;
  const std::uint64_t p = s.spec().modulus();
  for (std::size_t r = 0; r < s.basis().size(); ++r) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

void for_each_member(const AffineSpace& s, const std::function<bool(const Matrix&)>& visit) {
  const auto p = s.spec().modulus();
  const auto d = s.basis().size();
  std::vector<std::uint32_t> digits(d, 0);
  Matrix current = s.base();
  for (;;) {
    if (!visit(current)) return;
    std::size_t pos = d;
    for (;;) {
      if (pos == 0) return;
      --pos;
      // Adding B once more; at the wrap the coefficient returns to p = 0.
      current += s.basis()[pos];
      if (++digits[pos] < p) break;
      digits[pos] = 0;
    }
  }
}

namespace {

bool disjoint_supports(const std::vector<Matrix>& basis) {
  if (basis.empty()) return true;
  std::vector<bool> used(basis.front().values().size(), false);
  for (const auto& b : basis) {
    const auto v = b.values();
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (used[k]) return false;
      used[k] = true;
    }
  }
  return true;
}

}  // namespace

void check_weak_symmetry(const AffineSpace& s, std::uint64_t cap) {
  if (s.kind() == SpaceKind::symmetric || s.kind() == SpaceKind::alternating) return;
  for (std::size_t r = 0; r < s.basis().size(); ++r)
    if (!is_weakly_symmetric(s.basis()[r]))
      throw HypothesisViolation("basis element " + std::to_string(r + 1) + " is not weakly symmetric",
                                s.basis()[r].to_string());
  if (disjoint_supports(s.basis())) return;
  if (member_count(s) > cap)
    throw TooLarge("cannot certify weak symmetry of the span: p^d exceeds " + std::to_string(cap));
  AffineSpace linear(Matrix(s.spec(), s.order(), s.order()), s.basis(), SpaceKind::general);
  for_each_member(linear, [](const Matrix& m) {
    if (!is_weakly_symmetric(m))
      throw HypothesisViolation("span member is not weakly symmetric", m.to_string());
    return true;
  });
}

namespace {

// A linearly independent subset of the basis with the same span.
std::vector<Matrix> independent_basis(const AffineSpace& s) {
  std::vector<Matrix> kept;
  for (const auto& b : s.basis()) {
    kept.push_back(b);
    if (dimension(AffineSpace(s.base(), kept, SpaceKind::general)) < kept.size()) kept.pop_back();
  }
  return kept;
}

}  // namespace

MaxRankResult max_rank_member(const AffineSpace& s, std::uint64_t cap) {
  const AffineSpace reduced(s.base(), independent_basis(s), SpaceKind::general);
  const auto count = member_count(reduced);
  if (count > cap)
    throw TooLarge("max_rank_oracle: " + std::to_string(reduced.spec().modulus()) + "^" +
                   std::to_string(reduced.basis().size()) + " members exceed cap " + std::to_string(cap));
  MaxRankResult best{0, s.base(), 0};
  bool first = true;
  const auto n = s.order();
  for_each_member(reduced, [&](const Matrix& m) {
    ++best.visited;
    const auto r = rank(m);
    if (first || r > best.rank) {
      best.rank = r;
      best.member = m;
      first = false;
    }
    return best.rank < n;
  });
  return best;
}

std::size_t max_rank_oracle(const AffineSpace& s, std::uint64_t cap) { return max_rank_member(s, cap).rank; }

std::size_t term_rank_bound(const AffineSpace& s) {
  const auto n = s.order();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool nonzero = s.base()(i, j) != 0;
      for (const auto& b : s.basis()) nonzero = nonzero || b(i, j) != 0;
      if (nonzero) adj[i].push_back(j);
    }
  // Kuhn's augmenting paths on the row/column support graph.
  std::vector<std::ptrdiff_t> match_col(n, -1);
  std::vector<bool> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t row) {
    for (auto col : adj[row]) {
      if (seen[col]) continue;
      seen[col] = true;
      if (match_col[col] < 0 || augment(static_cast<std::size_t>(match_col[col]))) {
        match_col[col] = static_cast<std::ptrdiff_t>(row);
        return true;
      }
    }
    return false;
  };
  std::size_t matched = 0;
  for (std::size_t row = 0; row < n; ++row) {
    seen.assign(n, false);
    if (augment(row)) ++matched;
  }
  if (s.kind() == SpaceKind::alternating && is_alternating(s.base())) matched -= matched % 2;
  return matched;
}

MatchingSelection select_matching(const AffineSpace& canonical, const Matching& m) {
  if (!is_matching(m)) throw DomainError("select_matching: edges are not pairwise disjoint");
  MatchingSelection sel;
  sel.matching = m;
  for (const auto& e : m) {
    bool found = false;
    for (std::size_t r = 0; r < canonical.basis().size(); ++r) {
      if (folded(leading_cell(canonical.basis()[r])) == e) {
        sel.chosen.push_back(r);
        sel.deltas.push_back(e.size());
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("select_matching: edge " + format_edge(e) + " is not a leading cell of the basis");
  }
  return sel;
}

}  // namespace rankmatch
