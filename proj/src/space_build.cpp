#include <algorithm>

#include "rankmatch/errors.hpp"
#include "rankmatch/rng.hpp"
#include "rankmatch/space.hpp"

namespace rankmatch {

namespace {

std::int64_t choose2(std::int64_t m) { return m * (m - 1) / 2; }

// E_ij + E_ji (E_ii on the diagonal) or E_ij - E_ji.
Matrix cell_generator(FieldSpec f, int n, Cell c, bool alternating, std::uint32_t upper = 1,
                      std::uint32_t lower = 1) {
  Matrix m(f, n, n);
  m.set(c.i, c.j, upper);
  if (c.i != c.j) m.set(c.j, c.i, alternating ? f.neg(upper) : lower);
  return m;
}

// Upper cells in increasing colex order.
std::vector<Cell> upper_cells(int n, bool diagonal) {
  std::vector<Cell> out;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i <= j; ++i)
      if (i < j || diagonal) out.push_back({i, j});
  return out;
}

void require_extremal(ExtremalKind kind, int n, int k) {
  if (!extremal_valid(kind, n, k))
    throw DomainError(std::string(to_string(kind)) + ": invalid (n, k) = (" + std::to_string(n) + ", " +
                      std::to_string(k) + ")");
}

}  // namespace

std::string_view to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::u1a: return "u1a";
    case ExtremalKind::u2a: return "u2a";
    case ExtremalKind::u1s: return "u1s";
    case ExtremalKind::u2s: return "u2s";
  }
  return "?";
}

bool extremal_valid(ExtremalKind kind, int n, int k) {
  if (n < 1 || k < 0 || k > n) return false;
  switch (kind) {
    case ExtremalKind::u1a: return k % 2 == 0 && k < n;  // the (k+1)-corner must fit
    case ExtremalKind::u2a: return k % 2 == 0;
    case ExtremalKind::u1s:
    case ExtremalKind::u2s: return true;
  }
  return false;
}

std::int64_t extremal_dimension(ExtremalKind kind, int n, int k) {
  require_extremal(kind, n, k);
  const std::int64_t t = k / 2;
  switch (kind) {
    case ExtremalKind::u1a: return choose2(k + 1);
    case ExtremalKind::u2a: return t * n - choose2(t + 1);
    case ExtremalKind::u1s: return choose2(k + 1);
    case ExtremalKind::u2s: return t * n - choose2(t) + (k % 2);
  }
  return 0;
}

AffineSpace extremal(ExtremalKind kind, FieldSpec f, int n, int k) {
  require_extremal(kind, n, k);
  const int t = k / 2;
  const bool alt = kind == ExtremalKind::u1a || kind == ExtremalKind::u2a;
  std::vector<Matrix> basis;
  for (const auto& c : upper_cells(n, !alt)) {
    bool allowed = false;
    switch (kind) {
      case ExtremalKind::u1a: allowed = c.j < k + 1; break;
      case ExtremalKind::u2a: allowed = c.i < t; break;
      case ExtremalKind::u1s: allowed = c.j < k; break;
      case ExtremalKind::u2s: allowed = c.i < t || (k % 2 == 1 && c.i == t && c.j == t); break;
    }
    if (allowed) basis.push_back(cell_generator(f, n, c, alt));
  }
  return AffineSpace(Matrix(f, n, n), std::move(basis), alt ? SpaceKind::alternating : SpaceKind::symmetric);
}

Matrix extremal_max_rank_member(ExtremalKind kind, FieldSpec f, int n, int k) {
  require_extremal(kind, n, k);
  const int t = k / 2;
  Matrix m(f, n, n);
  switch (kind) {
    case ExtremalKind::u1a:
      for (int r = 0; r < t; ++r) {
        m.set(2 * r, 2 * r + 1, 1);
        m.set(2 * r + 1, 2 * r, -1);
      }
      break;
    case ExtremalKind::u1s:
      for (int i = 0; i < k; ++i) m.set(i, i, 1);
      break;
    case ExtremalKind::u2a:
      for (int i = 0; i < t; ++i) {
        m.set(i, t + i, 1);
        m.set(t + i, i, -1);
      }
      break;
    case ExtremalKind::u2s:
      if (k % 2 == 0) {
        for (int i = 0; i < t; ++i) {
          m.set(i, t + i, 1);
          m.set(t + i, i, 1);
        }
      } else {
        // The free diagonal cell (t, t) takes one vertex, so the hub rows pair
        // with the columns after it.
        m.set(t, t, 1);
        for (int i = 0; i < t; ++i) {
          m.set(i, t + 1 + i, 1);
          m.set(t + 1 + i, i, 1);
        }
      }
      break;
  }
  return m;
}

AffineSpace double_symmetric(const AffineSpace& s) {
  if (s.spec().modulus() != 2) throw DomainError("double_symmetric: requires GF(2)");
  if (s.kind() != SpaceKind::symmetric && s.kind() != SpaceKind::weakly_symmetric)
    throw DomainError("double_symmetric: requires a symmetric space");
  auto lift = [&](const Matrix& x) {
    if (!is_symmetric(x)) throw DomainError("double_symmetric: matrix is not symmetric");
    const auto n = s.order();
    Matrix out(s.spec(), 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        out.set(i, j + n, x(i, j));
        out.set(i + n, j, x(i, j));
      }
    return out;
  };
  std::vector<Matrix> basis;
  for (const auto& b : s.basis()) basis.push_back(lift(b));
  return AffineSpace(lift(s.base()), std::move(basis), SpaceKind::alternating);
}

std::string_view to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::symmetric: return "symmetric";
    case RandomKind::alternating: return "alternating";
    case RandomKind::disjoint_support_ws: return "disjoint_support_ws";
  }
  return "?";
}

std::size_t ambient_dimension(RandomKind kind, int n) {
  const auto m = static_cast<std::size_t>(n);
  return kind == RandomKind::alternating ? m * (m - 1) / 2 : m * (m + 1) / 2;
}

AffineSpace random_space(RandomKind kind, int n, std::size_t d, FieldSpec f, std::uint64_t seed, BaseMode base_mode) {
  if (n < 1) throw DomainError("random_space: n must be positive");
  if (d > ambient_dimension(kind, n))
    throw DomainError("random_space: d = " + std::to_string(d) + " exceeds the ambient dimension " +
                      std::to_string(ambient_dimension(kind, n)));
  SplitMix64 rng(seed);
  const auto p = f.modulus();
  auto nonzero = [&] { return static_cast<std::uint32_t>(1 + rng.below(p - 1)); };
  const bool alt = kind == RandomKind::alternating;
  const auto cells = upper_cells(n, !alt);

  std::vector<Matrix> basis;
  if (kind == RandomKind::disjoint_support_ws) {
    std::vector<Cell> pool = cells;
    for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[rng.below(i)]);
    const auto used = d == 0 ? 0 : static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(d), static_cast<std::int64_t>(pool.size())));
    std::vector<Matrix> groups(d, Matrix(f, n, n));
    for (std::size_t c = 0; c < used; ++c) {
      auto& g = groups[c < d ? c : rng.below(d)];
      const auto upper = nonzero();
      const auto lower = nonzero();
      g += cell_generator(f, n, pool[c], false, upper, lower);
    }
    basis = std::move(groups);
  } else {
    // Rows of a uniformly random full-rank d x N coefficient matrix.
    Matrix coeff(f, d, cells.size());
    do {
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < cells.size(); ++c) coeff.set(r, c, static_cast<std::int64_t>(rng.below(p)));
    } while (rank(coeff) < d);
    for (std::size_t r = 0; r < d; ++r) {
      Matrix b(f, n, n);
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (coeff(r, c) != 0) b.add_scaled(cell_generator(f, n, cells[c], alt), coeff(r, c));
      basis.push_back(std::move(b));
    }
  }

  Matrix base(f, n, n);
  switch (base_mode) {
    case BaseMode::zero: break;
    case BaseMode::uniform:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) base.set(i, j, static_cast<std::int64_t>(rng.below(p)));
      break;
    case BaseMode::structured:
      for (const auto& c : cells) {
        const auto upper = static_cast<std::uint32_t>(rng.below(p));
        std::uint32_t lower = upper;
        if (kind == RandomKind::disjoint_support_ws && upper != 0 && c.i != c.j) lower = nonzero();
        base += cell_generator(f, n, c, alt, upper, lower);
      }
      break;
  }
  const auto space_kind = kind == RandomKind::symmetric     ? SpaceKind::symmetric
                          : kind == RandomKind::alternating ? SpaceKind::alternating
                                                            : SpaceKind::weakly_symmetric;
  return AffineSpace(std::move(base), std::move(basis), space_kind);
}

}  // namespace rankmatch
