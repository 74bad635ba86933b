#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rankmatch/polynomial.hpp"
#include "rankmatch/space.hpp"

namespace rankmatch {

// The family base + sum_i x_i generators[i] of square matrices of one order,
// usually an affine space restricted to the vertex set of a matching.
struct Pencil {
  Matrix base;
  std::vector<Matrix> generators;
  std::vector<std::size_t> vertices;  // parent rows/cols kept, 0-based

  std::size_t order() const noexcept { return base.rows(); }
  Matrix at(std::span<const std::uint32_t> point) const;
};

// Principal submatrices on the matching's vertex set of the base and of the
// selected basis elements (in matching order).
Pencil restrict_pencil(const AffineSpace& canonical, const MatchingSelection& sel);
Pencil restrict_pencil(const Matrix& base, const std::vector<Matrix>& generators, const Matching& m);

inline constexpr std::size_t kMaxDetPolynomialOrder = 7;
inline constexpr std::size_t kMaxPfPolynomialOrder = 10;

// det(base + sum x_i B_i) expanded exactly. The Leibniz sum is accumulated
// row by row over sets of used columns, so permutations sharing a prefix share
// the partial product.
Polynomial det_polynomial(const Pencil& pencil);
// pf(base + sum x_i B_i), expanded along the smallest free vertex.
Polynomial pf_polynomial(const Pencil& pencil);

// Coefficient of prod x_i^{delta_i} in det_polynomial. Requires sum delta_i to
// equal the pencil order.
FieldElem coeff_check_det(const Pencil& pencil, std::span<const int> deltas);
FieldElem coeff_check_det(const AffineSpace& canonical, const MatchingSelection& sel);

struct PfCoefficient {
  FieldElem coefficient;               // of x_1 ... x_t after sorting
  FieldElem closed_form;               // matching sign of M0 times prod B_j(alpha_j, beta_j)
  std::vector<std::size_t> order;      // order[j] = original generator index placed at position j
};

// Sorts the generators so their leading cells increase in colex order, then
// extracts the coefficient of x_1 ... x_t of the Pfaffian polynomial. The
// leading cells must form a perfect matching of the pencil's vertex set.
PfCoefficient coeff_check_pf(const Pencil& pencil);
PfCoefficient coeff_check_pf(const AffineSpace& canonical, const MatchingSelection& sel);

struct WitnessResult {
  bool found = false;
  std::vector<std::uint32_t> point;  // coefficient per selected generator
  Matrix matrix;                     // member of the full space
  std::size_t achieved_rank = 0;
  std::uint64_t search_size = 0;     // grid points evaluated
  int mu = 0;                        // mu(G_S)
  MatchingSelection selection;
};

// Weakly symmetric spaces over GF(p), p >= 3: a mu-witness matching, then the
// grid prod {0, .., delta_i} in lexicographic order until the restricted
// determinant is nonzero. span_cap bounds the weak-symmetry certification.
WitnessResult witness_search_ws(const AffineSpace& s, std::uint64_t span_cap = 100'000);
// Alternating spaces (alternating base) over any GF(p): the grid {0,1}^t with
// the restricted Pfaffian.
WitnessResult witness_search_alt(const AffineSpace& s);

}  // namespace rankmatch
