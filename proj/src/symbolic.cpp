#include <algorithm>
#include <bit>

#include "rankmatch/errors.hpp"
#include "rankmatch/theorem.hpp"

namespace rankmatch {

Matrix Pencil::at(std::span<const std::uint32_t> point) const {
  if (point.size() != generators.size()) throw DomainError("pencil: point dimension differs from generator count");
  Matrix m = base;
  for (std::size_t i = 0; i < point.size(); ++i) m.add_scaled(generators[i], point[i]);
  return m;
}

Pencil restrict_pencil(const Matrix& base, const std::vector<Matrix>& generators, const Matching& m) {
  if (!is_matching(m)) throw DomainError("restrict_pencil: edges are not pairwise disjoint");
  std::vector<std::size_t> verts;
  for (const auto& e : m) {
    verts.push_back(static_cast<std::size_t>(e.a));
    if (!e.is_loop()) verts.push_back(static_cast<std::size_t>(e.b));
  }
  std::sort(verts.begin(), verts.end());
  Pencil out{principal_submatrix(base, verts), {}, verts};
  for (const auto& g : generators) out.generators.push_back(principal_submatrix(g, verts));
  return out;
}

Pencil restrict_pencil(const AffineSpace& canonical, const MatchingSelection& sel) {
  std::vector<Matrix> gens;
  for (auto r : sel.chosen) gens.push_back(canonical.basis().at(r));
  return restrict_pencil(canonical.base(), gens, sel.matching);
}

namespace {

std::vector<Polynomial> entry_polynomials(const Pencil& pencil) {
  const auto m = pencil.order();
  const auto t = pencil.generators.size();
  const auto f = pencil.base.spec();
  std::vector<Polynomial> entries;
  entries.reserve(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Polynomial e = Polynomial::constant(f, t, pencil.base(r, c));
      for (std::size_t i = 0; i < t; ++i) e.add_term(Monomial::variable(i), pencil.generators[i](r, c));
      entries.push_back(std::move(e));
    }
  return entries;
}

void require_pencil_shape(const Pencil& pencil) {
  if (!pencil.base.is_square()) throw DomainError("pencil: base is not square");
  for (const auto& g : pencil.generators)
    if (g.rows() != pencil.order() || g.cols() != pencil.order() || g.spec() != pencil.base.spec())
      throw DomainError("pencil: generator shape or field differs from base");
  if (pencil.generators.size() > Monomial::kMaxVars) throw DomainError("pencil: too many generators");
}

}  // namespace

Polynomial det_polynomial(const Pencil& pencil) {
  require_pencil_shape(pencil);
  const auto m = pencil.order();
  if (m > kMaxDetPolynomialOrder)
    throw TooLarge("det_polynomial: order " + std::to_string(m) + " exceeds " + std::to_string(kMaxDetPolynomialOrder));
  const auto f = pencil.base.spec();
  const auto t = pencil.generators.size();
  const auto entries = entry_polynomials(pencil);
  // partial[mask]: signed sum over injections of the first popcount(mask) rows
  // onto the columns in mask.
  std::vector<Polynomial> partial(std::size_t{1} << m, Polynomial(f, t));
  partial[0] = Polynomial::constant(f, t, 1);
  for (std::uint32_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t c = 0; c < m; ++c) {
      if (mask & (1u << c)) continue;
      const auto& e = entries[row * m + c];
      if (e.is_zero()) continue;
      // Inversions added: earlier rows sent to larger columns.
      const auto above = std::popcount(mask >> (c + 1));
      auto term = partial[mask] * e;
      if (above % 2) partial[mask | (1u << c)] -= term;
      else partial[mask | (1u << c)] += term;
    }
  }
  return partial.back();
}

Polynomial pf_polynomial(const Pencil& pencil) {
  require_pencil_shape(pencil);
  const auto m = pencil.order();
  if (m % 2 != 0) throw DomainError("pf_polynomial: odd order");
  if (m > kMaxPfPolynomialOrder)
    throw TooLarge("pf_polynomial: order " + std::to_string(m) + " exceeds " + std::to_string(kMaxPfPolynomialOrder));
  if (!is_alternating(pencil.base)) throw DomainError("pf_polynomial: base is not alternating");
  for (const auto& g : pencil.generators)
    if (!is_alternating(g)) throw DomainError("pf_polynomial: generator is not alternating");
  const auto f = pencil.base.spec();
  const auto t = pencil.generators.size();
  const auto entries = entry_polynomials(pencil);
  std::vector<Polynomial> pf(std::size_t{1} << m, Polynomial(f, t));
  pf[0] = Polynomial::constant(f, t, 1);
  for (std::uint32_t mask = 1; mask < pf.size(); ++mask) {
    if (std::popcount(mask) % 2) continue;
    const auto i = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & ~(1u << i);
    Polynomial total(f, t);
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!(rest & (1u << j))) continue;
      const auto& e = entries[i * m + j];
      const auto& sub = pf[rest & ~(1u << j)];
      if (e.is_zero() || sub.is_zero()) continue;
      const auto between = std::popcount(rest & ((1u << j) - 1));
      auto term = e * sub;
      if (between % 2) total -= term;
      else total += term;
    }
    pf[mask] = std::move(total);
  }
  return pf.back();
}

FieldElem coeff_check_det(const Pencil& pencil, std::span<const int> deltas) {
  if (deltas.size() != pencil.generators.size()) throw DomainError("coeff_check_det: one delta per generator");
  std::vector<unsigned> exps;
  std::size_t total = 0;
  for (auto d : deltas) {
    if (d < 1 || d > 2) throw DomainError("coeff_check_det: deltas must be 1 or 2");
    exps.push_back(static_cast<unsigned>(d));
    total += static_cast<std::size_t>(d);
  }
  if (total != pencil.order()) throw DomainError("coeff_check_det: the matching is not perfect on the restriction");
  const auto f = det_polynomial(pencil);
  return pencil.base.spec().elem(f.coefficient(exps));
}

FieldElem coeff_check_det(const AffineSpace& canonical, const MatchingSelection& sel) {
  return coeff_check_det(restrict_pencil(canonical, sel), sel.deltas);
}

PfCoefficient coeff_check_pf(const Pencil& pencil) {
  const auto t = pencil.generators.size();
  const auto f = pencil.base.spec();
  if (2 * t != pencil.order()) throw DomainError("coeff_check_pf: need t generators on order 2t");
  std::vector<Cell> lead;
  for (const auto& g : pencil.generators) lead.push_back(leading_cell(g));
  std::vector<std::size_t> order(t);
  for (std::size_t j = 0; j < t; ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return colex_cmp(lead[a], lead[b]) < 0; });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::uint32_t covered = 0;
  Pencil sorted{pencil.base, {}, pencil.vertices};
  std::uint32_t product = 1 % f.modulus();
  for (auto j : order) {
    const auto c = lead[j];
    if (c.i == c.j) throw DomainError("coeff_check_pf: leading cell on the diagonal");
    const std::uint32_t bits = (1u << c.i) | (1u << c.j);
    if (covered & bits) throw DomainError("coeff_check_pf: leading cells are not a matching");
    covered |= bits;
    pairs.emplace_back(static_cast<std::size_t>(c.i), static_cast<std::size_t>(c.j));
    product = f.mul(product, pencil.generators[j](c.i, c.j));
    sorted.generators.push_back(pencil.generators[j]);
  }
  const auto poly = pf_polynomial(sorted);
  const std::vector<unsigned> ones(t, 1);
  const auto sign = matching_sign(pairs);
  return PfCoefficient{f.elem(poly.coefficient(ones)), f.elem(sign > 0 ? product : f.neg(product)), order};
}

PfCoefficient coeff_check_pf(const AffineSpace& canonical, const MatchingSelection& sel) {
  return coeff_check_pf(restrict_pencil(canonical, sel));
}

}  // namespace rankmatch
