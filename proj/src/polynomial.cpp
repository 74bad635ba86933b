#include "rankmatch/polynomial.hpp"

#include <algorithm>

#include "rankmatch/errors.hpp"

namespace rankmatch {

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  if (exps.size() > kMaxVars) throw DomainError("monomial: too many variables");
  std::uint64_t packed = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw DomainError("monomial: exponent exceeds 15");
    packed |= std::uint64_t{exps[i]} << (4 * i);
  }
  return Monomial(packed);
}

Monomial Monomial::variable(std::size_t i) {
  if (i >= kMaxVars) throw DomainError("monomial: variable index out of range");
  return Monomial(std::uint64_t{1} << (4 * i));
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += exponent(i);
  return d;
}

Monomial operator*(Monomial a, Monomial b) {
  for (std::size_t i = 0; i < Monomial::kMaxVars; ++i)
    if (a.exponent(i) + b.exponent(i) > Monomial::kMaxExponent) throw DomainError("monomial: exponent overflow");
  return Monomial(a.packed_ + b.packed_);
}

Polynomial::Polynomial(FieldSpec spec, std::size_t nvars) : spec_(spec), nvars_(nvars) {
  if (nvars > Monomial::kMaxVars) throw DomainError("polynomial: at most 16 variables");
}

Polynomial Polynomial::constant(FieldSpec spec, std::size_t nvars, std::uint32_t c) {
  Polynomial out(spec, nvars);
  out.add_term(Monomial{}, c);
  return out;
}

Polynomial Polynomial::variable(FieldSpec spec, std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw DomainError("polynomial: variable index out of range");
  Polynomial out(spec, nvars);
  out.add_term(Monomial::variable(i), 1);
  return out;
}

int Polynomial::total_degree() const noexcept {
  int d = -1;
  for (const auto& [m, _] : terms_) d = std::max(d, static_cast<int>(m.degree()));
  return d;
}

std::uint32_t Polynomial::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::uint32_t Polynomial::coefficient(std::span<const unsigned> exps) const {
  if (exps.size() != nvars_) throw DomainError("polynomial: exponent vector length differs from nvars");
  return coefficient(Monomial::from_exponents(exps));
}

FieldElem Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != nvars_) throw DomainError("polynomial: point dimension differs from nvars");
  std::uint32_t total = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t term = c;
    for (std::size_t i = 0; i < nvars_ && term != 0; ++i) term = spec_.mul(term, spec_.pow(point[i] % spec_.modulus(), m.exponent(i)));
    total = spec_.add(total, term);
  }
  return spec_.elem(total);
}

void Polynomial::add_term(Monomial m, std::uint32_t c) {
  c %= spec_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = spec_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (spec_ != o.spec_) throw FieldMismatch("polynomials over different fields");
  if (nvars_ != o.nvars_) throw DomainError("polynomials in different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, spec_.neg(c));
  return *this;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  Polynomial out(spec_, nvars_);
  for (const auto& [m, v] : terms_) out.add_term(m, spec_.mul(v, c % spec_.modulus()));
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_compatible(b);
  Polynomial out(a.spec_, a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, a.spec_.mul(ca, cb));
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<unsigned>, std::uint32_t>> rows;
  for (const auto& [m, c] : terms_) {
    std::vector<unsigned> e(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) e[i] = m.exponent(i);
    rows.emplace_back(std::move(e), c);
  }
  auto deg = [](const std::vector<unsigned>& e) {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
    if (deg(x.first) != deg(y.first)) return deg(x.first) > deg(y.first);
    return x.first > y.first;
  });
  std::string out;
  for (const auto& [e, c] : rows) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += std::to_string(c);
    else if (c == 1) out += mono;
    else out += std::to_string(c) + "*" + mono;
  }
  return out;
}

}  // namespace rankmatch
