#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rankmatch/field.hpp"

namespace rankmatch {

// Exponent vector packed four bits per variable.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 16;
  static constexpr unsigned kMaxExponent = 15;

  Monomial() = default;
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t i);

  unsigned exponent(std::size_t i) const noexcept { return static_cast<unsigned>((packed_ >> (4 * i)) & 0xF); }
  unsigned degree() const noexcept;
  std::uint64_t packed() const noexcept { return packed_; }

  // Throws DomainError if any exponent would exceed kMaxExponent.
  friend Monomial operator*(Monomial a, Monomial b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  explicit Monomial(std::uint64_t packed) : packed_(packed) {}
  std::uint64_t packed_ = 0;
};

// Sparse polynomial in nvars variables over GF(p); zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial(FieldSpec spec, std::size_t nvars);

  static Polynomial constant(FieldSpec spec, std::size_t nvars, std::uint32_t c);
  static Polynomial variable(FieldSpec spec, std::size_t nvars, std::size_t i);

  FieldSpec spec() const noexcept { return spec_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, std::uint32_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // -1 for the zero polynomial.
  int total_degree() const noexcept;

  std::uint32_t coefficient(Monomial m) const;
  std::uint32_t coefficient(std::span<const unsigned> exps) const;
  FieldElem evaluate(std::span<const std::uint32_t> point) const;

  // this += c * m
  void add_term(Monomial m, std::uint32_t c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(std::uint32_t c) const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // e.g. "2*x1^2*x2 + 2*x1*x2^2", variables 1-based, highest degree first.
  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;

  FieldSpec spec_;
  std::size_t nvars_;
  std::map<Monomial, std::uint32_t> terms_;
};

}  // namespace rankmatch
