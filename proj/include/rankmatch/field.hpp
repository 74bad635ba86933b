#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace rankmatch {

class FieldElem;

// The prime field GF(p), p < 2^15. Values are plain integers in [0, p); the
// raw helpers below are what the matrix and polynomial kernels use.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxModulus = 1u << 15;

  explicit FieldSpec(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return (a * b) % p_; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t a) const;

  FieldElem elem(std::int64_t v) const;
  FieldElem zero() const;
  FieldElem one() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElem {
 public:
  FieldElem(FieldSpec spec, std::int64_t v) : spec_(spec), value_(spec.reduce(v)) {}

  std::uint32_t value() const noexcept { return value_; }
  FieldSpec spec() const noexcept { return spec_; }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElem operator-() const { return {spec_, spec_.neg(value_)}; }
  FieldElem inv() const;
  FieldElem pow(std::uint64_t e) const { return {spec_, spec_.pow(value_, e)}; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem&, const FieldElem&) = default;

 private:
  FieldElem(FieldSpec spec, std::uint32_t reduced, int) : spec_(spec), value_(reduced) {}

  FieldSpec spec_;
  std::uint32_t value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& a);

}  // namespace rankmatch
