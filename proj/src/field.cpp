#include "rankmatch/field.hpp"

#include <ostream>
#include <string>

#include "rankmatch/errors.hpp"

namespace rankmatch {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
  if (p >= kMaxModulus) throw DomainError("field modulus " + std::to_string(p) + " too large (must be < 32768)");
  if (!is_prime(p)) throw DomainError("field modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw DomainError("inversion of zero in GF(" + std::to_string(p_) + ")");
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a % p_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    auto q = r0 / r1;
    auto r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    auto s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
  }
  return reduce(s0);
}

FieldElem FieldSpec::elem(std::int64_t v) const { return FieldElem(*this, v); }
FieldElem FieldSpec::zero() const { return FieldElem(*this, 0); }
FieldElem FieldSpec::one() const { return FieldElem(*this, 1); }

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
  if (a.spec() != b.spec())
    throw FieldMismatch("GF(" + std::to_string(a.spec().modulus()) + ") and GF(" +
                        std::to_string(b.spec().modulus()) + ") elements mixed");
}
}  // namespace

FieldElem FieldElem::inv() const { return {spec_, spec_.inv(value_), 0}; }

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_), 0};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_), 0};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  require_same(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_), 0};
}

std::ostream& operator<<(std::ostream& os, const FieldElem& a) { return os << a.value(); }

}  // namespace rankmatch
