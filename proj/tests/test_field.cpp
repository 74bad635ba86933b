#include <doctest.h>

#include "rankmatch/errors.hpp"
#include "rankmatch/field.hpp"

using namespace rankmatch;

TEST_CASE("field arithmetic reduces modulo p") {
  CHECK((FieldSpec(3).elem(2) + FieldSpec(3).elem(2)).value() == 1);
  CHECK((FieldSpec(2).elem(1) + FieldSpec(2).elem(1)).value() == 0);
  CHECK((FieldSpec(5).elem(3) * FieldSpec(5).elem(4)).value() == 2);
  CHECK(FieldSpec(7).elem(-1).value() == 6);
  CHECK((-FieldSpec(5).elem(2)).value() == 3);
  CHECK((FieldSpec(5).elem(1) - FieldSpec(5).elem(3)).value() == 3);
}

TEST_CASE("inverses") {
  CHECK(FieldSpec(5).elem(2).inv().value() == 3);
  CHECK(FieldSpec(3).elem(2).inv().value() == 2);
  CHECK(FieldSpec(7).elem(3).inv().value() == 5);
  CHECK_THROWS_AS(FieldSpec(7).zero().inv(), DomainError);
}

TEST_CASE("every nonzero element has an inverse matching exhaustive search") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u, 32749u}) {
    const FieldSpec f(p);
    const std::uint32_t step = p > 200 ? p / 97 : 1;
    for (std::uint32_t a = 1; a < p; a += step) {
      const auto b = f.inv(a);
      CHECK(static_cast<std::uint64_t>(a) * b % p == 1);
    }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (std::uint32_t c = 0; c < p; ++c) CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    // Fermat
    for (std::uint32_t a = 1; a < p; ++a) CHECK(f.pow(a, p - 1) == 1);
  }
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(FieldSpec(4), DomainError);
  CHECK_THROWS_AS(FieldSpec(1), DomainError);
  CHECK_THROWS_AS(FieldSpec(0), DomainError);
  CHECK_THROWS_AS(FieldSpec(32771), DomainError);
  CHECK_NOTHROW(FieldSpec(32749));
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("mixing fields throws") {
  CHECK_THROWS_AS(FieldSpec(3).one() + FieldSpec(5).one(), FieldMismatch);
  CHECK_THROWS_AS(FieldSpec(3).one() * FieldSpec(5).one(), FieldMismatch);
}
