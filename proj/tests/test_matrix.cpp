#include <doctest.h>

#include "oracles.hpp"
#include "rankmatch/errors.hpp"
#include "rankmatch/matrix.hpp"
#include "rankmatch/rng.hpp"

using namespace rankmatch;

namespace {

Matrix random_matrix(FieldSpec f, std::size_t r, std::size_t c, SplitMix64& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<std::int64_t>(rng.below(f.modulus())));
  return m;
}

Matrix random_alternating(FieldSpec f, std::size_t n, SplitMix64& rng) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto v = static_cast<std::int64_t>(rng.below(f.modulus()));
      m.set(i, j, v);
      m.set(j, i, -v);
    }
  return m;
}

}  // namespace

TEST_CASE("rank examples") {
  CHECK(rank(Matrix::identity(FieldSpec(3), 3)) == 3);
  CHECK(rank(Matrix(FieldSpec(2), {{1, 1}, {1, 1}})) == 1);
  const Matrix m(FieldSpec(2), {{0, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  CHECK(rank(m) == oracle::row_space_rank(m));
  CHECK(rank(m) == 3);
  CHECK(rank(Matrix(FieldSpec(5), 0, 0)) == 0);
  CHECK(rank(Matrix(FieldSpec(5), 2, 3)) == 0);
}

TEST_CASE("rank agrees with row-space enumeration") {
  SplitMix64 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 60; ++trial) {
      const auto r = 1 + rng.below(p == 5 ? 4 : 5);
      const auto c = 1 + rng.below(5);
      const auto m = random_matrix(f, r, c, rng);
      CHECK(rank(m) == oracle::row_space_rank(m));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }
}

TEST_CASE("determinant examples") {
  CHECK(det(Matrix::identity(FieldSpec(7), 4)).value() == 1);
  CHECK(det(Matrix(FieldSpec(3), {{0, 1}, {1, 0}})).value() == 2);
  CHECK(det(Matrix(FieldSpec(3), 0, 0)).value() == 1);
  CHECK_THROWS_AS(det(Matrix(FieldSpec(3), 2, 3)), DomainError);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  SplitMix64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = 1 + rng.below(5);
      const auto m = random_matrix(f, n, n, rng);
      CHECK(det(m).value() == oracle::leibniz_det(m));
      CHECK((det(m).is_zero()) == (rank(m) < n));
    }
  }
}

TEST_CASE("determinant is multiplicative") {
  SplitMix64 rng(12);
  const FieldSpec f(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(f, 4, 4, rng);
    const auto b = random_matrix(f, 4, 4, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("structure predicates") {
  const FieldSpec f3(3);
  const Matrix a(f3, {{1, 2}, {1, 0}});
  CHECK(is_weakly_symmetric(a));
  CHECK_FALSE(is_symmetric(a));
  CHECK(is_alternating(Matrix(f3, {{0, 1}, {2, 0}})));
  CHECK_FALSE(is_weakly_symmetric(Matrix(f3, {{0, 1}, {0, 0}})));
  // Symmetric with zero diagonal is alternating only in characteristic 2.
  CHECK(is_alternating(Matrix(FieldSpec(2), {{0, 1}, {1, 0}})));
  CHECK_FALSE(is_alternating(Matrix(f3, {{0, 1}, {1, 0}})));
  CHECK_FALSE(is_alternating(Matrix(FieldSpec(2), {{1, 1}, {1, 0}})));
}

TEST_CASE("upper triangle determines a weakly symmetric matrix") {
  // Exhaustive for n <= 3 over GF(2), GF(3): zero upper triangle forces zero.
  for (std::uint32_t p : {2u, 3u}) {
    const FieldSpec f(p);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < n * n; ++i) total *= p;
      for (std::uint64_t code = 0; code < total; ++code) {
        Matrix m(f, n, n);
        auto c = code;
        for (std::size_t i = 0; i < n * n; ++i, c /= p) m.set(i / n, i % n, static_cast<std::int64_t>(c % p));
        if (!is_weakly_symmetric(m)) continue;
        bool upper_zero = true;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) upper_zero = upper_zero && m(i, j) == 0;
        if (upper_zero) CHECK(m.is_zero());
      }
    }
  }
}

TEST_CASE("pfaffian examples") {
  const FieldSpec f5(5);
  CHECK(pfaffian_combinatorial(Matrix(f5, {{0, 2}, {-2, 0}})).value() == 2);
  CHECK(pfaffian_elimination(Matrix(f5, {{0, 2}, {-2, 0}})).value() == 2);
  const FieldSpec f3(3);
  // C12 = C34 = C13 = C24 = 1, C14 = C23 = 0: 1*1 - 1*1 + 0 = 0.
  const Matrix c(f3, {{0, 1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {0, -1, -1, 0}});
  CHECK(pfaffian_combinatorial(c).value() == 0);
  CHECK(pfaffian_elimination(c).value() == 0);
  CHECK(oracle::matching_pfaffian(c) == 0);
  CHECK(pfaffian_elimination(Matrix(f3, 4, 4)).value() == 0);
  Matrix blocks(f3, 6, 6);
  for (int k = 0; k < 3; ++k) {
    blocks.set(2 * k, 2 * k + 1, 1);
    blocks.set(2 * k + 1, 2 * k, -1);
  }
  CHECK(pfaffian_elimination(blocks).value() == 1);
  CHECK(pfaffian_combinatorial(blocks).value() == 1);
  CHECK(pfaffian_elimination(Matrix(f3, 0, 0)).value() == 1);
  CHECK_THROWS_AS(pfaffian_elimination(Matrix(f3, 3, 3)), DomainError);
  CHECK_THROWS_AS(pfaffian_combinatorial(Matrix(f3, 3, 3)), DomainError);
  CHECK_THROWS_AS(pfaffian_elimination(Matrix(f3, {{0, 1}, {1, 0}})), DomainError);
}

TEST_CASE("pfaffian of a rank-2 alternating 4x4 matrix is zero") {
  const FieldSpec f7(7);
  // u v^T - v u^T has rank 2.
  const std::int64_t u[] = {1, 2, 3, 4}, v[] = {0, 1, 5, 2};
  Matrix m(f7, 4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.set(i, j, u[i] * v[j] - v[i] * u[j]);
  REQUIRE(rank(m) == 2);
  CHECK(pfaffian_elimination(m).value() == 0);
  CHECK(pfaffian_combinatorial(m).value() == 0);
}

TEST_CASE("both pfaffian algorithms agree with the matching-sum oracle and square to det") {
  SplitMix64 rng(13);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const FieldSpec f(p);
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = 2 * (1 + rng.below(4));
      const auto m = random_alternating(f, n, rng);
      const auto pf = pfaffian_elimination(m);
      CHECK(pf.value() == oracle::matching_pfaffian(m));
      CHECK(pfaffian_combinatorial(m) == pf);
      CHECK((pf * pf) == det(m));
      CHECK(rank(m) % 2 == 0);
    }
  }
}

TEST_CASE("pfaffian transforms by det under congruence") {
  SplitMix64 rng(14);
  const FieldSpec f(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_alternating(f, 6, rng);
    const auto b = random_matrix(f, 6, 6, rng);
    CHECK(pfaffian_elimination(b * a * b.transpose()) == det(b) * pfaffian_elimination(a));
  }
}

TEST_CASE("matching sign") {
  CHECK(matching_sign({{0, 1}, {2, 3}}) == 1);
  CHECK(matching_sign({{0, 2}, {1, 3}}) == -1);
  CHECK(matching_sign({{0, 3}, {1, 2}}) == 1);
  // Pair order and orientation inside the input do not matter.
  CHECK(matching_sign({{3, 1}, {2, 0}}) == -1);
}

TEST_CASE("principal submatrix") {
  const FieldSpec f(5);
  const Matrix a(f, {{1, 2, 3}, {4, 0, 1}, {2, 2, 2}});
  CHECK(principal_submatrix(a, std::vector<std::size_t>{0, 1, 2}) == a);
  CHECK(principal_submatrix(a, std::vector<std::size_t>{0}) == Matrix(f, {{1}}));
  CHECK(principal_submatrix(Matrix::identity(f, 4), std::vector<std::size_t>{1, 3}) == Matrix::identity(f, 2));
  CHECK(principal_submatrix(a, std::vector<std::size_t>{0, 2}) == Matrix(f, {{1, 3}, {2, 2}}));
  CHECK_THROWS_AS(principal_submatrix(a, std::vector<std::size_t>{3}), DomainError);
}

TEST_CASE("matrix arithmetic") {
  const FieldSpec f(3);
  const Matrix a(f, {{1, 2}, {0, 1}});
  const Matrix b(f, {{2, 2}, {1, 0}});
  CHECK(a + b == Matrix(f, {{0, 1}, {1, 1}}));
  CHECK(a - b == Matrix(f, {{2, 0}, {2, 1}}));
  CHECK(a * b == Matrix(f, {{1, 2}, {1, 0}}));
  CHECK(a.scaled(2) == Matrix(f, {{2, 1}, {0, 2}}));
  CHECK(a.to_string() == "1 2\n0 1\n");
  CHECK_THROWS_AS(a + Matrix(FieldSpec(5), 2, 2), FieldMismatch);
  CHECK_THROWS_AS(a * Matrix(f, 3, 3), DomainError);
}

TEST_CASE("pfaffian algorithms agree at order 10") {
  SplitMix64 rng(15);
  for (std::uint32_t p : {2u, 3u}) {
    const auto m = random_alternating(FieldSpec(p), 10, rng);
    CHECK(pfaffian_combinatorial(m) == pfaffian_elimination(m));
  }
}

TEST_CASE("principal submatrices do not increase rank") {
  SplitMix64 rng(16);
  const FieldSpec f(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_matrix(f, 5, 5, rng);
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 5; ++i)
      if (rng.below(2)) idx.push_back(i);
    CHECK(rank(principal_submatrix(a, idx)) <= rank(a));
  }
}
