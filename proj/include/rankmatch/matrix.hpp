#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rankmatch/field.hpp"

namespace rankmatch {

// Dense matrix over GF(p), row-major. Entries are stored reduced; indices are
// 0-based in the C++ API (text formats are 1-based).
class Matrix {
 public:
  Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);
  Matrix(FieldSpec spec, std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix from_rows(FieldSpec spec, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(FieldSpec spec, std::size_t n);

  FieldSpec spec() const noexcept { return spec_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  FieldElem at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::int64_t v);
  std::span<const std::uint32_t> values() const noexcept { return data_; }

  bool is_zero() const noexcept;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  // this += c * o
  Matrix& add_scaled(const Matrix& o, std::uint32_t c);
  Matrix scaled(std::uint32_t c) const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  // Rows of whitespace-separated values, one row per line.
  std::string to_string() const;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::size_t rank(const Matrix& a);
FieldElem det(const Matrix& a);

bool is_weakly_symmetric(const Matrix& a);
bool is_symmetric(const Matrix& a);
// Skew-symmetric with zero diagonal; over GF(2) this is symmetric with zero diagonal.
bool is_alternating(const Matrix& a);

// Sum over perfect matchings of K_n with explicit permutation signs. n <= 12.
FieldElem pfaffian_combinatorial(const Matrix& c);
// Congruence elimination on column pairs; O(n^3), valid in every characteristic.
FieldElem pfaffian_elimination(const Matrix& c);

inline constexpr std::size_t kMaxCombinatorialPfaffianOrder = 12;

// Sign of the permutation 1..n -> k1 l1 ... kt lt where the pairs {k < l} of a
// perfect matching are listed in colex order. Pairs are 0-based.
int matching_sign(std::vector<std::pair<std::size_t, std::size_t>> pairs);

// Sign of a permutation given as an image vector.
int permutation_sign(std::span<const std::size_t> perm);

Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> idx);

}  // namespace rankmatch
