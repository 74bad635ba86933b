#include "rankmatch/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "rankmatch/errors.hpp"

namespace rankmatch {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square())
    throw DomainError(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + ", expected square");
}

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.spec() != b.spec()) throw FieldMismatch("matrices over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shapes differ");
}

// Mutable row-major scratch copy used by the elimination kernels.
struct Work {
  FieldSpec f;
  std::size_t n;
  std::size_t m;
  std::vector<std::uint32_t> v;

  explicit Work(const Matrix& a) : f(a.spec()), n(a.rows()), m(a.cols()), v(a.values().begin(), a.values().end()) {}
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return v[i * m + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m; ++j) std::swap(v[a * m + j], v[b * m + j]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) std::swap(v[i * m + a], v[i * m + b]);
  }
};

}  // namespace

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FieldSpec spec, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : spec_(spec), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (auto v : r) data_.push_back(spec_.reduce(v));
  }
}

Matrix Matrix::from_rows(FieldSpec spec, const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix out(spec, rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < out.cols_; ++j) out.data_[i * out.cols_ + j] = spec.reduce(rows[i][j]);
  }
  return out;
}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
  Matrix out(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) out.data_[i * n + i] = 1 % spec.modulus();
  return out;
}

FieldElem Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  return spec_.elem((*this)(i, j));
}

void Matrix::set(std::size_t i, std::size_t j, std::int64_t v) {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  data_[i * cols_ + j] = spec_.reduce(v);
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix out(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.data_[j * rows_ + i] = (*this)(i, j);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = spec_.add(data_[k], o.data_[k]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = spec_.sub(data_[k], o.data_[k]);
  return *this;
}

Matrix& Matrix::add_scaled(const Matrix& o, std::uint32_t c) {
  require_compatible(*this, o);
  c %= spec_.modulus();
  if (c == 0) return *this;
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = spec_.add(data_[k], spec_.mul(c, o.data_[k]));
  return *this;
}

Matrix Matrix::scaled(std::uint32_t c) const {
  Matrix out(spec_, rows_, cols_);
  return out.add_scaled(*this, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.spec_ != b.spec_) throw FieldMismatch("matrices over different fields");
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  const auto& f = a.spec_;
  Matrix out(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      auto aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.data_[i * b.cols_ + j] = f.add(out.data_[i * b.cols_ + j], f.mul(aik, b(k, j)));
    }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

std::size_t rank(const Matrix& a) {
  Work w(a);
  const auto& f = w.f;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.m && r < w.n; ++c) {
    std::size_t piv = r;
    while (piv < w.n && w(piv, c) == 0) ++piv;
    if (piv == w.n) continue;
    w.swap_rows(piv, r);
    auto inv = f.inv(w(r, c));
    for (std::size_t i = r + 1; i < w.n; ++i) {
      auto factor = f.mul(w(i, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < w.m; ++j) w(i, j) = f.sub(w(i, j), f.mul(factor, w(r, j)));
    }
    ++r;
  }
  return r;
}

FieldElem det(const Matrix& a) {
  require_square(a, "det");
  Work w(a);
  const auto& f = w.f;
  std::uint32_t result = 1 % f.modulus();
  for (std::size_t c = 0; c < w.n; ++c) {
    std::size_t piv = c;
    while (piv < w.n && w(piv, c) == 0) ++piv;
    if (piv == w.n) return f.zero();
    if (piv != c) {
      w.swap_rows(piv, c);
      result = f.neg(result);
    }
    result = f.mul(result, w(c, c));
    auto inv = f.inv(w(c, c));
    for (std::size_t i = c + 1; i < w.n; ++i) {
      auto factor = f.mul(w(i, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < w.n; ++j) w(i, j) = f.sub(w(i, j), f.mul(factor, w(c, j)));
    }
  }
  return f.elem(result);
}

bool is_weakly_symmetric(const Matrix& a) {
  require_square(a, "is_weakly_symmetric");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if ((a(i, j) == 0) != (a(j, i) == 0)) return false;
  return true;
}

bool is_symmetric(const Matrix& a) {
  require_square(a, "is_symmetric");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

bool is_alternating(const Matrix& a) {
  require_square(a, "is_alternating");
  const auto& f = a.spec();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != f.neg(a(j, i))) return false;
  }
  return true;
}

namespace {

void require_pfaffian_input(const Matrix& c, const char* op) {
  require_square(c, op);
  if (c.rows() % 2 != 0) throw DomainError(std::string(op) + ": odd order " + std::to_string(c.rows()));
  if (!is_alternating(c)) throw DomainError(std::string(op) + ": matrix is not alternating");
}

// Colex order on pairs k < l: compare l, then k.
bool colex_less(const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
  return a.second != b.second ? a.second < b.second : a.first < b.first;
}

struct MatchingWalk {
  const Matrix& c;
  FieldSpec f;
  std::vector<bool> used;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::uint32_t total = 0;

  void run(std::uint32_t partial) {
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
      auto s = matching_sign(pairs);
      total = f.add(total, s > 0 ? partial : f.neg(partial));
      return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
      if (used[j]) continue;
      auto entry = c(first, j);
      if (entry == 0) continue;
      used[j] = true;
      pairs.emplace_back(first, j);
      run(f.mul(partial, entry));
      pairs.pop_back();
      used[j] = false;
    }
    used[first] = false;
  }
};

}  // namespace

int permutation_sign(std::span<const std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (auto j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

int matching_sign(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  for (auto& [k, l] : pairs)
    if (k > l) std::swap(k, l);
  std::sort(pairs.begin(), pairs.end(), colex_less);
  std::vector<std::size_t> perm;
  perm.reserve(2 * pairs.size());
  for (const auto& [k, l] : pairs) {
    perm.push_back(k);
    perm.push_back(l);
  }
  return permutation_sign(perm);
}

FieldElem pfaffian_combinatorial(const Matrix& c) {
  require_pfaffian_input(c, "pfaffian_combinatorial");
  if (c.rows() > kMaxCombinatorialPfaffianOrder)
    throw DomainError("pfaffian_combinatorial: order " + std::to_string(c.rows()) + " exceeds 12");
  MatchingWalk walk{c, c.spec(), std::vector<bool>(c.rows(), false), {}};
  walk.run(1 % c.spec().modulus());
  return c.spec().elem(walk.total);
}

FieldElem pfaffian_elimination(const Matrix& c) {
  require_pfaffian_input(c, "pfaffian_elimination");
  Work w(c);
  const auto& f = w.f;
  const auto n = w.n;
  std::uint32_t result = 1 % f.modulus();
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && w(k, piv) == 0) ++piv;
    if (piv == n) return f.zero();
    if (piv != k + 1) {
      w.swap_rows(piv, k + 1);
      w.swap_cols(piv, k + 1);
      result = f.neg(result);
    }
    auto a = w(k, k + 1);
    result = f.mul(result, a);
    auto inv = f.inv(a);
    // Schur complement of the leading 2x2 block; stays alternating.
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto cross = f.sub(f.mul(w(k + 1, i), w(k, j)), f.mul(w(k, i), w(k + 1, j)));
        auto v = f.add(w(i, j), f.mul(cross, inv));
        w(i, j) = v;
        w(j, i) = f.neg(v);
      }
  }
  return f.elem(result);
}

Matrix principal_submatrix(const Matrix& a, std::span<const std::size_t> idx) {
  require_square(a, "principal_submatrix");
  for (auto i : idx)
    if (i >= a.rows()) throw DomainError("principal_submatrix: index " + std::to_string(i + 1) + " out of range");
  Matrix out(a.spec(), idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t s = 0; s < idx.size(); ++s) out.set(r, s, a(idx[r], idx[s]));
  return out;
}

}  // namespace rankmatch
