#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "modlie/field.hpp"

namespace modlie {

using Vec = std::vector<Scalar>;

inline Vec zero_vector(const Field& field, std::size_t n) { return Vec(n, field.zero()); }

inline Vec unit_vector(const Field& field, std::size_t n, std::size_t i) {
  Vec v = zero_vector(field, n);
  v.at(i) = field.one();
  return v;
}

inline bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

inline void check_same_length(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

inline Vec operator+(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  check_same_length(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec operator*(const Scalar& s, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = s * x;
  return r;
}

inline std::string to_string(std::span<const Scalar> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].to_string();
  }
  return out + "]";
}

/// Dense row-major matrix over a Field. Zero-row matrices are allowed and
/// represent the basis of the zero subspace.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has wrong length");
      }
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const Field& field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column has wrong length");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  /// Elementary matrix e_ij (1 at row i, column j).
  static Matrix unit(const Field& field, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(field, n, n);
    m(i, j) = field.one();
    return m;
  }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec col(std::size_t j) const {
    Vec c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  /// Row-major entries; the coordinate vector of the matrix in the e_ij basis.
  const Vec& entries() const noexcept { return data_; }

  bool is_zero() const { return modlie::is_zero(data_); }

  Scalar trace() const {
    require_square("trace");
    Scalar t = field_.zero();
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
      throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + shape() + " by " + o.shape());
    }
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    }
    return r;
  }
  Vec operator*(const Vec& v) const {
    if (v.size() != cols_) {
      throw Error(ErrorKind::DimensionMismatch, shape() + " applied to length " + std::to_string(v.size()));
    }
    Vec r = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x = s * x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  Matrix pow(std::uint64_t e) const {
    require_square("pow");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (e > 0) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Bracketed rows, e.g. `[[0,1],[1,0]]`.
  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) out += ",";
      out += modlie::to_string(row(i));
    }
    return out + "]";
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void require_square(std::string_view what) const {
    if (!is_square()) throw Error(ErrorKind::NotSquare, std::string(what) + " of " + shape() + " matrix");
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::DimensionMismatch, shape() + " vs " + o.shape());
    }
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Σ coeffs[k] · mats[k].
inline Matrix linear_combination(const Field& field, std::span<const Matrix> mats, std::span<const Scalar> coeffs,
                                 std::size_t n) {
  if (mats.size() != coeffs.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from matrix count");
  }
  Matrix r(field, n, n);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (!coeffs[k].is_zero()) r += coeffs[k] * mats[k];
  }
  return r;
}

inline Matrix diagonal(const Field& field, const std::vector<long long>& entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = field.from_int(entries[i]);
  return m;
}

}  // namespace modlie
