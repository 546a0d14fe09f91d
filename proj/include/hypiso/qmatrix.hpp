#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "hypiso/rational.hpp"

namespace hypiso {

/// Dense row-major matrix over Q. Square in most uses; rectangular shapes
/// appear for subspace bases (one basis vector per column).
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Rational> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> column(std::size_t c) const;

  QMatrix transpose() const;
  Rational trace() const;
  Rational determinant() const;
  std::size_t rank() const;
  /// Columns form a basis of the kernel.
  QMatrix nullspace() const;
  /// Columns form a basis of the column space.
  QMatrix column_space() const;
  /// Throws SingularMatrix.
  QMatrix inverse() const;
  QMatrix pow(unsigned k) const;
  bool is_zero() const;

  /// Row-major flattening, used for Krylov sequences of matrix powers.
  const std::vector<Rational>& entries() const noexcept { return data_; }

  QMatrix& operator+=(const QMatrix& rhs);
  QMatrix& operator-=(const QMatrix& rhs);
  QMatrix& operator*=(const Rational& s);

  friend QMatrix operator+(QMatrix lhs, const QMatrix& rhs) { return lhs += rhs; }
  friend QMatrix operator-(QMatrix lhs, const QMatrix& rhs) { return lhs -= rhs; }
  friend QMatrix operator*(QMatrix lhs, const Rational& s) { return lhs *= s; }
  friend QMatrix operator*(const Rational& s, QMatrix rhs) { return rhs *= s; }
  friend QMatrix operator*(const QMatrix& lhs, const QMatrix& rhs);
  friend std::vector<Rational> operator*(const QMatrix& lhs, std::span<const Rational> v);
  friend bool operator==(const QMatrix& lhs, const QMatrix& rhs);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Horizontal concatenation [a | b]; row counts must agree.
QMatrix hstack(const QMatrix& a, const QMatrix& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

}  // namespace hypiso
