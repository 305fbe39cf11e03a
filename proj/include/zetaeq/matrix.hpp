// Dense matrices over integers, rationals and polynomials, plus the exact
// linear algebra the rest of the library is built on.
#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaeq/poly.hpp"

namespace zetaeq {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) == T(0)) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <typename F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = f((*this)(i, j));
    return m;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<long>;
using RationalMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

template <typename T>
Matrix<T> operator*(const T& c, Matrix<T> m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = c * m(i, j);
  return m;
}

RationalMatrix to_rational(const IntMatrix& m);
PolyMatrix to_poly(const IntMatrix& m);
PolyMatrix to_poly(const RationalMatrix& m);
/// Scales a numeric matrix into the polynomial ring: p * M.
PolyMatrix scaled(const MultiPoly& p, const IntMatrix& m);
PolyMatrix scaled(const MultiPoly& p, const RationalMatrix& m);

/// Fraction-free (Bareiss) determinant; every division is exact.
MultiPoly det_fraction_free(const PolyMatrix& m);
Rational determinant(const RationalMatrix& m);
Integer determinant(const IntMatrix& m);

/// Inverse over the rationals; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// adj(xI - A). Signed minors up to `minor_cutoff` rows, Faddeev–LeVerrier above.
PolyMatrix adjugate_char_matrix(const IntMatrix& a, std::size_t minor_cutoff = 6);
PolyMatrix adjugate_char_matrix_minors(const IntMatrix& a);
PolyMatrix adjugate_char_matrix_leverrier(const IntMatrix& a);

/// det(xI - A) in the variable `x`, via Hessenberg reduction over the rationals.
MultiPoly characteristic_polynomial(const RationalMatrix& a, Var v = Var::x);
MultiPoly characteristic_polynomial(const IntMatrix& a, Var v = Var::x);

/// Number of distinct real roots of a univariate polynomial (Sturm sequence).
std::size_t count_real_roots(const MultiPoly& p, Var v);

/// Matrix entries rendered row by row, for diagnostics.
std::string describe(const PolyMatrix& m);

}  // namespace zetaeq
