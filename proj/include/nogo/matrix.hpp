#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "nogo/error.hpp"

namespace nogo {

/// Dense matrix over an exact field F (F needs +,-,*,/ and ==).
template <class F>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F(0))
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error("ragged matrix initializer");
      for (const auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return std::vector<F>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  std::vector<F> col(std::size_t c) const {
    std::vector<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_row(std::size_t r, const std::vector<F>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }
  void set_col(std::size_t c, const std::vector<F>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
  }
  void swap_cols(std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, c1), (*this)(r, c2));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix s(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) s(r, c) = (*this)(r0 + r, c0 + c);
    return s;
  }

  /// Rows stacked on top of other (same column count).
  Matrix vstack(const Matrix& other) const {
    if (empty()) return other;
    if (other.empty()) return *this;
    if (cols_ != other.cols_) throw Error("vstack: column mismatch");
    Matrix s(rows_ + other.rows_, cols_);
    s.a_ = a_;
    s.a_.insert(s.a_.end(), other.a_.begin(), other.a_.end());
    return s;
  }

  Matrix hstack(const Matrix& other) const {
    if (rows_ != other.rows_) throw Error("hstack: row mismatch");
    Matrix s(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) s(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) s(r, cols_ + c) = other(r, c);
    }
    return s;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix s = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
    return s;
  }
  Matrix operator-() const {
    Matrix s = *this;
    for (auto& x : s.a_) x = -x;
    return s;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matmul: shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& x = (*this)(r, k);
        if (x == F(0)) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) p(r, c) += x * o(k, c);
      }
    return p;
  }
  Matrix operator*(const F& s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw Error("matvec: shape mismatch");
    std::vector<F> out(rows_, F(0));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!((*this)(r, c) == F(0))) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!(x == F(0))) return false;
    return true;
  }

  F trace() const {
    F t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<F> a_;
};

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class F>
bool vec_is_zero(const std::vector<F>& v) {
  for (const auto& x : v)
    if (!(x == F(0))) return false;
  return true;
}

}  // namespace nogo
