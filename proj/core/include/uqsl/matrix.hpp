#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

namespace uqsl {

/// Dense matrix over an exact scalar ring S. S needs a default constructor
/// (zero), construction from long, +, -, *, == and is_zero(); the
/// elimination routines additionally use S::inv().
template <class S>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(size_t r, size_t c) : r_(r), c_(c), a_(r * c) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  S& at(size_t i, size_t j) { return a_[i * c_ + j]; }
  const S& at(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_scalar(const S& s) const {
    if (r_ != c_) return false;
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) {
        if (i == j && !(at(i, j) == s)) return false;
        if (i != j && !at(i, j).is_zero()) return false;
      }
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }
  Matrix operator*(const Matrix& o) const {
    assert(c_ == o.r_);
    Matrix m(r_, o.c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < c_; ++k) {
        const S& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.c_; ++j) {
          const S& y = o.at(k, j);
          if (!y.is_zero()) m.at(i, j) += x * y;
        }
      }
    return m;
  }
  Matrix operator*(const S& s) const {
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
  }
  Matrix operator-() const {
    Matrix m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = S(0) - a_[i];
    return m;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  /// Kronecker product, first factor major: index (i,j) -> i*dim(B)+j.
  static Matrix kron(const Matrix& A, const Matrix& B) {
    Matrix m(A.rows() * B.rows(), A.cols() * B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
      for (size_t j = 0; j < A.cols(); ++j) {
        if (A.at(i, j).is_zero()) continue;
        for (size_t k = 0; k < B.rows(); ++k)
          for (size_t l = 0; l < B.cols(); ++l) {
            if (B.at(k, l).is_zero()) continue;
            m.at(i * B.rows() + k, j * B.cols() + l) = A.at(i, j) * B.at(k, l);
          }
      }
    return m;
  }

  Matrix pow(unsigned long k) const {
    assert(r_ == c_);
    Matrix r = identity(r_), base = *this;
    while (k) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// Row-reduced echelon form in place; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < c_ && row < r_; ++col) {
      size_t sel = row;
      while (sel < r_ && at(sel, col).is_zero()) ++sel;
      if (sel == r_) continue;
      for (size_t j = 0; j < c_; ++j) std::swap(at(sel, j), at(row, j));
      S inv = at(row, col).inv();
      for (size_t j = col; j < c_; ++j) at(row, j) = at(row, j) * inv;
      for (size_t i = 0; i < r_; ++i) {
        if (i == row || at(i, col).is_zero()) continue;
        S f = at(i, col);
        for (size_t j = col; j < c_; ++j)
          at(i, j) = at(i, j) - f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  Matrix inverse() const {
    assert(r_ == c_);
    Matrix aug(r_, 2 * c_);
    for (size_t i = 0; i < r_; ++i) {
      for (size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_ + i) = S(1);
    }
    auto piv = aug.rref();
    if (piv.size() != r_) throw std::runtime_error("matrix not invertible");
    for (size_t k = 0; k < piv.size(); ++k)
      if (piv[k] != k) throw std::runtime_error("matrix not invertible");
    Matrix inv(r_, c_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
    return inv;
  }

  /// Basis of the right kernel, returned as columns.
  Matrix kernel() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<size_t> free;
    {
      size_t pi = 0;
      for (size_t j = 0; j < c_; ++j) {
        if (pi < piv.size() && piv[pi] == j)
          ++pi;
        else
          free.push_back(j);
      }
    }
    Matrix K(c_, free.size());
    for (size_t t = 0; t < free.size(); ++t) {
      K.at(free[t], t) = S(1);
      for (size_t r = 0; r < piv.size(); ++r)
        K.at(piv[r], t) = S(0) - m.at(r, free[t]);
    }
    return K;
  }

  S trace() const {
    assert(r_ == c_);
    S t = S(0);
    for (size_t i = 0; i < r_; ++i) t += at(i, i);
    return t;
  }

 private:
  size_t r_, c_;
  std::vector<S> a_;
};

}  // namespace uqsl
