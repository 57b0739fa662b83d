/**
 * @file matrix.hpp
 * @brief Small dense matrices over an arbitrary scalar field.
 *
 * Everything here is sized for the problem at hand: n ≤ 8 group elements and
 * their exterior powers (≤ C(8,4) = 70 rows). Products, determinants, minors
 * and projective comparison are implemented directly; heavy numerics
 * (eigenvalues, SVD) live in spectral.hpp on top of Eigen.
 */

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fgdom/scalars.hpp"

namespace fgdom {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, scalar_traits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar_traits<T>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (scalar_traits<T>::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v = s * v;
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix difference: shape mismatch");
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Submatrix given by row index set I and column index set J (0-based).
  Matrix submatrix(const std::vector<std::size_t>& I, const std::vector<std::size_t>& J) const {
    Matrix out(I.size(), J.size());
    for (std::size_t i = 0; i < I.size(); ++i)
      for (std::size_t j = 0; j < J.size(); ++j) out(i, j) = (*this)(I[i], J[j]);
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Determinant by Gaussian elimination with exact division (field scalars).
/// Pivot choice: largest modulus for doubles, first nonzero for exact types.
template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  const std::size_t n = m.rows();
  T det = scalar_traits<T>::one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (std::is_same_v<T, Cplx>) {
      double best = scalar_traits<T>::modulus(m(col, col));
      for (std::size_t r = col + 1; r < n; ++r) {
        double cand = scalar_traits<T>::modulus(m(r, col));
        if (cand > best) best = cand, pivot = r;
      }
    } else {
      while (pivot < n && scalar_traits<T>::is_zero(m(pivot, col))) ++pivot;
      if (pivot == n) return scalar_traits<T>::zero();
    }
    if (scalar_traits<T>::is_zero(m(pivot, col))) return scalar_traits<T>::zero();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -scalar_traits<T>::one() * det;
    }
    det = det * m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (scalar_traits<T>::is_zero(m(r, col))) continue;
      T f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Minor det(m[I, J]) for equal-size index sets.
template <typename T>
T minor_of(const Matrix<T>& m, const std::vector<std::size_t>& I,
           const std::vector<std::size_t>& J) {
  if (I.size() != J.size()) throw std::invalid_argument("minor_of: |I| != |J|");
  return determinant(m.submatrix(I, J));
}

/// All k-element subsets of {0,…,n−1} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Index (within the matrix) of the entry with the largest modulus.
inline std::pair<std::size_t, std::size_t> argmax_modulus(const Matrix<Cplx>& m) {
  std::pair<std::size_t, std::size_t> best{0, 0};
  double bestv = -1.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      double v = scalar_traits<Cplx>::modulus(m(i, j));
      if (v > bestv) bestv = v, best = {i, j};
    }
  return best;
}

/// Projective equality: A ≡ B iff A = cB for some nonzero scalar c.
/// Implemented by normalizing both by their largest-modulus entry and
/// comparing entrywise with relative tolerance.
inline bool projectively_equal(const Matrix<Cplx>& a, const Matrix<Cplx>& b, double tol = 1e-9) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto [ia, ja] = argmax_modulus(a);
  auto [ib, jb] = argmax_modulus(b);
  const Cplx na = a(ia, ja), nb = b(ib, jb);
  if (scalar_traits<Cplx>::modulus(na) == 0.0 || scalar_traits<Cplx>::modulus(nb) == 0.0)
    return scalar_traits<Cplx>::modulus(na) == scalar_traits<Cplx>::modulus(nb);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Cplx va = a(i, j) / na, vb = b(i, j) / nb;
      if (scalar_traits<Cplx>::modulus(va - vb) > tol) return false;
    }
  return true;
}

/// Entrywise closeness with absolute tolerance.
inline bool entrywise_close(const Matrix<Cplx>& a, const Matrix<Cplx>& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (scalar_traits<Cplx>::modulus(a(i, j) - b(i, j)) > tol) return false;
  return true;
}

inline Matrix<Cplx> to_cplx(const Matrix<RatC>& m) {
  Matrix<Cplx> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_cplx(m(i, j));
  return out;
}

}  // namespace fgdom
