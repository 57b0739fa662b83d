/**
 * @file factory.hpp
 * @brief Elementary and composite matrices of the snake-move factorization:
 *        S, F_i, H_i(x), M(t), St(k), Step(k), S·Step(k)·S, T(t), E(e),
 *        and the building blocks T(t)^{±1}E(e) of a curve's monodromy.
 *
 * Conventions (fixed here once, relied on everywhere):
 *
 *  - S is antidiagonal with (i, n+1−i) entry (−1)^{i+1}; S² = (−1)^{n+1}·I.
 *  - F_i = I + e_{i+1,i}; its inverse f_i = I − e_{i+1,i}.
 *  - H_i(x) = diag(1,…,1, x,…,x) with the last i entries equal to x; its
 *    inverse is h_i(x) = H_i(1/x).
 *  - M(t) = St(n−1)(t)·St(n−2)(t)⋯St(1)(t), where
 *      St(k)(t) = F_{n−1} ∏_{i=1}^{k−1} ( H_i(X_{i−1, k−i−1, n−k−1}) F_{n−i−1} ).
 *  - M(t)⁻¹ = Step(n−1)(t)·Step(n−2)(t)⋯Step(1)(t), where Step(k)(t) is the
 *    factor inverting St(n−k)(t):
 *      Step(k)(t) = ∏_{i=n−k−1}^{1} ( f_{n−i−1} h_i(X_{i−1, n−k−i−1, k−1}) ) · f_{n−1},
 *    the product running over decreasing i. This satisfies Step(n−1) = f_{n−1}
 *    and Step(n−k)·St(k) = I (pinned exactly by the identity test suite).
 *  - T(t) = M(t)·S;  E(e) = diag(1, z_{n−1}, z_{n−2}z_{n−1}, …, z_1⋯z_{n−1})·S.
 *
 * Building blocks are returned as UNNORMALIZED entrywise-nonnegative-pattern
 * projective representatives (no det-1 root scalars):
 *   δ=+1:  M(t) · diag(z_1⋯z_{n−1}, …, z_{n−1}, 1)     ≡ T(t)E(e),
 *   δ=−1:  [∏_{k=n−1..1} S·Step(k)·S] · the same diag  ≡ T(t)⁻¹E(e),
 * where S·Step(k)·S is the sign-free upper-bidiagonal closed form. These are
 * exactly the weight matrices of the planar-network builders in network.hpp,
 * and for n=3 they reproduce the classical displayed forms
 *   [[xy,0,0],[xy,y,0],[xy,y(1+z),z]] and [[xy/z, y(1+z)/z, 1],[0,y,1],[0,0,1]].
 */

#pragma once

#include <stdexcept>

#include "fgdom/coords.hpp"
#include "fgdom/matrix.hpp"

namespace fgdom {

/// Antidiagonal S: (i, n+1−i) entry (−1)^{i+1}.
template <typename T>
Matrix<T> elem_S(int n) {
  if (n < 2) throw std::invalid_argument("elem_S: n must be >= 2");
  Matrix<T> m(n, n);
  for (int i = 1; i <= n; ++i)
    m(i - 1, n - i) = (i % 2 == 1) ? scalar_traits<T>::one() : -scalar_traits<T>::one();
  return m;
}

/// F_i = I + e_{i+1,i}.
template <typename T>
Matrix<T> elem_F(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("elem_F: index out of range");
  Matrix<T> m = Matrix<T>::identity(n);
  m(i, i - 1) = scalar_traits<T>::one();
  return m;
}

/// f_i = F_i⁻¹ = I − e_{i+1,i}.
template <typename T>
Matrix<T> elem_f(int n, int i) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("elem_f: index out of range");
  Matrix<T> m = Matrix<T>::identity(n);
  m(i, i - 1) = -scalar_traits<T>::one();
  return m;
}

/// H_i(x) = diag(1,…,1, x,…,x), last i entries x.
template <typename T>
Matrix<T> elem_H(int n, int i, const T& x) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("elem_H: index out of range");
  if (scalar_traits<T>::is_zero(x)) throw std::invalid_argument("elem_H: x must be nonzero");
  Matrix<T> m = Matrix<T>::identity(n);
  for (int d = n - i; d < n; ++d) m(d, d) = x;
  return m;
}

/// h_i(x) = H_i(x)⁻¹ = H_i(1/x).
template <typename T>
Matrix<T> elem_h(int n, int i, const T& x) {
  return elem_H<T>(n, i, scalar_traits<T>::one() / x);
}

/// St(k)(t) = F_{n−1} ∏_{i=1}^{k−1} ( H_i(X_{i−1,k−i−1,n−k−1}) F_{n−i−1} ).
template <typename T>
Matrix<T> build_St(const BasicTriangleInvariants<T>& t, int k) {
  const int n = t.n;
  if (k < 1 || k > n - 1) throw std::invalid_argument("build_St: index out of range");
  Matrix<T> m = elem_F<T>(n, n - 1);
  for (int i = 1; i <= k - 1; ++i) {
    m = m * elem_H<T>(n, i, t.at(i - 1, k - i - 1, n - k - 1));
    m = m * elem_F<T>(n, n - i - 1);
  }
  return m;
}

/// M(t) = St(n−1)(t) ⋯ St(1)(t).
template <typename T>
Matrix<T> build_M(const BasicTriangleInvariants<T>& t) {
  const int n = t.n;
  Matrix<T> m = Matrix<T>::identity(n);
  for (int k = n - 1; k >= 1; --k) m = m * build_St(t, k);
  return m;
}

/// Step(k)(t): the factor of M(t)⁻¹ undoing St(n−k)(t); see file header.
template <typename T>
Matrix<T> build_Step(const BasicTriangleInvariants<T>& t, int k) {
  const int n = t.n;
  if (k < 1 || k > n - 1) throw std::invalid_argument("build_Step: index out of range");
  Matrix<T> m = Matrix<T>::identity(n);
  for (int i = n - k - 1; i >= 1; --i) {
    m = m * elem_f<T>(n, n - i - 1);
    m = m * elem_h<T>(n, i, t.at(i - 1, n - k - i - 1, k - 1));
  }
  return m * elem_f<T>(n, n - 1);
}

/// Sign-free closed form of S·Step(k)(t)·S: upper bidiagonal with
/// diagonal (1/(x_1⋯x_{n−k−1}), 1/(x_2⋯x_{n−k−1}), …, 1/x_{n−k−1}, 1, …, 1)
/// and the superdiagonal equal to the diagonal on the first n−k rows, where
/// x_m = X_{m−1, n−k−m−1, k−1}. Equals S·Step(k)·S up to an overall sign.
template <typename T>
Matrix<T> build_S_Step_S(const BasicTriangleInvariants<T>& t, int k) {
  const int n = t.n;
  if (k < 1 || k > n - 1) throw std::invalid_argument("build_S_Step_S: index out of range");
  Matrix<T> m = Matrix<T>::identity(n);
  // d_i = ∏_{m=i}^{n−k−1} 1/x_m for i = 1..n−k (empty product = 1 at i = n−k).
  for (int i = n - k; i >= 1; --i) {
    T d = scalar_traits<T>::one();
    for (int mm = i; mm <= n - k - 1; ++mm)
      d = d / t.at(mm - 1, n - k - mm - 1, k - 1);
    m(i - 1, i - 1) = d;
    m(i - 1, i) = d;  // i ≤ n−k ≤ n−1, so column i is in range
  }
  return m;
}

/// T(t) = M(t)·S.
template <typename T>
Matrix<T> build_T(const BasicTriangleInvariants<T>& t) {
  return build_M(t) * elem_S<T>(t.n);
}

/// E(e) = diag(1, z_{n−1}, z_{n−2}z_{n−1}, …, z_1⋯z_{n−1})·S.
template <typename T>
Matrix<T> build_E(const BasicEdgeInvariants<T>& e) {
  const int n = e.n;
  Matrix<T> d = Matrix<T>::identity(n);
  T acc = scalar_traits<T>::one();
  for (int i = 2; i <= n; ++i) {
    acc = acc * e.z_r(n - i + 1);  // multiply in z_{n−1}, z_{n−2}, …
    d(i - 1, i - 1) = acc;
  }
  return d * elem_S<T>(n);
}

/// Diagonal entries of the positive representative of S·E(e):
/// entry i = z_i z_{i+1} ⋯ z_{n−1} (entry n = 1).
template <typename T>
Matrix<T> build_SE_diag(const BasicEdgeInvariants<T>& e) {
  const int n = e.n;
  Matrix<T> d = Matrix<T>::identity(n);
  T acc = scalar_traits<T>::one();
  for (int i = n - 1; i >= 1; --i) {
    acc = acc * e.z_r(i);
    d(i - 1, i - 1) = acc;
  }
  return d;
}

/// Building block T(t)^{δ}E(e), as the unnormalized nonnegative-pattern
/// projective representative described in the file header.
template <typename T>
Matrix<T> build_block(const BasicBuildingBlockSpec<T>& spec) {
  if (spec.triangle.n != spec.edge.n)
    throw std::invalid_argument("build_block: triangle/edge rank mismatch");
  const int n = spec.triangle.n;
  Matrix<T> m;
  if (spec.delta == +1) {
    m = build_M(spec.triangle);
  } else if (spec.delta == -1) {
    m = Matrix<T>::identity(n);
    for (int k = n - 1; k >= 1; --k) m = m * build_S_Step_S(spec.triangle, k);
  } else {
    throw std::invalid_argument("build_block: delta must be +1 or -1");
  }
  return m * build_SE_diag(spec.edge);
}

/// Monodromy with the scale factor pulled out to avoid overflow on long
/// words: matrix · exp(log_scale) is the raw right-to-left product.
struct ScaledMatrix {
  Matrix<Cplx> matrix;
  double log_scale = 0.0;
};

/// ρ(γ) = T(t_k)^{δ_k}E(e_k) ⋯ T(t_1)^{δ_1}E(e_1): right-to-left product of
/// build_block over the word (block 0 applied first). Exact backends return
/// the raw product; see monodromy_scaled for the overflow-safe double path.
template <typename T>
Matrix<T> monodromy(const BasicMonodromyWord<T>& word) {
  if (word.blocks.empty()) throw std::invalid_argument("monodromy: empty word");
  Matrix<T> m = build_block(word.blocks.front());
  for (std::size_t b = 1; b < word.blocks.size(); ++b) m = build_block(word.blocks[b]) * m;
  return m;
}

/// Double-precision monodromy, rescaled by the max-modulus entry every 8
/// multiplications; the projective class is unchanged and the accumulated
/// log-scale is recorded.
inline ScaledMatrix monodromy_scaled(const MonodromyWord& word) {
  if (word.blocks.empty()) throw std::invalid_argument("monodromy: empty word");
  ScaledMatrix out{build_block(word.blocks.front()), 0.0};
  for (std::size_t b = 1; b < word.blocks.size(); ++b) {
    out.matrix = build_block(word.blocks[b]) * out.matrix;
    if (b % 8 == 0) {
      auto [i, j] = argmax_modulus(out.matrix);
      const double s = scalar_traits<Cplx>::modulus(out.matrix(i, j));
      if (s > 0.0) {
        out.matrix = Cplx{1.0 / s, 0.0} * out.matrix;
        out.log_scale += std::log(s);
      }
    }
  }
  return out;
}

}  // namespace fgdom
