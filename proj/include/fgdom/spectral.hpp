/**
 * @file spectral.hpp
 * @brief Eigen-moduli, spectral radius, exterior powers, Collatz–Wielandt
 *        bounds, length functionals and majorization checks.
 *
 * Length functionals of an invertible matrix with eigenvalue moduli
 * |λ₁| ≤ … ≤ |λ_n|:
 *   - Hilbert length        ln(|λ_n| / |λ₁|),
 *   - translation length    sqrt(Σ (log|λ_i| − c)²), c the mean log-modulus
 *                           (equals the symmetric-space displacement of any
 *                           det-1 representative; centering avoids n-th-root
 *                           branch choices and makes the value scale-invariant),
 *   - ℓ_k                   log of (top-k product)/(bottom-k product) of
 *                           moduli, computed from centered logs,
 *   - gaps ℓ^i              ln(|λ_{i+1}| / |λ_i|).
 *
 * Eigen-moduli are computed on two independent paths:
 *   - primary: the characteristic polynomial, with coefficients obtained as
 *     compensated sums of principal minors, rooted from companion-matrix
 *     starting points and polished by Newton iteration. Evaluating the
 *     polynomial near a small, well-separated root is dominated by its
 *     trailing (relatively accurate) coefficients, so small moduli keep
 *     good RELATIVE accuracy even when the spectrum spans many orders of
 *     magnitude — where a dense eigensolver's backward error ε‖A‖ would
 *     swamp them;
 *   - cross-check: the spectral radius of the k-th exterior power (the
 *     compound matrix of k×k minors) equals the product of the top k moduli.
 * Disagreement between the paths flags a clustered/ill-conditioned spectrum
 * instead of silently returning unreliable values; the primary result is kept.
 */

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "fgdom/matrix.hpp"

namespace fgdom {

struct EigenModuli {
  std::vector<double> moduli;  // ascending
  bool clustered = false;      // dual-path cross-check disagreed
};

inline Eigen::MatrixXcd to_eigen(const Matrix<Cplx>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

/// k-th exterior power: the C(n,k)×C(n,k) matrix of k×k minors, rows and
/// columns indexed by lexicographic k-subsets.
template <typename T>
Matrix<T> exterior_power(const Matrix<T>& m, std::size_t k) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("exterior_power: non-square");
  if (k < 1 || k > n) throw std::invalid_argument("exterior_power: order out of range");
  const auto subsets = k_subsets(n, k);
  Matrix<T> out(subsets.size(), subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      out(i, j) = minor_of(m, subsets[i], subsets[j]);
  return out;
}

namespace detail {

/// Dense-solver eigenvalue moduli, ascending. The dominant ones are reliable
/// (used for spectral radii and as root-finder starting points); the small
/// ones are not when the spread is large.
inline std::vector<double> solver_eigen_moduli(const Matrix<Cplx>& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_moduli: eigensolver failed to converge");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    out.push_back(std::abs(solver.eigenvalues()[i]));
  std::sort(out.begin(), out.end());
  return out;
}

/// Exact image of a double matrix (binary doubles convert to rationals
/// without rounding).
inline Matrix<RatC> to_exact(const Matrix<Cplx>& m) {
  Matrix<RatC> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = RatC{Rat(m(i, j).real()), Rat(m(i, j).imag())};
  return out;
}

/// Monic characteristic polynomial coefficients (c_1, …, c_n) of
/// λ^n + c_1 λ^{n−1} + … + c_n, with c_k = (−1)^k · Σ(principal k-minors).
/// Minors and sums are evaluated in exact rational arithmetic and rounded
/// once at the end: with a wildly spread spectrum the minors are tiny
/// differences of O(1) products, and computing them in doubles would lose
/// all relative accuracy.
inline std::vector<Cplx> char_poly(const Matrix<Cplx>& m) {
  const std::size_t n = m.rows();
  const Matrix<RatC> ex = to_exact(m);
  std::vector<Cplx> coeffs(n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatC sum;
    for (const auto& I : k_subsets(n, k)) sum += minor_of(ex, I, I);
    coeffs[k - 1] = (k % 2 == 0) ? to_cplx(sum) : to_cplx(-sum);
  }
  return coeffs;
}

/// Horner evaluation of the monic polynomial and its derivative.
inline void horner(const std::vector<Cplx>& c, const Cplx& x, Cplx& p, Cplx& dp) {
  p = Cplx{1.0, 0.0};
  dp = Cplx{0.0, 0.0};
  for (const Cplx& ck : c) {
    dp = dp * x + p;
    p = p * x + ck;
  }
}

/// Newton-polished roots of the monic characteristic polynomial, starting
/// from the dense solver's eigenvalues of the source matrix.
inline std::vector<Cplx> polished_roots(const Matrix<Cplx>& m, const std::vector<Cplx>& coeffs) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_moduli: eigensolver failed to converge");
  std::vector<Cplx> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    Cplx x = solver.eigenvalues()[i];
    for (int it = 0; it < 64; ++it) {
      Cplx p, dp;
      horner(coeffs, x, p, dp);
      if (scalar_traits<Cplx>::is_zero(dp)) break;
      const Cplx step = p / dp;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::abs(x)) break;
    }
    roots.push_back(x);
  }
  return roots;
}

}  // namespace detail

/// Moduli of the eigenvalues, ascending. Primary path: characteristic
/// polynomial (compensated principal-minor sums) with Newton-polished roots;
/// cross-check path: σ(∧^k m) = |λ_n|·…·|λ_{n−k+1}|. Throws on singular
/// input; sets `clustered` when the paths disagree by more than
/// `crosscheck_tol` relative (the primary result is kept).
inline EigenModuli eigen_moduli(const Matrix<Cplx>& m, double crosscheck_tol = 1e-6) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eigen_moduli: non-square");
  const std::size_t n = m.rows();
  // Work on m/s to keep coefficients in range; moduli scale linearly in s.
  auto [si, sj] = argmax_modulus(m);
  const double s = scalar_traits<Cplx>::modulus(m(si, sj));
  if (s <= 0.0) throw std::domain_error("SingularMatrix: zero matrix");
  const Matrix<Cplx> ms = Cplx{1.0 / s, 0.0} * m;

  EigenModuli result;
  const auto coeffs = detail::char_poly(ms);
  for (const Cplx& root : detail::polished_roots(ms, coeffs))
    result.moduli.push_back(std::abs(root));
  std::sort(result.moduli.begin(), result.moduli.end());
  if (result.moduli.front() <= 0.0)
    throw std::domain_error("SingularMatrix: zero eigenvalue modulus");
  // Cross-check: top-k partial products against compound spectral radii
  // (dominant eigenvalues of the compounds, which are well-conditioned).
  // Compound entries are exact minors rounded to double, for the same
  // cancellation reason as the characteristic coefficients.
  const Matrix<RatC> exact_ms = detail::to_exact(ms);
  for (std::size_t k = 1; k <= n - 1 && !result.clustered; ++k) {
    const double via_compound =
        k == 1 ? detail::solver_eigen_moduli(ms).back()
               : detail::solver_eigen_moduli(to_cplx(exterior_power(exact_ms, k))).back();
    double top_product = 1.0;
    for (std::size_t i = n - k; i < n; ++i) top_product *= result.moduli[i];
    const double denom = std::max(top_product, via_compound);
    if (denom > 0.0 && std::abs(top_product - via_compound) / denom > crosscheck_tol)
      result.clustered = true;
  }
  // Determinant identity: the product of all moduli must match |det| (the
  // trailing characteristic coefficient, computed by compensated summation).
  {
    const double abs_det = std::abs(coeffs.back());
    double product = 1.0;
    for (double v : result.moduli) product *= v;
    const double denom = std::max(product, abs_det);
    if (denom > 0.0 && std::abs(product - abs_det) / denom > crosscheck_tol)
      result.clustered = true;
  }
  for (double& v : result.moduli) v *= s;
  return result;
}

/// σ(A) = max eigenvalue modulus (dense solver; the dominant eigenvalue is
/// well-conditioned).
inline double spectral_radius(const Matrix<Cplx>& m) {
  return detail::solver_eigen_moduli(m).back();
}

/// Collatz–Wielandt lower bound for a nonnegative matrix: for x ≥ 0, x ≠ 0,
/// min over supported coordinates of (Mx)_i / x_i ≤ σ(M), with equality at
/// the Perron vector.
inline double collatz_wielandt_bound(const Matrix<Cplx>& m, const std::vector<double>& x) {
  const std::size_t n = m.rows();
  if (x.size() != n) throw std::invalid_argument("collatz_wielandt_bound: size mismatch");
  bool any = false;
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] <= 0.0) continue;
    double mx = 0.0;
    for (std::size_t j = 0; j < n; ++j) mx += m(i, j).real() * x[j];
    const double ratio = mx / x[i];
    best = any ? std::min(best, ratio) : ratio;
    any = true;
  }
  if (!any) throw std::invalid_argument("collatz_wielandt_bound: zero vector");
  return best;
}

/// Ascending log-moduli of an EigenModuli tuple.
inline std::vector<double> log_moduli(const EigenModuli& em) {
  std::vector<double> logs;
  logs.reserve(em.moduli.size());
  for (double v : em.moduli) logs.push_back(std::log(v));
  return logs;
}

/// Centered (sum = 0) copy of ascending log-moduli. All length functionals
/// below are computed on centered logs and are therefore scale-invariant.
inline std::vector<double> centered_logs(std::vector<double> logs) {
  const double mean =
      std::accumulate(logs.begin(), logs.end(), 0.0) / static_cast<double>(logs.size());
  for (double& v : logs) v -= mean;
  return logs;
}

inline std::vector<double> centered_log_moduli(const EigenModuli& em) {
  return centered_logs(log_moduli(em));
}

inline double hilbert_length_logs(const std::vector<double>& logs) {
  return logs.back() - logs.front();
}

inline double hilbert_length(const EigenModuli& em) {
  return hilbert_length_logs(log_moduli(em));
}

inline double hilbert_length(const Matrix<Cplx>& m) { return hilbert_length(eigen_moduli(m)); }

inline double translation_length_logs(const std::vector<double>& logs) {
  double s = 0.0;
  for (double v : centered_logs(logs)) s += v * v;
  return std::sqrt(s);
}

inline double translation_length(const EigenModuli& em) {
  return translation_length_logs(log_moduli(em));
}

inline double translation_length(const Matrix<Cplx>& m) {
  return translation_length(eigen_moduli(m));
}

/// ℓ_k = log of (|λ_{n−k+1}|⋯|λ_n|)/(|λ₁|⋯|λ_k|), k = 1..n−1; ℓ_1 is the
/// Hilbert length.
inline std::vector<double> lk_lengths_logs(const std::vector<double>& logs_in) {
  const auto logs = centered_logs(logs_in);
  const std::size_t n = logs.size();
  std::vector<double> out(n - 1, 0.0);
  double top = 0.0, bottom = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    top += logs[n - k];
    bottom += logs[k - 1];
    out[k - 1] = top - bottom;
  }
  return out;
}

inline std::vector<double> lk_lengths(const EigenModuli& em) {
  return lk_lengths_logs(log_moduli(em));
}

inline std::vector<double> lk_lengths(const Matrix<Cplx>& m) {
  return lk_lengths(eigen_moduli(m));
}

/// Gap lengths ℓ^i = ln(|λ_{i+1}|/|λ_i|), i = 1..n−1, each ≥ 0.
inline std::vector<double> gap_lengths_logs(const std::vector<double>& logs) {
  std::vector<double> out;
  out.reserve(logs.size() - 1);
  for (std::size_t i = 0; i + 1 < logs.size(); ++i) out.push_back(logs[i + 1] - logs[i]);
  return out;
}

inline std::vector<double> gap_lengths(const EigenModuli& em) {
  return gap_lengths_logs(log_moduli(em));
}

inline std::vector<double> gap_lengths(const Matrix<Cplx>& m) {
  return gap_lengths(eigen_moduli(m));
}

/// Weak (sub)majorization x ≺_w y: every partial sum of the descending
/// rearrangement of x is ≤ the corresponding partial sum for y, within tol.
inline bool weak_majorization(std::vector<double> x, std::vector<double> y, double tol = 0.0) {
  if (x.size() != y.size()) throw std::invalid_argument("weak_majorization: length mismatch");
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    if (sx > sy + tol) return false;
  }
  return true;
}

/// Singular values (square roots of the eigenvalues of m·m*), ascending.
inline std::vector<double> singular_values(const Matrix<Cplx>& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(svd.singularValues().size()));
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    out.push_back(svd.singularValues()[i]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fgdom
