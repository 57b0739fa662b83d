/**
 * @file flags.hpp
 * @brief Triple ratios and double ratios of explicit flag tuples.
 *
 * A complete flag in ℂⁿ is stored as an ordered basis (v₁,…,v_n); the p-th
 * subspace is span(v₁,…,v_p). A wedge a_{(p)} ∧ b_{(q)} ∧ c_{(r)} with
 * p+q+r = n is evaluated as the determinant of the n×n matrix whose columns
 * are the first p, q, r basis vectors of the respective flags; both ratios
 * below are ratios of such determinants and are therefore independent of the
 * basis representatives (each basis vector enters numerator and denominator
 * the same number of times).
 *
 * The pqr-triple ratio of (A,B,C), p+q+r = n, is
 *
 *     T_pqr =  (a_{p−1} ∧ b_{q+1} ∧ c_r)   (a_p ∧ b_{q−1} ∧ c_{r+1})   (a_{p+1} ∧ b_q ∧ c_{r−1})
 *              ------------------------- · ------------------------- · -------------------------
 *              (a_{p+1} ∧ b_{q−1} ∧ c_r)   (a_p ∧ b_{q+1} ∧ c_{r−1})   (a_{p−1} ∧ b_q ∧ c_{r+1})
 *
 * The r-th double ratio of (A,B,C,C') is the product
 *
 *     D_r =  (a_r ∧ b_{n−r−1} ∧ c_1)   (a_{r−1} ∧ b_{n−r} ∧ c'_1)
 *            ---------------------- · ------------------------
 *            (a_r ∧ b_{n−r−1} ∧ c'_1)  (a_{r−1} ∧ b_{n−r} ∧ c_1)
 *
 * with the overall sign fixed by the n=2 anchor: for flags spanned by
 * (z_i, 1) the value is the classical cross ratio
 * (z₁,z₂;z₃,z₄) = (z₁−z₃)(z₂−z₄) / ((z₁−z₄)(z₂−z₃)).
 */

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgdom/matrix.hpp"

namespace fgdom {

/// Complete flag given by an ordered basis of ℂⁿ.
struct Flag {
  int n = 0;
  std::vector<std::vector<Cplx>> basis;  // basis[p] = (p+1)-th basis vector

  static Flag from_basis(std::vector<std::vector<Cplx>> vecs) {
    Flag f;
    f.n = static_cast<int>(vecs.size());
    for (const auto& v : vecs)
      if (static_cast<int>(v.size()) != f.n)
        throw std::invalid_argument("Flag: basis vector of wrong dimension");
    // The vectors must actually span: reject (near-)dependent bases, scaled
    // relative to the entry magnitudes so the test is homogeneous.
    Matrix<Cplx> m(static_cast<std::size_t>(f.n), static_cast<std::size_t>(f.n));
    double scale = 1.0;
    for (int c = 0; c < f.n; ++c) {
      double colmax = 0.0;
      for (int r = 0; r < f.n; ++r) {
        m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            vecs[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        colmax = std::max(colmax, std::abs(m(static_cast<std::size_t>(r),
                                             static_cast<std::size_t>(c))));
      }
      scale *= colmax;
    }
    if (std::abs(determinant(m)) <= 1e-12 * scale)
      throw std::invalid_argument("Flag: basis vectors are linearly dependent");
    f.basis = std::move(vecs);
    return f;
  }
};

struct DegenerateConfiguration : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

/// det of the n×n matrix whose columns are the first counts[f] basis vectors
/// of each flag, in order. Σ counts must equal n.
inline Cplx wedge_det(const std::vector<const Flag*>& flags, const std::vector<int>& counts) {
  const int n = flags.front()->n;
  Matrix<Cplx> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  std::size_t col = 0;
  for (std::size_t f = 0; f < flags.size(); ++f)
    for (int p = 0; p < counts[f]; ++p, ++col)
      for (int row = 0; row < n; ++row)
        m(static_cast<std::size_t>(row), col) = flags[f]->basis[static_cast<std::size_t>(p)]
                                                    [static_cast<std::size_t>(row)];
  if (col != static_cast<std::size_t>(n))
    throw std::invalid_argument("wedge_det: counts do not sum to n");
  return determinant(m);
}

/// Degeneracy scale: product of the norms of the participating columns.
inline double wedge_scale(const std::vector<const Flag*>& flags, const std::vector<int>& counts) {
  double scale = 1.0;
  for (std::size_t f = 0; f < flags.size(); ++f)
    for (int p = 0; p < counts[f]; ++p) {
      double norm = 0.0;
      for (const Cplx& v : flags[f]->basis[static_cast<std::size_t>(p)])
        norm += std::norm(v);
      scale *= std::sqrt(norm);
    }
  return scale;
}

inline Cplx checked_ratio(const std::vector<const Flag*>& flags, const std::vector<int>& num,
                          const std::vector<int>& den) {
  const Cplx d = wedge_det(flags, den);
  if (std::abs(d) < 1e-10 * wedge_scale(flags, den))
    throw DegenerateConfiguration("DegenerateConfiguration: vanishing wedge determinant");
  return wedge_det(flags, num) / d;
}

}  // namespace detail

/// pqr-triple ratio of a triple of flags in general position, p+q+r = n.
inline Cplx triple_ratio(const Flag& A, const Flag& B, const Flag& C, int p, int q, int r) {
  const int n = A.n;
  if (p < 1 || q < 1 || r < 1 || p + q + r != n)
    throw std::invalid_argument("triple_ratio: need positive p,q,r with p+q+r=n");
  const std::vector<const Flag*> f{&A, &B, &C};
  Cplx out = detail::checked_ratio(f, {p - 1, q + 1, r}, {p + 1, q - 1, r});
  out *= detail::checked_ratio(f, {p, q - 1, r + 1}, {p, q + 1, r - 1});
  out *= detail::checked_ratio(f, {p + 1, q, r - 1}, {p - 1, q, r + 1});
  return out;
}

/// r-th double ratio of (A, B, C, C'), 1 ≤ r ≤ n−1; reduces to the classical
/// cross ratio for n = 2 (see file header for the sign convention).
inline Cplx double_ratio(const Flag& A, const Flag& B, const Flag& C, const Flag& Cp, int r) {
  const int n = A.n;
  if (r < 1 || r > n - 1) throw std::invalid_argument("double_ratio: index out of range");
  const std::vector<const Flag*> fc{&A, &B, &C};
  const std::vector<const Flag*> fcp{&A, &B, &Cp};
  const Cplx den1 = detail::wedge_det(fcp, {r, n - r - 1, 1});
  const Cplx den2 = detail::wedge_det(fc, {r - 1, n - r, 1});
  if (std::abs(den1) < 1e-10 * detail::wedge_scale(fcp, {r, n - r - 1, 1}) ||
      std::abs(den2) < 1e-10 * detail::wedge_scale(fc, {r - 1, n - r, 1}))
    throw DegenerateConfiguration("DegenerateConfiguration: vanishing wedge determinant");
  return (detail::wedge_det(fc, {r, n - r - 1, 1}) / den1) *
         (detail::wedge_det(fcp, {r - 1, n - r, 1}) / den2);
}

struct GeneralPositionResult {
  bool ok = true;
  std::vector<int> witness;  // the violating (p,q,r) or (p,q,r,s)
};

/// General position test: every wedge determinant with nonnegative counts
/// summing to n must be nonzero. Works for triples and quadruples.
inline GeneralPositionResult general_position_check(const std::vector<const Flag*>& flags) {
  const int n = flags.front()->n;
  GeneralPositionResult res;
  std::vector<int> counts(flags.size(), 0);
  auto rec = [&](auto&& self, std::size_t f, int remaining) -> bool {
    if (f + 1 == flags.size()) {
      counts[f] = remaining;
      const Cplx d = detail::wedge_det(flags, counts);
      if (std::abs(d) < 1e-10 * detail::wedge_scale(flags, counts)) {
        res.ok = false;
        res.witness = counts;
        return false;
      }
      return true;
    }
    for (int p = 0; p <= remaining; ++p) {
      counts[f] = p;
      if (!self(self, f + 1, remaining - p)) return false;
    }
    return true;
  };
  rec(rec, 0, n);
  return res;
}

inline GeneralPositionResult general_position_check(const Flag& A, const Flag& B, const Flag& C) {
  return general_position_check({&A, &B, &C});
}

inline GeneralPositionResult general_position_check(const Flag& A, const Flag& B, const Flag& C,
                                                    const Flag& D) {
  return general_position_check({&A, &B, &C, &D});
}

}  // namespace fgdom
