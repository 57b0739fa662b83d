/**
 * @file scalars.hpp
 * @brief Arithmetic backends: double-precision complex and exact Gaussian-rational complex.
 *
 * All matrix factorizations in this library are rational functions of the
 * coordinates, so they can be evaluated over any field. Two backends are used:
 *
 *  - Cplx  = std::complex<double>  — fast path for experiments;
 *  - RatC  = a + b·i with a, b exact rationals (Gaussian rationals) — exact
 *            path for the identity suites, where "equals the identity matrix"
 *            must mean literal equality, not closeness.
 *
 * RatC is a field (the norm a²+b² of a nonzero element is a positive rational,
 * so division is exact), which is all the factorizations need: they divide only
 * by coordinates and their products, never take roots.
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgdom {

using Cplx = std::complex<double>;
using Rat = boost::multiprecision::cpp_rational;

/// Exact complex number with rational real and imaginary parts.
struct RatC {
  Rat re{0};
  Rat im{0};

  RatC() = default;
  RatC(int v) : re(v) {}  // NOLINT: implicit from integer literals is intended
  RatC(Rat r) : re(std::move(r)) {}
  RatC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  friend RatC operator+(const RatC& a, const RatC& b) { return {a.re + b.re, a.im + b.im}; }
  friend RatC operator-(const RatC& a, const RatC& b) { return {a.re - b.re, a.im - b.im}; }
  friend RatC operator-(const RatC& a) { return {-a.re, -a.im}; }
  friend RatC operator*(const RatC& a, const RatC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend RatC operator/(const RatC& a, const RatC& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("RatC: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  RatC& operator+=(const RatC& o) { return *this = *this + o; }
  RatC& operator-=(const RatC& o) { return *this = *this - o; }
  RatC& operator*=(const RatC& o) { return *this = *this * o; }
  RatC& operator/=(const RatC& o) { return *this = *this / o; }
  friend bool operator==(const RatC& a, const RatC& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const RatC& a, const RatC& b) { return !(a == b); }
};

/// Scalar traits bridging the two backends in templated code.
template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Cplx> {
  static Cplx zero() { return {0.0, 0.0}; }
  static Cplx one() { return {1.0, 0.0}; }
  static bool is_zero(const Cplx& v) { return v == Cplx{0.0, 0.0}; }
  /// Overflow-safe modulus.
  static double modulus(const Cplx& v) { return std::hypot(v.real(), v.imag()); }
};

template <>
struct scalar_traits<RatC> {
  static RatC zero() { return {}; }
  static RatC one() { return {1}; }
  static bool is_zero(const RatC& v) { return v.is_zero(); }
  /// Squared modulus (the modulus itself is generally irrational); used only
  /// for pivot selection where relative size is all that matters.
  static Rat norm(const RatC& v) { return v.re * v.re + v.im * v.im; }
};

inline Cplx to_cplx(const RatC& v) {
  return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

inline std::string to_string(const RatC& v) {
  return v.re.str() + (v.im < 0 ? "" : "+") + v.im.str() + "i";
}

}  // namespace fgdom
