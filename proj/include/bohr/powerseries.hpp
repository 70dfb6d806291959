// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

/// Default truncation order for series built by the toolkit.
inline constexpr std::size_t kDefaultOrder = 256;

/// Below this modulus a constant term is treated as zero by reciprocal().
inline constexpr double kDefaultZeroTolerance = 1e-14;

/// A power series c_0 + c_1 z + ... + c_N z^N known modulo z^{N+1}.
///
/// The optional sup bound records a known bound on sup_{|z|<1} |f(z)|; a
/// bound of 1 marks a member of the Schur class. Values are immutable once
/// built.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coeffs,
                           std::optional<double> sup_bound = std::nullopt);

  static TruncatedSeries zero(std::size_t order);
  static TruncatedSeries constant(Complex value, std::size_t order);
  /// The identity map z, truncated at `order`.
  static TruncatedSeries identity(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_[k]; }
  std::optional<double> sup_bound() const noexcept { return sup_bound_; }

  /// Index of the last nonzero coefficient (0 for the zero series).
  std::size_t degree() const noexcept;

  /// Same coefficients cut (or zero-padded) to `order`; keeps the bound.
  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries with_sup_bound(std::optional<double> bound) const;

  /// Checks the Cauchy estimate |c_k| <= 1 and Wiener's inequality
  /// |c_k| <= 1 - |c_0|^2 (k >= 1), both up to `slack`.
  bool satisfies_schur_coefficient_bounds(double slack = 1e-12) const;

 private:
  std::vector<Complex> coeffs_;
  std::optional<double> sup_bound_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(Complex scalar, const TruncatedSeries& a);

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse modulo z^{N+1}; throws ZeroConstantTerm when
/// |c_0| < zero_tol.
TruncatedSeries reciprocal(const TruncatedSeries& a,
                           double zero_tol = kDefaultZeroTolerance);

/// Truncated series of (a - s(z)) / (1 - a s(z)) for a in [0, 1).
TruncatedSeries mobius_map(double a, const TruncatedSeries& s);

/// z^m s(z^p): coefficient kp+m is s_k, everything else is zero.
TruncatedSeries monomial_lift(const TruncatedSeries& s, int m, int p);

/// z^k s(z), keeping the order of s.
TruncatedSeries shift(const TruncatedSeries& s, std::size_t k);

/// s(c z): coefficient k is multiplied by c^k.
TruncatedSeries rescale(const TruncatedSeries& s, Complex c);

/// Horner evaluation of the truncated polynomial.
Complex evaluate(const TruncatedSeries& s, Complex z);

/// Worst-case neglected tail r^{N+1}/(1-r) for coefficients bounded by 1.
double tail_bound(std::size_t order, double r);

/// Smallest order N with tail_bound(N, r) <= tol.
std::size_t required_order(double r, double tol);

}  // namespace bohr
