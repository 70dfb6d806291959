// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace bohr {

enum class RadiusId {
  ThmC34,       // r^{2p} + r^{p+m} - 1
  Thm31,        // r (2 - a0^2 - a0^s) - (1 - a0^s)
  Thm32,        // G(r) = 5r^{2p+m} - 2r^{p+m} + r^m + 4r^p - 4
  Cor43,        // r^{2p+m} + 2r^{2p} - 1
  ClassicBohr,  // 3r - 1
  Alternating,  // 3r^2 - 1
};

std::string_view to_string(RadiusId id);
RadiusId parse_radius_id(std::string_view name);

/// A sharp-radius equation and its parameters. a0 and s are only read by
/// Thm31; p and m are ignored by ClassicBohr and Alternating.
struct RadiusSpec {
  RadiusId id = RadiusId::ClassicBohr;
  int p = 1;
  int m = 0;
  double a0 = 0.0;
  double s = 1.0;
};

/// Throws ParameterOutOfRange when the spec violates its invariants.
void validate(const RadiusSpec& spec);

inline constexpr double kDefaultRadiusTolerance = 1e-12;
inline constexpr int kMaxBisectionSteps = 200;

double equation_value(const RadiusSpec& spec, double r);

/// The Theorem C form r^p (r^p + r^m) - 1, kept as a separate evaluation
/// path from the expanded ThmC34 equation.
double theorem_c_equation(int p, int m, double r);

/// Closed form of the root when one is known for this spec.
std::optional<double> closed_form_radius(const RadiusSpec& spec);

/// Bisection on [lo, hi] for a sign change of `f`; the returned midpoint is
/// within `tol` of the bracketed root. Throws NoSignChange when f(lo) and
/// f(hi) do not straddle zero.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Root in (0,1) found by bisection regardless of closed forms.
double bisect_radius(const RadiusSpec& spec, double tol = kDefaultRadiusTolerance);

/// Closed form when available, bisection otherwise.
double solve_radius(const RadiusSpec& spec, double tol = kDefaultRadiusTolerance);

/// Radius at which the Mobius family (a - z)/(1 - a z) reaches Bohr sum 1,
/// found by bisection on a + (1 - a^2) r / (1 - a r) = 1.
double mobius_equality_radius(double a, double tol = kDefaultRadiusTolerance);

/// Infimum over a in [0,1) of mobius_equality_radius, refined on the grid
/// a_k = 1 - 2^{-k} until successive values agree to tol.
double classical_bohr_radius(double tol = kDefaultRadiusTolerance);

/// Infimum over a in [0,1) of the per-function radius of Thm31 with
/// exponent s: min(1/2, s/(2+s)).
double thm31_uniform_radius(double s);

}  // namespace bohr
