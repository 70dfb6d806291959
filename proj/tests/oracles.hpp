// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0
//
// Reference computations that do not go through the library's series
// arithmetic, plus small seeded generators for property tests.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

// f(z) for the Schur-parameter recursion, evaluated pointwise:
// f_M = g_M, f_j = (g_j + z f_{j+1}) / (1 + conj(g_j) z f_{j+1}).
inline Complex schur_value(const std::vector<Complex>& gammas, Complex z) {
  Complex f = gammas.back();
  for (std::size_t j = gammas.size() - 1; j-- > 0;) {
    const Complex zf = z * f;
    f = (gammas[j] + zf) / (1.0 + std::conj(gammas[j]) * zf);
  }
  return f;
}

// Taylor coefficients c_0..c_{count-1} of an analytic f recovered by the
// trapezoid rule on |z| = rho with `points` nodes:
// c_k ~ (1/(points rho^k)) sum_j f(rho w^j) w^{-jk}, w = exp(2 pi i / points).
template <typename F>
std::vector<Complex> fourier_coefficients(F&& f, double rho, int points, int count) {
  std::vector<Complex> values(points);
  for (int j = 0; j < points; ++j)
    values[j] = f(std::polar(rho, 2.0 * std::numbers::pi * j / points));
  std::vector<Complex> out(count);
  for (int k = 0; k < count; ++k) {
    Complex acc{};
    for (int j = 0; j < points; ++j) {
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(j) * k / points;
      acc += values[j] * std::polar(1.0, angle);
    }
    out[k] = acc / (static_cast<double>(points) * std::pow(rho, k));
  }
  return out;
}

// Taylor coefficient n of (a - z)/(1 - a z): a, then -(1 - a^2) a^{n-1}.
inline double mobius_coefficient(double a, int n) {
  return n == 0 ? a : -(1.0 - a * a) * std::pow(a, n - 1);
}

// Bohr sum of the Mobius map: a + (1 - a^2) r / (1 - a r).
inline double mobius_bohr_sum(double a, double r) { return a + (1.0 - a * a) * r / (1.0 - a * r); }

// Theorem B left side on the Mobius family, summed in closed form.
inline double mobius_refined_lhs(double a, double r) {
  const double b = 1.0 - a * a;
  const double linear = b * r / (1.0 - a * r);
  const double squares = b * b * r * r / (1.0 - a * a * r * r);
  return linear + (1.0 / (1.0 + a) + r / (1.0 - r)) * squares;
}

struct Generator {
  explicit Generator(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  Complex in_disk(double radius) {
    return std::polar(radius * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform());
  }
  std::vector<Complex> complex_vector(std::size_t n, double scale = 1.0) {
    std::vector<Complex> v(n);
    for (auto& x : v) x = Complex(uniform(-scale, scale), uniform(-scale, scale));
    return v;
  }

  std::mt19937_64 engine;
};

}  // namespace oracle
