// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/powerseries.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs,
                                 std::optional<double> sup_bound)
    : coeffs_(std::move(coeffs)), sup_bound_(sup_bound) {
  if (coeffs_.empty()) raise(ErrorKind::EmptySeries, "series needs at least c_0");
  if (sup_bound_ && !(*sup_bound_ >= 0.0))
    raise(ErrorKind::ParameterOutOfRange, "sup bound must be nonnegative");
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1), 0.0);
}

TruncatedSeries TruncatedSeries::constant(Complex value, std::size_t order) {
  std::vector<Complex> c(order + 1);
  c[0] = value;
  return TruncatedSeries(std::move(c), std::abs(value));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  std::vector<Complex> c(order + 1);
  if (order >= 1) c[1] = 1.0;
  return TruncatedSeries(std::move(c), 1.0);
}

std::size_t TruncatedSeries::degree() const noexcept {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{}) return k;
  }
  return 0;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  std::vector<Complex> c(order + 1);
  std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
  return TruncatedSeries(std::move(c), sup_bound_);
}

TruncatedSeries TruncatedSeries::with_sup_bound(std::optional<double> bound) const {
  return TruncatedSeries(coeffs_, bound);
}

bool TruncatedSeries::satisfies_schur_coefficient_bounds(double slack) const {
  const double wiener = 1.0 - std::norm(coeffs_[0]);
  if (std::abs(coeffs_[0]) > 1.0 + slack) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    const double mod = std::abs(coeffs_[k]);
    if (mod > 1.0 + slack || mod > wiener + slack) return false;
  }
  return true;
}

namespace {

std::optional<double> combine_bounds(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.sup_bound() && b.sup_bound()) return *a.sup_bound() + *b.sup_bound();
  return std::nullopt;
}

TruncatedSeries pointwise(const TruncatedSeries& a, const TruncatedSeries& b, double sign) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = a[k] + sign * b[k];
  return TruncatedSeries(std::move(c), combine_bounds(a, b));
}

}  // namespace

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return pointwise(a, b, 1.0);
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return pointwise(a, b, -1.0);
}

TruncatedSeries operator*(Complex scalar, const TruncatedSeries& a) {
  std::vector<Complex> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= scalar;
  std::optional<double> bound;
  if (a.sup_bound()) bound = std::abs(scalar) * *a.sup_bound();
  return TruncatedSeries(std::move(c), bound);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  // Iterate over the sparser operand's nonzero support.
  const bool swap = a.degree() > b.degree();
  const TruncatedSeries& outer = swap ? b : a;
  const TruncatedSeries& inner = swap ? a : b;
  const std::size_t outer_deg = std::min(outer.degree(), n);

  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= outer_deg; ++i) {
    const Complex ai = outer[i];
    if (ai == Complex{}) continue;
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += ai * inner[j];
  }
  std::optional<double> bound;
  if (a.sup_bound() && b.sup_bound()) bound = *a.sup_bound() * *b.sup_bound();
  return TruncatedSeries(std::move(c), bound);
}

TruncatedSeries reciprocal(const TruncatedSeries& a, double zero_tol) {
  const Complex c0 = a[0];
  if (std::abs(c0) < zero_tol)
    raise(ErrorKind::ZeroConstantTerm, "reciprocal of a series vanishing at 0");
  const std::size_t n = a.order();
  const std::size_t deg = a.degree();
  const Complex inv = 1.0 / c0;

  std::vector<Complex> g(n + 1);
  g[0] = inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    const std::size_t top = std::min(k, deg);
    for (std::size_t j = 1; j <= top; ++j) acc += a[j] * g[k - j];
    g[k] = -inv * acc;
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries mobius_map(double a, const TruncatedSeries& s) {
  if (!(a >= 0.0 && a < 1.0))
    raise(ErrorKind::ParameterOutOfRange, "Mobius parameter must lie in [0,1)");
  if (!s.sup_bound() || *s.sup_bound() > 1.0 + 1e-12)
    raise(ErrorKind::ParameterOutOfRange, "Mobius map needs an input bounded by 1");
  const std::size_t n = s.order();
  const auto one = TruncatedSeries::constant(1.0, n);
  const auto num = TruncatedSeries::constant(a, n) - s;
  const auto den = one - Complex(a) * s;
  return mul(num, reciprocal(den)).with_sup_bound(1.0);
}

TruncatedSeries monomial_lift(const TruncatedSeries& s, int m, int p) {
  if (m < 0 || p < 1)
    raise(ErrorKind::ParameterOutOfRange, "monomial lift needs m >= 0 and p >= 1");
  const std::size_t step = static_cast<std::size_t>(p);
  const std::size_t offset = static_cast<std::size_t>(m);
  std::vector<Complex> c(s.order() * step + offset + 1);
  for (std::size_t k = 0; k <= s.order(); ++k) c[k * step + offset] = s[k];
  return TruncatedSeries(std::move(c), s.sup_bound());
}

TruncatedSeries shift(const TruncatedSeries& s, std::size_t k) {
  std::vector<Complex> c(s.order() + 1);
  for (std::size_t i = 0; i + k <= s.order(); ++i) c[i + k] = s[i];
  return TruncatedSeries(std::move(c), s.sup_bound());
}

TruncatedSeries rescale(const TruncatedSeries& s, Complex c) {
  std::vector<Complex> out(s.order() + 1);
  Complex power = 1.0;
  for (std::size_t k = 0; k <= s.order(); ++k) {
    out[k] = s[k] * power;
    power *= c;
  }
  // |c| <= 1 keeps the image inside the original disk.
  std::optional<double> bound;
  if (std::abs(c) <= 1.0) bound = s.sup_bound();
  return TruncatedSeries(std::move(out), bound);
}

Complex evaluate(const TruncatedSeries& s, Complex z) {
  Complex acc{};
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * z + s[k];
  return acc;
}

double tail_bound(std::size_t order, double r) {
  if (r <= 0.0) return 0.0;
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  return std::pow(r, static_cast<double>(order) + 1.0) / (1.0 - r);
}

std::size_t required_order(double r, double tol) {
  if (!(tol > 0.0)) raise(ErrorKind::ParameterOutOfRange, "tolerance must be positive");
  if (r <= 0.0) return 0;
  if (r >= 1.0) raise(ErrorKind::RadiusOutOfRange, "no finite order reaches r >= 1");
  const double needed = std::log(tol * (1.0 - r)) / std::log(r);
  auto order = static_cast<std::size_t>(std::max(0.0, std::ceil(needed) - 1.0));
  while (tail_bound(order, r) > tol) ++order;
  while (order > 0 && tail_bound(order - 1, r) <= tol) --order;
  return order;
}

}  // namespace bohr
