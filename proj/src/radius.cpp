// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/radius.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

constexpr double kMinTolerance = 4.0 * std::numeric_limits<double>::epsilon();
// G(r) is bracketed from a small positive start.
constexpr double kThm32BracketStart = 1e-6;

bool uses_shape(RadiusId id) {
  return id == RadiusId::ThmC34 || id == RadiusId::Thm32 || id == RadiusId::Cor43;
}

}  // namespace

std::string_view to_string(RadiusId id) {
  switch (id) {
    case RadiusId::ThmC34: return "ThmC34";
    case RadiusId::Thm31: return "Thm31";
    case RadiusId::Thm32: return "Thm32";
    case RadiusId::Cor43: return "Cor43";
    case RadiusId::ClassicBohr: return "ClassicBohr";
    case RadiusId::Alternating: return "Alternating";
  }
  return "Unknown";
}

RadiusId parse_radius_id(std::string_view name) {
  for (auto id : {RadiusId::ThmC34, RadiusId::Thm31, RadiusId::Thm32, RadiusId::Cor43,
                  RadiusId::ClassicBohr, RadiusId::Alternating}) {
    if (to_string(id) == name) return id;
  }
  raise(ErrorKind::UnknownTheorem, "unknown radius equation '" + std::string(name) + "'");
}

void validate(const RadiusSpec& spec) {
  if (uses_shape(spec.id) && (spec.p < 1 || spec.m < 0 || spec.m > spec.p)) {
    raise(ErrorKind::ParameterOutOfRange, "radius spec needs p >= 1 and 0 <= m <= p");
  }
  if (spec.id == RadiusId::Thm31) {
    if (!(spec.a0 >= 0.0 && spec.a0 < 1.0))
      raise(ErrorKind::ParameterOutOfRange, "Thm31 needs |f(0)| in [0,1)");
    if (!(spec.s > 0.0)) raise(ErrorKind::ParameterOutOfRange, "Thm31 needs s > 0");
  }
}

double equation_value(const RadiusSpec& spec, double r) {
  if (!(r >= 0.0 && r <= 1.0))
    raise(ErrorKind::RadiusOutOfRange, "radius equations live on [0,1]");
  validate(spec);
  const int p = spec.p;
  const int m = spec.m;
  switch (spec.id) {
    case RadiusId::ThmC34:
      return std::pow(r, 2 * p) + std::pow(r, p + m) - 1.0;
    case RadiusId::Thm31: {
      const double as = std::pow(spec.a0, spec.s);
      return r * (2.0 - spec.a0 * spec.a0 - as) - (1.0 - as);
    }
    case RadiusId::Thm32:
      return 5.0 * std::pow(r, 2 * p + m) - 2.0 * std::pow(r, p + m) + std::pow(r, m) +
             4.0 * std::pow(r, p) - 4.0;
    case RadiusId::Cor43:
      return std::pow(r, 2 * p + m) + 2.0 * std::pow(r, 2 * p) - 1.0;
    case RadiusId::ClassicBohr:
      return 3.0 * r - 1.0;
    case RadiusId::Alternating:
      return 3.0 * r * r - 1.0;
  }
  raise(ErrorKind::UnknownTheorem, "unhandled radius equation");
}

double theorem_c_equation(int p, int m, double r) {
  return std::pow(r, p) * (std::pow(r, p) + std::pow(r, m)) - 1.0;
}

std::optional<double> closed_form_radius(const RadiusSpec& spec) {
  validate(spec);
  const double p = spec.p;
  switch (spec.id) {
    case RadiusId::Thm31: {
      const double as = std::pow(spec.a0, spec.s);
      return (1.0 - as) / (2.0 - spec.a0 * spec.a0 - as);
    }
    case RadiusId::Thm32:
      if (spec.m == 0) return std::pow(0.6, 1.0 / p);
      return std::nullopt;
    case RadiusId::Cor43:
      if (spec.m == 0) return std::pow(3.0, -1.0 / (2.0 * p));
      return std::nullopt;
    case RadiusId::ThmC34:
      if (spec.m == spec.p) return std::pow(2.0, -1.0 / (2.0 * p));
      return std::nullopt;
    case RadiusId::ClassicBohr:
      return 1.0 / 3.0;
    case RadiusId::Alternating:
      return 1.0 / std::sqrt(3.0);
  }
  return std::nullopt;
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(tol >= kMinTolerance))
    raise(ErrorKind::ToleranceTooSmall, "bisection tolerance below double resolution");
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0))
    raise(ErrorKind::NoSignChange, "bisection bracket does not straddle a root");
  for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double bisect_radius(const RadiusSpec& spec, double tol) {
  validate(spec);
  const double lo = spec.id == RadiusId::Thm32 ? kThm32BracketStart : 0.0;
  auto f = [&spec](double r) { return equation_value(spec, r); };
  if (!(f(lo) < 0.0 && f(1.0) > 0.0)) {
    raise(ErrorKind::NoSignChange,
          std::string(to_string(spec.id)) + " equation lacks the sign change on [0,1]");
  }
  return bisect(f, lo, 1.0, tol);
}

double solve_radius(const RadiusSpec& spec, double tol) {
  if (!(tol >= kMinTolerance))
    raise(ErrorKind::ToleranceTooSmall, "radius tolerance below double resolution");
  if (auto closed = closed_form_radius(spec)) return *closed;
  return bisect_radius(spec, tol);
}

double mobius_equality_radius(double a, double tol) {
  if (!(a >= 0.0 && a < 1.0))
    raise(ErrorKind::ParameterOutOfRange, "Mobius parameter must lie in [0,1)");
  // Bohr sum of the Mobius map in closed form: a + (1 - a^2) r / (1 - a r).
  // Its excess over 1 is (1 - a) times the bracket below.
  auto excess = [a](double r) { return (1.0 + a) * r / (1.0 - a * r) - 1.0; };
  return bisect(excess, 0.0, 1.0, tol);
}

double classical_bohr_radius(double tol) {
  if (!(tol > 0.0)) raise(ErrorKind::ToleranceTooSmall, "tolerance must be positive");
  const double inner_tol = std::max(tol / 4.0, kMinTolerance);
  double best = mobius_equality_radius(0.0, inner_tol);
  for (int k = 1; k < 60; ++k) {
    const double a = 1.0 - std::ldexp(1.0, -k);
    const double r = mobius_equality_radius(a, inner_tol);
    const double gain = best - r;
    best = std::min(best, r);
    if (gain < tol / 2.0) break;
  }
  return best;
}

double thm31_uniform_radius(double s) {
  if (!(s > 0.0)) raise(ErrorKind::ParameterOutOfRange, "Thm31 needs s > 0");
  return std::min(0.5, s / (2.0 + s));
}

}  // namespace bohr
