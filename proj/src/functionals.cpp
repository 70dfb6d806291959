// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/functionals.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

namespace {

struct TheoremName {
  Theorem id;
  std::string_view name;
};

constexpr TheoremName kTheoremNames[] = {
    {Theorem::ThmB, "ThmB"},
    {Theorem::LemmaDOdd, "LemmaDOdd"},
    {Theorem::LemmaDEven, "LemmaDEven"},
    {Theorem::ThmC, "ThmC"},
    {Theorem::Thm31, "Thm31"},
    {Theorem::Thm32, "Thm32"},
    {Theorem::Cor33, "Cor33"},
    {Theorem::Thm34, "Thm34"},
    {Theorem::Thm41, "Thm41"},
    {Theorem::Cor42, "Cor42"},
    {Theorem::Cor43, "Cor43"},
    {Theorem::Lemma21, "Lemma21"},
    {Theorem::BombieriUpper, "BombieriUpper"},
    {Theorem::BBUpper, "BBUpper"},
};

constexpr double kWindowSlack = 1e-12;

double sign_of_index(long long index) { return (index % 2 == 0) ? 1.0 : -1.0; }

double mod_at(const LacunaryProfile& profile, std::size_t k) {
  return k < profile.mods().size() ? profile.mods()[k] : 0.0;
}

void require_odd_gap(Theorem id, const LacunaryProfile& profile) {
  if (profile.p() % 2 == 0) {
    raise(ErrorKind::OddGapRequired,
          std::string(to_string(id)) + " needs an odd gap p, got p=" + std::to_string(profile.p()));
  }
}

void require_shape(Theorem id, const LacunaryProfile& profile, int m, int p) {
  if (profile.m() != m || profile.p() != p) {
    raise(ErrorKind::ShapeMismatch, std::string(to_string(id)) + " needs (m,p)=(" +
                                        std::to_string(m) + "," + std::to_string(p) + ")");
  }
}

// The sums below are shared by several inequalities. Indexing follows the
// profile: term k sits at power kp+m.
struct LacunarySums {
  double alternating_tail = 0.0;  // sum_{k>=1} (-1)^{kp+m} mu_k r^{kp+m}
  double odd_terms = 0.0;         // sum_{k>=1} mu_{2k-1} r^{(2k-1)p+m}
  double squares = 0.0;           // sum_{k>=0} mu_k^2 r^{2(kp+m)}
};

LacunarySums lacunary_sums(const LacunaryProfile& profile, double r) {
  const int m = profile.m();
  const int p = profile.p();
  const double rp = std::pow(r, p);
  const double rm = std::pow(r, m);
  LacunarySums sums;
  double w = rm;  // r^{kp+m}
  for (std::size_t k = 0; k < profile.mods().size(); ++k, w *= rp) {
    const double mu = profile.mods()[k];
    sums.squares += mu * mu * w * w;
    if (k == 0) continue;
    sums.alternating_tail += sign_of_index(static_cast<long long>(k) * p + m) * mu * w;
    if (k % 2 == 1) sums.odd_terms += mu * w;
  }
  return sums;
}

// Shared by ThmB and Thm31 (shape (0,1)).
struct RefinedSums {
  double linear = 0.0;   // sum_{k>=1} mu_k r^k
  double squares = 0.0;  // sum_{k>=1} mu_k^2 r^{2k}
};

RefinedSums refined_sums(const LacunaryProfile& profile, double r) {
  RefinedSums sums;
  double w = r;
  for (std::size_t k = 1; k < profile.mods().size(); ++k, w *= r) {
    const double mu = profile.mods()[k];
    sums.linear += mu * w;
    sums.squares += mu * mu * w * w;
  }
  return sums;
}

InequalityCheck theorem_c(const LacunaryProfile& profile, double r, double tol) {
  require_odd_gap(Theorem::ThmC, profile);
  const int m = profile.m();
  const int p = profile.p();
  const double big_r = std::pow(r, 2 * p);
  // sum_{k>=0} mu_k^2 r^{2kp}, without the r^{2m} factor.
  double squares = 0.0;
  double w = 1.0;
  for (double mu : profile.mods()) {
    squares += mu * mu * w;
    w *= big_r;
  }
  const auto sums = lacunary_sums(profile, r);
  const double inner = sums.alternating_tail +
                       sign_of_index(m + p) * std::pow(r, p + m) / (1.0 - big_r) * squares;
  return make_check(Theorem::ThmC, r, std::abs(inner), 1.0, tol);
}

InequalityCheck theorem_31(const LacunaryProfile& profile, double r, const Extras& extras,
                           double tol) {
  require_shape(Theorem::Thm31, profile, 0, 1);
  double s = 1.0;
  if (auto it = extras.find("s"); it != extras.end()) s = it->second;
  if (!(s > 0.0)) raise(ErrorKind::ParameterOutOfRange, "Thm31 exponent s must be positive");
  const double a0 = profile.origin_value();
  const auto sums = refined_sums(profile, r);
  const double lhs =
      std::pow(a0, s) + sums.linear + (1.0 / (1.0 + a0) + r / (1.0 - r)) * sums.squares;
  return make_check(Theorem::Thm31, r, lhs, 1.0, tol);
}

InequalityCheck theorem_32(const LacunaryProfile& profile, double r, double tol) {
  if (profile.mods()[0] > 1e-13) {
    raise(ErrorKind::ShapeMismatch,
          "Thm32 needs a vanishing coefficient at z^m (series starts at z^{p+m})");
  }
  const int m = profile.m();
  const int p = profile.p();
  const double rp = std::pow(r, p);
  const double mu1 = mod_at(profile, 1);
  // 1/(r^{p+m} + Lambda) * r^{2(kp+m)} = r^{kp+m} r^{(k-1)p} / (1 + mu_1)
  // r^{-m}/(1 - r^p) * r^{2(kp+m)}     = r^{kp+m} r^{kp} / (1 - r^p)
  const double rm = std::pow(r, m);
  double linear = 0.0;
  double square_low = 0.0;
  double square_high = 0.0;
  double prev = 1.0;  // r^{(k-1)p}
  for (std::size_t k = 1; k < profile.mods().size(); ++k) {
    const double mu = profile.mods()[k];
    const double cur = prev * rp;  // r^{kp}
    const double w = cur * rm;     // r^{kp+m}
    linear += mu * w;
    if (k >= 2) {
      square_low += mu * mu * w * prev;
      square_high += mu * mu * w * cur;
    }
    prev = cur;
  }
  const double lhs = linear + square_low / (1.0 + mu1) + square_high / (1.0 - rp);
  return make_check(Theorem::Thm32, r, lhs, 1.0, tol);
}

InequalityCheck theorem_34(const LacunaryProfile& profile, double r, double tol) {
  const int m = profile.m();
  const int p = profile.p();
  const auto sums = lacunary_sums(profile, r);
  const double lhs =
      sums.odd_terms + std::pow(r, p - m) / (1.0 - std::pow(r, 2 * p)) * sums.squares;
  return make_check(Theorem::Thm34, r, lhs, 1.0, tol);
}

InequalityCheck theorem_41(const LacunaryProfile& profile, double r, double tol) {
  require_odd_gap(Theorem::Thm41, profile);
  const int m = profile.m();
  const int p = profile.p();
  const auto sums = lacunary_sums(profile, r);
  const double inner = sums.alternating_tail + sign_of_index(m + p) * std::pow(r, p - m) /
                                                   (1.0 - std::pow(r, 2 * p)) * sums.squares;
  return make_check(Theorem::Thm41, r, std::abs(inner), 1.0, tol);
}

InequalityCheck corollary_43(const LacunaryProfile& profile, double r, double tol) {
  require_odd_gap(Theorem::Cor43, profile);
  const int m = profile.m();
  const int p = profile.p();
  const double mu0 = profile.mods()[0];
  const double big_r = std::pow(r, 2 * p);
  const auto sums = lacunary_sums(profile, r);
  // With Gamma = mu_0 r^m the factor 1/(r^m + Gamma) times r^{2(kp+m)} is
  // r^{2kp+m}/(1+mu_0); similarly r^{2p-m} r^{2(kp+m)} = r^{2p} r^{2kp+m}.
  double squares_m = 0.0;  // sum_k mu_k^2 r^{2kp+m}
  if (r > 0.0) squares_m = sums.squares / std::pow(r, m);
  const double weight = 1.0 / (1.0 + mu0) + big_r / (1.0 - big_r);
  const double inner = sums.alternating_tail + sign_of_index(m) * weight * squares_m;
  return make_check(Theorem::Cor43, r, std::abs(inner), 1.0, tol);
}

}  // namespace

std::string_view to_string(Theorem id) {
  for (const auto& entry : kTheoremNames) {
    if (entry.id == id) return entry.name;
  }
  return "Unknown";
}

Theorem parse_theorem(std::string_view name) {
  for (const auto& entry : kTheoremNames) {
    if (entry.name == name) return entry.id;
  }
  raise(ErrorKind::UnknownTheorem, "unknown theorem id '" + std::string(name) + "'");
}

LacunaryProfile::LacunaryProfile(int m, int p, std::vector<double> mods, std::size_t order)
    : m_(m), p_(p), mods_(std::move(mods)) {
  if (p_ < 1 || m_ < 0 || m_ > p_)
    raise(ErrorKind::ShapeMismatch, "lacunary shape needs p >= 1 and 0 <= m <= p");
  if (mods_.empty()) raise(ErrorKind::EmptySeries, "profile needs at least mu_0");
  for (double mu : mods_) {
    if (!(mu >= 0.0)) raise(ErrorKind::ParameterOutOfRange, "profile moduli must be >= 0");
  }
  const std::size_t last = (mods_.size() - 1) * static_cast<std::size_t>(p_) +
                           static_cast<std::size_t>(m_);
  order_ = std::max(order, last);
}

LacunaryProfile LacunaryProfile::from_series(const TruncatedSeries& s, int m, int p,
                                             double shape_tol) {
  if (p < 1 || m < 0 || m > p)
    raise(ErrorKind::ShapeMismatch, "lacunary shape needs p >= 1 and 0 <= m <= p");
  const auto order = s.order();
  const auto um = static_cast<std::size_t>(m);
  const auto up = static_cast<std::size_t>(p);
  if (order < um) raise(ErrorKind::ShapeMismatch, "series order below the offset m");
  std::vector<double> mods;
  mods.reserve((order - um) / up + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    const double mod = std::abs(s[n]);
    if (n >= um && (n - um) % up == 0) {
      mods.push_back(mod);
    } else if (mod > shape_tol) {
      raise(ErrorKind::ShapeMismatch,
            "coefficient " + std::to_string(n) + " lies off the lacunary lattice");
    }
  }
  return LacunaryProfile(m, p, std::move(mods), order);
}

InequalityCheck make_check(Theorem id, double r, double lhs, double rhs, double tol) {
  const double margin = rhs - lhs;
  return InequalityCheck{id, r, lhs, rhs, margin >= -tol, margin};
}

void check_evaluable(const LacunaryProfile& profile, double r, const EvalOptions& opts) {
  if (!(r >= 0.0 && r < 1.0))
    raise(ErrorKind::RadiusOutOfRange, "radius " + std::to_string(r) + " outside [0,1)");
  const double tail = tail_bound(profile.order(), r);
  if (tail > opts.truncation_tol) {
    raise(ErrorKind::TruncationInsufficient,
          "order " + std::to_string(profile.order()) + " leaves tail " + std::to_string(tail) +
              " at r=" + std::to_string(r));
  }
}

BohrSums bohr_sums(const LacunaryProfile& profile, double r, const EvalOptions& opts) {
  check_evaluable(profile, r, opts);
  const int m = profile.m();
  const int p = profile.p();
  const double rp = std::pow(r, p);
  BohrSums sums{0.0, 0.0};
  double w = std::pow(r, m);
  for (std::size_t k = 0; k < profile.mods().size(); ++k, w *= rp) {
    const double term = profile.mods()[k] * w;
    sums.majorant += term;
    sums.alternating += sign_of_index(static_cast<long long>(k) * p + m) * term;
  }
  return sums;
}

InequalityCheck refined_thmB(const LacunaryProfile& profile, double r, const EvalOptions& opts) {
  require_shape(Theorem::ThmB, profile, 0, 1);
  check_evaluable(profile, r, opts);
  const double a0 = profile.mods()[0];
  const auto sums = refined_sums(profile, r);
  const double ratio = r / (1.0 - r);
  const double lhs = sums.linear + (1.0 / (1.0 + a0) + ratio) * sums.squares;
  const double rhs = ratio * (1.0 - a0 * a0);
  return make_check(Theorem::ThmB, r, lhs, rhs, opts.tolerance);
}

LemmaDChecks lemmaD_bounds(const LacunaryProfile& profile, double r, const EvalOptions& opts) {
  check_evaluable(profile, r, opts);
  const int p = profile.p();
  const double rp = std::pow(r, p);
  const double big_r = rp * rp;
  const double mu0 = profile.mods()[0];

  double odd_linear = 0.0;   // sum_{k>=1} mu_{2k-1} r^{(2k-1)p}
  double even_linear = 0.0;  // sum_{k>=1} mu_{2k} r^{2kp}
  double squares0 = 0.0;     // sum_{k>=0} mu_k^2 r^{2kp}
  double squares1 = 0.0;     // sum_{k>=1} mu_k^2 r^{2kp}
  double w = 1.0;            // r^{kp}
  for (std::size_t k = 0; k < profile.mods().size(); ++k, w *= rp) {
    const double mu = profile.mods()[k];
    squares0 += mu * mu * w * w;
    if (k == 0) continue;
    squares1 += mu * mu * w * w;
    (k % 2 == 1 ? odd_linear : even_linear) += mu * w;
  }
  const double geometric = 1.0 / (1.0 - big_r);
  // r^{2p}/(1-r^{2p}) sum mu_k^2 r^{(2k-1)p} = r^p/(1-r^{2p}) sum mu_k^2 r^{2kp}
  const double odd_lhs = odd_linear + rp * geometric * squares0;
  const double odd_rhs = rp * geometric;
  const double even_lhs = even_linear + (1.0 / (1.0 + mu0) + big_r * geometric) * squares1;
  const double even_rhs = (1.0 - mu0 * mu0) * big_r * geometric;
  return LemmaDChecks{make_check(Theorem::LemmaDOdd, r, odd_lhs, odd_rhs, opts.tolerance),
                      make_check(Theorem::LemmaDEven, r, even_lhs, even_rhs, opts.tolerance)};
}

InequalityCheck evaluate_theorem(Theorem id, const LacunaryProfile& profile, double r,
                                 const Extras& extras, const EvalOptions& opts) {
  const double tol = opts.tolerance;
  switch (id) {
    case Theorem::ThmC:
      check_evaluable(profile, r, opts);
      return theorem_c(profile, r, tol);
    case Theorem::Thm31:
      check_evaluable(profile, r, opts);
      return theorem_31(profile, r, extras, tol);
    case Theorem::Thm32:
      check_evaluable(profile, r, opts);
      return theorem_32(profile, r, tol);
    case Theorem::Thm34:
      check_evaluable(profile, r, opts);
      return theorem_34(profile, r, tol);
    case Theorem::Thm41:
      check_evaluable(profile, r, opts);
      return theorem_41(profile, r, tol);
    case Theorem::Cor43:
      check_evaluable(profile, r, opts);
      return corollary_43(profile, r, tol);
    case Theorem::BombieriUpper: {
      if (r < 1.0 / 3.0 - kWindowSlack || r > std::numbers::sqrt2 / 2.0 + kWindowSlack)
        raise(ErrorKind::RadiusOutOfWindow, "Bombieri envelope holds on [1/3, 1/sqrt 2]");
      const double lhs = bohr_sums(profile, r, opts).majorant;
      const double rhs = (3.0 - std::sqrt(8.0 * (1.0 - r * r))) / r;
      return make_check(id, r, lhs, rhs, tol);
    }
    case Theorem::BBUpper: {
      if (r <= std::numbers::sqrt2 / 2.0 || r >= 1.0)
        raise(ErrorKind::RadiusOutOfWindow, "Bombieri-Bourgain envelope holds on (1/sqrt 2, 1)");
      const double lhs = bohr_sums(profile, r, opts).majorant;
      const double rhs = 1.0 / std::sqrt(1.0 - r * r);
      return make_check(id, r, lhs, rhs, tol);
    }
    default:
      raise(ErrorKind::UnknownTheorem,
            std::string(to_string(id)) + " is not a scalar profile inequality");
  }
}

}  // namespace bohr
