// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bohr/powerseries.hpp"

namespace bohr {

/// Identifiers for every inequality the toolkit evaluates. Not every entry
/// point accepts every id; unsupported ones raise UnknownTheorem.
enum class Theorem {
  ThmB,           // refined Bohr inequality
  LemmaDOdd,      // odd-index bound of the lacunary lemma
  LemmaDEven,     // even-index bound of the lacunary lemma
  ThmC,           // alternating lacunary sum
  Thm31,          // |f(0)|^s + refined sum
  Thm32,          // functions fixing the origin, G(r) radius
  Cor33,          // Thm32 with m = 0, p = 1
  Thm34,          // odd-indexed lacunary sum, r^{p+m} + r^{2p} = 1
  Thm41,          // alternating vector version
  Cor42,          // vector version of Cor33 for f = zg
  Cor43,          // alternating sum with Gamma term
  Lemma21,        // even-tail bound for f = zg
  BombieriUpper,  // (3 - sqrt(8(1-r^2)))/r on [1/3, 1/sqrt 2]
  BBUpper,        // 1/sqrt(1-r^2) on (1/sqrt 2, 1)
};

std::string_view to_string(Theorem id);
Theorem parse_theorem(std::string_view name);

/// Coefficient moduli of a lacunary series sum_k a_{kp+m} z^{kp+m}:
/// mods[k] = |a_{kp+m}|. Phases are dropped at construction.
class LacunaryProfile {
 public:
  /// `order` is the truncation order N of the series the moduli came from;
  /// it defaults to the last represented index K p + m.
  LacunaryProfile(int m, int p, std::vector<double> mods, std::size_t order = 0);

  /// Extracts the profile of `s`; coefficients off the lattice kp+m must be
  /// zero up to `shape_tol` or ShapeMismatch is raised.
  static LacunaryProfile from_series(const TruncatedSeries& s, int m, int p,
                                     double shape_tol = 1e-13);

  int m() const noexcept { return m_; }
  int p() const noexcept { return p_; }
  const std::vector<double>& mods() const noexcept { return mods_; }
  std::size_t order() const noexcept { return order_; }
  /// |f(0)|: equals mods[0] for m = 0 and 0 otherwise.
  double origin_value() const noexcept { return m_ == 0 ? mods_[0] : 0.0; }

 private:
  int m_;
  int p_;
  std::vector<double> mods_;
  std::size_t order_;
};

struct InequalityCheck {
  Theorem theorem;
  double r;
  double lhs;
  double rhs;
  bool satisfied;
  double margin;  // rhs - lhs
};

InequalityCheck make_check(Theorem id, double r, double lhs, double rhs, double tol);

struct EvalOptions {
  double tolerance = 1e-9;         // slack on the margin for `satisfied`
  double truncation_tol = 1e-12;   // allowed worst-case neglected tail
};

/// Named real parameters; Thm31 reads "s" (exponent on |f(0)|, default 1).
using Extras = std::map<std::string, double, std::less<>>;

struct BohrSums {
  double majorant;     // B = sum mu_k r^{kp+m}
  double alternating;  // A = sum (-1)^{kp+m} mu_k r^{kp+m}
};

BohrSums bohr_sums(const LacunaryProfile& profile, double r, const EvalOptions& opts = {});

InequalityCheck refined_thmB(const LacunaryProfile& profile, double r,
                             const EvalOptions& opts = {});

struct LemmaDChecks {
  InequalityCheck odd;
  InequalityCheck even;
};

LemmaDChecks lemmaD_bounds(const LacunaryProfile& profile, double r,
                           const EvalOptions& opts = {});

/// Dispatcher for ThmC, Thm31, Thm32, Thm34, Thm41, Cor43 and the two
/// Bohr-sum envelopes.
InequalityCheck evaluate_theorem(Theorem id, const LacunaryProfile& profile, double r,
                                 const Extras& extras = {}, const EvalOptions& opts = {});

/// Validates r in [0,1) and the truncation tail of `profile` at r.
void check_evaluable(const LacunaryProfile& profile, double r, const EvalOptions& opts);

}  // namespace bohr
