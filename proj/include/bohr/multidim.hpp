// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/powerseries.hpp"

namespace bohr {

/// Exponent of the l_t norm; t = infinity selects the polydisk (max) norm.
inline constexpr double kInfiniteExponent = std::numeric_limits<double>::infinity();

double lt_norm(std::span<const Complex> v, double t);

/// A point z0 on the unit sphere of l_t^n.
class Direction {
 public:
  /// Throws ParameterOutOfRange unless ||z0||_t = 1 within 1e-12.
  Direction(std::vector<Complex> z0, double t);

  /// v / ||v||_t; v must be nonzero.
  static Direction normalized(std::vector<Complex> v, double t);
  /// The coordinate vector e_j in C^n.
  static Direction basis(std::size_t n, std::size_t j, double t);
  /// Components uniform in the unit disk, then normalized; deterministic per seed.
  static Direction random(std::uint64_t seed, std::size_t n, double t);

  std::span<const Complex> z0() const noexcept { return z0_; }
  double t() const noexcept { return t_; }
  std::size_t dimension() const noexcept { return z0_.size(); }

 private:
  std::vector<Complex> z0_;
  double t_;
};

/// Component slices h_j(lambda) = f_j(lambda z0) of a lacunary map with
/// shape (m, p). Each h_j is a Schur function; only indices kp+m carry
/// nonzero coefficients.
class SliceMapping {
 public:
  SliceMapping(std::vector<TruncatedSeries> components, int m, int p, double t);

  /// The one-component slice of a scalar function on the disk.
  static SliceMapping scalar(const TruncatedSeries& f, int m, int p);

  const std::vector<TruncatedSeries>& components() const noexcept { return components_; }
  int m() const noexcept { return m_; }
  int p() const noexcept { return p_; }
  double t() const noexcept { return t_; }
  std::size_t order() const noexcept { return components_.front().order(); }
  /// max_j |coefficient n of h_j| for n = 0..order.
  const std::vector<double>& coefficient_maxima() const noexcept { return maxima_; }

 private:
  std::vector<TruncatedSeries> components_;
  std::vector<double> maxima_;
  int m_;
  int p_;
  double t_;
};

enum class MapKind {
  SharpThm34,  // f = (z1^m L(z1^p), z_j z1^{m-1} L(z1^p)), L(w) = (a-w)/(1-aw)
  SharpThm41,  // f = (z1^{m+p}, z_j z1^{m+p-1})
  SharpCor42,  // f = (z1 L(z1), z_j L(z1))
  GeneralZG,   // f = z g with the caller's slice G(lambda) = g(lambda z0)
};

MapKind parse_map_kind(std::string_view name);

struct MapSpec {
  MapKind kind = MapKind::GeneralZG;
  double a = 0.0;
  int m = 1;
  int p = 1;
  /// Required for GeneralZG: the one-variable series of g along z0.
  std::optional<TruncatedSeries> g;
};

SliceMapping slice_from_direction(const MapSpec& map, const Direction& z0, std::size_t order);

/// max_j |coefficient k of h_j| r^k for k = m, p+m, 2p+m, ...
std::vector<double> frechet_norms(const SliceMapping& slice, double r,
                                  const EvalOptions& opts = {});

/// The vector inequalities (Thm34, Thm41, Cor42, Cor43, Lemma21) evaluated
/// on the slice, plus the scalar ids that n = 1 slices admit.
InequalityCheck vector_check(Theorem id, const SliceMapping& slice, double r,
                             const EvalOptions& opts = {});

/// Lacunary profile of the raw slice moduli (the norms at unit radius).
LacunaryProfile slice_profile(const SliceMapping& slice);

/// Uniform a-grid on [0,1) with `steps` points plus the points 1 - 10^{-j},
/// j = 2..8, which resolve envelopes whose extremum sits at a -> 1.
std::vector<double> default_a_grid(int steps);

/// Largest extremal left-hand side over the a-grid at radius r. Thm31 and
/// Thm32 use their closed-form envelopes; ThmC, Thm34, Thm41 and Cor43 are
/// evaluated on the lacunary family z^m (a - z^p)/(1 - a z^p).
double sharpness_scan(Theorem id, int p, int m, double r, std::span<const double> a_grid,
                      const Extras& extras = {}, const EvalOptions& opts = {});

}  // namespace bohr
