// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/multidim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bohr/error.hpp"
#include "bohr/schur.hpp"

namespace bohr {

namespace {

constexpr double kUnitSphereTolerance = 1e-12;
constexpr double kLatticeTolerance = 1e-13;

bool is_zg_theorem(Theorem id) {
  return id == Theorem::Thm34 || id == Theorem::Thm41 || id == Theorem::Cor42 ||
         id == Theorem::Cor43 || id == Theorem::Lemma21;
}

double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

void check_radius(const SliceMapping& slice, double r, const EvalOptions& opts) {
  if (!(r >= 0.0 && r < 1.0))
    raise(ErrorKind::RadiusOutOfRange, "radius " + std::to_string(r) + " outside [0,1)");
  if (tail_bound(slice.order(), r) > opts.truncation_tol) {
    raise(ErrorKind::TruncationInsufficient,
          "slice order " + std::to_string(slice.order()) + " too small at r=" + std::to_string(r));
  }
}

InequalityCheck lemma_21(const SliceMapping& slice, double r, const EvalOptions& opts) {
  const auto norms = frechet_norms(slice, r, opts);  // term(kp+m), k = 0, 1, ...
  const int m = slice.m();
  const int p = slice.p();
  double lhs = 0.0;
  for (std::size_t k = 2; k < norms.size(); k += 2) lhs += norms[k];
  const double big_r = std::pow(r, 2 * p);
  const double lead = norms.empty() ? 0.0 : norms[0];
  const double rhs =
      std::pow(r, 2 * p - m) / (1.0 - big_r) * (std::pow(r, 2 * m) - lead * lead);
  return make_check(Theorem::Lemma21, r, lhs, rhs, opts.tolerance);
}

InequalityCheck corollary_42(const SliceMapping& slice, double r, const EvalOptions& opts) {
  const bool zg_shape = slice.m() == 1 && slice.p() == 1;
  const bool scalar_shape = slice.components().size() == 1 && slice.m() == 0 && slice.p() == 1;
  if (!zg_shape && !scalar_shape)
    raise(ErrorKind::ShapeMismatch, "Cor42 applies to maps f = zg with (m,p) = (1,1)");
  // Every index carries a term, f(0) = 0: this is Thm32 with (m,p) = (0,1).
  LacunaryProfile profile(0, 1, slice.coefficient_maxima(), slice.order());
  auto check = evaluate_theorem(Theorem::Thm32, profile, r, {}, opts);
  check.theorem = Theorem::Cor42;
  return check;
}

}  // namespace

double lt_norm(std::span<const Complex> v, double t) {
  if (v.empty()) raise(ErrorKind::ParameterOutOfRange, "norm of an empty vector");
  if (!(t >= 1.0)) raise(ErrorKind::ParameterOutOfRange, "l_t norms need t >= 1");
  double largest = 0.0;
  for (const auto& x : v) largest = std::max(largest, std::abs(x));
  if (std::isinf(t) || largest == 0.0) return largest;
  double acc = 0.0;
  for (const auto& x : v) acc += std::pow(std::abs(x) / largest, t);
  return largest * std::pow(acc, 1.0 / t);
}

Direction::Direction(std::vector<Complex> z0, double t) : z0_(std::move(z0)), t_(t) {
  const double norm = lt_norm(z0_, t_);
  if (std::abs(norm - 1.0) > kUnitSphereTolerance)
    raise(ErrorKind::ParameterOutOfRange, "direction must lie on the unit sphere of l_t");
}

Direction Direction::normalized(std::vector<Complex> v, double t) {
  const double norm = lt_norm(v, t);
  if (norm == 0.0) raise(ErrorKind::DegenerateDirection, "cannot normalize the zero vector");
  for (auto& x : v) x /= norm;
  return Direction(std::move(v), t);
}

Direction Direction::basis(std::size_t n, std::size_t j, double t) {
  if (j >= n) raise(ErrorKind::ParameterOutOfRange, "basis index outside dimension");
  std::vector<Complex> v(n);
  v[j] = 1.0;
  return Direction(std::move(v), t);
}

Direction Direction::random(std::uint64_t seed, std::size_t n, double t) {
  if (n == 0) raise(ErrorKind::ParameterOutOfRange, "direction needs n >= 1");
  std::mt19937_64 gen(seed);
  std::vector<Complex> v(n);
  for (auto& x : v) {
    const double radius = std::sqrt(unit_uniform(gen));
    x = std::polar(radius, 2.0 * std::numbers::pi * unit_uniform(gen));
  }
  return normalized(std::move(v), t);
}

SliceMapping::SliceMapping(std::vector<TruncatedSeries> components, int m, int p, double t)
    : components_(std::move(components)), m_(m), p_(p), t_(t) {
  if (components_.empty()) raise(ErrorKind::ParameterOutOfRange, "slice needs components");
  if (p_ < 1 || m_ < 0 || m_ > p_)
    raise(ErrorKind::ShapeMismatch, "slice shape needs p >= 1 and 0 <= m <= p");
  if (!(t_ >= 1.0)) raise(ErrorKind::ParameterOutOfRange, "l_t exponent needs t >= 1");
  const std::size_t order = components_.front().order();
  maxima_.assign(order + 1, 0.0);
  const auto um = static_cast<std::size_t>(m_);
  const auto up = static_cast<std::size_t>(p_);
  for (const auto& h : components_) {
    if (h.order() != order)
      raise(ErrorKind::ParameterOutOfRange, "slice components must share one order");
    if (h.sup_bound() && *h.sup_bound() > 1.0 + 1e-12)
      raise(ErrorKind::ParameterOutOfRange, "slice component leaves the closed unit disk");
    for (std::size_t n = 0; n <= order; ++n) {
      maxima_[n] = std::max(maxima_[n], std::abs(h[n]));
      const bool on_lattice = n >= um && (n - um) % up == 0;
      if (!on_lattice && std::abs(h[n]) > kLatticeTolerance) {
        raise(ErrorKind::ShapeMismatch,
              "slice coefficient " + std::to_string(n) + " lies off the lacunary lattice");
      }
    }
  }
}

SliceMapping SliceMapping::scalar(const TruncatedSeries& f, int m, int p) {
  return SliceMapping({f}, m, p, 2.0);
}

MapKind parse_map_kind(std::string_view name) {
  if (name == "SharpThm34") return MapKind::SharpThm34;
  if (name == "SharpThm41") return MapKind::SharpThm41;
  if (name == "SharpCor42") return MapKind::SharpCor42;
  if (name == "GeneralZG") return MapKind::GeneralZG;
  raise(ErrorKind::ParameterOutOfRange, "unknown map family '" + std::string(name) + "'");
}

SliceMapping slice_from_direction(const MapSpec& map, const Direction& z0, std::size_t order) {
  int m = map.m;
  int p = map.p;
  if (map.kind == MapKind::SharpCor42) m = p = 1;
  if (p < 1 || m < 1 || m > p)
    raise(ErrorKind::ShapeMismatch, "maps f = zg need 1 <= m <= p");
  if (order < static_cast<std::size_t>(m + p))
    raise(ErrorKind::ParameterOutOfRange, "slice order must be at least m + p");

  const auto coords = z0.z0();
  const std::size_t g_order = order - 1;
  // g restricted to the line: G(lambda) = g(lambda z0).
  std::optional<TruncatedSeries> g_line;
  if (map.kind == MapKind::GeneralZG) {
    if (!map.g) raise(ErrorKind::ParameterOutOfRange, "GeneralZG needs the slice series of g");
    g_line = map.g->truncated(g_order);
  } else {
    if (coords[0] == Complex{})
      raise(ErrorKind::DegenerateDirection, "named families need a nonzero first coordinate");
    // The named families are f = z g with g(z) = q(z_1).
    TruncatedSeries q = TruncatedSeries::zero(g_order);
    switch (map.kind) {
      case MapKind::SharpThm34:
        q = extremal_family(ExtremalKind::LacunaryD, map.a, m - 1, p, g_order);
        break;
      case MapKind::SharpThm41:
        q = extremal_family(ExtremalKind::Monomial, 0.0, m - 1, p, g_order);
        break;
      case MapKind::SharpCor42:
        q = extremal_family(ExtremalKind::L1, map.a, 0, 1, g_order);
        break;
      case MapKind::GeneralZG:
        break;
    }
    g_line = rescale(q, coords[0]);
  }

  const auto lambda_g = monomial_lift(*g_line, 1, 1);
  std::vector<TruncatedSeries> components;
  components.reserve(coords.size());
  for (const auto& zj : coords) components.push_back(zj * lambda_g);
  return SliceMapping(std::move(components), m, p, z0.t());
}

std::vector<double> frechet_norms(const SliceMapping& slice, double r, const EvalOptions& opts) {
  check_radius(slice, r, opts);
  const auto& maxima = slice.coefficient_maxima();
  const double rp = std::pow(r, slice.p());
  double w = std::pow(r, slice.m());  // r^n
  std::vector<double> out;
  for (std::size_t n = static_cast<std::size_t>(slice.m()); n < maxima.size();
       n += static_cast<std::size_t>(slice.p()), w *= rp) {
    out.push_back(maxima[n] * w);
  }
  return out;
}

LacunaryProfile slice_profile(const SliceMapping& slice) {
  const auto& maxima = slice.coefficient_maxima();
  std::vector<double> mods;
  for (std::size_t n = static_cast<std::size_t>(slice.m()); n < maxima.size();
       n += static_cast<std::size_t>(slice.p())) {
    mods.push_back(maxima[n]);
  }
  return LacunaryProfile(slice.m(), slice.p(), std::move(mods), slice.order());
}

InequalityCheck vector_check(Theorem id, const SliceMapping& slice, double r,
                             const EvalOptions& opts) {
  const bool scalar_map = slice.components().size() == 1;
  if (!scalar_map && !is_zg_theorem(id)) {
    raise(ErrorKind::UnknownTheorem,
          std::string(to_string(id)) + " is not an inequality for vector-valued maps");
  }
  if (!scalar_map && is_zg_theorem(id) && slice.m() < 1)
    raise(ErrorKind::ShapeMismatch, "maps f = zg need m >= 1");

  switch (id) {
    case Theorem::Lemma21:
      return lemma_21(slice, r, opts);
    case Theorem::Cor42:
      return corollary_42(slice, r, opts);
    default:
      check_radius(slice, r, opts);
      return evaluate_theorem(id, slice_profile(slice), r, {}, opts);
  }
}

std::vector<double> default_a_grid(int steps) {
  if (steps < 1) raise(ErrorKind::ParameterOutOfRange, "a-grid needs at least one step");
  std::vector<double> grid;
  for (int k = 0; k < steps; ++k) grid.push_back(static_cast<double>(k) / steps);
  for (int j = 2; j <= 8; ++j) grid.push_back(1.0 - std::pow(10.0, -j));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

double sharpness_scan(Theorem id, int p, int m, double r, std::span<const double> a_grid,
                      const Extras& extras, const EvalOptions& opts) {
  if (!(r > 0.0 && r < 1.0))
    raise(ErrorKind::RadiusOutOfRange, "sharpness scans need r in (0,1)");
  if (a_grid.empty()) raise(ErrorKind::ParameterOutOfRange, "empty a-grid");
  for (double a : a_grid) {
    if (!(a >= 0.0 && a < 1.0)) raise(ErrorKind::ParameterOutOfRange, "a-grid must lie in [0,1)");
  }

  double best = -std::numeric_limits<double>::infinity();
  switch (id) {
    case Theorem::Thm31: {
      double s = 1.0;
      if (auto it = extras.find("s"); it != extras.end()) s = it->second;
      if (!(s > 0.0)) raise(ErrorKind::ParameterOutOfRange, "Thm31 needs s > 0");
      const double ratio = r / (1.0 - r);
      for (double a : a_grid) best = std::max(best, std::pow(a, s) + (1.0 - a * a) * ratio);
      return best;
    }
    case Theorem::Cor33:
    case Theorem::Cor42:
      p = 1;
      m = 0;
      [[fallthrough]];
    case Theorem::Thm32: {
      const double lead = std::pow(r, p + m);
      const double tail = std::pow(r, 2 * p + m) / (1.0 - std::pow(r, p));
      for (double a : a_grid) best = std::max(best, a * lead + (1.0 - a * a) * tail);
      return best;
    }
    case Theorem::ThmC:
    case Theorem::Thm34:
    case Theorem::Thm41:
    case Theorem::Cor43: {
      const std::size_t order =
          std::max(required_order(r, opts.truncation_tol), static_cast<std::size_t>(m + p));
      for (double a : a_grid) {
        const auto f = extremal_family(ExtremalKind::LacunaryD, a, m, p, order);
        const auto profile = LacunaryProfile::from_series(f, m, p);
        best = std::max(best, evaluate_theorem(id, profile, r, extras, opts).lhs);
      }
      return best;
    }
    default:
      raise(ErrorKind::UnknownTheorem,
            std::string(to_string(id)) + " has no sharpness scan");
  }
}

}  // namespace bohr
