// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include "bohr/schur.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bohr/error.hpp"

namespace bohr {

SchurParameters::SchurParameters(std::vector<Complex> gammas) : gammas_(std::move(gammas)) {
  if (gammas_.empty()) raise(ErrorKind::ParameterOutOfRange, "at least one Schur parameter");
  const std::size_t last = gammas_.size() - 1;
  for (std::size_t j = 0; j < gammas_.size(); ++j) {
    const double mod = std::abs(gammas_[j]);
    const bool ok = (j < last) ? mod < 1.0 : mod <= 1.0;
    if (!ok) {
      raise(ErrorKind::ParameterOutOfRange,
            "Schur parameter " + std::to_string(j) + " has modulus " + std::to_string(mod));
    }
  }
}

TruncatedSeries schur_to_taylor(const SchurParameters& params, std::size_t order) {
  // Carry f_j = P/Q as two polynomials; each step is
  //   P' = gamma Q + z P,   Q' = Q + conj(gamma) z P.
  // Q never vanishes on the closed disk, so its reciprocal series decays.
  auto gammas = params.gammas();
  auto num = TruncatedSeries::constant(gammas.back(), order);
  auto den = TruncatedSeries::constant(1.0, order);
  for (std::size_t j = gammas.size() - 1; j-- > 0;) {
    const Complex g = gammas[j];
    const auto zp = shift(num, 1);
    auto next_num = g * den + zp;
    auto next_den = den + std::conj(g) * zp;
    num = std::move(next_num);
    den = std::move(next_den);
  }
  return mul(num, reciprocal(den)).with_sup_bound(1.0);
}

namespace {

// 53-bit uniform in [0,1); spelled out so draws do not depend on the
// standard library's distribution implementation.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

SchurParameters sample_schur_parameters(std::uint64_t seed, std::size_t depth) {
  if (depth < 1) raise(ErrorKind::ParameterOutOfRange, "sampling depth must be >= 1");
  std::mt19937_64 gen(seed);
  std::vector<Complex> gammas(depth);
  for (auto& g : gammas) {
    const double radius = kSamplingRadius * std::sqrt(unit_uniform(gen));
    const double angle = 2.0 * std::numbers::pi * unit_uniform(gen);
    g = std::polar(radius, angle);
  }
  return SchurParameters(std::move(gammas));
}

TruncatedSeries sample_schur(std::uint64_t seed, std::size_t depth, std::size_t order) {
  return schur_to_taylor(sample_schur_parameters(seed, depth), order);
}

ExtremalKind parse_extremal_kind(std::string_view name) {
  if (name == "L1") return ExtremalKind::L1;
  if (name == "LacunaryD") return ExtremalKind::LacunaryD;
  if (name == "L2") return ExtremalKind::L2;
  if (name == "Monomial") return ExtremalKind::Monomial;
  raise(ErrorKind::ParameterOutOfRange, "unknown extremal family '" + std::string(name) + "'");
}

namespace {

// z^offset (a - z^p)/(1 - a z^p), truncated at `order`.
TruncatedSeries lifted_mobius(double a, int offset, int p, std::size_t order) {
  const auto off = static_cast<std::size_t>(offset);
  if (order < off)
    raise(ErrorKind::ParameterOutOfRange, "order too small for the family's leading power");
  const std::size_t inner_order = (order - off) / static_cast<std::size_t>(p);
  const auto phi = mobius_map(a, TruncatedSeries::identity(inner_order));
  return monomial_lift(phi, offset, p).truncated(order);
}

}  // namespace

TruncatedSeries extremal_family(ExtremalKind kind, double a, int m, int p, std::size_t order) {
  if (m < 0 || p < 1) raise(ErrorKind::ParameterOutOfRange, "need m >= 0 and p >= 1");
  if (kind != ExtremalKind::Monomial && !(a >= 0.0 && a < 1.0))
    raise(ErrorKind::ParameterOutOfRange, "family parameter a must lie in [0,1)");
  if ((kind == ExtremalKind::LacunaryD || kind == ExtremalKind::L2) && m > p)
    raise(ErrorKind::ParameterOutOfRange, "lacunary families need 0 <= m <= p");

  switch (kind) {
    case ExtremalKind::L1:
      return mobius_map(a, TruncatedSeries::identity(order));
    case ExtremalKind::LacunaryD:
      return lifted_mobius(a, m, p, order);
    case ExtremalKind::L2:
      return lifted_mobius(a, p + m, p, order);
    case ExtremalKind::Monomial: {
      const auto power = static_cast<std::size_t>(m + p);
      if (order < power) raise(ErrorKind::ParameterOutOfRange, "order below monomial degree");
      std::vector<Complex> c(order + 1);
      c[power] = 1.0;
      return TruncatedSeries(std::move(c), 1.0);
    }
  }
  raise(ErrorKind::ParameterOutOfRange, "unhandled extremal family");
}

}  // namespace bohr
