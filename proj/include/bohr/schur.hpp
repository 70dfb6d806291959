// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "bohr/powerseries.hpp"

namespace bohr {

/// Schur parameters gamma_0..gamma_M: |gamma_j| < 1 for j < M and
/// |gamma_M| <= 1. They determine a unique member of the Schur class.
class SchurParameters {
 public:
  explicit SchurParameters(std::vector<Complex> gammas);

  std::span<const Complex> gammas() const noexcept { return gammas_; }
  std::size_t size() const noexcept { return gammas_.size(); }

 private:
  std::vector<Complex> gammas_;
};

/// Taylor series (to `order`) of the function obtained from the backward
/// recursion f_M = gamma_M, f_j = (gamma_j + z f_{j+1}) / (1 + conj(gamma_j) z f_{j+1}).
TruncatedSeries schur_to_taylor(const SchurParameters& params, std::size_t order);

/// Radius of the disk the sampler draws interior parameters from.
inline constexpr double kSamplingRadius = 0.95;

/// Deterministic draw of `depth` parameters, uniform on |gamma| <= 0.95.
SchurParameters sample_schur_parameters(std::uint64_t seed, std::size_t depth);

TruncatedSeries sample_schur(std::uint64_t seed, std::size_t depth, std::size_t order);

enum class ExtremalKind {
  L1,         // (a - z) / (1 - a z)
  LacunaryD,  // z^m (a - z^p) / (1 - a z^p)
  L2,         // z^{p+m} (a - z^p) / (1 - a z^p)
  Monomial,   // z^{m+p}
};

ExtremalKind parse_extremal_kind(std::string_view name);

TruncatedSeries extremal_family(ExtremalKind kind, double a, int m, int p, std::size_t order);

}  // namespace bohr
