// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <numbers>

#include "bohr/error.hpp"
#include "bohr/schur.hpp"
#include "oracles.hpp"

using bohr::Complex;
using bohr::ExtremalKind;

TEST_SUITE("schur") {

TEST_CASE("schur_to_taylor: small parameter sets") {
  const Complex g0(0.3, -0.4);
  const auto c = bohr::schur_to_taylor(bohr::SchurParameters({g0}), 5);
  CHECK(c[0] == g0);
  CHECK(c.degree() == 0);

  const Complex g1(0.2, 0.6);
  const auto lin = bohr::schur_to_taylor(bohr::SchurParameters({0.0, g1}), 5);
  CHECK(std::abs(lin[1] - g1) < 1e-15);
  CHECK(std::abs(lin[0]) < 1e-15);
  for (std::size_t k = 2; k <= 5; ++k) CHECK(std::abs(lin[k]) < 1e-15);

  const auto half = bohr::schur_to_taylor(bohr::SchurParameters({0.5, 0.5}), 5);
  CHECK(std::abs(half[0] - 0.5) < 1e-15);
  CHECK(half[1].real() == doctest::Approx(0.375).epsilon(1e-15));
  REQUIRE(half.sup_bound());
  CHECK(*half.sup_bound() == 1.0);
}

TEST_CASE("SchurParameters: modulus constraints") {
  CHECK_NOTHROW(bohr::SchurParameters({0.5, 1.0}));
  CHECK_THROWS_AS(bohr::SchurParameters({1.0, 0.5}), bohr::Error);
  CHECK_THROWS_AS(bohr::SchurParameters({0.5, 1.01}), bohr::Error);
  CHECK_THROWS_AS(bohr::SchurParameters({}), bohr::Error);
}

TEST_CASE("sample_schur: determinism and depth one") {
  const auto constant = bohr::sample_schur(7, 1, 4);
  const auto gammas = bohr::sample_schur_parameters(7, 1);
  CHECK(constant[0] == gammas.gammas()[0]);
  CHECK(constant.degree() == 0);

  const auto a = bohr::sample_schur(7, 5, 64);
  const auto b = bohr::sample_schur(7, 5, 64);
  for (std::size_t k = 0; k <= 64; ++k) CHECK(a[k] == b[k]);
  const auto c = bohr::sample_schur(8, 5, 64);
  CHECK(a[1] != c[1]);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto params = bohr::sample_schur_parameters(seed, 8);
    for (const auto& g : params.gammas())
      CHECK(std::abs(g) <= bohr::kSamplingRadius);
  }
}

TEST_CASE("sample_schur: bounded by one near the boundary circle") {
  const auto f = bohr::sample_schur(7, 5, 64);
  const auto gammas = bohr::sample_schur_parameters(7, 5);
  const std::vector<Complex> gv(gammas.gammas().begin(), gammas.gammas().end());
  double worst = 0.0;
  for (int j = 0; j < 4096; ++j) {
    const auto z = std::polar(0.999, 2.0 * std::numbers::pi * j / 4096);
    worst = std::max(worst, std::abs(oracle::schur_value(gv, z)));
  }
  CHECK(worst <= 1.0 + 1e-9);
  // The truncated series tracks the pointwise value at |z| = 0.5.
  const auto z = std::polar(0.5, 1.0);
  CHECK(std::abs(bohr::evaluate(f, z) - oracle::schur_value(gv, z)) < 1e-12);
}

TEST_CASE("Wiener and Cauchy estimates hold for sampled functions") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto f = bohr::sample_schur(seed, 1 + seed % 9, 128);
    CHECK(f.satisfies_schur_coefficient_bounds(1e-12));
  }
}

TEST_CASE("schur_to_taylor matches Fourier inversion of the recursion") {
  oracle::Generator gen(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> gammas(static_cast<std::size_t>(gen.integer(1, 8)));
    for (auto& g : gammas) g = gen.in_disk(0.95);
    const auto f = bohr::schur_to_taylor(bohr::SchurParameters(gammas), 40);
    const auto ref = oracle::fourier_coefficients(
        [&](Complex z) { return oracle::schur_value(gammas, z); }, 0.5, 256, 21);
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(f[k] - ref[k]) < 1e-8);
  }
}

TEST_CASE("extremal families") {
  const auto d = bohr::extremal_family(ExtremalKind::LacunaryD, 0.5, 0, 1, 8);
  const double moduli[] = {0.5, 0.75, 0.375, 0.1875};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(d[k]) == doctest::Approx(moduli[k]).epsilon(1e-15));

  const auto mono = bohr::extremal_family(ExtremalKind::Monomial, 0.0, 1, 2, 6);
  CHECK(mono[3] == Complex(1.0));
  CHECK(mono.degree() == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(mono[k] == Complex(0.0));

  const auto l2 = bohr::extremal_family(ExtremalKind::L2, 0.0, 0, 1, 6);
  CHECK(l2[2] == Complex(-1.0));
  CHECK(l2.degree() == 2);

  const auto l1 = bohr::extremal_family(ExtremalKind::L1, 0.3, 0, 1, 10);
  for (int k = 0; k <= 10; ++k) CHECK(std::abs(l1[k] - oracle::mobius_coefficient(0.3, k)) < 1e-15);

  CHECK_THROWS_AS(bohr::extremal_family(ExtremalKind::L1, 1.0, 0, 1, 4), bohr::Error);
  CHECK_THROWS_AS(bohr::extremal_family(ExtremalKind::LacunaryD, 0.5, 3, 2, 8), bohr::Error);
  CHECK(bohr::parse_extremal_kind("L2") == ExtremalKind::L2);
  CHECK_THROWS_AS(bohr::parse_extremal_kind("L3"), bohr::Error);
}

TEST_CASE("LacunaryD coefficient law") {
  oracle::Generator gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = gen.integer(1, 4);
    const int m = gen.integer(0, p);
    const double a = gen.uniform(0.0, 0.99);
    const auto f = bohr::extremal_family(ExtremalKind::LacunaryD, a, m, p, 60);
    CHECK(f.order() == 60);
    for (std::size_t n = 0; n <= 60; ++n) {
      const bool on = n >= static_cast<std::size_t>(m) && (n - m) % p == 0;
      if (!on) {
        CHECK(std::abs(f[n]) == 0.0);
        continue;
      }
      const int k = static_cast<int>((n - m) / p);
      const double expected = k == 0 ? a : (1.0 - a * a) * std::pow(a, k - 1);
      CHECK(std::abs(std::abs(f[n]) - expected) < 1e-14);
    }
    CHECK(f.satisfies_schur_coefficient_bounds());
  }
}

}  // TEST_SUITE
