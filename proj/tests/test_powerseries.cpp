// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "bohr/error.hpp"
#include "bohr/powerseries.hpp"
#include "bohr/schur.hpp"
#include "oracles.hpp"

using bohr::Complex;
using bohr::ErrorKind;
using bohr::TruncatedSeries;

namespace {

TruncatedSeries series(std::vector<Complex> c, std::optional<double> bound = std::nullopt) {
  return TruncatedSeries(std::move(c), bound);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const bohr::Error& e) {
    return e.kind();
  }
  FAIL("expected a bohr::Error");
  return ErrorKind::IoError;
}

TruncatedSeries random_series(oracle::Generator& gen, std::size_t order) {
  return series(gen.complex_vector(order + 1));
}

// Direct double loop, no early exits.
std::vector<Complex> naive_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order());
  std::vector<Complex> c(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

}  // namespace

TEST_SUITE("powerseries") {

TEST_CASE("mul: telescoping product and geometric expansion") {
  const auto p = bohr::mul(series({1.0, 1.0, 0.0}), series({1.0, -1.0, 0.0}));
  CHECK(p[0] == Complex(1.0));
  CHECK(p[1] == Complex(0.0));
  CHECK(p[2] == Complex(-1.0));

  const auto geom = bohr::reciprocal(series({1.0, -0.5, 0.0, 0.0, 0.0}));
  const auto q = bohr::mul(series({0.5, -1.0, 0.0, 0.0, 0.0}), geom);
  const double expected[] = {0.5, -0.75, -0.375, -0.1875, -0.09375};
  for (int k = 0; k < 5; ++k) CHECK(std::abs(q[k] - expected[k]) < 1e-15);
}

TEST_CASE("mul: result order is the smaller order and bounds multiply") {
  const auto a = series({1.0, 2.0, 3.0}, 0.5);
  const auto b = series({1.0, 1.0, 1.0, 1.0, 1.0}, 0.25);
  const auto c = bohr::mul(a, b);
  CHECK(c.order() == 2);
  REQUIRE(c.sup_bound());
  CHECK(*c.sup_bound() == doctest::Approx(0.125));
  CHECK_FALSE(bohr::mul(a, series({1.0, 0.0, 0.0})).sup_bound());
}

TEST_CASE("mul: identity element and agreement with the naive product") {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(gen, static_cast<std::size_t>(gen.integer(0, 40)));
    const auto b = random_series(gen, static_cast<std::size_t>(gen.integer(0, 40)));
    const auto one = TruncatedSeries::constant(1.0, a.order());
    const auto same = bohr::mul(a, one);
    for (std::size_t k = 0; k <= a.order(); ++k) CHECK(same[k] == a[k]);
    const auto c = bohr::mul(a, b);
    const auto ref = naive_product(a, b);
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(c[k] - ref[k]) < 1e-13);
  }
}

TEST_CASE("mul: commutative and associative to 1e-14") {
  oracle::Generator gen(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 30));
    const auto a = random_series(gen, n);
    const auto b = random_series(gen, n);
    const auto c = random_series(gen, n);
    const auto ab = bohr::mul(a, b);
    const auto ba = bohr::mul(b, a);
    const auto left = bohr::mul(ab, c);
    const auto right = bohr::mul(a, bohr::mul(b, c));
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(std::abs(ab[k] - ba[k]) <= 1e-14 * (1.0 + std::abs(ab[k])));
      CHECK(std::abs(left[k] - right[k]) <= 1e-14 * (1.0 + std::abs(left[k])) * (n + 1));
    }
  }
}

TEST_CASE("reciprocal: geometric series and zero constant term") {
  const auto g = bohr::reciprocal(series({1.0, -1.0, 0.0, 0.0, 0.0, 0.0}));
  for (std::size_t k = 0; k <= 5; ++k) CHECK(g[k] == Complex(1.0));
  const auto h = bohr::reciprocal(series({1.0, -0.5, 0.0, 0.0}));
  const double expected[] = {1.0, 0.5, 0.25, 0.125};
  for (int k = 0; k < 4; ++k) CHECK(h[k] == Complex(expected[k]));
  CHECK(kind_of([] { bohr::reciprocal(series({0.0, 1.0, 0.0})); }) ==
        ErrorKind::ZeroConstantTerm);
}

TEST_CASE("reciprocal: a * (1/a) = 1 to 1e-12 when |c0| >= 0.1") {
  oracle::Generator gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 24));
    auto c = gen.complex_vector(n + 1, 0.2);
    c[0] = std::polar(gen.uniform(0.1, 1.0), gen.uniform(0.0, 6.3));
    // Keep the tail small relative to c0 so the inverse does not blow up.
    for (std::size_t k = 1; k <= n; ++k) c[k] *= std::abs(c[0]) * std::pow(0.5, k);
    const auto a = series(c);
    const auto prod = bohr::mul(a, bohr::reciprocal(a));
    CHECK(std::abs(prod[0] - 1.0) < 1e-12);
    for (std::size_t k = 1; k <= n; ++k) CHECK(std::abs(prod[k]) < 1e-12);
  }
}

TEST_CASE("mobius_map: expansions and preconditions") {
  const auto z = TruncatedSeries::identity(6);
  const auto m = bohr::mobius_map(0.5, z.with_sup_bound(1.0));
  for (int k = 0; k <= 6; ++k) CHECK(std::abs(m[k] - oracle::mobius_coefficient(0.5, k)) < 1e-15);
  REQUIRE(m.sup_bound());
  CHECK(*m.sup_bound() == 1.0);

  const auto neg = bohr::mobius_map(0.0, z);
  CHECK(neg[0] == Complex(0.0));
  CHECK(neg[1] == Complex(-1.0));
  CHECK(neg[2] == Complex(0.0));

  const auto c = bohr::mobius_map(0.5, TruncatedSeries::zero(3).with_sup_bound(1.0));
  CHECK(c[0] == Complex(0.5));
  CHECK(c.degree() == 0);

  CHECK(kind_of([&] { bohr::mobius_map(1.0, z); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([&] { bohr::mobius_map(-0.1, z); }) == ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { bohr::mobius_map(0.5, series({0.0, 2.0}, 2.0)); }) ==
        ErrorKind::ParameterOutOfRange);
}

TEST_CASE("mobius_map: involution for real parameters to 1e-10") {
  oracle::Generator gen(14);
  for (int trial = 0; trial < 40; ++trial) {
    const double a = gen.uniform(0.0, 0.95);
    const auto s = bohr::sample_schur(1000 + trial, 4, 64);
    const auto back = bohr::mobius_map(a, bohr::mobius_map(a, s));
    for (std::size_t k = 0; k <= s.order(); ++k) CHECK(std::abs(back[k] - s[k]) < 1e-10);
  }
}

TEST_CASE("monomial_lift: index bookkeeping") {
  const Complex a0(0.3, 0.1);
  const Complex a1(-0.2, 0.4);
  const auto lifted = bohr::monomial_lift(series({a0, a1}), 1, 2);
  CHECK(lifted.order() >= 3);
  CHECK(lifted[1] == a0);
  CHECK(lifted[3] == a1);
  CHECK(lifted[0] == Complex(0.0));
  CHECK(lifted[2] == Complex(0.0));

  const auto mob = bohr::mobius_map(0.5, TruncatedSeries::identity(8).with_sup_bound(1.0));
  const auto same = bohr::monomial_lift(mob, 0, 1);
  for (std::size_t k = 0; k <= 8; ++k) CHECK(same[k] == mob[k]);

  const auto spread = bohr::monomial_lift(mob, 2, 3);
  for (std::size_t n = 0; n <= spread.order(); ++n) {
    if (n >= 2 && (n - 2) % 3 == 0)
      CHECK(spread[n] == mob[(n - 2) / 3]);
    else
      CHECK(spread[n] == Complex(0.0));
  }
  CHECK(spread[2] == Complex(0.5));
  CHECK(spread[5] == Complex(-0.75));
  CHECK(spread[8] == Complex(-0.375));
}

TEST_CASE("monomial_lift: extraction recovers the input bit for bit") {
  oracle::Generator gen(15);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_series(gen, static_cast<std::size_t>(gen.integer(0, 30)));
    const int m = gen.integer(0, 5);
    const int p = gen.integer(1, 5);
    const auto lifted = bohr::monomial_lift(s, m, p);
    CHECK(lifted.order() >= s.order() * p + m);
    for (std::size_t k = 0; k <= s.order(); ++k) CHECK(lifted[k * p + m] == s[k]);
  }
}

TEST_CASE("tail bounds and required order") {
  CHECK(bohr::tail_bound(10, 0.0) == 0.0);
  CHECK(bohr::tail_bound(3, 0.5) == doctest::Approx(0.0625 / 0.5));
  for (double r : {0.1, 0.5, 0.9, 0.99}) {
    const auto n = bohr::required_order(r, 1e-12);
    CHECK(bohr::tail_bound(n, r) <= 1e-12);
    if (n > 0) CHECK(bohr::tail_bound(n - 1, r) > 1e-12);
  }
  CHECK(kind_of([] { bohr::required_order(1.0, 1e-12); }) == ErrorKind::RadiusOutOfRange);
}

TEST_CASE("Schur coefficient bounds flag violations") {
  CHECK(series({0.5, 0.75, 0.0}).satisfies_schur_coefficient_bounds());
  CHECK_FALSE(series({0.5, 0.8, 0.0}).satisfies_schur_coefficient_bounds());
  CHECK_FALSE(series({1.1}).satisfies_schur_coefficient_bounds());
}

TEST_CASE("evaluate matches Horner by hand") {
  const auto s = series({1.0, 2.0, 3.0});
  CHECK(std::abs(bohr::evaluate(s, 0.5) - Complex(2.75)) < 1e-15);
  CHECK(std::abs(bohr::evaluate(s, Complex(0, 1)) - Complex(-2.0, 2.0)) < 1e-15);
}

}  // TEST_SUITE
