// Copyright 2026 The bohrcheck Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <limits>

#include "bohr/error.hpp"
#include "bohr/radius.hpp"
#include "oracles.hpp"

using bohr::ErrorKind;
using bohr::RadiusId;
using bohr::RadiusSpec;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const bohr::Error& e) {
    return e.kind();
  }
  FAIL("expected a bohr::Error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_SUITE("radius") {

TEST_CASE("equation values") {
  CHECK(bohr::equation_value({RadiusId::ThmC34, 1, 1}, 0.5) == doctest::Approx(-0.5));
  CHECK(std::abs(bohr::equation_value({RadiusId::Thm32, 1, 0}, 0.6)) < 1e-14);
  for (int p = 1; p <= 4; ++p)
    for (int m = 0; m <= p; ++m)
      CHECK(bohr::equation_value({RadiusId::ThmC34, p, m}, 1.0) == doctest::Approx(1.0));
  CHECK(kind_of([] { bohr::equation_value({RadiusId::ThmC34, 1, 1}, 1.5); }) ==
        ErrorKind::RadiusOutOfRange);
  CHECK(kind_of([] { bohr::equation_value({RadiusId::ThmC34, 1, 2}, 0.5); }) ==
        ErrorKind::ParameterOutOfRange);
  CHECK(kind_of([] { bohr::equation_value({RadiusId::Thm31, 1, 0, 1.0, 1.0}, 0.5); }) ==
        ErrorKind::ParameterOutOfRange);
}

TEST_CASE("solved radii") {
  CHECK(bohr::solve_radius({RadiusId::ThmC34, 1, 1}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(bohr::solve_radius({RadiusId::Thm32, 1, 0}) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(bohr::solve_radius({RadiusId::Cor43, 1, 0}) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  for (double a0 : {0.0, 0.3, 0.9})
    CHECK(bohr::solve_radius({RadiusId::Thm31, 1, 0, a0, 2.0}) == doctest::Approx(0.5));
  CHECK(bohr::solve_radius({RadiusId::ClassicBohr}) == doctest::Approx(1.0 / 3.0));
  CHECK(bohr::solve_radius({RadiusId::Alternating}) == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("bisection brackets the root to the requested tolerance") {
  for (int p = 1; p <= 5; ++p) {
    for (int m = 0; m <= p; ++m) {
      for (auto id : {RadiusId::ThmC34, RadiusId::Thm32, RadiusId::Cor43}) {
        const RadiusSpec spec{id, p, m};
        const double r = bohr::bisect_radius(spec, 1e-12);
        CHECK(r > 0.0);
        CHECK(r < 1.0);
        CHECK(bohr::equation_value(spec, std::max(0.0, r - 1e-11)) < 0.0);
        CHECK(bohr::equation_value(spec, std::min(1.0, r + 1e-11)) > 0.0);
      }
    }
  }
}

TEST_CASE("closed forms agree with bisection") {
  for (int p : {1, 2, 3, 5}) {
    for (int m = 0; m <= p; ++m) {
      for (auto id : {RadiusId::ThmC34, RadiusId::Thm32, RadiusId::Cor43}) {
        const RadiusSpec spec{id, p, m};
        if (auto closed = bohr::closed_form_radius(spec))
          CHECK(std::abs(*closed - bohr::bisect_radius(spec, 1e-13)) < 1e-12);
      }
    }
  }
  oracle::Generator gen(41);
  for (int trial = 0; trial < 50; ++trial) {
    const RadiusSpec spec{RadiusId::Thm31, 1, 0, gen.uniform(0.0, 0.99), gen.uniform(0.1, 4.0)};
    CHECK(std::abs(*bohr::closed_form_radius(spec) - bohr::bisect_radius(spec, 1e-13)) < 1e-12);
  }
}

TEST_CASE("monotone equations and the sign pattern of G") {
  oracle::Generator gen(42);
  for (int trial = 0; trial < 100; ++trial) {
    const int p = gen.integer(1, 5);
    const int m = gen.integer(0, p);
    double r1 = gen.uniform(0.001, 0.999);
    double r2 = gen.uniform(0.001, 0.999);
    if (r1 > r2) std::swap(r1, r2);
    if (r2 - r1 < 1e-6) continue;
    for (auto spec : {RadiusSpec{RadiusId::ThmC34, p, m}, RadiusSpec{RadiusId::Cor43, p, m},
                      RadiusSpec{RadiusId::Thm31, 1, 0, gen.uniform(0.0, 0.99), 1.5}}) {
      CHECK(bohr::equation_value(spec, r1) < bohr::equation_value(spec, r2));
    }
  }
  for (int p = 1; p <= 5; ++p) {
    for (int m = 0; m <= p; ++m) {
      const RadiusSpec spec{RadiusId::Thm32, p, m};
      CHECK(bohr::equation_value(spec, 0.0) == doctest::Approx(m == 0 ? -3.0 : -4.0));
      CHECK(bohr::equation_value(spec, 1.0) == doctest::Approx(4.0));
      CHECK(bohr::equation_value(spec, 1e-6) < 0.0);
    }
  }
}

TEST_CASE("the two Theorem C evaluation paths agree") {
  for (int p = 1; p <= 6; ++p) {
    for (int m = 0; m <= p; ++m) {
      const double r = bohr::solve_radius({RadiusId::ThmC34, p, m});
      for (double x : {0.1, 0.5, r, 0.95}) {
        CHECK(std::abs(bohr::theorem_c_equation(p, m, x) -
                       bohr::equation_value({RadiusId::ThmC34, p, m}, x)) < 1e-14);
      }
    }
  }
}

TEST_CASE("classical Bohr radius from the Mobius family") {
  CHECK(std::abs(bohr::classical_bohr_radius(1e-6) - 1.0 / 3.0) < 1e-6);
  CHECK(std::abs(bohr::classical_bohr_radius(1e-10) - 1.0 / 3.0) < 1e-10);
  CHECK(bohr::mobius_equality_radius(0.0) == doctest::Approx(1.0));
  for (double a : {0.1, 0.5, 0.9})
    CHECK(bohr::mobius_equality_radius(a) == doctest::Approx(1.0 / (1.0 + 2.0 * a)).epsilon(1e-11));
}

TEST_CASE("uniform Thm31 radius") {
  CHECK(bohr::thm31_uniform_radius(1.0) == doctest::Approx(1.0 / 3.0));
  CHECK(bohr::thm31_uniform_radius(2.0) == doctest::Approx(0.5));
  CHECK(bohr::thm31_uniform_radius(0.5) == doctest::Approx(0.2));
  // Brute-force infimum over a of the per-function radius.
  for (double s : {0.5, 1.0, 2.0, 3.0}) {
    double best = 1.0;
    for (int i = 0; i < 100000; ++i) {
      const double a = i / 100000.0;
      best = std::min(best, *bohr::closed_form_radius({RadiusId::Thm31, 1, 0, a, s}));
    }
    CHECK(best == doctest::Approx(bohr::thm31_uniform_radius(s)).epsilon(1e-4));
  }
}

TEST_CASE("tolerance and bracket errors") {
  const double tiny = std::numeric_limits<double>::epsilon();
  CHECK(kind_of([&] { bohr::solve_radius({RadiusId::Thm32, 1, 1}, tiny); }) ==
        ErrorKind::ToleranceTooSmall);
  CHECK(kind_of([] { bohr::bisect([](double x) { return x + 1.0; }, 0.0, 1.0, 1e-12); }) ==
        ErrorKind::NoSignChange);
  CHECK(kind_of([] { bohr::parse_radius_id("Thm99"); }) == ErrorKind::UnknownTheorem);
}

}  // TEST_SUITE
