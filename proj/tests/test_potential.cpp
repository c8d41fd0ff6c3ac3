#include <doctest.h>

#include <cmath>
#include <limits>

#include "saext/errors.hpp"
#include "saext/potential.hpp"

using namespace saext;

TEST_SUITE("potential") {
  TEST_CASE("evaluate examples") {
    CHECK(Potential::zero(1.0).evaluate(0.5) == 0.0);
    CHECK(Potential::harmonic(1.0, 1.0).evaluate(0.5) == 0.25);
    const auto well = Potential::finite_well(1.0, -10.0, 0.5);
    CHECK(well.evaluate(0.75) == 0.0);
    CHECK(well.evaluate(0.25) == -10.0);
    CHECK(Potential::cosine(1.0, 2.0, 3.0).evaluate(0.2) == 2.0 * std::cos(3.0 * 0.2));
    CHECK(Potential::polynomial(1.0, {1.0, 2.0, 3.0}).evaluate(0.5) == 1.0 + 1.0 + 0.75);
  }

  TEST_CASE("breakpoints take the right limit") {
    const auto well = Potential::finite_well(1.0, -10.0, 0.5);
    CHECK(well.evaluate(-0.5) == -10.0);
    CHECK(well.evaluate(0.5) == 0.0);
    const auto step = Potential::piecewise(1.0, {{-1.0, 0.0, {1.0}}, {0.0, 1.0, {2.0}}});
    CHECK(step.evaluate(0.0) == 2.0);
    CHECK(step.segment_count() == 2);
  }

  TEST_CASE("out of domain") {
    CHECK_THROWS_AS(Potential::zero(1.0).evaluate(1.5), DomainError);
    CHECK_THROWS_AS(Potential::zero(1.0).evaluate(std::nan("")), DomainError);
  }

  TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(Potential::zero(0.0), ParameterError);
    CHECK_THROWS_AS(Potential::zero(-1.0), ParameterError);
    CHECK_THROWS_AS(Potential::harmonic(1.0, std::numeric_limits<double>::infinity()), ParameterError);
    CHECK_THROWS_AS(Potential::piecewise(1.0, {{-1.0, 0.2, {1.0}}, {0.3, 1.0, {2.0}}}), ParameterError);
    CHECK_THROWS_AS(Potential::piecewise(1.0, {{-0.5, 1.0, {1.0}}}), ParameterError);
  }

  TEST_CASE("parity") {
    CHECK(is_even(Potential::harmonic(1.0, 1.0), 1e-12));
    CHECK_FALSE(is_even(Potential::polynomial(1.0, {0.0, 1.0}), 1e-12));
    CHECK(is_even(Potential::zero(2.0), 0.0));
    CHECK(is_even(Potential::polynomial(1.0, {1.0, 0.0, 3.0}), 1e-12));
    CHECK(is_even(Potential::piecewise(1.0, {{-1.0, -0.3, {0.0}}, {-0.3, 0.3, {5.0}}, {0.3, 1.0, {0.0}}}), 1e-12));
    for (const auto& p : {Potential::zero(1.0), Potential::harmonic(1.0, 2.0), Potential::cosine(1.0, 1.0, 3.14),
                          Potential::finite_well(1.0, -3.0, 0.2)}) {
      CHECK(is_even(p, 1e-12));
    }
  }

  TEST_CASE("evaluate is pure") {
    const auto p = Potential::cosine(1.3, 0.7, 2.9);
    for (int i = 0; i <= 50; ++i) {
      const double x = -1.3 + 2.6 * i / 50;
      CHECK(p.evaluate(x) == p.evaluate(x));
    }
  }
}
