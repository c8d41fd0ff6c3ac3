#include <doctest.h>

#include <numbers>
#include <random>

#include "saext/errors.hpp"
#include "saext/odesolve.hpp"

using namespace saext;

namespace {
const cplx kI{0.0, 1.0};
}

TEST_SUITE("odesolve") {
  TEST_CASE("closed-form oracles") {
    const auto z = Potential::zero(1.0);
    const auto s = integrate(z, -1.0, -1.0, 1.0, 1.0, 0.0);
    CHECK(std::abs(s.f1 - 3.76219569108363146) < 1e-9);
    const auto c = integrate(z, kI, 0.0, 1.0, 1.0, 0.0);
    CHECK(std::abs(c.f1 - cplx(0.958358132833007016, -0.498611386672832762)) < 1e-9);
    const auto zero = integrate(z, cplx(3.0, 1.0), -1.0, 1.0, 0.0, 0.0);
    for (const auto& smp : zero.samples) CHECK(std::abs(smp.f) == 0.0);
  }

  TEST_CASE("solution layout") {
    const auto p = Potential::finite_well(1.0, -5.0, 0.3);
    const auto s = integrate(p, 2.0, 1.0, -1.0, 1.0, 0.5);
    CHECK(s.samples.front().x == 1.0);
    CHECK(s.samples.back().x == -1.0);
    CHECK(s.f1 == s.samples.back().f);
    CHECK(s.df1 == s.samples.back().df);
    double max_gap = 0.0;
    for (std::size_t i = 1; i < s.samples.size(); ++i) {
      CHECK(s.samples[i].x < s.samples[i - 1].x);
      max_gap = std::max(max_gap, s.samples[i - 1].x - s.samples[i].x);
    }
    CHECK(max_gap <= 2.0 / 256);
    const auto grid = sample_grid(p, -1.0, 1.0, 256);
    CHECK(std::find(grid.begin(), grid.end(), -0.3) != grid.end());
    CHECK(std::find(grid.begin(), grid.end(), 0.3) != grid.end());
  }

  TEST_CASE("inner products") {
    const auto z = Potential::zero(1.0);
    const auto one = integrate(z, 0.0, -1.0, 1.0, 1.0, 0.0);
    CHECK(std::abs(l2_inner(one, one) - 2.0) < 1e-12);
    const double k = std::numbers::pi / 2;
    const auto c = integrate(z, k * k, -1.0, 1.0, 0.0, k);  // sin(k(x+1)) = cos(kx)
    CHECK(std::abs(l2_inner(c, c) - 1.0) < 1e-9);
    const auto u = integrate(z, 4.0, -1.0, 1.0, std::cos(-2.0), 2.0 * std::sin(2.0));  // cos(2x), even
    const auto w = integrate(z, 4.0, -1.0, 1.0, std::sin(-2.0), 2.0 * std::cos(-2.0));  // sin(2x), odd
    CHECK(std::abs(l2_inner(u, w)) < 1e-12);
    const auto conj_lin = l2_inner(scaled(u, kI), w);
    CHECK(std::abs(conj_lin - (-kI) * l2_inner(u, w)) < 1e-14);
  }

  TEST_CASE("mismatched grids are rejected") {
    const auto z = Potential::zero(1.0);
    const auto u = integrate(z, 1.0, -1.0, 1.0, 1.0, 0.0);
    const auto w = integrate(z, 1.0, -1.0, 0.5, 1.0, 0.0);
    CHECK_THROWS_AS(l2_inner(u, w), GridError);
  }

  TEST_CASE("Wronskian constancy and linearity") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    for (const auto& p : {Potential::harmonic(1.0, 1.0), Potential::finite_well(2.0, -10.0, 1.0),
                          Potential::polynomial(1.0, {0.0, 1.0})}) {
      const double a = p.half_width();
      const cplx lambda{g(rng), g(rng)};
      const auto u = integrate(p, lambda, -a, a, 1.0, 0.0);
      const auto w = integrate(p, lambda, -a, a, 0.0, 1.0);
      const cplx w0 = wronskian(u.samples.front(), w.samples.front());
      for (std::size_t i = 0; i < u.samples.size(); ++i) {
        CHECK(std::abs(wronskian(u.samples[i], w.samples[i]) - w0) <= 1e-9 * std::abs(w0));
      }
      const cplx c{g(rng), g(rng)};
      const auto uc = integrate(p, lambda, -a, a, c, 0.0);
      CHECK(std::abs(uc.f1 - c * u.f1) <= 1e-10 * std::abs(c * u.f1));
    }
  }

  TEST_CASE("tolerance halving converges") {
    const auto p = Potential::cosine(2.0, 1.0, std::numbers::pi);
    const OdeOptions coarse{1e-8, 1e-10, 1024};
    const OdeOptions fine{0.5e-8, 0.5e-10, 1024};
    const auto s1 = integrate(p, kI, -2.0, 2.0, 1.0, 0.0, coarse);
    const auto s2 = integrate(p, kI, -2.0, 2.0, 1.0, 0.0, fine);
    CHECK(std::abs(s1.f1 - s2.f1) < coarse.rtol * std::abs(s2.f1) + coarse.atol);
    CHECK(std::abs(s1.df1 - s2.df1) < coarse.rtol * std::abs(s2.df1) + coarse.atol);
  }

  TEST_CASE("bad arguments") {
    const auto z = Potential::zero(1.0);
    CHECK_THROWS_AS(integrate(z, 1.0, 0.5, 0.5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate(z, 1.0, -2.0, 0.5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(integrate(z, 1.0, -1.0, 1.0, 1.0, 0.0, {-1.0, 1e-12, 1024}), ParameterError);
  }
}
