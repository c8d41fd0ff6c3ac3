#include <doctest.h>

#include <numbers>

#include "saext/deficiency.hpp"
#include "saext/errors.hpp"

using namespace saext;

namespace {
const cplx kI{0.0, 1.0};

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_SUITE("deficiency") {
  TEST_CASE("zero potential matches the complex trigonometric closed form") {
    const auto basis = solve_even_odd(Potential::zero(1.0));
    const cplx k = std::polar(1.0, std::numbers::pi / 4);
    const double r = k.real(), b = k.imag();
    const double n_plus = 1.0 / std::sqrt(std::sinh(2 * b) / (2 * b) + std::sin(2 * r) / (2 * r));
    const double n_minus = 1.0 / std::sqrt(std::sinh(2 * b) / (2 * b) - std::sin(2 * r) / (2 * r));
    const auto& t = basis.boundary.table;
    CHECK(std::abs(t(0, 1) - n_plus * std::cos(k)) < 1e-9);
    CHECK(std::abs(t(0, 0) + n_plus * k * std::sin(k)) < 1e-9);
    CHECK(std::abs(t(1, 1) - n_minus * std::sin(k) / k) < 1e-9);
    CHECK(std::abs(t(1, 0) - n_minus * std::cos(k)) < 1e-9);
    // Parity-derived values at -a.
    CHECK(t(0, 3) == t(0, 1));
    CHECK(t(0, 2) == -t(0, 0));
    CHECK(t(1, 3) == -t(1, 1));
    CHECK(t(1, 2) == t(1, 0));
  }

  TEST_CASE("even-mode invariants") {
    for (double a : {0.5, 1.0, 2.0}) {
      for (const auto& p : {Potential::zero(a), Potential::harmonic(a, 1.0),
                            Potential::cosine(a, 1.0, std::numbers::pi), Potential::finite_well(a, -10.0, a / 2)}) {
        const auto basis = solve_even_odd(p);
        const auto d = diagnose(basis);
        CHECK(std::abs((*d.gram)(0, 1)) < 1e-10);
        CHECK(max_abs(*d.gram - Matrix2c::Identity()) < 1e-8);
        CHECK(std::abs(d.wronskian[0] - kI) < 1e-8);
        CHECK(std::abs(d.wronskian[1] - kI) < 1e-8);
        CHECK(d.sv_A.min > 1e-8 * d.sv_A.max);
        CHECK(d.sv_B.min > 1e-8 * d.sv_B.max);
        CHECK_NOTHROW(assert_invariants(basis));
      }
    }
  }

  TEST_CASE("general-mode relations") {
    for (const auto& p : {Potential::zero(1.0), Potential::polynomial(1.0, {0.0, 1.0}),
                          Potential::piecewise(1.0, {{-1.0, 0.2, {0.0, 2.0}}, {0.2, 1.0, {3.0}}})}) {
      const auto basis = solve_orthonormal_pair(p);
      CHECK(basis.boundary.mode == BasisMode::general);
      const auto d = diagnose(basis);
      CHECK(std::abs((*d.gram)(0, 1)) < 1e-8);
      CHECK(max_abs(*d.gram - Matrix2c::Identity()) < 1e-8);
      CHECK(std::abs(d.boundary_form(0, 0) - 2.0 * kI) < 1e-8);
      CHECK(std::abs(d.boundary_form(1, 1) - 2.0 * kI) < 1e-8);
      CHECK(std::abs(d.boundary_form(0, 1)) < 1e-8);
      CHECK(max_abs(d.boundary_form_plain) < 1e-8);
    }
  }

  TEST_CASE("even and general bases differ by a unitary") {
    for (const auto& p : {Potential::zero(1.0), Potential::harmonic(2.0, 1.0), Potential::finite_well(1.0, -10.0, 0.5)}) {
      double fit = 1.0;
      const Matrix2c w = change_of_basis(solve_even_odd(p).boundary, solve_orthonormal_pair(p).boundary, &fit);
      CHECK(fit < 1e-8);
      CHECK(unitarity_defect(w) < 1e-7);
    }
  }

  TEST_CASE("non-even potential is rejected by the parity construction") {
    CHECK_THROWS_AS(solve_even_odd(Potential::polynomial(1.0, {0.0, 1.0})), ParityError);
  }

  TEST_CASE("corrupted boundary data fails the invariant check") {
    auto basis = solve_even_odd(Potential::zero(1.0));
    basis.boundary.table(0, 1) *= 1.01;
    basis.boundary.mat_A = Matrix2c{{basis.boundary.table(0, 1), 0.0}, {0.0, basis.boundary.table(1, 1)}};
    CHECK_THROWS_AS(assert_invariants(basis), InvariantError);
  }
}
