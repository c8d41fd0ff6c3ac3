#include <doctest.h>

#include <algorithm>
#include <numbers>

#include "oracles.hpp"
#include "saext/errors.hpp"
#include "saext/spectrum.hpp"

using namespace saext;

namespace {
constexpr double pi = std::numbers::pi;

BoundaryCondition named(BcName name) {
  BcFamily f;
  f.name = name;
  return classify(synthesize(f));
}

SpectrumResult scan(const Potential& p, const BoundaryCondition& bc, double lo, double hi, int grid,
                    int threads = 1) {
  ScanOptions o;
  o.e_min = lo;
  o.e_max = hi;
  o.grid = grid;
  o.threads = threads;
  return find_eigenvalues(p, bc, o);
}

void check_levels(const SpectrumResult& r, const std::vector<oracle::Level>& want) {
  REQUIRE(r.eigenvalues.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(std::abs(r.eigenvalues[k] - want[k].E) <= 1e-6 * std::max(1.0, want[k].E));
    CHECK(r.degeneracies[k] == want[k].degeneracy);
  }
}

/// Even or odd pointwise, measured on the L2-normalized samples.
double parity_defect(const OdeSolution& f) {
  const auto& s = f.samples;
  double even = 0.0, odd = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const cplx mirror = s[s.size() - 1 - i].f;
    even = std::max(even, std::abs(s[i].f - mirror));
    odd = std::max(odd, std::abs(s[i].f + mirror));
  }
  return std::min(even, odd);
}
}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("det function examples") {
    const auto z = Potential::zero(1.0);
    const auto d = named(BcName::dirichlet);
    CHECK(std::abs(det_function(z, d, pi * pi / 4)) <= 1e-8);
    CHECK(std::abs(det_function(z, d, 1.0)) > 1e-3);
    const double E = 3.0, h = 1e-4;
    const cplx d0 = det_function(z, d, E);
    const cplx full = det_function(z, d, E + h) - d0;
    const cplx half = det_function(z, d, E + h / 2) - d0;
    CHECK(std::abs(full / half - 2.0) < 1e-3);
  }

  TEST_CASE("scan examples") {
    const auto z = Potential::zero(1.0);
    check_levels(scan(z, named(BcName::dirichlet), 0.1, 30.0, 600), oracle::box_dirichlet(1.0, 30.0));
    check_levels(scan(z, named(BcName::neumann), -0.5, 12.0, 400), oracle::box_neumann(1.0, 12.0));
    check_levels(scan(z, named(BcName::periodic), -0.5, 12.0, 400), oracle::box_periodic(1.0, 12.0));
    check_levels(scan(z, named(BcName::anti_periodic), 0.0, 12.0, 400), oracle::box_anti_periodic(1.0, 12.0));
  }

  TEST_CASE("mixed theta = 0 oracle") {
    // f(a) = 0 and f'(-a) = 0: quarter-wave modes on a box of width 2.
    const auto r = scan(Potential::zero(1.0), named(BcName::dirichlet_at_a_neumann_at_minus_a), -2.0, 40.0, 400);
    std::vector<oracle::Level> want;
    for (int n = 0; std::pow((n + 0.5) * pi / 2, 2) < 40.0; ++n) want.push_back({std::pow((n + 0.5) * pi / 2, 2), 1});
    check_levels(r, want);
  }

  TEST_CASE("Dirichlet ground state residuals") {
    const auto r = scan(Potential::zero(1.0), named(BcName::dirichlet), 0.1, 5.0, 64);
    REQUIRE(r.eigenvalues.size() == 1);
    const auto res = eigenfunction_residuals(r);
    CHECK(res.worst_boundary <= 1e-7);
    CHECK(res.worst_symmetry <= 1e-7);
    CHECK(res.worst_equation <= 1e-7);
    const auto& f = r.eigenfunctions[0][0];
    CHECK(std::abs(l2_inner(f, f) - 1.0) < 1e-8);
    // Against cos(pi x / 2) on the samples.
    double err = 0.0;
    for (const auto& s : f.samples) err = std::max(err, std::abs(s.f - std::cos(pi * s.x / 2)));
    CHECK(err < 1e-7);
  }

  TEST_CASE("Robin eigenvalues satisfy the transcendental condition") {
    BcFamily f;
    f.name = BcName::robin;
    f.alpha = 1.0;
    f.gamma = 1.0;
    const auto bc = classify(synthesize(f));
    const auto p = Potential::zero(1.0);
    const auto r = scan(p, bc, default_e_min(p, bc), 40.0, 300);
    const auto want = oracle::robin_levels(1.0, 1.0, 1.0, -10.0, 40.0);
    REQUIRE(r.eigenvalues.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(std::abs(r.eigenvalues[k] - want[k]) <= 1e-6 * std::max(1.0, std::abs(want[k])));
      const auto& mode = r.eigenfunctions[k][0];
      CHECK(std::abs(mode.df1 - mode.f1) <= 1e-6);
      CHECK(std::abs(mode.df0 - mode.f0) <= 1e-6);
    }
  }

  TEST_CASE("stored eigenfunctions are normalized and self-adjoint witnesses") {
    BcFamily f;
    f.name = BcName::automorphic;
    f.K = cplx{0.3, 0.8};
    const auto p = Potential::polynomial(1.0, {0.0, 1.0, 0.5});
    const auto bc = classify(synthesize(f));
    const auto r = scan(p, bc, default_e_min(p, bc), 40.0, 300);
    CHECK(r.eigenvalues.size() >= 3);
    for (std::size_t k = 1; k < r.eigenvalues.size(); ++k) CHECK(r.eigenvalues[k] > r.eigenvalues[k - 1]);
    for (const auto& modes : r.eigenfunctions) {
      for (const auto& m : modes) CHECK(std::abs(l2_inner(m, m) - 1.0) < 1e-8);
    }
    const auto res = eigenfunction_residuals(r);
    CHECK(res.worst_boundary <= 1e-6);
    CHECK(res.worst_symmetry <= 1e-6);
  }

  TEST_CASE("Dirichlet and Neumann interlace") {
    for (const auto& p : {Potential::harmonic(1.0, 1.0), Potential::finite_well(1.0, -10.0, 0.5)}) {
      const auto d = scan(p, named(BcName::dirichlet), -12.0, 60.0, 600);
      const auto n = scan(p, named(BcName::neumann), -12.0, 60.0, 600);
      REQUIRE(d.eigenvalues.size() >= 3);
      REQUIRE(n.eigenvalues.size() >= d.eigenvalues.size());
      for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
        CHECK(n.eigenvalues[k] <= d.eigenvalues[k]);
        if (k + 2 < n.eigenvalues.size()) CHECK(d.eigenvalues[k] <= n.eigenvalues[k + 2]);
      }
    }
  }

  TEST_CASE("doubling the grid keeps every eigenvalue") {
    const auto p = Potential::cosine(1.0, 3.0, pi);
    const auto bc = named(BcName::periodic);
    const auto coarse = scan(p, bc, -5.0, 50.0, 200);
    const auto fine = scan(p, bc, -5.0, 50.0, 400);
    const double dedup = 55.0 / (10.0 * 200);
    for (double E : coarse.eigenvalues) {
      const bool kept = std::any_of(fine.eigenvalues.begin(), fine.eigenvalues.end(),
                                    [&](double F) { return std::abs(E - F) < dedup; });
      CHECK(kept);
    }
  }

  TEST_CASE("parity of eigenfunctions for scalar boundary unitaries") {
    const auto p = Potential::harmonic(1.0, 2.0);
    for (const Matrix2c& U : {Matrix2c(Matrix2c::Identity()), Matrix2c(-Matrix2c::Identity()),
                              Matrix2c(std::polar(1.0, 2.0) * Matrix2c::Identity())}) {
      const auto bc = classify(U);
      const auto r = scan(p, bc, default_e_min(p, bc), 50.0, 300);
      REQUIRE(!r.eigenvalues.empty());
      for (const auto& modes : r.eigenfunctions) {
        for (const auto& m : modes) CHECK(parity_defect(m) <= 1e-6);
      }
    }
  }

  TEST_CASE("serial and parallel scans agree exactly") {
    const auto p = Potential::finite_well(1.0, -10.0, 0.5);
    const auto bc = named(BcName::periodic);
    std::vector<double> energies;
    for (int i = 0; i <= 64; ++i) energies.push_back(-10.0 + 0.7 * i);
    const auto s = scan_det_serial(p, bc.Ucal.matrix(), energies, {});
    const auto q = scan_det_parallel(p, bc.Ucal.matrix(), energies, {}, 4);
    CHECK(s == q);
    const auto rs = scan(p, bc, -11.0, 40.0, 200, 1);
    const auto rp = scan(p, bc, -11.0, 40.0, 200, 4);
    CHECK(rs.eigenvalues == rp.eigenvalues);
  }

  TEST_CASE("argument validation") {
    const auto z = Potential::zero(1.0);
    CHECK_THROWS_AS(scan(z, named(BcName::dirichlet), 5.0, 1.0, 100), ParameterError);
    CHECK_THROWS_AS(scan(z, named(BcName::dirichlet), 0.0, 1.0, 8), ParameterError);
    CHECK(scan(z, named(BcName::dirichlet), 0.1, 2.0, 32).eigenvalues.empty());
  }

  TEST_CASE("phase winding counts box levels with multiplicity") {
    const auto z = Potential::zero(1.0);
    const auto count = [&](BcName name, double lo, double hi) {
      const Matrix2c U = named(name).Ucal.matrix();
      return count_eigenvalues(z, U, phases_at(z, U, lo), phases_at(z, U, hi));
    };
    CHECK(count(BcName::dirichlet, 0.1, 30.0) == 3);
    CHECK(count(BcName::neumann, -0.5, 12.0) == 3);
    CHECK(count(BcName::periodic, -0.5, 12.0) == 3);
    CHECK(count(BcName::anti_periodic, 0.0, 12.0) == 2);
    CHECK(count(BcName::periodic, -0.5, 45.0) == 5);
    CHECK(count(BcName::dirichlet, 1.0, 2.0) == 0);
  }

  TEST_CASE("close levels sharing a grid cell are both found") {
    // Periodic coupling of an even potential splits into even modes with f'(0) = f'(a) = 0
    // and odd modes with f(0) = f(a) = 0; for x^2 on [-1, 1] they pair up within 0.03.
    const auto V = [](double x) { return x * x; };
    std::vector<double> want = oracle::half_interval_levels(V, 1.0, true, true, -1.0, 45.0);
    const auto odd = oracle::half_interval_levels(V, 1.0, false, false, -1.0, 45.0);
    want.insert(want.end(), odd.begin(), odd.end());
    std::sort(want.begin(), want.end());
    REQUIRE(want.size() == 5);
    REQUIRE(want[4] - want[3] < 0.03);

    const auto p = Potential::harmonic(1.0, 1.0);
    const auto bc = named(BcName::periodic);
    for (int grid : {default_grid(1.0, -1.0, 45.0), 40, 16}) {
      CAPTURE(grid);
      const auto r = scan(p, bc, -1.0, 45.0, grid);
      REQUIRE(r.eigenvalues.size() == want.size());
      for (std::size_t k = 0; k < want.size(); ++k) {
        CHECK(std::abs(r.eigenvalues[k] - want[k]) <= 1e-8 * std::max(1.0, want[k]));
        CHECK(r.degeneracies[k] == 1);
      }
      CHECK(r.diagnostics.empty());
    }
  }

  TEST_CASE("strongly bound surface states far below the potential") {
    // Solutions grow like exp(60 a) across the interval at these energies.
    BcFamily f;
    f.name = BcName::robin;
    f.alpha = 30.0;
    f.gamma = -15.0;
    const auto bc = classify(synthesize(f));
    const auto p = Potential::zero(0.5);
    const auto r = scan(p, bc, -1000.0, 60.0, 40);
    const auto want = oracle::robin_levels(30.0, -15.0, 0.5, -1000.0, 60.0);
    REQUIRE(want.size() >= 3);
    REQUIRE(r.eigenvalues.size() == want.size());
    for (std::size_t k = 0; k < want.size(); ++k) {
      CHECK(std::abs(r.eigenvalues[k] - want[k]) <= 1e-8 * std::max(1.0, std::abs(want[k])));
      CHECK(r.residuals[k] <= 1e-6);
    }
    CHECK(r.diagnostics.empty());
  }

  TEST_CASE("stable pair spans the same boundary unitary") {
    const auto p = Potential::harmonic(1.0, 5.0);
    const Matrix2c U = named(BcName::periodic).Ucal.matrix();
    for (double E : {-2000.0, -40.0, 3.0, 30.0}) {
      CAPTURE(E);
      const Matrix2c W = boundary_unitary(stable_pair(p, E), U);
      CHECK(unitarity_defect(W) <= 1e-10);
      if (E > -100.0) CHECK((W - boundary_unitary(shoot(p, E), U)).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}
