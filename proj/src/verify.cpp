#include "saext/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "saext/bcclassify.hpp"
#include "saext/deficiency.hpp"
#include "saext/errors.hpp"
#include "saext/extmap.hpp"
#include "saext/spectrum.hpp"

namespace saext {

namespace {

const cplx kI{0.0, 1.0};

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  /// Pass iff value <= threshold.
  void at_most(const std::string& suite, const std::string& name, double value, double threshold,
               std::string detail = {}) {
    report_.checks.push_back({suite, name, value <= threshold, value, threshold, std::move(detail)});
  }
  /// Pass iff value > threshold.
  void above(const std::string& suite, const std::string& name, double value, double threshold,
             std::string detail = {}) {
    report_.checks.push_back({suite, name, value > threshold, value, threshold, std::move(detail)});
  }
  void flag(const std::string& suite, const std::string& name, bool ok, std::string detail = {}) {
    report_.checks.push_back({suite, name, ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)});
  }

  /// Runs `body`; an exception becomes a failed check instead of aborting the suite.
  template <class F>
  void guarded(const std::string& suite, const std::string& name, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      flag(suite, name, false, e.what());
    }
  }

 private:
  VerifyReport& report_;
};

std::string label(const Potential& p) {
  std::ostringstream s;
  s << potential_to_json(p).at("kind").get<std::string>() << "(a=" << p.half_width() << ")";
  return s.str();
}

std::vector<Potential> builtin_potentials() {
  std::vector<Potential> out;
  for (double a : {0.5, 1.0, 2.0}) {
    out.push_back(Potential::zero(a));
    out.push_back(Potential::harmonic(a, 1.0));
    out.push_back(Potential::cosine(a, 1.0, std::numbers::pi));
    out.push_back(Potential::finite_well(a, -10.0, 0.5 * a));
  }
  out.push_back(Potential::polynomial(1.0, {0.0, 1.0}));
  return out;
}

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

void potential_suite(Recorder& rec, const std::vector<Potential>& ps) {
  for (const auto& p : ps) {
    const std::string name = label(p);
    rec.guarded("potential", name, [&] {
      const double a = p.half_width();
      bool pure = true;
      for (int i = 0; i <= 100; ++i) {
        const double x = -a + 2.0 * a * i / 100.0;
        pure = pure && p.evaluate(x) == p.evaluate(x);
      }
      rec.flag("potential", "evaluate pure " + name, pure);
      if (p.declared_even()) rec.flag("potential", "declared even " + name, is_even(p, 1e-12));
    });
  }
  rec.flag("potential", "odd polynomial rejected as even",
           !is_even(Potential::polynomial(1.0, {0.0, 1.0}), 1e-12));
}

void odesolve_suite(Recorder& rec, const std::vector<Potential>& ps, std::mt19937_64& rng) {
  rec.guarded("odesolve", "cosh oracle", [&] {
    const auto s = integrate(Potential::zero(1.0), -1.0, -1.0, 1.0, 1.0, 0.0);
    rec.at_most("odesolve", "cosh oracle", rel(s.f1, std::cosh(2.0)), 1e-9);
  });
  rec.guarded("odesolve", "complex cosine oracle", [&] {
    const auto s = integrate(Potential::zero(1.0), kI, 0.0, 1.0, 1.0, 0.0);
    const cplx kappa = std::polar(1.0, std::numbers::pi / 4.0);
    rec.at_most("odesolve", "complex cosine oracle", rel(s.f1, std::cos(kappa)), 1e-9);
  });
  std::normal_distribution<double> gauss;
  for (const auto& p : ps) {
    const std::string name = label(p);
    const double a = p.half_width();
    rec.guarded("odesolve", name, [&] {
      const auto u = integrate(p, kI, -a, a, 1.0, 0.0);
      const auto w = integrate(p, kI, -a, a, 0.0, 1.0);
      const cplx w0 = wronskian(u.samples.front(), w.samples.front());
      double drift = 0.0;
      for (std::size_t i = 0; i < u.samples.size(); ++i) {
        drift = std::max(drift, std::abs(wronskian(u.samples[i], w.samples[i]) - w0) / std::abs(w0));
      }
      rec.at_most("odesolve", "Wronskian constant " + name, drift, 1e-9);

      const cplx c{gauss(rng), gauss(rng)};
      const auto uc = integrate(p, kI, -a, a, c, 0.0);
      double lin = 0.0;
      for (std::size_t i = 0; i < u.samples.size(); ++i) {
        const double scale = std::max(1.0, std::abs(c * u.samples[i].f));
        lin = std::max(lin, std::abs(uc.samples[i].f - c * u.samples[i].f) / scale);
      }
      rec.at_most("odesolve", "linearity " + name, lin, 1e-10);

      const OdeOptions coarse{1e-8, 1e-10, 1024};
      const OdeOptions fine{0.5e-8, 0.5e-10, 1024};
      const auto s1 = integrate(p, kI, -a, a, 1.0, 0.0, coarse);
      const auto s2 = integrate(p, kI, -a, a, 1.0, 0.0, fine);
      const double change = std::max(std::abs(s1.f1 - s2.f1) / (coarse.rtol * std::abs(s2.f1) + coarse.atol),
                                     std::abs(s1.df1 - s2.df1) / (coarse.rtol * std::abs(s2.df1) + coarse.atol));
      rec.at_most("odesolve", "tolerance halving " + name, change, 1.0,
                  "change in units of the coarse tolerance");
    });
  }
}

void deficiency_suite(Recorder& rec, const std::vector<Potential>& ps, double tol) {
  for (const auto& p : ps) {
    const std::string name = label(p);
    rec.guarded("deficiency", name, [&] {
      const auto general = solve_orthonormal_pair(p);
      const auto dg = diagnose(general);
      rec.at_most("deficiency", "general orthonormality " + name,
                  (*dg.gram - Matrix2c::Identity()).cwiseAbs().maxCoeff(), tol);
      rec.at_most("deficiency", "boundary form 2i delta " + name,
                  (dg.boundary_form - 2.0 * kI * Matrix2c::Identity()).cwiseAbs().maxCoeff(), tol);
      rec.at_most("deficiency", "plain boundary form zero " + name,
                  dg.boundary_form_plain.cwiseAbs().maxCoeff(), tol);
      if (!is_even(p, 1e-12)) return;

      const auto even = solve_even_odd(p);
      const auto de = diagnose(even);
      rec.at_most("deficiency", "even orthonormality " + name,
                  (*de.gram - Matrix2c::Identity()).cwiseAbs().maxCoeff(), tol);
      rec.at_most("deficiency", "Wronskian = i " + name,
                  std::max(std::abs(de.wronskian[0] - kI), std::abs(de.wronskian[1] - kI)), tol);
      rec.above("deficiency", "A regular " + name, de.sv_A.min / de.sv_A.max, 1e-8);
      rec.above("deficiency", "B regular " + name, de.sv_B.min / de.sv_B.max, 1e-8);
      double fit = 0.0;
      const Matrix2c w = change_of_basis(even.boundary, general.boundary, &fit);
      rec.at_most("deficiency", "change of basis unitary " + name, unitarity_defect(w), 1e-7);
    });
  }
}

void extmap_suite(Recorder& rec, const std::vector<Potential>& ps, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& p : ps) {
    const std::string name = label(p);
    rec.guarded("extmap", name, [&] {
      const auto general = solve_orthonormal_pair(p);
      double worst_general = 0.0;
      for (int s = 0; s < std::max(1, opt.samples / 2); ++s) {
        const auto U = Unitary2::certify(haar_unitary(rng));
        worst_general = std::max(
            worst_general, unitarity_defect(forward_map_general(general.boundary, U).matrix()));
      }
      rec.at_most("extmap", "general map unitary " + name, worst_general, 1e-8);
      if (!is_even(p, 1e-12)) return;

      const auto even = solve_even_odd(p);
      const auto r = check_identities(even.boundary, opt.samples, opt.seed);
      rec.at_most("extmap", "unitarity identity " + name, r.unitv_worst, 1e-8);
      rec.at_most("extmap", "forward map unitary " + name, r.unitary_out_worst, 1e-9);
      rec.above("extmap", "V and Vtilde regular " + name, r.v_sigma_min, 1e-6);
      rec.above("extmap", "inverse system regular " + name, r.homogeneous_sigma_min, 1e-6);
      rec.at_most("extmap", "round trip " + name, r.roundtrip_worst, 1e-8);

      const Matrix2c w = change_of_basis(even.boundary, general.boundary);
      double agree = 0.0;
      for (int s = 0; s < std::max(1, opt.samples / 2); ++s) {
        const Matrix2c u = haar_unitary(rng);
        const auto from_even = forward_map(even.boundary, Unitary2::certify(u)).Ucal.matrix();
        const auto from_general =
            forward_map_general(general.boundary, Unitary2::certify(nearest_unitary(w * u * w.transpose())));
        agree = std::max(agree, (from_even - from_general.matrix()).cwiseAbs().maxCoeff());
      }
      rec.at_most("extmap", "general and even maps agree " + name, agree, 1e-7);
    });
  }
}

void bcclassify_suite(Recorder& rec, const VerifyOptions& opt) {
  const auto named = [&](const Matrix2c& m, BcName want, const std::string& label) {
    rec.guarded("bcclassify", label, [&] {
      const auto bc = classify(m, opt.tol);
      rec.flag("bcclassify", label, bc.name == want, std::string(to_string(bc.name)));
    });
  };
  const auto case4 = [](double t, double p) {
    return Matrix2c{{std::cos(t), std::polar(std::sin(t), -p)}, {std::polar(std::sin(t), p), -std::cos(t)}};
  };
  named(Matrix2c::Identity(), BcName::dirichlet, "identity is dirichlet");
  named(-Matrix2c::Identity(), BcName::neumann, "minus identity is neumann");
  named(case4(std::numbers::pi / 2, 0.0), BcName::periodic, "theta pi/2 phi 0 is periodic");
  named(case4(std::numbers::pi / 2, std::numbers::pi), BcName::anti_periodic,
        "theta pi/2 phi pi is anti-periodic");
  named(case4(0.0, 0.0), BcName::dirichlet_at_a_neumann_at_minus_a, "theta 0 is mixed");

  rec.guarded("bcclassify", "round trips", [&] {
    std::mt19937_64 rng(opt.seed + 17);
    std::uniform_real_distribution<double> unit;
    double worst1 = 0.0, worst4 = 0.0;
    int case1 = 0;
    const int n = std::max(1, opt.samples);
    for (int s = 0; s < n; ++s) {
      const auto U = Unitary2::certify(haar_unitary(rng));
      const auto bc = classify(U, opt.tol);
      if (bc.bc_case != BcCase::I) continue;
      ++case1;
      worst1 = std::max(worst1, (synthesize(family_of(bc)).matrix() - U.matrix()).cwiseAbs().maxCoeff());
    }
    for (int s = 0; s < n; ++s) {
      const Matrix2c m = case4(std::numbers::pi * unit(rng), 2.0 * std::numbers::pi * unit(rng));
      const auto bc = classify(m, opt.tol);
      worst4 = std::max(worst4, (synthesize(family_of(bc)).matrix() - m).cwiseAbs().maxCoeff());
    }
    rec.at_most("bcclassify", "case I round trip", worst1, 1e-7,
                std::to_string(case1) + " Case I draws");
    rec.at_most("bcclassify", "case IV round trip", worst4, 1e-7);
  });
}

void spectrum_suite(Recorder& rec, const std::vector<Potential>& ps, const VerifyOptions& opt) {
  rec.guarded("spectrum", "dirichlet box", [&] {
    const auto p = Potential::zero(1.0);
    const auto bc = classify(Unitary2::identity());
    ScanOptions so{default_e_min(p, bc), 30.0, 0, {}, opt.threads};
    so.grid = default_grid(1.0, so.e_min, so.e_max);
    const auto r = find_eigenvalues(p, bc, so);
    double worst = r.eigenvalues.size() == 3 ? 0.0 : 1.0;
    for (std::size_t n = 0; n < std::min<std::size_t>(3, r.eigenvalues.size()); ++n) {
      const double want = std::pow((n + 1) * std::numbers::pi / 2.0, 2);
      worst = std::max(worst, std::abs(r.eigenvalues[n] - want) / want);
    }
    rec.at_most("spectrum", "dirichlet box levels", worst, 1e-6);
  });
  for (const auto& p : ps) {
    const std::string name = label(p);
    rec.guarded("spectrum", name, [&] {
      const auto bc = classify(Unitary2::identity());
      const double a = p.half_width();
      ScanOptions so{default_e_min(p, bc), p.sup_norm() + 4.0 * std::pow(std::numbers::pi / (2.0 * a), 2), 0, {},
                     opt.threads};
      so.grid = default_grid(a, so.e_min, so.e_max);
      const auto r = find_eigenvalues(p, bc, so);
      const auto res = eigenfunction_residuals(r);
      rec.above("spectrum", "levels found " + name, static_cast<double>(r.eigenvalues.size()), 0.0);
      rec.at_most("spectrum", "boundary residual " + name, res.worst_boundary, 1e-6);
      rec.at_most("spectrum", "symmetry defect " + name, res.worst_symmetry, 1e-6);
    });
  }
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.samples < 1) throw ParameterError("verify needs at least one sample");
  if (!(options.tol > 0.0)) throw ParameterError("verify tolerance must be positive");
  VerifyReport report;
  Recorder rec(report);
  const auto ps = options.potentials.empty() ? builtin_potentials() : options.potentials;
  std::mt19937_64 rng(options.seed);
  potential_suite(rec, ps);
  odesolve_suite(rec, ps, rng);
  deficiency_suite(rec, ps, options.tol);
  extmap_suite(rec, ps, options);
  bcclassify_suite(rec, options);
  spectrum_suite(rec, ps, options);
  return report;
}

json verify_report_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"suite", c.suite}, {"name", c.name}, {"passed", c.passed},
                  {"value", c.value}, {"threshold", c.threshold}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return {{"passed", report.passed()},
          {"failures", report.failures()},
          {"total", static_cast<int>(report.checks.size())},
          {"checks", checks}};
}

}  // namespace saext
