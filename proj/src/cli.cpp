#include "saext/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include "saext/deficiency.hpp"
#include "saext/errors.hpp"
#include "saext/extmap.hpp"
#include "saext/spectrum.hpp"
#include "saext/verify.hpp"

namespace saext {

namespace {

Command command_from_string(const std::string& s) {
  if (s == "deficiency") return Command::deficiency;
  if (s == "map") return Command::map;
  if (s == "classify") return Command::classify;
  if (s == "spectrum") return Command::spectrum;
  if (s == "verify") return Command::verify;
  throw UsageError("unknown command '" + s + "'");
}

Direction direction_from_string(const std::string& s) {
  if (s == "u-to-bc") return Direction::u_to_bc;
  if (s == "bc-to-u") return Direction::bc_to_u;
  throw UsageError("--direction must be u-to-bc or bc-to-u");
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("--format must be json or csv");
}

template <class T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw UsageError(std::string("config field \"") + key + "\": " + e.what());
  }
}

json load(const std::string& path) {
  try {
    return read_json_file(path);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

/// Applies a config file; anything given on the command line later overrides it.
void apply_config_file(const json& j, RunConfig& c) {
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  if (j.contains("command")) c.command = command_from_string(field<std::string>(j, "command"));
  if (j.contains("potential")) {
    const auto& p = j.at("potential");
    c.potential = p.is_string() ? load(p.get<std::string>()) : p;
  }
  if (j.contains("a")) c.a = field<double>(j, "a");
  if (j.contains("matrix")) {
    const auto& m = j.at("matrix");
    const json mj = m.is_string() ? load(m.get<std::string>()) : m;
    try {
      c.matrix = matrix_from_json(mj.contains("matrix") ? mj.at("matrix") : mj);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  if (j.contains("family")) {
    try {
      c.family = j.at("family").is_object() ? family_from_json(j.at("family")) : family_from_json(j);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
  }
  if (j.contains("basis")) c.basis_path = field<std::string>(j, "basis");
  if (j.contains("direction")) c.direction = direction_from_string(field<std::string>(j, "direction"));
  if (j.contains("emin")) c.e_min = field<double>(j, "emin");
  if (j.contains("emax")) c.e_max = field<double>(j, "emax");
  if (j.contains("grid")) c.grid = field<int>(j, "grid");
  if (j.contains("out")) c.out_path = field<std::string>(j, "out");
  if (j.contains("modes")) c.modes_path = field<std::string>(j, "modes");
  if (j.contains("format")) c.format = format_from_string(field<std::string>(j, "format"));
  if (j.contains("tol")) c.tol = field<double>(j, "tol");
  if (j.contains("threads")) c.threads = field<int>(j, "threads");
  if (j.contains("samples")) c.samples = field<int>(j, "samples");
}

Potential resolve_potential(const RunConfig& c) {
  if (!c.potential) return Potential::zero(c.a.value_or(1.0));
  if (c.a) return potential_from_json(*c.potential, *c.a);
  if (!c.potential->contains("a")) throw UsageError("potential descriptor has no \"a\"; pass --a");
  return potential_from_json(*c.potential);
}

Matrix2c resolve_bc_matrix(const RunConfig& c) {
  if (c.matrix) return *c.matrix;
  if (c.family) return synthesize(*c.family).matrix();
  throw UsageError("this command needs --matrix or --family");
}

DeficiencyBasis build_basis(const Potential& p) {
  return is_even(p, 1e-12) ? solve_even_odd(p) : solve_orthonormal_pair(p);
}

std::string trajectories_csv(const DeficiencyBasis& b) {
  std::ostringstream s;
  s.precision(17);
  s << "x,re_g1,im_g1,re_g2,im_g2\n";
  const auto& g1 = b.trajectories[0].samples;
  const auto& g2 = b.trajectories[1].samples;
  for (std::size_t i = 0; i < g1.size(); ++i) {
    s << g1[i].x << ',' << g1[i].f.real() << ',' << g1[i].f.imag() << ',' << g2[i].f.real() << ','
      << g2[i].f.imag() << '\n';
  }
  return s.str();
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out_path) {
    write_text_file(*c.out_path, text);
  } else {
    out << text;
  }
}

int run_map(const RunConfig& c, std::ostream& out) {
  BoundaryData boundary;
  Potential potential = Potential::zero(1.0);
  if (c.basis_path) {
    auto file = basis_from_json(load(*c.basis_path));
    boundary = file.boundary;
    potential = file.potential;
  } else {
    const auto basis = build_basis(resolve_potential(c));
    boundary = basis.boundary;
    potential = basis.potential;
  }
  const auto input = Unitary2::certify(resolve_bc_matrix(c));
  json report;
  if (c.direction == Direction::u_to_bc) {
    if (boundary.mode == BasisMode::even_potential) {
      report = map_report(forward_map(boundary, input));
    } else {
      const auto ucal = forward_map_general(boundary, input);
      report = {{"U", matrix_to_json(input.matrix())},
                {"Ucal", matrix_to_json(ucal.matrix())},
                {"diagnostics", {{"unitarity_defect_Ucal", unitarity_defect(ucal.matrix())}}}};
    }
    report["result"] = report.at("Ucal");
  } else {
    const auto pair = forward_map(boundary, inverse_map(boundary, input));
    report = map_report(pair);
    report["result"] = report.at("U");
    report["diagnostics"]["roundtrip_error"] = (pair.Ucal.matrix() - input.matrix()).cwiseAbs().maxCoeff();
  }
  report["direction"] = c.direction == Direction::u_to_bc ? "u-to-bc" : "bc-to-u";
  report["mode"] = boundary.mode == BasisMode::even_potential ? "even-potential" : "general";
  report["potential"] = potential_to_json(potential);
  emit(c, out, dump_deterministic(report));
  return 0;
}

int run_spectrum(const RunConfig& c, std::ostream& out) {
  const auto p = resolve_potential(c);
  const auto bc = classify(resolve_bc_matrix(c), c.tol);
  const double a = p.half_width();
  ScanOptions so;
  so.e_min = c.e_min.value_or(default_e_min(p, bc));
  so.e_max = c.e_max.value_or(p.sup_norm() + 16.0 * std::pow(std::numbers::pi / (2.0 * a), 2));
  if (!(so.e_min < so.e_max)) throw UsageError("scan range is empty (need emin < emax)");
  so.grid = c.grid.value_or(default_grid(a, so.e_min, so.e_max));
  so.threads = c.threads;
  const auto r = find_eigenvalues(p, bc, so);
  const auto res = eigenfunction_residuals(r);
  if (c.format == Format::csv) {
    emit(c, out, spectrum_to_csv(r, res));
  } else {
    auto j = spectrum_to_json(r, res);
    j["scan"] = {{"emin", so.e_min}, {"emax", so.e_max}, {"grid", so.grid}};
    emit(c, out, dump_deterministic(j));
  }
  if (c.modes_path) write_text_file(*c.modes_path, modes_to_csv(r));
  return 0;
}

int run_verify_command(const RunConfig& c, std::ostream& out) {
  VerifyOptions vo;
  if (c.potential) vo.potentials.push_back(resolve_potential(c));
  vo.samples = c.samples;
  vo.tol = c.tol;
  vo.threads = c.threads;
  const auto report = run_verify(vo);
  emit(c, out, dump_deterministic(verify_report_to_json(report)));
  return report.passed() ? 0 : 1;
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Self-adjoint extensions of -d^2/dx^2 + V on [-a, a]", "saext"};
  std::string command, config_path, potential_path, matrix_path, family, direction, format, basis_path,
      out_path, modes_path;
  double a = 0, alpha = 0, beta_re = 0, beta_im = 0, gamma = 0, theta = 0, phi = 0, e_min = 0,
         e_max = 0, tol = 0;
  int grid = 0, threads = 0, samples = 0;

  app.add_option("command", command, "deficiency | map | classify | spectrum | verify")->required();
  auto* o_config = app.add_option("--config", config_path, "JSON file with any of the options below");
  auto* o_pot = app.add_option("--potential", potential_path, "potential descriptor JSON file");
  auto* o_a = app.add_option("--a", a, "half-width of the interval");
  auto* o_matrix = app.add_option("--matrix", matrix_path, "2x2 complex matrix JSON file");
  auto* o_family = app.add_option("--family", family, "named boundary-condition family");
  auto* o_alpha = app.add_option("--alpha", alpha);
  auto* o_bre = app.add_option("--beta-re", beta_re);
  auto* o_bim = app.add_option("--beta-im", beta_im);
  auto* o_gamma = app.add_option("--gamma", gamma);
  auto* o_theta = app.add_option("--theta", theta);
  auto* o_phi = app.add_option("--phi", phi);
  auto* o_dir = app.add_option("--direction", direction, "u-to-bc | bc-to-u");
  auto* o_basis = app.add_option("--basis", basis_path, "basis.json written by `deficiency`");
  auto* o_emin = app.add_option("--emin", e_min);
  auto* o_emax = app.add_option("--emax", e_max);
  auto* o_grid = app.add_option("--grid", grid, "number of scan intervals");
  auto* o_out = app.add_option("--out", out_path, "artifact path (stdout when absent)");
  auto* o_modes = app.add_option("--modes", modes_path, "eigenfunction sample CSV (spectrum)");
  auto* o_format = app.add_option("--format", format, "json | csv");
  auto* o_tol = app.add_option("--tol", tol);
  auto* o_threads = app.add_option("--threads", threads);
  auto* o_samples = app.add_option("--samples", samples, "random draws per check (verify)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig c;
  if (*o_config) apply_config_file(load(config_path), c);
  c.command = command_from_string(command);
  if (*o_pot) c.potential = load(potential_path);
  if (*o_a) c.a = a;
  if (*o_matrix) {
    const json mj = load(matrix_path);
    try {
      c.matrix = matrix_from_json(mj.contains("matrix") ? mj.at("matrix") : mj);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    c.family.reset();
  }
  if (*o_family) {
    try {
      c.family = BcFamily{};
      c.family->name = bc_name_from_string(family);
    } catch (const ParameterError& e) {
      throw UsageError(e.what());
    }
    c.matrix.reset();
  }
  const bool family_params = *o_alpha || *o_bre || *o_bim || *o_gamma || *o_theta || *o_phi;
  if (family_params) {
    if (!c.family) throw UsageError("--alpha/--beta-*/--gamma/--theta/--phi need --family");
    if (*o_alpha) c.family->alpha = alpha;
    if (*o_bre) c.family->beta.real(beta_re);
    if (*o_bim) c.family->beta.imag(beta_im);
    if (*o_gamma) c.family->gamma = gamma;
    if (*o_theta) c.family->theta = theta;
    if (*o_phi) c.family->phi = phi;
  }
  if (*o_dir) c.direction = direction_from_string(direction);
  if (*o_basis) c.basis_path = basis_path;
  if (*o_emin) c.e_min = e_min;
  if (*o_emax) c.e_max = e_max;
  if (*o_grid) c.grid = grid;
  if (*o_out) c.out_path = out_path;
  if (*o_modes) c.modes_path = modes_path;
  if (*o_format) c.format = format_from_string(format);
  if (*o_tol) c.tol = tol;
  if (*o_threads) c.threads = threads;
  if (*o_samples) c.samples = samples;
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0 && std::isfinite(c.tol))) throw UsageError("--tol must be positive");
  if (c.a && !(*c.a > 0.0 && std::isfinite(*c.a))) throw UsageError("--a must be positive");
  if (c.threads < 1) throw UsageError("--threads must be >= 1");
  if (c.samples < 1) throw UsageError("--samples must be >= 1");
  if (c.grid && *c.grid < 16) throw UsageError("--grid must be >= 16");
  if (c.e_min && c.e_max && !(*c.e_min < *c.e_max)) {
    throw UsageError("scan range is empty (need emin < emax)");
  }
  if (c.command == Command::classify && c.tol > 1e-4) throw UsageError("classify needs --tol <= 1e-4");
}

int run(const RunConfig& c, std::ostream& out) {
  switch (c.command) {
    case Command::deficiency: {
      const auto basis = build_basis(resolve_potential(c));
      emit(c, out, c.format == Format::csv ? trajectories_csv(basis) : dump_deterministic(basis_to_json(basis)));
      return 0;
    }
    case Command::map:
      return run_map(c, out);
    case Command::classify: {
      const auto bc = classify(Unitary2::certify(resolve_bc_matrix(c)), c.tol);
      emit(c, out, dump_deterministic(classify_report(bc)));
      return 0;
    }
    case Command::spectrum:
      return run_spectrum(c, out);
    case Command::verify:
      return run_verify_command(c, out);
  }
  return 2;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_command_line(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << "usage: saext deficiency|map|classify|spectrum|verify [options]\n"
           "  --potential <file> --a <real> --matrix <file> --family <name>\n"
           "  --alpha --beta-re --beta-im --gamma --theta --phi\n"
           "  --direction u-to-bc|bc-to-u --basis <file> --emin --emax --grid\n"
           "  --out <file> --modes <file> --format json|csv --tol <real>\n"
           "  --threads <n> --samples <n> --config <file>\n";
    return 0;
  } catch (const Error& e) {
    err << "saext: " << e.what() << "\n";
    return 2;
  }
  try {
    return run(config, out);
  } catch (const UsageError& e) {
    err << "saext: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "saext: " << e.what() << "\n";
    return 2;
  } catch (const CertificationError& e) {
    err << "saext: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "saext: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace saext
