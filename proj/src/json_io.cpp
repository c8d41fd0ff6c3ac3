#include "saext/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "saext/errors.hpp"

namespace saext {

namespace {

std::string format_number(double v) {
  if (!std::isfinite(v)) {
    if (std::isnan(v)) return "null";
    return v > 0 ? "1e308" : "-1e308";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void dump_into(const json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(it.key()).dump() + ": ";
        dump_into(it.value(), depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
      if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          dump_into(j[i], depth + 1, out);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_into(j[i], depth + 1, out);
      }
      out += "\n" + close + "]";
      return;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParameterError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number()) throw ParameterError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<double> number_list(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_array()) throw ParameterError(std::string("field \"") + key + "\" must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw ParameterError(std::string("field \"") + key + "\" must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

const char* kind_name(PotentialKind k) {
  switch (k) {
    case PotentialKind::zero: return "zero";
    case PotentialKind::finite_well: return "finite-well";
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::cosine: return "cosine";
    case PotentialKind::polynomial: return "polynomial";
    case PotentialKind::piecewise: return "piecewise";
  }
  return "zero";
}

json sv_to_json(const SingularValues2& sv) { return {{"max", sv.max}, {"min", sv.min}}; }

json robin_to_json(const RobinParams& r) {
  return {{"alpha", r.alpha}, {"beta", complex_to_json(r.beta)}, {"gamma", r.gamma}};
}

std::string csv_number(double v) { return format_number(v); }

}  // namespace

std::string dump_deterministic(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += "\n";
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParameterError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path.string());
  out << text;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParameterError("complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Matrix2c& m) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    rows.push_back(json::array({complex_to_json(m(i, 0)), complex_to_json(m(i, 1))}));
  }
  return {{"rows", rows}};
}

Matrix2c matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? require(j, "rows") : j;
  if (!rows.is_array() || rows.size() != 2) throw ParameterError("matrix needs two rows");
  Matrix2c m;
  for (int i = 0; i < 2; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 2) throw ParameterError("matrix rows need two entries");
    for (int k = 0; k < 2; ++k) m(i, k) = complex_from_json(rows[i][k]);
  }
  return m;
}

json potential_to_json(const Potential& p) {
  json params = json::object();
  const auto ps = p.params();
  switch (p.kind()) {
    case PotentialKind::zero:
      break;
    case PotentialKind::finite_well:
      params = {{"depth", ps[0]}, {"half_width", ps[1]}};
      break;
    case PotentialKind::harmonic:
      params = {{"coefficient", ps[0]}};
      break;
    case PotentialKind::cosine:
      params = {{"amplitude", ps[0]}, {"wavenumber", ps[1]}};
      break;
    case PotentialKind::polynomial:
      params = {{"coefficients", std::vector<double>(ps.begin(), ps.end())}};
      break;
    case PotentialKind::piecewise: {
      json pieces = json::array();
      for (const auto& piece : p.pieces()) {
        pieces.push_back({{"from", piece.from}, {"to", piece.to}, {"coefficients", piece.coefficients}});
      }
      params = {{"pieces", pieces}};
      break;
    }
  }
  return {{"kind", kind_name(p.kind())}, {"a", p.half_width()}, {"params", params}};
}

Potential potential_from_json(const json& j, double a) {
  const auto& kind_field = require(j, "kind");
  if (!kind_field.is_string()) throw ParameterError("potential kind must be a string");
  const std::string kind = kind_field.get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (kind == "zero") return Potential::zero(a);
  if (kind == "finite-well") {
    return Potential::finite_well(a, number(params, "depth"), number(params, "half_width"));
  }
  if (kind == "harmonic") return Potential::harmonic(a, number(params, "coefficient"));
  if (kind == "cosine") {
    return Potential::cosine(a, number(params, "amplitude"), number(params, "wavenumber"));
  }
  if (kind == "polynomial") return Potential::polynomial(a, number_list(params, "coefficients"));
  if (kind == "piecewise") {
    const auto& list = require(params, "pieces");
    if (!list.is_array()) throw ParameterError("piecewise pieces must be an array");
    std::vector<PolynomialPiece> pieces;
    for (const auto& e : list) {
      pieces.push_back({number(e, "from"), number(e, "to"), number_list(e, "coefficients")});
    }
    return Potential::piecewise(a, std::move(pieces));
  }
  if (kind == "delta" || kind == "dirac-delta") {
    throw ParameterError("distributional potentials are not bounded and are not supported");
  }
  throw ParameterError("unknown potential kind \"" + kind + "\"");
}

Potential potential_from_json(const json& j) { return potential_from_json(j, number(j, "a")); }

json boundary_to_json(const BoundaryData& b) {
  json table = json::array();
  for (int r = 0; r < 2; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(b.table(r, c)));
    table.push_back(row);
  }
  json out = {
      {"mode", b.mode == BasisMode::even_potential ? "even-potential" : "general"},
      {"boundary_table", table},
      {"boundary_table_columns", {"dg(a)", "g(a)", "dg(-a)", "g(-a)"}},
      {"norms", {b.norms[0], b.norms[1]}},
      {"gram_schmidt", complex_to_json(b.gram_schmidt)},
  };
  if (b.mat_A) out["mat_A"] = matrix_to_json(*b.mat_A);
  if (b.mat_B) out["mat_B"] = matrix_to_json(*b.mat_B);
  return out;
}

BoundaryData boundary_from_json(const json& j) {
  BoundaryData b;
  const auto& mode = require(j, "mode");
  if (mode == "even-potential") {
    b.mode = BasisMode::even_potential;
  } else if (mode == "general") {
    b.mode = BasisMode::general;
  } else {
    throw ParameterError("basis mode must be even-potential or general");
  }
  const auto& table = require(j, "boundary_table");
  if (!table.is_array() || table.size() != 2) throw ParameterError("boundary_table needs two rows");
  for (int r = 0; r < 2; ++r) {
    if (!table[r].is_array() || table[r].size() != 4) {
      throw ParameterError("boundary_table rows need four entries");
    }
    for (int c = 0; c < 4; ++c) b.table(r, c) = complex_from_json(table[r][c]);
  }
  if (j.contains("mat_A")) b.mat_A = matrix_from_json(j.at("mat_A"));
  if (j.contains("mat_B")) b.mat_B = matrix_from_json(j.at("mat_B"));
  if (b.mode == BasisMode::even_potential && !(b.mat_A && b.mat_B)) {
    b.mat_A = Matrix2c{{b.table(0, 1), 0.0}, {0.0, b.table(1, 1)}};
    b.mat_B = Matrix2c{{b.table(0, 0), 0.0}, {0.0, b.table(1, 0)}};
  }
  if (j.contains("norms")) {
    const auto n = number_list(j, "norms");
    if (n.size() != 2) throw ParameterError("norms needs two entries");
    b.norms = {n[0], n[1]};
  }
  if (j.contains("gram_schmidt")) b.gram_schmidt = complex_from_json(j.at("gram_schmidt"));
  return b;
}

json basis_to_json(const DeficiencyBasis& basis) {
  json out = boundary_to_json(basis.boundary);
  out["potential"] = potential_to_json(basis.potential);
  return out;
}

BasisFile basis_from_json(const json& j) {
  return {potential_from_json(require(j, "potential")), boundary_from_json(j)};
}

json family_to_json(const BcFamily& f) {
  json out = {{"family", std::string(to_string(f.name))},
              {"alpha", f.alpha},
              {"beta", complex_to_json(f.beta)},
              {"gamma", f.gamma},
              {"theta", f.theta},
              {"phi", f.phi}};
  if (f.K) out["K"] = complex_to_json(*f.K);
  return out;
}

BcFamily family_from_json(const json& j) {
  const auto& name = require(j, "family");
  if (!name.is_string()) throw ParameterError("family must be a string");
  BcFamily f;
  f.name = bc_name_from_string(name.get<std::string>());
  if (j.contains("alpha")) f.alpha = number(j, "alpha");
  if (j.contains("beta")) f.beta = complex_from_json(j.at("beta"));
  if (j.contains("gamma")) f.gamma = number(j, "gamma");
  if (j.contains("theta")) f.theta = number(j, "theta");
  if (j.contains("phi")) f.phi = number(j, "phi");
  if (j.contains("K")) f.K = complex_from_json(j.at("K"));
  return f;
}

BcInput bc_input_from_json(const json& j) {
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  if (j.is_object() && j.contains("family")) return family_from_json(j);
  if (j.is_object() && j.contains("rows")) return matrix_from_json(j);
  throw ParameterError("boundary condition needs \"matrix\" or \"family\"");
}

json classify_report(const BoundaryCondition& bc) {
  json params = json::object();
  if (bc.H) params["H"] = matrix_to_json(*bc.H);
  if (bc.Hprime) params["H_prime"] = matrix_to_json(*bc.Hprime);
  if (bc.robin) params["robin"] = robin_to_json(*bc.robin);
  if (bc.robin_prime) params["robin_prime"] = robin_to_json(*bc.robin_prime);
  if (bc.angles) params["angles"] = {{"theta", bc.angles->theta}, {"phi", bc.angles->phi}};
  if (bc.K) params["K"] = complex_to_json(*bc.K);
  return {
      {"case", std::string(to_string(bc.bc_case))},
      {"name", std::string(to_string(bc.name))},
      {"matrix", matrix_to_json(bc.Ucal.matrix())},
      {"parameters", params},
      {"family", family_to_json(family_of(bc))},
      {"singular_values", {{"I_minus_U", sv_to_json(bc.sv_minus)}, {"I_plus_U", sv_to_json(bc.sv_plus)}}},
      {"hermiticity_defect", bc.hermiticity_defect},
  };
}

json map_report(const MapPair& pair) {
  const VPair v{pair.V, pair.Vtilde};
  return {
      {"U", matrix_to_json(pair.U.matrix())},
      {"Utilde", matrix_to_json(pair.Utilde.matrix())},
      {"Ucal", matrix_to_json(pair.Ucal.matrix())},
      {"V", matrix_to_json(pair.V)},
      {"Vtilde", matrix_to_json(pair.Vtilde)},
      {"diagnostics",
       {{"sv_V", sv_to_json(singular_values(pair.V))},
        {"sv_Vtilde", sv_to_json(singular_values(pair.Vtilde))},
        {"unitarity_defect_Utilde", unitarity_defect(pair.Utilde.matrix())},
        {"unitarity_defect_Ucal", unitarity_defect(pair.Ucal.matrix())},
        {"unitv_residual", unitv_residual(v, pair.U.matrix())}}},
  };
}

json identity_report_to_json(const IdentityReport& r) {
  const auto check = [](int pass, int fail, const char* key, double value) {
    return json{{"pass", pass}, {"fail", fail}, {key, value}};
  };
  return {
      {"samples", r.samples},
      {"passed", r.passed()},
      {"unitv", check(r.unitv_pass, r.unitv_fail, "worst", r.unitv_worst)},
      {"unitary_out", check(r.unitary_out_pass, r.unitary_out_fail, "worst", r.unitary_out_worst)},
      {"nonsingular", check(r.nonsingular_pass, r.nonsingular_fail, "sigma_min", r.v_sigma_min)},
      {"homogeneous",
       check(r.homogeneous_pass, r.homogeneous_fail, "sigma_min", r.homogeneous_sigma_min)},
      {"roundtrip", check(r.roundtrip_pass, r.roundtrip_fail, "worst", r.roundtrip_worst)},
  };
}

json spectrum_to_json(const SpectrumResult& r, const ResidualReport& res) {
  json levels = json::array();
  std::size_t mode = 0;
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    double b = 0.0, s = 0.0, e = 0.0;
    for (std::size_t m = 0; m < r.eigenfunctions[k].size(); ++m, ++mode) {
      b = std::max(b, res.boundary[mode]);
      s = std::max(s, res.symmetry[mode]);
      e = std::max(e, res.equation[mode]);
    }
    levels.push_back({{"E", r.eigenvalues[k]},
                      {"degeneracy", r.degeneracies[k]},
                      {"boundary_residual", b},
                      {"symmetry_defect", s},
                      {"equation_defect", e}});
  }
  return {
      {"potential", potential_to_json(r.potential)},
      {"boundary_condition", classify_report(r.bc)},
      {"eigenvalues", r.eigenvalues},
      {"degeneracies", r.degeneracies},
      {"levels", levels},
      {"worst",
       {{"boundary_residual", res.worst_boundary},
        {"symmetry_defect", res.worst_symmetry},
        {"equation_defect", res.worst_equation}}},
      {"diagnostics", r.diagnostics},
  };
}

std::string spectrum_to_csv(const SpectrumResult& r, const ResidualReport& res) {
  std::ostringstream out;
  out << "index,E,degeneracy,boundary_residual,symmetry_defect\n";
  std::size_t mode = 0;
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    double b = 0.0, s = 0.0;
    for (std::size_t m = 0; m < r.eigenfunctions[k].size(); ++m, ++mode) {
      b = std::max(b, res.boundary[mode]);
      s = std::max(s, res.symmetry[mode]);
    }
    out << k << ',' << csv_number(r.eigenvalues[k]) << ',' << r.degeneracies[k] << ','
        << csv_number(b) << ',' << csv_number(s) << '\n';
  }
  return out.str();
}

std::string modes_to_csv(const SpectrumResult& r) {
  std::ostringstream out;
  out << "mode,E,x,re_f,im_f\n";
  std::size_t mode = 0;
  for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
    for (const auto& f : r.eigenfunctions[k]) {
      for (const auto& s : f.samples) {
        out << mode << ',' << csv_number(r.eigenvalues[k]) << ',' << csv_number(s.x) << ','
            << csv_number(s.f.real()) << ',' << csv_number(s.f.imag()) << '\n';
      }
      ++mode;
    }
  }
  return out.str();
}

}  // namespace saext
