#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "saext/bcclassify.hpp"
#include "saext/deficiency.hpp"
#include "saext/extmap.hpp"
#include "saext/potential.hpp"
#include "saext/spectrum.hpp"

namespace saext {

using json = nlohmann::json;

/// Keys sorted, every number printed with 17 significant digits, two-space indent.
std::string dump_deterministic(const json& j);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

/// {"rows": [[[re, im], [re, im]], [[re, im], [re, im]]]}
json matrix_to_json(const Matrix2c& m);
/// Accepts {"rows": ...} or a bare rows array.
Matrix2c matrix_from_json(const json& j);

/// {"kind": "...", "a": <real>, "params": {...}}
json potential_to_json(const Potential& p);
/// Throws ParameterError for unknown kinds, missing fields or distributional potentials.
Potential potential_from_json(const json& j);
/// Descriptor with "a" supplied separately when the file omits it.
Potential potential_from_json(const json& j, double a_override);

json boundary_to_json(const BoundaryData& b);
BoundaryData boundary_from_json(const json& j);

/// basis.json: mode, boundary_table, mat_A, mat_B, norms, gram_schmidt, potential.
json basis_to_json(const DeficiencyBasis& basis);
struct BasisFile {
  Potential potential;
  BoundaryData boundary;
};
BasisFile basis_from_json(const json& j);

/// Either {"matrix": {"rows": ...}} or {"family": "robin", "alpha": ..., ...}.
using BcInput = std::variant<Matrix2c, BcFamily>;
BcInput bc_input_from_json(const json& j);
json family_to_json(const BcFamily& family);
BcFamily family_from_json(const json& j);

json classify_report(const BoundaryCondition& bc);
json map_report(const MapPair& pair);
json identity_report_to_json(const IdentityReport& r);

json spectrum_to_json(const SpectrumResult& r, const ResidualReport& residuals);
/// One row per eigenvalue: index, E, degeneracy, boundary and symmetry residuals.
std::string spectrum_to_csv(const SpectrumResult& r, const ResidualReport& residuals);
/// Columns mode, x, re_f, im_f; one block per eigenfunction.
std::string modes_to_csv(const SpectrumResult& r);

}  // namespace saext
