#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "saext/bcclassify.hpp"
#include "saext/json_io.hpp"

namespace saext {

enum class Command { deficiency, map, classify, spectrum, verify };
enum class Direction { u_to_bc, bc_to_u };
enum class Format { json, csv };

struct RunConfig {
  Command command = Command::verify;
  std::optional<json> potential;  // descriptor; "a" may come from `a`
  std::optional<double> a;
  std::optional<Matrix2c> matrix;
  std::optional<BcFamily> family;
  std::optional<std::string> basis_path;
  Direction direction = Direction::u_to_bc;
  std::optional<double> e_min;
  std::optional<double> e_max;
  std::optional<int> grid;
  std::optional<std::string> out_path;
  std::optional<std::string> modes_path;
  Format format = Format::json;
  double tol = 1e-8;
  int threads = 1;
  int samples = 500;
};

/// Flags override values from `--config`. Throws UsageError for malformed input.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Throws UsageError unless tolerances are positive and the scan range is sane.
void validate(const RunConfig& config);

/// Executes one command; the artifact goes to config.out_path or `out`.
/// Returns 0, or 1 when `verify` finds a failing check.
int run(const RunConfig& config, std::ostream& out);

/// Full entry point: parsing, validation, execution and exit status
/// (0 success, 1 failed checks or numerical failure, 2 usage error).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace saext
