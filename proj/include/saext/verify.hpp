#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saext/json_io.hpp"
#include "saext/potential.hpp"

namespace saext {

struct VerifyOptions {
  /// Potentials to exercise; empty means the built-in set (zero, harmonic,
  /// cosine, finite well, and the odd polynomial V = x for the general basis).
  std::vector<Potential> potentials;
  int samples = 500;
  double tol = 1e-8;
  std::uint64_t seed = 20240611;
  int threads = 1;
};

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double value = 0.0;      // worst observed margin quantity
  double threshold = 0.0;  // pass iff value compares favorably with threshold
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool passed() const;
  int failures() const;
};

VerifyReport run_verify(const VerifyOptions& options);

json verify_report_to_json(const VerifyReport& report);

}  // namespace saext
