#pragma once

// Self-check suite behind `qsurf verify`: every module invariant evaluated on
// generated corpora at a chosen truncation dimension.

#include <cstdint>
#include <string>
#include <vector>

#include "qsurf/ktheory.hpp"

namespace qsurf {

struct VerifyOptions {
  int dim = 256;
  double tol = 1e-9;          // loose numerical thresholds (spectra, projection)
  std::string fault;          // "bergman-weight" corrupts one weight on purpose
  std::uint64_t seed = 0x5eedULL;
};

struct CheckResult {
  std::string module;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

/// Closed-form K-groups of the classical surface: T^g, P^n and S^2.
std::pair<AbelianGroup, AbelianGroup> classical_kgroups(const SurfaceClass& cls);

}  // namespace qsurf
