#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "groupwave/wave.hpp"

namespace groupwave {

struct FamilyResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "skipped" | "error"
  double max_residual = 0.0;
  long trials = 0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  bool run_pde = true;
  bool run_initial = true;
  bool run_identities = true;
  bool run_classical = true;
  /// Test fixture: replaces T_b with a deliberately wrong implementation in
  /// the operator-identity family; used as a negative control.
  bool corrupt_t_b = false;
};

/// Runs the invariant families against the built-in groups plus the
/// configured problem. Results are sorted by family name, independent of
/// scheduling; the same seed reproduces every trial.
std::vector<FamilyResult> run_verification(const WaveProblem& configured,
                                           const VerifyOptions& options);

}  // namespace groupwave
