#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ohg/hypergraph.hpp"
#include "ohg/verdict.hpp"

namespace ohg {

struct HarnessOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  int max_n = 8;
  int max_m = 8;
  bool graph_only = false;
  std::vector<double> lambda_grid = {0.5, 1.0, 1.5};
  Tolerances tol;

  /// Throws std::invalid_argument on infeasible generator parameters.
  void validate() const;
};

/// Seed of trial `index`, independent of scheduling.
std::uint64_t trial_seed(std::uint64_t seed, int index);
OrientedHypergraph trial_instance(const HarnessOptions& options, int index);

struct CheckTally {
  std::string check;
  int holds = 0;
  int not_applicable = 0;
  int skipped = 0;
  int fails = 0;
};

struct TrialFailure {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> failed_checks;
  std::string ohg_text;
};

struct HarnessSummary {
  int trials = 0;
  std::vector<CheckTally> tallies;
  /// Graph encodings whose partition numbers at one equal chi.
  int graph_instances = 0;
  int graph_partition_equality = 0;
  int lower_confidence = 0;
  int feasible_probes = 0;
  std::vector<TrialFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Trials in parallel (OpenMP); results are merged in trial order.
HarnessSummary run_harness(const HarnessOptions& options);
/// Serial reference with identical output.
HarnessSummary run_harness_serial(const HarnessOptions& options);

/// Writes one .ohg file per failure; returns the paths.
std::vector<std::filesystem::path> write_failures(const HarnessSummary& summary,
                                                  const std::filesystem::path& dir);

}  // namespace ohg
