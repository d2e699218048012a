#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xl/solver.hpp"

namespace xl {

struct ExperimentConfig {
  std::vector<std::uint32_t> primes{3109};
  std::vector<int> degrees{2};
  std::vector<int> ns{2};
  int c = 1;
  int trials = 10;
  std::uint64_t seed = 1;
  int D_cap = 40;
  std::size_t cell_budget = 50'000'000;
  int threads = 0;  // 0 keeps the OpenMP default
  bool timing = false;
};

struct ExperimentRecord {
  std::uint32_t p = 0;
  int d = 0;
  int n = 0;
  int c = 0;
  int trial_index = 0;
  std::uint64_t seed = 0;
  std::optional<int> D_star;  // empty when no D <= D_cap terminated
  std::optional<int> D_m;     // prediction, c in {1, 2} only
  bool match = false;
  double elapsed_ms = 0;

  std::vector<DegreeProbe> probes;
  /// chi(D) <= D implied a univariate equation at every probed D.
  bool sufficiency_holds = true;
  /// For c = 1: probes where chi(D) != om(n+1, D, d-1) / where chi(D) fell below it.
  int chi_bound_mismatches = 0;
  int chi_bound_violations = 0;
};

struct ExperimentSummary {
  std::uint32_t p = 0;
  int d = 0;
  int n = 0;
  int c = 0;
  double D_average = 0;
  std::optional<int> D_min;
  int trials = 0;
  int matches = 0;
  int exhausted = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRecord> records;
  std::vector<ExperimentSummary> summaries;
};

/// Seed of trial `trial` of cell (p, d, n) under `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint32_t p, int d, int n, int trial);

/// Runs one trial: random system, then find_min_d with the per-probe checks.
ExperimentRecord run_trial(std::uint32_t p, int d, int n, int c, int trial, const ExperimentConfig& config);

/// Trials run in parallel; records come back in config order
/// (p, then d, then n, then trial). Throws BudgetExceeded.
ExperimentResult run_experiment(const ExperimentConfig& config);

/// Columns p,d,n,c,trial,seed,D_star,D_m,match,elapsed_ms; then #NOTE lines
/// for trials below the prediction and #SUMMARY lines. elapsed_ms is blank
/// unless timing was requested, keeping the output byte-reproducible.
void write_csv(const ExperimentResult& result, bool timing, std::ostream& out);
void write_json(const ExperimentResult& result, bool timing, std::ostream& out);

}  // namespace xl
