#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "xl/macaulay.hpp"

namespace xl {

using Point = std::vector<FieldElement>;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int D, std::size_t cells, std::size_t budget, const std::string& context = {})
      : std::runtime_error(context + "Macaulay matrix at D=" + std::to_string(D) + " needs " +
                           std::to_string(cells) + " cells, budget is " + std::to_string(budget)),
        D(D),
        cells(cells),
        budget(budget) {}
  int D;
  std::size_t cells;
  std::size_t budget;
};

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SolveStatus { Solved, UnivariateButNoRoots, NoUnivariate };

const char* to_string(SolveStatus s);

struct SolveOptions {
  Execution exec = Execution::Parallel;
  /// Search a fresh minimal D (up to D_cap) for every reduced system
  /// instead of reusing the caller's D.
  bool reminimize_per_level = false;
  int D_cap = 0;
  /// Largest p^k enumerated when substitution leaves k unconstrained variables.
  std::uint64_t enumeration_cap = 1'000'000;
  /// Maximum rows * columns of one Macaulay matrix; 0 disables the check.
  std::size_t cell_budget = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::NoUnivariate;
  std::vector<Point> solutions;  // sorted, each verified against the input
  std::vector<int> level_degrees;  // D used at each recursion depth
};

/// XL: multiply, linearize, extract univariate equations in x_1, take the
/// intersection of their roots, substitute each root and recurse on
/// x_2..x_n. Throws DTooSmall unless D >= 1 + max deg.
SolveOutcome xl_solve(const PolySystem& system, int D, const SolveOptions& options = {});

struct DegreeProbe {
  int D = 0;
  std::size_t rank = 0;
  std::size_t columns = 0;
  long chi = 0;
  std::size_t univariate_count = 0;
};

struct MinDegreeSearch {
  std::optional<int> D_star;  // empty when exhausted
  std::vector<DegreeProbe> probes;
};

DegreeProbe probe_degree(const PolySystem& system, int D, const SolveOptions& options = {});

/// Smallest D in [1 + max deg, D_cap] at which V_D contains a nonzero
/// polynomial in x_1 alone.
MinDegreeSearch find_min_d(const PolySystem& system, int D_cap, const SolveOptions& options = {});

}  // namespace xl
