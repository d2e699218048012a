#pragma once

// Brute-force references for the test suites and the `verify` command.
// Nothing here shares code with the elimination or multinomial paths.

#include <chrono>
#include <cstdint>
#include <vector>

#include "xl/multinomial.hpp"
#include "xl/polynomial.hpp"

namespace xl::oracle {

struct OracleReport {
  std::vector<std::vector<FieldElement>> solutions;  // sorted
  std::chrono::duration<double> elapsed{};
  std::uint64_t searched = 0;  // always p^n
};

inline constexpr std::uint64_t kDefaultSearchLimit = 10'000'000;

/// Evaluates every point of GF(p)^n. Throws xl::SearchSpaceTooLarge when
/// p^n exceeds `limit`.
OracleReport exhaustive_solve(const PolySystem& system, std::uint64_t limit = kDefaultSearchLimit);

/// Rank by a column sweep from the last column to the first with Fermat
/// inverses and plain % reduction.
std::size_t rank_reference(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Literal N-fold truncated product of (1 + T + ... + T^s); D_max < 0 means sN.
std::vector<BigInt> om_series_oracle(int N, int s, int D_max = -1);

}  // namespace xl::oracle
