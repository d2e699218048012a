#include "xl/oracle.hpp"

#include <algorithm>

#include "xl/solver.hpp"

namespace xl::oracle {

namespace {

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

struct FlatTerm {
  std::uint64_t coeff;
  std::vector<int> exps;
};

}  // namespace

OracleReport exhaustive_solve(const PolySystem& system, std::uint64_t limit) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t p = system.field.modulus();
  const std::size_t n = system.n;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > limit) throw SearchSpaceTooLarge("exhaustive search over p^n exceeds limit");
  }

  int max_exp = 0;
  std::vector<std::vector<FlatTerm>> polys;
  for (const auto& f : system.polys) {
    std::vector<FlatTerm> flat;
    for (const auto& t : f.terms()) {
      FlatTerm ft{t.coeff.value(), {}};
      for (std::size_t i = 0; i < n; ++i) {
        ft.exps.push_back(t.monomial.exponent(i));
        max_exp = std::max(max_exp, t.monomial.exponent(i));
      }
      flat.push_back(std::move(ft));
    }
    polys.push_back(std::move(flat));
  }
  // powers[x][e] = x^e mod p
  std::vector<std::vector<std::uint64_t>> powers(p, std::vector<std::uint64_t>(max_exp + 1));
  for (std::uint64_t x = 0; x < p; ++x) {
    for (int e = 0; e <= max_exp; ++e) powers[x][e] = powmod(x, e, p);
  }

  std::vector<std::vector<std::vector<FieldElement>>> found;
#pragma omp parallel
  {
    std::vector<std::vector<FieldElement>> local;
    std::vector<std::uint64_t> coords(n);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(total); ++idx) {
      std::uint64_t rest = static_cast<std::uint64_t>(idx);
      for (std::size_t i = 0; i < n; ++i) {
        coords[i] = rest % p;
        rest /= p;
      }
      bool all_zero = true;
      for (const auto& f : polys) {
        std::uint64_t acc = 0;
        for (const auto& t : f) {
          std::uint64_t v = t.coeff;
          for (std::size_t i = 0; i < n; ++i) v = v * powers[coords[i]][t.exps[i]] % p;
          acc = (acc + v) % p;
        }
        if (acc != 0) {
          all_zero = false;
          break;
        }
      }
      if (all_zero) {
        std::vector<FieldElement> pt(n);
        for (std::size_t i = 0; i < n; ++i) pt[i] = FieldElement{static_cast<std::uint32_t>(coords[i])};
        local.push_back(std::move(pt));
      }
    }
#pragma omp critical
    found.push_back(std::move(local));
  }

  OracleReport report;
  for (auto& chunk : found) {
    for (auto& pt : chunk) report.solutions.push_back(std::move(pt));
  }
  std::sort(report.solutions.begin(), report.solutions.end());
  report.searched = total;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::size_t rank_reference(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<bool> used(rows.size(), false);
  std::size_t rank = 0;
  for (std::size_t c = cols; c-- > 0;) {
    std::size_t pivot = rows.size();
    for (std::size_t i = rows.size(); i-- > 0;) {
      if (!used[i] && rows[i][c] % p != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    used[pivot] = true;
    ++rank;
    const std::uint64_t inv = powmod(rows[pivot][c], p - 2, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i][c] % p == 0) continue;
      const std::uint64_t f = rows[i][c] * inv % p;
      for (std::size_t j = 0; j <= c; ++j) {
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - f) * rows[pivot][j]) % p);
      }
    }
  }
  return rank;
}

std::vector<BigInt> om_series_oracle(int N, int s, int D_max) {
  if (D_max < 0) D_max = s * N;
  std::vector<BigInt> acc(static_cast<std::size_t>(D_max) + 1);
  acc[0] = 1;
  for (int step = 0; step < N; ++step) {
    std::vector<BigInt> next(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (int j = 0; j <= s && i + j < acc.size(); ++j) next[i + j] += acc[i];
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace xl::oracle
