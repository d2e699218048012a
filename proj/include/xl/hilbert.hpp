#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "xl/multinomial.hpp"

namespace xl {

/// Integer power series truncated after T^D_max.
struct PowerSeries {
  std::vector<BigInt> coeffs;  // size D_max + 1

  int max_degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const BigInt& operator[](std::size_t i) const { return coeffs[i]; }
};

PowerSeries series_one(int D_max);
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
/// Multiplies by 1/(1-T) (running prefix sum).
PowerSeries series_divide_one_minus_t(const PowerSeries& a);
/// (1 + T + ... + T^(d-1))^count, truncated.
PowerSeries series_geom(int d, int count, int D_max);

/// prod_j (1 - T^{d_j}) / (1 - T)^{n+1}: the Hilbert series of n+1 or fewer
/// generic forms in n+1 homogeneous variables.
PowerSeries generic_hilbert_series(std::span<const int> degrees, int n_plus_1, int D_max);

/// (1 - sum_{j>n+1} T^{d_j}) * prod_{j<=n+1} (1 - T^{d_j}) / (1 - T)^{n+1}
/// for n + c forms, degrees listed in order. Needs degrees.size() >= n + 1.
PowerSeries hilbert_lower_bound_series(int n, std::span<const int> degrees, int D_max);

/// om(n+1, D, d-1) - (c-1) om(n+1, D-d, d-1); may be negative.
BigInt chi_lower_bound(int n, int c, int d, int D);

class UnsupportedC : public std::invalid_argument {
 public:
  explicit UnsupportedC(int c) : std::invalid_argument("c=" + std::to_string(c) + " unsupported; need c in {1, 2}") {}
};

struct DminResult {
  int n = 0;
  int c = 0;
  int d = 0;
  int D_m = 0;
  std::vector<BigInt> bound_values;  // chi_lower_bound for D = 0..D_m
};

/// Smallest D with chi_lower_bound(n, c, d, D) <= D, by ascending scan.
DminResult d_min(int n, int c, int d);

}  // namespace xl
