#include "xl/hilbert.hpp"

#include <algorithm>

namespace xl {

namespace {

// 1 - T^d truncated at D_max.
PowerSeries one_minus_power(int d, int D_max) {
  PowerSeries s = series_one(D_max);
  if (d <= D_max) s.coeffs[static_cast<std::size_t>(d)] -= 1;
  return s;
}

}  // namespace

PowerSeries series_one(int D_max) {
  if (D_max < 0) throw std::invalid_argument("series truncation degree must be >= 0");
  PowerSeries s{std::vector<BigInt>(static_cast<std::size_t>(D_max) + 1)};
  s.coeffs[0] = 1;
  return s;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t len = std::min(a.coeffs.size(), b.coeffs.size());
  PowerSeries out{std::vector<BigInt>(len)};
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

PowerSeries series_divide_one_minus_t(const PowerSeries& a) {
  PowerSeries out = a;
  for (std::size_t i = 1; i < out.coeffs.size(); ++i) out.coeffs[i] += out.coeffs[i - 1];
  return out;
}

PowerSeries series_geom(int d, int count, int D_max) {
  if (d < 1 || count < 0) throw std::invalid_argument("series_geom needs d >= 1 and count >= 0");
  PowerSeries base{std::vector<BigInt>(static_cast<std::size_t>(D_max) + 1)};
  for (int i = 0; i < d && i <= D_max; ++i) base.coeffs[static_cast<std::size_t>(i)] = 1;
  PowerSeries out = series_one(D_max);
  for (int i = 0; i < count; ++i) out = series_mul(out, base);
  return out;
}

PowerSeries generic_hilbert_series(std::span<const int> degrees, int n_plus_1, int D_max) {
  PowerSeries num = series_one(D_max);
  for (int d : degrees) num = series_mul(num, one_minus_power(d, D_max));
  for (int i = 0; i < n_plus_1; ++i) num = series_divide_one_minus_t(num);
  return num;
}

PowerSeries hilbert_lower_bound_series(int n, std::span<const int> degrees, int D_max) {
  const auto first = static_cast<std::size_t>(n) + 1;
  if (degrees.size() < first) throw std::invalid_argument("lower bound series needs at least n+1 degrees");
  PowerSeries base = generic_hilbert_series(degrees.first(first), n + 1, D_max);
  PowerSeries factor = series_one(D_max);
  for (int d : degrees.subspan(first)) {
    if (d <= D_max) factor.coeffs[static_cast<std::size_t>(d)] -= 1;
  }
  return series_mul(factor, base);
}

BigInt chi_lower_bound(int n, int c, int d, int D) {
  if (n < 1 || c < 1 || d < 2 || D < 0) throw std::invalid_argument("chi_lower_bound needs n>=1, c>=1, d>=2, D>=0");
  BigInt v = om(n + 1, D, d - 1);
  if (c > 1) v -= BigInt(c - 1) * om(n + 1, D - d, d - 1);
  return v;
}

DminResult d_min(int n, int c, int d) {
  if (c != 1 && c != 2) throw UnsupportedC(c);
  if (n < 2 || d < 2) throw std::invalid_argument("d_min needs n >= 2 and d >= 2");
  const auto row = om_row(n + 1, d - 1);
  DminResult r{n, c, d, 0, {}};
  for (int D = 0;; ++D) {
    BigInt v = row.at(D);
    if (c == 2) v -= row.at(D - d);
    r.bound_values.push_back(v);
    if (v <= D) {
      r.D_m = D;
      return r;
    }
  }
}

}  // namespace xl
