#include "xl/multinomial.hpp"

#include <string>

namespace xl {

namespace {

const BigInt& zero_big() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

const BigInt& OrdinaryMultinomialRow::at(long k) const {
  if (k < 0 || k >= static_cast<long>(values.size())) return zero_big();
  return values[static_cast<std::size_t>(k)];
}

OrdinaryMultinomialRow om_row(int N, int s) {
  if (N < 0 || s < 0) throw std::invalid_argument("om_row needs N >= 0 and s >= 0");
  std::vector<BigInt> row{1};
  for (int level = 1; level <= N; ++level) {
    const std::size_t len = row.size() + static_cast<std::size_t>(s);
    std::vector<BigInt> next(len);
    BigInt window = 0;
    for (std::size_t k = 0; k < len; ++k) {
      if (k < row.size()) window += row[k];
      if (k >= static_cast<std::size_t>(s) + 1 && k - s - 1 < row.size()) window -= row[k - s - 1];
      next[k] = window;
    }
    row = std::move(next);
  }
  return OrdinaryMultinomialRow{N, s, std::move(row)};
}

BigInt om(int N, long k, int s) {
  if (k < 0 || k > static_cast<long>(s) * N) return 0;
  return om_row(N, s).at(k);
}

BigInt om_alternating(int N, long k, int s) {
  if (N < 0 || s < 0) throw std::invalid_argument("om_alternating needs N >= 0 and s >= 0");
  if (k < 0 || k > static_cast<long>(s) * N) return 0;
  if (N == 0) return k == 0 ? 1 : 0;
  BigInt sum = 0;
  for (long i = 0; i * (s + 1) <= k; ++i) {
    const long r = k - i * (s + 1);
    BigInt term = binomial(N, i) * binomial(r + N - 1, r);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

UnimodalityReport check_strong_unimodality(const OrdinaryMultinomialRow& row) {
  if (row.N < 2) throw UnimodalityViolation("strong unimodality is stated for N >= 2");
  const long top = static_cast<long>(row.s) * row.N;
  if (static_cast<long>(row.values.size()) != top + 1) throw UnimodalityViolation("row length differs from sN + 1");
  const long lo = top / 2, hi = (top + 1) / 2;
  auto where = [&](long k) { return " (N=" + std::to_string(row.N) + ", s=" + std::to_string(row.s) + ", k=" + std::to_string(k) + ")"; };
  for (long k = 0; k < lo; ++k) {
    if (!(row.at(k) < row.at(k + 1))) throw UnimodalityViolation("not strictly rising" + where(k));
  }
  if (row.at(lo) != row.at(hi)) throw UnimodalityViolation("modes differ" + where(lo));
  for (long k = hi; k < top; ++k) {
    if (!(row.at(k) > row.at(k + 1))) throw UnimodalityViolation("not strictly falling" + where(k));
  }
  return UnimodalityReport{static_cast<int>(lo), lo != hi};
}

ThresholdReport smallest_k_c1(int N, int s) {
  if (N < 1 || s < 1) throw std::invalid_argument("smallest_k_c1 needs N >= 1 and s >= 1");
  const auto row = om_row(N, s);
  ThresholdReport r{N, s, 1, 0, std::nullopt, true};
  const long top = static_cast<long>(s) * N;
  long k = 0;
  while (k <= top && row.at(k) > k) ++k;
  r.k_scanned = k;
  if (s == 1) {
    r.k_closed_form = N;
  } else if (2L * N * s < static_cast<long>(N) * (N + 1) + 4) {
    // s < (N+1)/2 + 2/N, cleared of denominators.
    r.k_closed_form = top - 1;
  }
  if (r.k_closed_form) r.agrees = (*r.k_closed_form == r.k_scanned);
  return r;
}

ThresholdReport smallest_k_c2(int N, int s) {
  if (N < 2 || s < 1) throw std::invalid_argument("smallest_k_c2 needs N >= 2 and s >= 1");
  const auto row = om_row(N, s);
  ThresholdReport r{N, s, 2, 0, std::nullopt, true};
  long k = 0;
  while (row.at(k) - row.at(k - (s + 1)) > k) ++k;
  r.k_scanned = k;
  if (N == 2) {
    r.k_closed_form = s + 1;
  } else if (N == 3) {
    r.k_closed_form = 2L * s;
  } else {
    r.k_closed_form = static_cast<long>(s) * (N + 1) / 2 + 1;
  }
  r.agrees = (*r.k_closed_form == r.k_scanned);
  return r;
}

}  // namespace xl
