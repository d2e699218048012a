#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace xl {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long n, long k);

/// Coefficients of (1 + T + ... + T^s)^N, k = 0..sN.
struct OrdinaryMultinomialRow {
  int N = 0;
  int s = 0;
  std::vector<BigInt> values;

  /// Zero outside [0, sN].
  const BigInt& at(long k) const;
};

/// Row by the recurrence <N,k>_s = sum_{m=0}^{s} <N-1,k-m>_s with a sliding window.
OrdinaryMultinomialRow om_row(int N, int s);

/// A single coefficient <N choose k>_s; 0 for k < 0 or k > sN.
BigInt om(int N, long k, int s);

/// Inclusion-exclusion form sum_i (-1)^i C(N,i) C(k-i(s+1)+N-1, k-i(s+1)).
BigInt om_alternating(int N, long k, int s);

class UnimodalityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct UnimodalityReport {
  int mode = 0;          // floor(sN/2), the smallest mode
  bool plateau = false;  // two equal modes, iff sN is odd
};

/// Checks v[0] < ... < v[floor(sN/2)] = v[ceil(sN/2)] > ... > v[sN].
/// Requires N >= 2; throws UnimodalityViolation otherwise or on failure.
UnimodalityReport check_strong_unimodality(const OrdinaryMultinomialRow& row);

struct ThresholdReport {
  int N = 0;
  int s = 0;
  int c = 1;
  long k_scanned = 0;
  std::optional<long> k_closed_form;
  bool agrees = true;
};

/// Smallest k with <N,k>_s <= k. Closed form N for s = 1 and sN - 1 for
/// 2 <= s < (N+1)/2 + 2/N; none otherwise.
ThresholdReport smallest_k_c1(int N, int s);

/// Smallest k with <N,k>_s - <N,k-(s+1)>_s <= k. Closed form s+1 (N = 2),
/// 2s (N = 3), floor(s(N+1)/2) + 1 (N >= 4).
ThresholdReport smallest_k_c2(int N, int s);

}  // namespace xl
