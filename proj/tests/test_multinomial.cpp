#include "doctest.h"
#include "xl/multinomial.hpp"
#include "xl/oracle.hpp"

using namespace xl;

namespace {

std::vector<long> as_longs(const OrdinaryMultinomialRow& row) {
  std::vector<long> v;
  for (const auto& x : row.values) v.push_back(static_cast<long>(x));
  return v;
}

}  // namespace

TEST_CASE("om_row matches the s=3 triangle") {
  CHECK(as_longs(om_row(0, 3)) == std::vector<long>{1});
  CHECK(as_longs(om_row(1, 3)) == std::vector<long>{1, 1, 1, 1});
  CHECK(as_longs(om_row(2, 3)) == std::vector<long>{1, 2, 3, 4, 3, 2, 1});
  CHECK(as_longs(om_row(3, 3)) == std::vector<long>{1, 3, 6, 10, 12, 12, 10, 6, 3, 1});
  CHECK(as_longs(om_row(4, 3)) == std::vector<long>{1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1});
  CHECK(as_longs(om_row(0, 5)) == std::vector<long>{1});
}

TEST_CASE("om boundary values") {
  CHECK(om(4, 6, 3) == 44);
  CHECK(om(3, 4, 3) == 12);
  CHECK(om_alternating(4, 6, 3) == 44);
  CHECK(om(2, -1, 3) == 0);
  CHECK(om(2, 7, 3) == 0);
  CHECK(om_alternating(2, -1, 3) == 0);
  for (int N = 0; N <= 10; ++N) {
    for (int s = 1; s <= 5; ++s) CHECK(om(N, 0, s) == 1);
  }
  for (int N = 0; N <= 20; ++N) {
    for (int k = 0; k <= N; ++k) {
      CHECK(om_alternating(N, k, 1) == binomial(N, k));
      CHECK(om(N, k, 1) == binomial(N, k));
    }
  }
  const auto row = om_row(3, 2);
  CHECK(row.at(-3) == 0);
  CHECK(row.at(6) == 1);
  CHECK(row.at(7) == 0);
}

TEST_CASE("three independent formulas agree") {
  for (int N = 0; N <= 12; ++N) {
    for (int s = 1; s <= 6; ++s) {
      const auto row = om_row(N, s);
      const auto series = oracle::om_series_oracle(N, s);
      REQUIRE(series.size() == row.values.size());
      for (long k = 0; k <= static_cast<long>(s) * N; ++k) {
        CHECK(row.values[k] == series[k]);
        CHECK(om_alternating(N, k, s) == series[k]);
      }
    }
  }
}

TEST_CASE("row invariants: symmetry, sum and the distribution count") {
  for (int N = 0; N <= 15; ++N) {
    for (int s = 1; s <= 7; ++s) {
      const auto row = om_row(N, s);
      const long top = static_cast<long>(s) * N;
      BigInt sum = 0;
      for (long k = 0; k <= top; ++k) {
        CHECK(row.at(k) == row.at(top - k));
        sum += row.at(k);
      }
      BigInt power = 1;
      for (int i = 0; i < N; ++i) power *= s + 1;
      CHECK(sum == power);
      // Without the per-box cap the count is stars-and-bars, an upper bound.
      for (long k = 0; k <= top; ++k) {
        if (N > 0) CHECK(row.at(k) <= binomial(k + N - 1, N - 1));
        if (k <= s && N > 0) CHECK(row.at(k) == binomial(k + N - 1, N - 1));
      }
    }
  }
}

TEST_CASE("big values stay exact") {
  // (1+T+T^2)^200 has a central coefficient far beyond 64 bits.
  const auto row = om_row(200, 2);
  CHECK(row.at(200) > BigInt(1) << 300);
  CHECK(row.at(200) == om_alternating(200, 200, 2));
}

TEST_CASE("strong unimodality") {
  const auto r4 = check_strong_unimodality(om_row(4, 3));
  CHECK(r4.mode == 6);
  CHECK_FALSE(r4.plateau);
  const auto r3 = check_strong_unimodality(om_row(3, 3));
  CHECK(r3.mode == 4);
  CHECK(r3.plateau);
  for (int N = 2; N <= 40; ++N) {
    for (int s = 1; s <= 8; ++s) {
      const auto row = om_row(N, s);
      UnimodalityReport rep;
      REQUIRE_NOTHROW(rep = check_strong_unimodality(row));
      CHECK(rep.plateau == ((s * N) % 2 == 1));
      CHECK(rep.mode == s * N / 2);
      // Oracle: direct pairwise comparison of the series coefficients.
      const auto v = oracle::om_series_oracle(N, s);
      const std::size_t lo = s * N / 2, hi = (s * N + 1) / 2;
      for (std::size_t k = 0; k < lo; ++k) CHECK(v[k] < v[k + 1]);
      CHECK(v[lo] == v[hi]);
      for (std::size_t k = hi; k + 1 < v.size(); ++k) CHECK(v[k] > v[k + 1]);
    }
  }
  CHECK_THROWS_AS(check_strong_unimodality(om_row(1, 3)), UnimodalityViolation);
  auto broken = om_row(5, 2);
  broken.values[3] = broken.values[2];
  CHECK_THROWS_AS(check_strong_unimodality(broken), UnimodalityViolation);
}

TEST_CASE("smallest k with om <= k, c = 1") {
  const auto a = smallest_k_c1(4, 2);
  CHECK(a.k_scanned == 7);
  REQUIRE(a.k_closed_form);
  CHECK(*a.k_closed_form == 7);
  CHECK(a.agrees);
  const auto b = smallest_k_c1(5, 1);
  CHECK(b.k_scanned == 5);
  CHECK(b.agrees);
  // s too large for the closed form: no prediction, scan only.
  const auto c = smallest_k_c1(2, 9);
  CHECK_FALSE(c.k_closed_form);
  CHECK(c.k_scanned < 17);
  CHECK(om(2, c.k_scanned, 9) <= c.k_scanned);
  CHECK(om(2, c.k_scanned - 1, 9) > c.k_scanned - 1);

  for (int N = 2; N <= 60; ++N) {
    for (int s = 1; s <= 12; ++s) {
      const auto r = smallest_k_c1(N, s);
      const auto row = om_row(N, s);
      CHECK(row.at(r.k_scanned) <= r.k_scanned);
      for (long k = 0; k < r.k_scanned; ++k) CHECK(row.at(k) > k);
      if (r.k_closed_form) CHECK(*r.k_closed_form == r.k_scanned);
      if (s == 1 || 2L * N * s < static_cast<long>(N) * (N + 1) + 4) CHECK(r.k_closed_form);
    }
  }
}

TEST_CASE("smallest k with the c = 2 difference <= k") {
  CHECK(smallest_k_c2(2, 4).k_scanned == 5);
  CHECK(smallest_k_c2(3, 4).k_scanned == 8);
  CHECK(smallest_k_c2(5, 2).k_scanned == 7);
  for (int N = 2; N <= 60; ++N) {
    for (int s = 1; s <= 12; ++s) {
      const auto r = smallest_k_c2(N, s);
      REQUIRE(r.k_closed_form);
      const long expected = N == 2 ? s + 1 : N == 3 ? 2L * s : static_cast<long>(s) * (N + 1) / 2 + 1;
      CHECK(*r.k_closed_form == expected);
      CHECK(r.k_scanned == expected);
      CHECK(r.agrees);
    }
  }
}
