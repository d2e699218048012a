#include <vector>

#include "doctest.h"
#include "xl/hilbert.hpp"
#include "xl/oracle.hpp"

using namespace xl;

TEST_CASE("series_geom") {
  CHECK(series_geom(4, 4, 12)[6] == 44);
  for (int N = 0; N <= 10; ++N) {
    const auto s = series_geom(2, N, N + 3);
    for (int D = 0; D <= N + 3; ++D) CHECK(s[D] == binomial(N, D));
  }
  for (int N = 0; N <= 8; ++N) {
    for (int d = 2; d <= 6; ++d) {
      const int top = (d - 1) * N;
      const auto s = series_geom(d, N, top + 2);
      const auto row = om_row(N, d - 1);
      for (int D = 0; D <= top + 2; ++D) CHECK(s[D] == row.at(D));
    }
  }
  CHECK(series_geom(3, 5, 0).coeffs.size() == 1);
}

TEST_CASE("series arithmetic") {
  const auto one = series_one(5);
  const auto g = series_geom(3, 2, 5);
  CHECK(series_mul(one, g).coeffs == g.coeffs);
  // 1/(1-T) applied to (1-T) gives back 1.
  PowerSeries one_minus_t{{1, -1, 0, 0, 0, 0}};
  CHECK(series_divide_one_minus_t(one_minus_t).coeffs == one.coeffs);
  CHECK(series_divide_one_minus_t(one).coeffs == std::vector<BigInt>(6, 1));
}

TEST_CASE("generic Hilbert series equals the multinomial for equal degrees") {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 5; ++d) {
      std::vector<int> degrees(n + 1, d);
      const int D_max = (d - 1) * (n + 1) + 2;
      const auto h = generic_hilbert_series(degrees, n + 1, D_max);
      for (int D = 0; D <= D_max; ++D) {
        CHECK(h[D] == om(n + 1, D, d - 1));
        CHECK(h[D] == chi_lower_bound(n, 1, d, D));
      }
    }
  }
  // Fewer forms than variables: (1-T^2)/(1-T)^2 = 1 + 2T + 2T^2 + ...
  const std::vector<int> one_form{2};
  const auto h = generic_hilbert_series(one_form, 2, 6);
  for (int D = 0; D <= 6; ++D) CHECK(h[D] == D + 1 - (D >= 2 ? D - 1 : 0));
}

TEST_CASE("lower bound series with extra forms") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 4; ++d) {
      std::vector<int> degrees(n + 2, d);
      const int D_max = 3 * d * n;
      const auto h = hilbert_lower_bound_series(n, degrees, D_max);
      for (int D = 0; D <= D_max; ++D) CHECK(h[D] == chi_lower_bound(n, 2, d, D));
    }
  }
  const std::vector<int> too_few{2, 2};
  CHECK_THROWS_AS(hilbert_lower_bound_series(2, too_few, 5), std::invalid_argument);
}

TEST_CASE("chi_lower_bound") {
  CHECK(chi_lower_bound(3, 2, 3, 2) == 10);
  CHECK(chi_lower_bound(2, 2, 3, 4) == 3);
  for (int n = 1; n <= 5; ++n) {
    for (int d = 2; d <= 5; ++d) {
      for (int D = 0; D <= 20; ++D) CHECK(chi_lower_bound(n, 1, d, D) == om(n + 1, D, d - 1));
    }
  }
}

TEST_CASE("d_min") {
  CHECK(d_min(4, 1, 3).D_m == 9);
  CHECK(d_min(6, 1, 5).D_m == 27);
  CHECK(d_min(7, 1, 2).D_m == 8);
  CHECK(d_min(2, 2, 5).D_m == 8);
  CHECK(d_min(4, 2, 3).D_m == 7);

  const auto r = d_min(3, 1, 4);
  REQUIRE(r.bound_values.size() == static_cast<std::size_t>(r.D_m) + 1);
  CHECK(r.bound_values.back() <= r.D_m);
  for (int D = 0; D < r.D_m; ++D) CHECK(r.bound_values[D] > D);

  for (int n = 2; n <= 40; ++n) {
    for (int d = 3; 2 * (d - 1) <= n + 2 && d <= 12; ++d) {
      // d - 1 < (n+2)/2 + 2/(n+1), written with integers.
      if (!(2L * (d - 1) * (n + 1) < static_cast<long>(n + 2) * (n + 1) + 4)) continue;
      CHECK(d_min(n, 1, d).D_m == (d - 1) * (n + 1) - 1);
    }
  }

  CHECK_THROWS_AS(d_min(3, 3, 2), UnsupportedC);
  CHECK_THROWS_AS(d_min(3, 0, 2), UnsupportedC);
  CHECK_THROWS_AS(d_min(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(d_min(3, 1, 1), std::invalid_argument);
}

TEST_CASE("d_min for c = 2 against both phrasings of the closed form") {
  for (int d = 2; d <= 12; ++d) {
    CHECK(d_min(2, 2, d).D_m == 2 * (d - 1));
    for (int n = 3; n <= 30; ++n) CHECK(d_min(n, 2, d).D_m == (d - 1) * (n + 2) / 2 + 1);
  }
}
