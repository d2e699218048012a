#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "xl/hilbert.hpp"
#include "xl/macaulay.hpp"
#include "xl/oracle.hpp"
#include "xl/solver.hpp"
#include "xl/text_format.hpp"

using namespace xl;

namespace {

PolySystem system_of(std::uint32_t p, std::size_t n, std::initializer_list<const char*> polys) {
  const PrimeField f(p);
  PolySystem s{f, n, {}};
  for (const char* text : polys) s.polys.push_back(parse_polynomial(text, f, n));
  return s;
}

}  // namespace

TEST_CASE("build_macaulay shapes") {
  const PrimeField f(3109);
  const auto sys = random_system(2, 1, 3, f, 7);
  const auto m = build_macaulay(sys, 5);
  CHECK(m.columns.size() == 21);
  CHECK(m.entries.rows() == 18);
  CHECK(m.entries.cols() == 21);
  CHECK(m.origins.size() == 18);
  CHECK(macaulay_cells(sys, 5) == 18 * 21);
  CHECK(m.pure_block_start() == 15);
  CHECK_THROWS_AS(build_macaulay(sys, 3), DTooSmall);
  CHECK(build_macaulay(sys, 3, DegreeCheck::AllowEqual).entries.rows() == 3);

  const auto single = system_of(7, 2, {"x1^2*x2 + 3"});
  const auto one = build_macaulay(single, 3, DegreeCheck::AllowEqual);
  REQUIRE(one.entries.rows() == 1);
  CHECK(one.row_polynomial(0) == single.polys[0]);

  // Each row is m * f_i.
  for (std::size_t r = 0; r < m.entries.rows(); ++r) {
    const auto& o = m.origins[r];
    CHECK(m.row_polynomial(r) == multiply(sys.polys[o.poly_index], o.shift));
  }
}

TEST_CASE("Macaulay rows vanish at a planted root") {
  const PrimeField f(3109);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    const auto pt = test::random_point(rng, f, 3);
    const auto sys = plant_solution(random_system(3, 1, 2, f, 100 + t), pt);
    const auto m = build_macaulay(sys, 4);
    for (std::size_t r = 0; r < m.entries.rows(); ++r) CHECK(evaluate(m.row_polynomial(r), pt).is_zero());
  }
}

TEST_CASE("chi_measured on a generic system") {
  const PrimeField f(3109);
  const auto sys = random_system(2, 1, 3, f, 11);
  CHECK(chi_measured(sys, 3) == 7);
  CHECK(chi_measured(sys, 4) == 6);
  CHECK(chi_measured(sys, 5) == 3);
  CHECK(chi_measured(sys, 5, Execution::Serial) == 3);
  for (int D = 3; D <= 8; ++D) {
    CHECK(chi_measured(sys, D) >= 0);
    CHECK(BigInt(chi_measured(sys, D)) == om(3, D, 2));
  }
  CHECK_THROWS_AS(chi_measured(sys, 2), DTooSmall);
}

TEST_CASE("detect_univariate") {
  const auto sys = system_of(13, 2, {"x1^2 - 1", "x1*x2 + x2^2"});
  const auto e = eliminate(build_macaulay(sys, 3));
  const auto uni = detect_univariate(e);
  REQUIRE_FALSE(uni.empty());
  const PrimeField f(13);
  bool found = false;
  for (const auto& u : uni) {
    CHECK(is_univariate_in_first(u));
    CHECK(u.ambient() == 2);
    // Echelon rows are normalized at their pivot, so compare up to a scalar.
    const auto lead = u.coefficient(Monomial{2, 0});
    if (u.degree() == 2 && u.scaled(f.inv(lead)) == parse_polynomial("x1^2 - 1", f, 2)) found = true;
  }
  CHECK(found);

  // No pure x1 relation below the terminating degree.
  const auto gen = random_system(2, 1, 3, PrimeField(3109), 11);
  CHECK(detect_univariate(eliminate(build_macaulay(gen, 4))).empty());
  CHECK_FALSE(detect_univariate(eliminate(build_macaulay(gen, 5))).empty());
}

TEST_CASE("univariate_roots") {
  const PrimeField f13(13), f5(5);
  CHECK(univariate_roots(parse_polynomial("x1^2 - 1", f13, 1)) == std::vector<FieldElement>{FieldElement{1}, FieldElement{12}});
  CHECK(univariate_roots(parse_polynomial("x1^2 - x1", f5, 1)) == std::vector<FieldElement>{FieldElement{0}, FieldElement{1}});
  CHECK(univariate_roots(parse_polynomial("x1^2 + 1", PrimeField(7), 1)).empty());
  CHECK(univariate_roots(parse_polynomial("3", f5, 1)).empty());
  CHECK_THROWS(univariate_roots(Polynomial(f5, 1)));

  // Oracle: synthetic division by (x - r) leaves remainder zero exactly at roots.
  const PrimeField f(101);
  std::mt19937_64 rng(10);
  for (int t = 0; t < 30; ++t) {
    std::vector<Term> terms;
    for (int k = 0; k <= 6; ++k) terms.push_back({Monomial{k}, test::random_element(rng, f)});
    terms.push_back({Monomial{6}, test::random_nonzero(rng, f)});
    const Polynomial poly(f, 1, terms);
    if (poly.is_zero()) continue;
    const auto roots = univariate_roots(poly);
    const auto coeffs = univariate_coefficients(poly);
    std::vector<FieldElement> expected;
    for (std::uint32_t r = 0; r < 101; ++r) {
      std::uint64_t rem = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) rem = (rem * r + coeffs[k].value()) % 101;
      if (rem == 0) expected.push_back(FieldElement{r});
    }
    CHECK(roots == expected);
    CHECK(roots.size() <= static_cast<std::size_t>(poly.degree()));
  }
}

TEST_CASE("xl_solve small cases") {
  const auto sys = system_of(7, 1, {"x1^2 - 1", "x1 - 1"});
  const auto out = xl_solve(sys, 3);
  CHECK(out.status == SolveStatus::Solved);
  CHECK(out.solutions == std::vector<Point>{{FieldElement{1}}});
  CHECK_THROWS_AS(xl_solve(sys, 2), DTooSmall);

  const auto lin = system_of(3, 2, {"x1 + x2", "x1 - x2", "x1 + x2^2"});
  const auto lo = xl_solve(lin, 3);
  CHECK(lo.status == SolveStatus::Solved);
  CHECK(lo.solutions == oracle::exhaustive_solve(lin).solutions);

  const auto none = system_of(5, 1, {"x1", "x1 + 1"});
  const auto no = xl_solve(none, 2);
  CHECK(no.status != SolveStatus::NoUnivariate);
  CHECK(no.solutions.empty());
}

TEST_CASE("xl_solve agrees with exhaustive search on planted systems") {
  int solved = 0;
  for (std::uint32_t p : {7u, 11u, 13u}) {
    const PrimeField f(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 8; ++t) {
      const std::size_t n = 2 + t % 2;
      const auto pt = test::random_point(rng, f, n);
      const auto sys = plant_solution(random_system(n, 1 + t % 2, 2 + t % 2, f, 1000 * p + t), pt);
      const auto search = find_min_d(sys, 20);
      REQUIRE(search.D_star);
      const auto out = xl_solve(sys, *search.D_star);
      for (const auto& s : out.solutions) {
        for (const auto& poly : sys.polys) CHECK(evaluate(poly, s).is_zero());
      }
      if (out.status != SolveStatus::Solved) continue;
      ++solved;
      CHECK(std::binary_search(out.solutions.begin(), out.solutions.end(), pt));
      CHECK(out.solutions == oracle::exhaustive_solve(sys).solutions);
      CHECK(out.level_degrees.front() == *search.D_star);
    }
  }
  CHECK(solved >= 20);
}

TEST_CASE("xl_solve on systems without solutions") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 40 && checked < 5; ++seed) {
    const auto sys = random_system(2, 1, 2, PrimeField(7), seed);
    if (!oracle::exhaustive_solve(sys).solutions.empty()) continue;
    const auto search = find_min_d(sys, 20);
    REQUIRE(search.D_star);
    const auto out = xl_solve(sys, *search.D_star);
    CHECK(out.solutions.empty());
    CHECK((out.status == SolveStatus::Solved || out.status == SolveStatus::UnivariateButNoRoots));
    ++checked;
  }
  CHECK(checked == 5);
}

TEST_CASE("find_min_d reproduces the terminating degree") {
  const auto probe = [](std::uint32_t p, int d, std::size_t n, std::uint64_t seed) {
    const auto sys = random_system(n, 1, d, PrimeField(p), seed);
    return find_min_d(sys, 40);
  };
  const auto a = probe(3109, 3, 2, 1);
  REQUIRE(a.D_star);
  CHECK(*a.D_star == 5);
  CHECK(a.probes.front().D == 4);
  CHECK(a.probes.back().univariate_count > 0);
  for (std::size_t i = 0; i + 1 < a.probes.size(); ++i) CHECK(a.probes[i].univariate_count == 0);
  CHECK(*probe(3109, 4, 3, 2).D_star == 10);
  CHECK(*probe(5011, 6, 3, 3).D_star == 18);

  const auto sys = random_system(2, 1, 3, PrimeField(3109), 1);
  CHECK_FALSE(find_min_d(sys, 4).D_star);
  SolveOptions tight;
  tight.cell_budget = 100;
  CHECK_THROWS_AS(find_min_d(sys, 10, tight), BudgetExceeded);
}

TEST_CASE("reminimizing per level keeps the answer") {
  const PrimeField f(11);
  std::mt19937_64 rng(77);
  const auto pt = test::random_point(rng, f, 3);
  const auto sys = plant_solution(random_system(3, 1, 2, f, 5), pt);
  const auto D = *find_min_d(sys, 20).D_star;
  SolveOptions opts;
  opts.reminimize_per_level = true;
  opts.D_cap = 20;
  const auto out = xl_solve(sys, D, opts);
  REQUIRE(out.status == SolveStatus::Solved);
  CHECK(out.solutions == oracle::exhaustive_solve(sys).solutions);
  CHECK(std::binary_search(out.solutions.begin(), out.solutions.end(), pt));
}
