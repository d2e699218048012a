#include "xl/solver.hpp"

#include <algorithm>
#include <iterator>

namespace xl {

namespace {

enum class LevelResult { Ok, NoRoots, NoUnivariate };

struct Context {
  const PolySystem& original;
  const SolveOptions& options;
  SolveOutcome& outcome;
};

std::vector<FieldElement> intersect_sorted(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
  std::vector<FieldElement> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<FieldElement> all_elements(const PrimeField& field) {
  std::vector<FieldElement> all(field.modulus());
  for (std::uint32_t x = 0; x < field.modulus(); ++x) all[x] = FieldElement{x};
  return all;
}

bool satisfies(const PolySystem& system, const Point& point) {
  return std::all_of(system.polys.begin(), system.polys.end(),
                     [&](const Polynomial& f) { return evaluate(f, point).is_zero(); });
}

void record(Context& ctx, const Point& point) {
  if (satisfies(ctx.original, point)) ctx.outcome.solutions.push_back(point);
}

void note_degree(Context& ctx, std::size_t depth, int D) {
  auto& levels = ctx.outcome.level_degrees;
  if (levels.size() <= depth) levels.resize(depth + 1, 0);
  levels[depth] = std::max(levels[depth], D);
}

// Every completion of `prefix` by `free_vars` arbitrary values.
void enumerate_free(Context& ctx, Point& prefix, std::size_t free_vars) {
  const std::uint64_t p = ctx.original.field.modulus();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_vars; ++i) {
    total *= p;
    if (total > ctx.options.enumeration_cap) {
      throw SearchSpaceTooLarge("substitution left " + std::to_string(free_vars) +
                                " unconstrained variables; enumeration exceeds cap");
    }
  }
  const std::size_t base = prefix.size();
  prefix.resize(base + free_vars);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < free_vars; ++i) {
      prefix[base + i] = FieldElement{static_cast<std::uint32_t>(rest % p)};
      rest /= p;
    }
    record(ctx, prefix);
  }
  prefix.resize(base);
}

std::vector<Polynomial> substitute_all(const std::vector<Polynomial>& polys, FieldElement value) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& f : polys) {
    auto g = substitute_first(f, value);
    if (!g.is_zero()) out.push_back(std::move(g));
  }
  return out;
}

void check_budget(const PolySystem& system, int D, const SolveOptions& options) {
  if (options.cell_budget == 0) return;
  const auto cells = macaulay_cells(system, D);
  if (cells > options.cell_budget) throw BudgetExceeded(D, cells, options.cell_budget);
}

LevelResult solve_level(Context& ctx, std::vector<Polynomial> polys, std::size_t n, int D, std::size_t depth,
                        Point& prefix) {
  const PrimeField& field = ctx.original.field;
  if (n == 1) {
    auto roots = all_elements(field);
    for (const auto& f : polys) roots = intersect_sorted(roots, univariate_roots(f));
    for (auto r : roots) {
      prefix.push_back(r);
      record(ctx, prefix);
      prefix.pop_back();
    }
    return roots.empty() ? LevelResult::NoRoots : LevelResult::Ok;
  }

  PolySystem level{field, n, std::move(polys)};
  int level_D = D;
  if (ctx.options.reminimize_per_level && depth > 0) {
    const auto search = find_min_d(level, std::max(ctx.options.D_cap, level.max_degree() + 1), ctx.options);
    if (!search.D_star) return LevelResult::NoUnivariate;
    level_D = *search.D_star;
  }
  check_budget(level, level_D, ctx.options);
  const auto matrix = build_macaulay(level, level_D);
  const auto elimination = eliminate(matrix, ctx.options.exec);
  note_degree(ctx, depth, level_D);
  const auto univariate = detect_univariate(elimination);
  if (univariate.empty()) return LevelResult::NoUnivariate;

  auto roots = univariate_roots(univariate.front());
  for (std::size_t i = 1; i < univariate.size() && !roots.empty(); ++i) {
    roots = intersect_sorted(roots, univariate_roots(univariate[i]));
  }
  if (roots.empty()) return LevelResult::NoRoots;

  for (auto r : roots) {
    auto reduced = substitute_all(level.polys, r);
    prefix.push_back(r);
    if (reduced.empty()) {
      enumerate_free(ctx, prefix, n - 1);
    } else if (solve_level(ctx, std::move(reduced), n - 1, D, depth + 1, prefix) == LevelResult::NoUnivariate) {
      prefix.pop_back();
      return LevelResult::NoUnivariate;
    }
    prefix.pop_back();
  }
  return LevelResult::Ok;
}

}  // namespace

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved:
      return "Solved";
    case SolveStatus::UnivariateButNoRoots:
      return "UnivariateButNoRoots";
    case SolveStatus::NoUnivariate:
      return "NoUnivariate";
  }
  return "?";
}

SolveOutcome xl_solve(const PolySystem& system, int D, const SolveOptions& options) {
  if (system.n < 1) throw std::invalid_argument("xl_solve needs at least one variable");
  if (D < system.max_degree() + 1) throw DTooSmall(D, system.max_degree() + 1);
  SolveOutcome outcome;
  Context ctx{system, options, outcome};
  Point prefix;
  std::vector<Polynomial> polys;
  for (const auto& f : system.polys) {
    if (!f.is_zero()) polys.push_back(f);
  }
  LevelResult top = LevelResult::Ok;
  if (polys.empty()) {
    enumerate_free(ctx, prefix, system.n);
  } else {
    top = solve_level(ctx, std::move(polys), system.n, D, 0, prefix);
  }
  switch (top) {
    case LevelResult::Ok:
      outcome.status = SolveStatus::Solved;
      break;
    case LevelResult::NoRoots:
      outcome.status = SolveStatus::UnivariateButNoRoots;
      break;
    case LevelResult::NoUnivariate:
      outcome.status = SolveStatus::NoUnivariate;
      break;
  }
  std::sort(outcome.solutions.begin(), outcome.solutions.end());
  outcome.solutions.erase(std::unique(outcome.solutions.begin(), outcome.solutions.end()), outcome.solutions.end());
  return outcome;
}

DegreeProbe probe_degree(const PolySystem& system, int D, const SolveOptions& options) {
  check_budget(system, D, options);
  const auto matrix = build_macaulay(system, D);
  const auto elimination = eliminate(matrix, options.exec);
  return DegreeProbe{D, elimination.rank, matrix.columns.size(),
                     static_cast<long>(matrix.columns.size()) - static_cast<long>(elimination.rank),
                     elimination.univariate_rows.size()};
}

MinDegreeSearch find_min_d(const PolySystem& system, int D_cap, const SolveOptions& options) {
  MinDegreeSearch search;
  for (int D = system.max_degree() + 1; D <= D_cap; ++D) {
    search.probes.push_back(probe_degree(system, D, options));
    if (search.probes.back().univariate_count > 0) {
      search.D_star = D;
      break;
    }
  }
  return search;
}

}  // namespace xl
