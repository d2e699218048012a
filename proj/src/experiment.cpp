#include "xl/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <ostream>

#include "json.hpp"
#include <omp.h>

#include "xl/hilbert.hpp"
#include "xl/random.hpp"

namespace xl {

namespace {

struct Cell {
  std::uint32_t p;
  int d;
  int n;
};

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint32_t p, int d, int n, int trial) {
  return derive_seed(master, {p, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(n),
                              static_cast<std::uint64_t>(trial)});
}

ExperimentRecord run_trial(std::uint32_t p, int d, int n, int c, int trial, const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.p = p;
  rec.d = d;
  rec.n = n;
  rec.c = c;
  rec.trial_index = trial;
  rec.seed = trial_seed(config.seed, p, d, n, trial);
  if ((c == 1 || c == 2) && n >= 2) rec.D_m = d_min(n, c, d).D_m;

  const PrimeField field(p);
  const auto system = random_system(static_cast<std::size_t>(n), static_cast<std::size_t>(c), d, field, rec.seed);
  SolveOptions options;
  options.cell_budget = config.cell_budget;
  MinDegreeSearch search;
  try {
    search = find_min_d(system, config.D_cap, options);
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(e.D, e.cells, e.budget,
                         "p=" + std::to_string(p) + " d=" + std::to_string(d) + " n=" + std::to_string(n) + ": ");
  }
  rec.D_star = search.D_star;
  rec.probes = search.probes;
  rec.match = rec.D_star && rec.D_m && *rec.D_star == *rec.D_m;

  for (const auto& probe : rec.probes) {
    if (probe.chi <= probe.D && probe.univariate_count == 0) rec.sufficiency_holds = false;
    if (c == 1) {
      const BigInt bound = om(n + 1, probe.D, d - 1);
      if (BigInt(probe.chi) != bound) ++rec.chi_bound_mismatches;
      if (BigInt(probe.chi) < bound) ++rec.chi_bound_violations;
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (int d : config.degrees) {
    if (config.D_cap < d + 1) throw std::invalid_argument("D_cap must be >= d + 1");
  }
  std::vector<Cell> cells;
  for (auto p : config.primes) {
    for (int d : config.degrees) {
      for (int n : config.ns) cells.push_back({p, d, n});
    }
  }
  const std::size_t total = cells.size() * static_cast<std::size_t>(config.trials);
  ExperimentResult result;
  result.records.resize(total);
  std::vector<std::exception_ptr> errors(total);

  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t job = 0; job < static_cast<std::int64_t>(total); ++job) {
    const auto& cell = cells[static_cast<std::size_t>(job) / config.trials];
    const int trial = static_cast<int>(job % config.trials);
    try {
      result.records[job] = run_trial(cell.p, cell.d, cell.n, config.c, trial, config);
    } catch (...) {
      errors[job] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    ExperimentSummary s{cells[ci].p, cells[ci].d, cells[ci].n, config.c, 0, std::nullopt, config.trials, 0, 0};
    long sum = 0;
    int counted = 0;
    for (int t = 0; t < config.trials; ++t) {
      const auto& rec = result.records[ci * config.trials + t];
      s.D_min = rec.D_m;
      if (rec.match) ++s.matches;
      if (rec.D_star) {
        sum += *rec.D_star;
        ++counted;
      } else {
        ++s.exhausted;
      }
    }
    s.D_average = counted ? static_cast<double>(sum) / counted : 0.0;
    result.summaries.push_back(s);
  }
  return result;
}

void write_csv(const ExperimentResult& result, bool timing, std::ostream& out) {
  out << "p,d,n,c,trial,seed,D_star,D_m,match,elapsed_ms\n";
  for (const auto& r : result.records) {
    out << r.p << ',' << r.d << ',' << r.n << ',' << r.c << ',' << r.trial_index << ',' << r.seed << ','
        << optional_int(r.D_star) << ',' << optional_int(r.D_m) << ',' << (r.match ? 1 : 0) << ','
        << (timing ? fixed2(r.elapsed_ms) : std::string()) << '\n';
  }
  for (const auto& r : result.records) {
    if (r.D_star && r.D_m && *r.D_star < *r.D_m) {
      out << "#NOTE,p=" << r.p << ",d=" << r.d << ",n=" << r.n << ",trial=" << r.trial_index << ",D_star=" << *r.D_star
          << ",D_m=" << *r.D_m << ",terminated below prediction; non-generic draw\n";
    }
    if (!r.sufficiency_holds) {
      out << "#NOTE,p=" << r.p << ",d=" << r.d << ",n=" << r.n << ",trial=" << r.trial_index
          << ",sufficiency violated: chi(D)<=D without a univariate equation\n";
    }
  }
  out << "#SUMMARY,p,d,n,c,D_average,D_min,trials,matches,exhausted\n";
  for (const auto& s : result.summaries) {
    out << "#SUMMARY," << s.p << ',' << s.d << ',' << s.n << ',' << s.c << ',' << fixed2(s.D_average) << ','
        << optional_int(s.D_min) << ',' << s.trials << ',' << s.matches << ',' << s.exhausted << '\n';
  }
}

void write_json(const ExperimentResult& result, bool timing, std::ostream& out) {
  auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) {
    nlohmann::json j{{"p", r.p},         {"d", r.d},          {"n", r.n},
                     {"c", r.c},         {"trial", r.trial_index}, {"seed", r.seed},
                     {"D_star", opt(r.D_star)}, {"D_m", opt(r.D_m)}, {"match", r.match},
                     {"sufficiency_holds", r.sufficiency_holds}};
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    records.push_back(std::move(j));
  }
  nlohmann::json summaries = nlohmann::json::array();
  for (const auto& s : result.summaries) {
    summaries.push_back({{"p", s.p},
                         {"d", s.d},
                         {"n", s.n},
                         {"c", s.c},
                         {"D_average", fixed2(s.D_average)},
                         {"D_min", opt(s.D_min)},
                         {"trials", s.trials},
                         {"matches", s.matches},
                         {"exhausted", s.exhausted}});
  }
  out << nlohmann::json{{"records", records}, {"summary", summaries}}.dump(2) << '\n';
}

}  // namespace xl
