#include "xl/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "xl/elimination.hpp"
#include "xl/experiment.hpp"
#include "xl/hilbert.hpp"
#include "xl/multinomial.hpp"
#include "xl/oracle.hpp"
#include "xl/random.hpp"
#include "xl/solver.hpp"
#include "xl/text_format.hpp"

namespace xl::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out_path;
  int threads = 0;
  std::size_t budget = 50'000'000;
};

// Writes to --out when given, otherwise to the caller's stream.
class Output {
 public:
  Output(const Globals& g, std::ostream& fallback) {
    if (!g.out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(g.out_path);
      if (!*file_) throw UsageError("cannot open output file " + g.out_path);
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string join_row(const OrdinaryMultinomialRow& row) {
  std::ostringstream s;
  for (std::size_t k = 0; k < row.values.size(); ++k) s << (k ? "," : "") << row.values[k];
  return s.str();
}

// ---- multinomial -------------------------------------------------------

struct MultinomialArgs {
  std::vector<int> positional;
  std::vector<int> table;
  bool check_unimodal = false;
};

int cmd_multinomial(const MultinomialArgs& a, const Globals& g, std::ostream& out) {
  std::vector<OrdinaryMultinomialRow> rows;
  if (!a.table.empty()) {
    if (a.table.size() != 2 || a.table[0] < 0 || a.table[1] < 0) throw UsageError("--table takes s and N_max >= 0");
    for (int N = 0; N <= a.table[1]; ++N) rows.push_back(om_row(N, a.table[0]));
  } else {
    if (a.positional.size() != 2 || a.positional[0] < 0 || a.positional[1] < 0) {
      throw UsageError("multinomial takes N s (or --table s N_max)");
    }
    rows.push_back(om_row(a.positional[0], a.positional[1]));
  }
  Output sink(g, out);
  if (g.format == "json") {
    json j = json::array();
    for (const auto& row : rows) {
      json values = json::array();
      for (const auto& v : row.values) values.push_back(v.str());
      json entry{{"N", row.N}, {"s", row.s}, {"values", values}};
      if (a.check_unimodal && row.N >= 2) {
        const auto rep = check_strong_unimodality(row);
        entry["mode"] = rep.mode;
        entry["plateau"] = rep.plateau;
      }
      j.push_back(entry);
    }
    *sink << j.dump(2) << '\n';
    return kExitOk;
  }
  for (const auto& row : rows) {
    *sink << join_row(row) << '\n';
    if (a.check_unimodal && row.N >= 2) {
      const auto rep = check_strong_unimodality(row);
      *sink << "# strongly unimodal N=" << row.N << " s=" << row.s << " mode=" << rep.mode
            << " plateau=" << (rep.plateau ? "true" : "false") << '\n';
    }
  }
  return kExitOk;
}

// ---- dmin ----------------------------------------------------------------

struct DminArgs {
  std::string n = "2..10";
  std::string d = "2..10";
  int c = 1;
};

std::optional<int> dmin_closed_form(int n, int c, int d) {
  if (c == 1 && d >= 3) return (d - 1) * (n + 1) - 1;
  if (c == 2) return n == 2 ? 2 * (d - 1) : (d - 1) * (n + 2) / 2 + 1;
  return std::nullopt;
}

int cmd_dmin(const DminArgs& a, const Globals& g, std::ostream& out) {
  if (a.c != 1 && a.c != 2) throw UnsupportedC(a.c);
  const auto ns = parse_int_list(a.n);
  const auto ds = parse_int_list(a.d);
  Output sink(g, out);
  json rows = json::array();
  if (g.format != "json") *sink << "n,c,d,D_m,closed_form,closed_form_match\n";
  for (int d : ds) {
    for (int n : ns) {
      const auto r = d_min(n, a.c, d);
      const auto cf = dmin_closed_form(n, a.c, d);
      if (g.format == "json") {
        rows.push_back({{"n", n}, {"c", a.c}, {"d", d}, {"D_m", r.D_m},
                        {"closed_form", cf ? json(*cf) : json(nullptr)},
                        {"closed_form_match", cf ? json(*cf == r.D_m) : json(nullptr)}});
      } else {
        *sink << n << ',' << a.c << ',' << d << ',' << r.D_m << ',' << (cf ? std::to_string(*cf) : "") << ','
              << (cf ? (*cf == r.D_m ? "1" : "0") : "") << '\n';
      }
    }
  }
  if (g.format == "json") *sink << rows.dump(2) << '\n';
  return kExitOk;
}

// ---- solve -----------------------------------------------------------------

struct SolveArgs {
  std::string file;
  int D = 0;
  bool automatic = false;
  int cap = 40;
  std::string planted;
  bool reminimize = false;
};

bool equal_degrees(const PolySystem& sys) {
  for (const auto& f : sys.polys) {
    if (!f.is_zero() && f.degree() != sys.max_degree()) return false;
  }
  return true;
}

int cmd_solve(const SolveArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.file);
  if (!in) throw ParseError("cannot read system file " + a.file);
  PolySystem system = parse_system(in);

  std::optional<Point> planted;
  if (!a.planted.empty()) {
    Point pt;
    for (int v : parse_int_list(a.planted)) pt.push_back(system.field.element(v));
    if (pt.size() != system.n) throw UsageError("--planted needs exactly n values");
    system = plant_solution(system, pt);
    planted = pt;
  }

  const int d = system.max_degree();
  const long c = system.overdeterminedness();
  SolveOptions options;
  options.cell_budget = g.budget;
  options.reminimize_per_level = a.reminimize;
  options.D_cap = a.cap;

  std::optional<int> predicted;
  if ((c == 1 || c == 2) && system.n >= 2 && d >= 2 && equal_degrees(system)) {
    predicted = d_min(static_cast<int>(system.n), static_cast<int>(c), d).D_m;
  }

  SolveOutcome outcome;
  int used_D = 0;
  if (a.automatic) {
    const int start = std::max(d + 1, predicted.value_or(d + 1));
    bool done = false;
    for (int D = start; D <= a.cap; ++D) {
      outcome = xl_solve(system, D, options);
      used_D = D;
      if (outcome.status != SolveStatus::NoUnivariate) {
        done = true;
        break;
      }
    }
    if (!done) {
      err << "error: Exhausted: no D in [" << start << ", " << a.cap << "] produced a univariate equation\n";
      return kExitFailure;
    }
  } else {
    if (a.D <= 0) throw UsageError("solve needs --D <degree> or --auto");
    used_D = a.D;
    outcome = xl_solve(system, a.D, options);
  }

  json sols = json::array();
  bool planted_found = false;
  for (const auto& pt : outcome.solutions) {
    json coords = json::array();
    for (auto v : pt) coords.push_back(v.value());
    bool verified = true;
    for (const auto& f : system.polys) verified = verified && evaluate(f, pt).is_zero();
    sols.push_back({{"point", coords}, {"verified", verified}});
    if (planted && pt == *planted) planted_found = true;
  }
  json report{{"p", system.field.modulus()},
              {"n", system.n},
              {"polynomials", system.polys.size()},
              {"D", used_D},
              {"D_m", predicted ? json(*predicted) : json(nullptr)},
              {"status", to_string(outcome.status)},
              {"level_degrees", outcome.level_degrees},
              {"solutions", sols}};
  if (planted) {
    json coords = json::array();
    for (auto v : *planted) coords.push_back(v.value());
    report["planted"] = coords;
    report["planted_found"] = planted_found;
  }
  Output sink(g, out);
  *sink << report.dump(2) << '\n';
  if (outcome.status == SolveStatus::NoUnivariate) return kExitFailure;
  if (planted && !planted_found) return kExitFailure;
  return kExitOk;
}

// ---- experiment ------------------------------------------------------------

struct ExperimentArgs {
  std::string primes = "3109";
  std::string d = "2";
  std::string n = "2";
  int c = 1;
  int trials = 10;
  int cap = 40;
  bool timing = false;
};

int cmd_experiment(const ExperimentArgs& a, const Globals& g, std::ostream& out) {
  ExperimentConfig cfg;
  cfg.primes.clear();
  for (int p : parse_int_list(a.primes)) {
    if (p < 2) throw UsageError("primes must be >= 2");
    PrimeField check(static_cast<std::uint64_t>(p));
    cfg.primes.push_back(check.modulus());
  }
  cfg.degrees = parse_int_list(a.d);
  cfg.ns = parse_int_list(a.n);
  for (int d : cfg.degrees) {
    if (d < 2) throw UsageError("degrees must be >= 2");
  }
  for (int n : cfg.ns) {
    if (n < 1) throw UsageError("n must be >= 1");
  }
  if (a.c < 1) throw UsageError("c must be >= 1");
  if (a.trials < 1) throw UsageError("trials must be >= 1");
  cfg.c = a.c;
  cfg.trials = a.trials;
  cfg.D_cap = a.cap;
  cfg.seed = g.seed;
  cfg.cell_budget = g.budget;
  cfg.threads = g.threads;
  cfg.timing = a.timing;
  const auto result = run_experiment(cfg);
  Output sink(g, out);
  if (g.format == "json") {
    write_json(result, a.timing, *sink);
  } else {
    write_csv(result, a.timing, *sink);
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string grid = "N=12,s=6";
  int rank_trials = 100;
  int max_rows = 200;
  int max_cols = 300;
  int solve_trials = 30;
  bool inject_corruption = false;
};

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
};

std::pair<int, int> parse_grid(const std::string& text) {
  int N = -1, s = -1;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--grid expects N=<int>,s=<int>");
    const auto key = part.substr(0, eq);
    const int value = std::stoi(part.substr(eq + 1));
    if (key == "N") {
      N = value;
    } else if (key == "s") {
      s = value;
    } else {
      throw UsageError("--grid key must be N or s");
    }
  }
  if (N < 0 || s < 0) throw UsageError("--grid expects N=<int>,s=<int>");
  return {N, s};
}

CheckResult check_multinomials(int N_max, int s_max, bool corrupt) {
  CheckResult r{"multinomial: om_row = om_alternating = series oracle", 0, 0};
  for (int N = 0; N <= N_max; ++N) {
    for (int s = 0; s <= s_max; ++s) {
      auto row = om_row(N, s);
      if (corrupt && N == N_max && s == s_max) row.values[row.values.size() / 2] += 1;
      const auto series = oracle::om_series_oracle(N, s);
      for (long k = -1; k <= static_cast<long>(s) * N + 1; ++k) {
        ++r.cases;
        const BigInt expected = (k >= 0 && k < static_cast<long>(series.size())) ? series[k] : BigInt(0);
        if (row.at(k) != expected || om_alternating(N, k, s) != expected) ++r.failures;
      }
    }
  }
  return r;
}

CheckResult check_unimodality(int N_max, int s_max) {
  CheckResult r{"unimodality: strict rise, plateau iff sN odd", 0, 0};
  for (int N = 2; N <= N_max; ++N) {
    for (int s = 1; s <= s_max; ++s) {
      ++r.cases;
      try {
        const auto rep = check_strong_unimodality(om_row(N, s));
        if (rep.plateau != ((s * N) % 2 == 1)) ++r.failures;
      } catch (const UnimodalityViolation&) {
        ++r.failures;
      }
    }
  }
  return r;
}

CheckResult check_ranks(int trials, int max_rows, int max_cols, std::uint64_t seed) {
  CheckResult r{"rank: serial = parallel = column-sweep reference", 0, 0};
  const PrimeField field(3109);
  std::mt19937_64 rng(derive_seed(seed, {0x72616e6b}));
  for (int t = 0; t < trials; ++t) {
    const auto rows = 1 + uniform_below(rng, static_cast<std::uint32_t>(max_rows));
    const auto cols = 1 + uniform_below(rng, static_cast<std::uint32_t>(max_cols));
    const auto inner = 1 + uniform_below(rng, std::min(rows, cols));
    const bool low_rank = t % 2 == 1;
    std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols));
    if (low_rank) {
      std::vector<std::vector<std::uint32_t>> left(rows, std::vector<std::uint32_t>(inner));
      std::vector<std::vector<std::uint32_t>> right(inner, std::vector<std::uint32_t>(cols));
      for (auto& row : left) {
        for (auto& v : row) v = uniform_below(rng, 3109);
      }
      for (auto& row : right) {
        for (auto& v : row) v = uniform_below(rng, 3109);
      }
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          std::uint64_t acc = 0;
          for (std::size_t k = 0; k < inner; ++k) acc = (acc + std::uint64_t{left[i][k]} * right[k][j]) % 3109;
          a[i][j] = static_cast<std::uint32_t>(acc);
        }
      }
    } else {
      for (auto& row : a) {
        for (auto& v : row) v = uniform_below(rng, 3109);
      }
    }
    DenseMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = FieldElement{a[i][j]};
    }
    DenseMatrix serial = m;
    const auto rs = row_reduce_serial(serial, field);
    const auto rp = row_reduce_parallel(m, field);
    ++r.cases;
    if (rs.rank != rp.rank || !(serial == m) || rs.rank != oracle::rank_reference(a, 3109)) ++r.failures;
  }
  return r;
}

CheckResult check_solves(int trials, std::uint64_t seed) {
  CheckResult r{"solve: xl_solve = exhaustive search (planted, small p)", 0, 0};
  const std::uint32_t primes[] = {7, 11, 13};
  for (int t = 0; t < trials; ++t) {
    const PrimeField field(primes[t % 3]);
    const std::size_t n = 1 + static_cast<std::size_t>(t / 3) % 3;
    const std::size_t c = 1 + static_cast<std::size_t>(t % 2);
    const int d = 2 + (t / 9) % 2;
    const auto s = derive_seed(seed, {0x736f6c76, static_cast<std::uint64_t>(t)});
    std::mt19937_64 rng(s);
    Point pt(n);
    for (auto& v : pt) v = FieldElement{uniform_below(rng, field.modulus())};
    const auto system = plant_solution(random_system(n, c, d, field, s), pt);
    const auto truth = oracle::exhaustive_solve(system);
    const auto search = find_min_d(system, 30);
    if (!search.D_star) continue;
    const auto outcome = xl_solve(system, *search.D_star);
    ++r.cases;
    for (const auto& sol : outcome.solutions) {
      for (const auto& f : system.polys) {
        if (!evaluate(f, sol).is_zero()) ++r.failures;
      }
    }
    if (outcome.status == SolveStatus::Solved && outcome.solutions != truth.solutions) ++r.failures;
  }
  return r;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const auto [N_max, s_max] = parse_grid(a.grid);
  std::vector<CheckResult> checks;
  checks.push_back(check_multinomials(N_max, s_max, a.inject_corruption));
  checks.push_back(check_unimodality(std::max(N_max, 2), std::max(s_max, 1)));
  checks.push_back(check_ranks(a.rank_trials, a.max_rows, a.max_cols, g.seed));
  checks.push_back(check_solves(a.solve_trials, g.seed));
  Output sink(g, out);
  bool ok = true;
  if (g.format == "json") {
    json j = json::array();
    for (const auto& c : checks) {
      j.push_back({{"check", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.failures == 0}});
      ok = ok && c.failures == 0;
    }
    *sink << j.dump(2) << '\n';
  } else {
    *sink << "check,cases,failures,status\n";
    for (const auto& c : checks) {
      *sink << c.name << ',' << c.cases << ',' << c.failures << ',' << (c.failures == 0 ? "PASS" : "FAIL") << '\n';
      ok = ok && c.failures == 0;
    }
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(text.substr(0, dots));
    const int hi = to_int(text.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range '" + text + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(to_int(part));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"XL algorithm solver and optimal-degree predictors over GF(p)", "xl"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Master RNG seed");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "Write output to PATH instead of stdout");
  app.add_option("--threads", g.threads, "OpenMP thread count")->check(CLI::NonNegativeNumber);
  app.add_option("--budget", g.budget, "Maximum Macaulay matrix cells (rows x columns)");

  MultinomialArgs ma;
  auto* multinomial = app.add_subcommand("multinomial", "Rows of ordinary multinomials <N choose k>_s");
  multinomial->add_option("N_s", ma.positional, "N s")->expected(0, 2);
  multinomial->add_option("--table", ma.table, "s N_max: rows N = 0..N_max")->expected(2);
  multinomial->add_flag("--check-unimodal", ma.check_unimodal, "Certify strong unimodality of each row");

  DminArgs da;
  auto* dmin = app.add_subcommand("dmin", "Predicted minimal degree D_m from the Hilbert-series bound");
  dmin->add_option("--n", da.n, "Variable counts (a..b or a,b,c)");
  dmin->add_option("--d", da.d, "Degrees (a..b or a,b,c)");
  dmin->add_option("--c", da.c, "Excess equations (1 or 2)");

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve a polynomial system file with XL");
  solve->add_option("file", sa.file, "System file")->required();
  solve->add_option("--D", sa.D, "Maximal degree D");
  solve->add_flag("--auto", sa.automatic, "Start at the predicted D and increment to --cap");
  solve->add_option("--cap", sa.cap, "Largest D tried by --auto / per-level search");
  solve->add_option("--planted", sa.planted, "Plant the root x1,..,xn before solving");
  solve->add_flag("--reminimize", sa.reminimize, "Search a fresh minimal D at each recursion level");

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "Random-system experiments measuring D*");
  experiment->add_option("--p", ea.primes, "Primes (list)");
  experiment->add_option("--d", ea.d, "Degrees (a..b or list)");
  experiment->add_option("--n", ea.n, "Variable counts (a..b or list)");
  experiment->add_option("--c", ea.c, "Excess equations");
  experiment->add_option("--trials", ea.trials, "Trials per (p, d, n)");
  experiment->add_option("--cap", ea.cap, "Largest D probed");
  experiment->add_flag("--timing", ea.timing, "Fill the elapsed_ms column");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Cross-check implementations against brute-force oracles");
  verify->add_option("--grid", va.grid, "Multinomial grid N=<int>,s=<int>");
  verify->add_option("--rank-trials", va.rank_trials, "Random matrices for the rank check");
  verify->add_option("--max-rows", va.max_rows)->check(CLI::PositiveNumber);
  verify->add_option("--max-cols", va.max_cols)->check(CLI::PositiveNumber);
  verify->add_option("--solve-trials", va.solve_trials, "Planted systems for the solve check");
  verify->add_flag("--inject-corruption", va.inject_corruption, "Corrupt one multinomial row (negative control)");

  std::vector<std::string> argv_store{"xl"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (g.threads > 0) omp_set_num_threads(g.threads);
  try {
    if (multinomial->parsed()) return cmd_multinomial(ma, g, out);
    if (dmin->parsed()) return cmd_dmin(da, g, out);
    if (solve->parsed()) return cmd_solve(sa, g, out, err);
    if (experiment->parsed()) return cmd_experiment(ea, g, out);
    if (verify->parsed()) return cmd_verify(va, g, out);
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedC& e) {
    err << "error: UnsupportedC: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DTooSmall& e) {
    err << "error: DTooSmall: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: BudgetExceeded: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace xl::cli
