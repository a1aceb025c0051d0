#include "seqsub/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>

#include "seqsub/errors.hpp"
#include "seqsub/rng.hpp"

namespace seqsub {

const char* to_string(Family family) {
  switch (family) {
    case Family::tasks: return "tasks";
    case Family::infogain: return "infogain";
    case Family::searchtrack: return "searchtrack";
    case Family::recommender: return "recommender";
    case Family::dag_mod: return "dag-mod";
    case Family::dag_sub: return "dag-sub";
    case Family::movielens_mod: return "movielens-mod";
    case Family::movielens_sub: return "movielens-sub";
  }
  return "?";
}

const char* to_string(Algo algo) {
  switch (algo) {
    case Algo::gsemo: return "gsemo";
    case Algo::gsemo_k: return "gsemo_k";
    case Algo::greedy: return "greedy";
    case Algo::ggreedy: return "ggreedy";
    case Algo::omega: return "omega";
  }
  return "?";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::tasks, Family::infogain, Family::searchtrack, Family::recommender,
                   Family::dag_mod, Family::dag_sub, Family::movielens_mod, Family::movielens_sub}) {
    if (name == to_string(f)) return f;
  }
  throw ValidationError("unknown family: " + name);
}

Algo algo_from_string(const std::string& name) {
  for (Algo a : {Algo::gsemo, Algo::gsemo_k, Algo::greedy, Algo::ggreedy, Algo::omega}) {
    if (name == to_string(a)) return a;
  }
  throw ValidationError("unknown algorithm: " + name);
}

ProblemClass problem_class_of(Family family) {
  switch (family) {
    case Family::tasks:
    case Family::infogain:
      return ProblemClass::prefix_monotone;
    case Family::searchtrack:
    case Family::recommender:
      return ProblemClass::weakly_monotone;
    default:
      return ProblemClass::dag;
  }
}

Algo baseline_of(Family family) {
  switch (family) {
    case Family::tasks:
    case Family::infogain:
      return Algo::greedy;
    case Family::searchtrack:
    case Family::recommender:
      return Algo::ggreedy;
    default:
      return Algo::omega;
  }
}

TaskInstance gen_tasks(int n, int k, int m, std::uint64_t seed) {
  if (n < 1 || k < 1 || m < 1) throw ValidationError("gen_tasks requires n, k, m >= 1");
  TaskInstance inst;
  inst.m = m;
  inst.n = n;
  inst.stages = 2 * k;
  inst.p.resize(static_cast<std::size_t>(m) * n * inst.stages);
  Rng rng(seed);
  for (int i = 0; i < m; ++i) {
    for (int a = 0; a < n; ++a) {
      const double v = 0.2 * rng.uniform();
      for (int j = 0; j < inst.stages; ++j) inst.p[inst.index(i, j, a)] = v;
    }
  }
  return inst;
}

InfoGainInstance gen_infogain(int n, int k, std::uint64_t seed) {
  if (n < 1 || n > 1000 || k < 1) throw ValidationError("gen_infogain requires 1 <= n <= 1000, k >= 1");
  InfoGainInstance inst;
  inst.n = n;
  inst.d = 2;
  struct Candidate {
    double a;
    double key;
  };
  std::vector<Candidate> pool;
  pool.reserve(1000);
  for (int i = 1; i <= 1000; ++i) {
    const double a = i / 1000.0;
    pool.push_back({a, std::fabs(std::sqrt(a) - std::sqrt(1.0 - a))});
  }
  std::sort(pool.begin(), pool.end(), [](const Candidate& x, const Candidate& y) {
    if (x.key != y.key) return x.key > y.key;
    return x.a > y.a;
  });
  inst.entries.resize(static_cast<std::size_t>(n) * 2);
  for (int i = 0; i < n; ++i) {
    inst.entries[static_cast<std::size_t>(i) * 2] = pool[static_cast<std::size_t>(i)].a;
    inst.entries[static_cast<std::size_t>(i) * 2 + 1] = 1.0 - pool[static_cast<std::size_t>(i)].a;
  }
  Rng rng(seed);
  inst.prior_diag.resize(2);
  for (double& v : inst.prior_diag) {
    do {
      v = rng.uniform();
    } while (v <= 0.0);
  }
  inst.sigma2.resize(static_cast<std::size_t>(2) * k);
  for (int stage = 1; stage <= 2 * k; ++stage) {
    double sigma;
    do {
      sigma = (stage - 1) + rng.uniform();
    } while (sigma <= 0.0);
    inst.sigma2[static_cast<std::size_t>(stage - 1)] = sigma * sigma;
  }
  return inst;
}

SearchTrackInstance gen_searchtrack(int n, int k, int num_paths, double m_slope,
                                    std::uint64_t seed) {
  (void)k;  // the budget is the caller's concern; stamps span [1, ~n^2) regardless
  if (n < 2 || num_paths < 1) throw ValidationError("gen_searchtrack requires n >= 2, paths >= 1");
  SearchTrackInstance inst;
  inst.num_paths = num_paths;
  Rng rng(seed);
  double t = 1.0;
  for (int i = 0; i < n; ++i) {
    SearchTrackPattern pat;
    double r;
    do {
      r = rng.uniform(0.0, static_cast<double>(n));
    } while (r == 0.0);
    t += r;
    pat.time_stamp = t;
    pat.detect_prob =
        std::min(std::max(m_slope * i / (n - 1) + 0.5 - m_slope / 2, 0.001), 0.999);
    pat.covers.resize(static_cast<std::size_t>(num_paths));
    for (auto& c : pat.covers) c = rng.uniform() < 0.5 ? 1 : 0;
    inst.patterns.push_back(std::move(pat));
  }
  inst.penalty = t;  // stamps increase, so the last one is the max
  return inst;
}

RecommenderInstance gen_recommender(int n, int num_topics, std::uint64_t seed) {
  if (n < 1 || num_topics < 1) throw ValidationError("gen_recommender requires n, topics >= 1");
  RecommenderInstance inst;
  inst.n = n;
  inst.num_topics = num_topics;
  Rng rng(seed);
  inst.satisfaction.resize(static_cast<std::size_t>(n));
  for (double& g : inst.satisfaction) g = rng.uniform();
  inst.coverage.resize(static_cast<std::size_t>(n) * num_topics);
  for (double& p : inst.coverage) p = rng.uniform();
  return inst;
}

SignTestResult sign_test(int wins, int ties, int losses) {
  if (wins < 0 || ties < 0 || losses < 0) throw ValidationError("sign_test: negative counts");
  SignTestResult result;
  result.wins = wins;
  result.ties = ties;
  result.losses = losses;
  const int trials = wins + losses;
  if (trials == 0) {
    result.p_value = 1.0;
    result.significant_at_05 = false;
    return result;
  }
  const int m = std::min(wins, losses);
  long double pmf = std::exp2l(-static_cast<long double>(trials));
  long double cum = pmf;
  for (int i = 1; i <= m; ++i) {
    pmf *= static_cast<long double>(trials - i + 1) / static_cast<long double>(i);
    cum += pmf;
  }
  result.p_value = static_cast<double>(std::min(1.0L, 2.0L * cum));
  result.significant_at_05 = result.p_value < 0.05;
  return result;
}

int compare_values(double a, double b, double tolerance) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  if (a > b + tolerance * scale) return 1;
  if (a < b - tolerance * scale) return -1;
  return 0;
}

std::uint64_t derive_instance_seed(std::uint64_t base_seed, Family family, int n, int k,
                                   double param, int instance) {
  return SeedDeriver(base_seed)
      .absorb(static_cast<std::uint64_t>(family) + 1)
      .absorb(static_cast<std::uint64_t>(n))
      .absorb(static_cast<std::uint64_t>(k))
      .absorb(static_cast<std::uint64_t>(static_cast<std::int64_t>(std::llround(param * 1e6))))
      .absorb(static_cast<std::uint64_t>(instance))
      .seed();
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_dag_family(Family f) {
  return f == Family::dag_mod || f == Family::dag_sub || f == Family::movielens_mod ||
         f == Family::movielens_sub;
}

struct Cell {
  int n = 0;
  int k = 0;
  double param = 0;
};

struct TaskOutput {
  std::vector<RunRow> rows;
  std::vector<std::pair<std::string, std::string>> trace_files;  // name, content
  std::vector<std::string> failures;
};

std::string format_double(double v, const char* fmt = "%.12g") {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

// Oracles and policies for one generated instance.
struct InstanceContext {
  std::unique_ptr<ObjectiveOracle> oracle;     // evaluation surface for gsemo/ggreedy
  std::unique_ptr<DagOracle> raw_dag_oracle;   // greedy runs on raw f for dag families
  const DagOracle* dag_oracle = nullptr;       // set for dag families
  std::optional<SearchTrackInstance> st_inst;  // kept for the timesort fast path
  bool algo_repeats = true;
  RepeatPolicy full_policy = RepeatPolicy::follow_oracle;
};

InstanceContext make_instance(const ExperimentSpec& spec, const Cell& cell, std::uint64_t seed,
                              const PreferenceDag* movielens_dag) {
  InstanceContext ctx;
  switch (spec.family) {
    case Family::tasks:
      ctx.oracle = std::make_unique<TasksOracle>(gen_tasks(cell.n, cell.k, spec.tasks_m, seed));
      break;
    case Family::infogain:
      ctx.oracle = std::make_unique<InfoGainOracle>(gen_infogain(cell.n, cell.k, seed));
      break;
    case Family::searchtrack: {
      const int paths = spec.num_paths > 0 ? spec.num_paths : 2 * cell.n;
      SearchTrackInstance inst = gen_searchtrack(cell.n, cell.k, paths, cell.param, seed);
      ctx.st_inst = inst;
      ctx.oracle = std::make_unique<SearchTrackOracle>(std::move(inst));
      break;
    }
    case Family::recommender:
      ctx.oracle = std::make_unique<RecommenderOracle>(
          gen_recommender(cell.n, spec.topics, seed));
      break;
    case Family::dag_mod:
    case Family::dag_sub: {
      const double hi = spec.family == Family::dag_sub ? 0.1 : 1.0;
      PreferenceDag dag =
          gen_dag_synthetic(cell.n, static_cast<int>(cell.param), 0.0, hi, seed);
      const HKind kind = spec.family == Family::dag_sub ? HKind::coverage : HKind::modular;
      auto main = std::make_unique<DagOracle>(dag, kind, DagEvalMode::reordered);
      ctx.raw_dag_oracle = std::make_unique<DagOracle>(std::move(dag), kind, DagEvalMode::raw);
      ctx.dag_oracle = main.get();
      ctx.oracle = std::move(main);
      break;
    }
    case Family::movielens_mod:
    case Family::movielens_sub: {
      const HKind kind = spec.family == Family::movielens_sub ? HKind::coverage : HKind::modular;
      auto main = std::make_unique<DagOracle>(*movielens_dag, kind, DagEvalMode::reordered);
      ctx.raw_dag_oracle = std::make_unique<DagOracle>(*movielens_dag, kind, DagEvalMode::raw);
      ctx.dag_oracle = main.get();
      ctx.oracle = std::move(main);
      break;
    }
  }
  ctx.algo_repeats = ctx.oracle->allows_repeats();
  return ctx;
}

void validate_spec(const ExperimentSpec& spec) {
  if (spec.instances < 0) throw ValidationError("instances must be >= 0");
  if (spec.algos.empty()) throw ValidationError("no algorithms selected");
  for (int k : spec.k_values) {
    if (k < 1) throw ValidationError("k must be >= 1");
  }
  for (int n : spec.n_values) {
    if (n < 1) throw ValidationError("n must be >= 1");
    if (spec.family == Family::searchtrack && n < 2) {
      throw ValidationError("searchtrack requires n >= 2");
    }
  }
  const bool dag_like = is_dag_family(spec.family);
  for (Algo a : spec.algos) {
    if (a == Algo::omega && !dag_like) {
      throw ValidationError("omega applies only to dag families");
    }
  }
  if ((spec.family == Family::movielens_mod || spec.family == Family::movielens_sub) &&
      spec.movielens_dag.empty()) {
    throw ValidationError("movielens families need --dag (serialized preference dag)");
  }
  if (spec.opt_method == "subset" && !dag_like) {
    throw ValidationError("opt method 'subset' applies only to dag families");
  }
  if (spec.opt_method == "timesort" && spec.family != Family::searchtrack) {
    throw ValidationError("opt method 'timesort' applies only to searchtrack");
  }
  if (spec.opt_method != "off" && spec.opt_method != "full" && spec.opt_method != "subset" &&
      spec.opt_method != "timesort") {
    throw ValidationError("unknown opt method: " + spec.opt_method);
  }
  if (spec.family == Family::dag_mod || spec.family == Family::dag_sub) {
    for (double d : spec.params) {
      if (d < 1 || d != std::floor(d)) throw ValidationError("dag families need integer d >= 1");
    }
  }
}

std::string trace_file_name(const ExperimentSpec& spec, const Cell& cell, int instance,
                            Algo algo) {
  std::ostringstream os;
  os << to_string(spec.family) << "_n" << cell.n << "_k" << cell.k << "_p"
     << format_double(cell.param, "%g") << "_i" << instance << "_" << to_string(algo) << ".csv";
  return os.str();
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentSpec& spec) {
  validate_spec(spec);
  ExperimentSummary summary;

  std::optional<PreferenceDag> movielens_dag;
  if (spec.family == Family::movielens_mod || spec.family == Family::movielens_sub) {
    std::ifstream in(spec.movielens_dag);
    if (!in) throw ValidationError("cannot open dag file: " + spec.movielens_dag);
    movielens_dag = load_dag(in);
  }

  std::vector<Cell> cells;
  for (int n : spec.n_values) {
    for (int k : spec.k_values) {
      for (double param : spec.params) {
        const int effective_n = movielens_dag ? movielens_dag->n() : n;
        cells.push_back(Cell{effective_n, k, param});
      }
    }
  }

  // Guard checks up front so a too-large enumeration fails fast.
  if (spec.opt_method != "off") {
    for (const Cell& cell : cells) {
      std::uint64_t candidates = 0;
      if (spec.opt_method == "full") {
        const bool repeats =
            spec.family == Family::tasks || spec.family == Family::infogain;
        candidates = count_sequences(cell.n, cell.k, repeats);
      } else {
        candidates = count_subsets(cell.n, cell.k);
      }
      if (candidates > spec.opt_guard) throw TooLarge(candidates, spec.opt_guard);
    }
  }

  TimesortValidation timesort_validation;
  if (spec.opt_method == "timesort") {
    timesort_validation = validate_subset_timesort(
        SeedDeriver(spec.base_seed).absorb(0x7153u).seed(), 200);
    summary.timesort_validated = timesort_validation.passed;
    summary.timesort_failure = timesort_validation.failure;
  }

  const int num_tasks = static_cast<int>(cells.size()) * spec.instances;
  std::vector<TaskOutput> outputs(static_cast<std::size_t>(std::max(num_tasks, 0)));

#pragma omp parallel for schedule(dynamic) if (spec.parallel)
  for (int task = 0; task < num_tasks; ++task) {
    const int cell_idx = task / spec.instances;
    const int instance = task % spec.instances;
    const Cell& cell = cells[static_cast<std::size_t>(cell_idx)];
    TaskOutput& out = outputs[static_cast<std::size_t>(task)];
    try {
      const std::uint64_t seed =
          derive_instance_seed(spec.base_seed, spec.family, cell.n, cell.k, cell.param, instance);
      InstanceContext ctx = make_instance(spec, cell, seed,
                                          movielens_dag ? &*movielens_dag : nullptr);

      double opt = kNaN;
      if (spec.opt_method == "full") {
        opt = opt_full(*ctx.oracle, cell.k, spec.opt_guard, ctx.full_policy, false).value;
      } else if (spec.opt_method == "subset") {
        opt = opt_subset_reorder(*ctx.dag_oracle, cell.k, spec.opt_guard, false).value;
      } else if (spec.opt_method == "timesort" && timesort_validation.passed) {
        opt = opt_subset_timesort(*ctx.st_inst, cell.k, timesort_validation, spec.opt_guard,
                                  false).value;
      }

      for (Algo algo : spec.algos) {
        RunRow row;
        row.cell = cell_idx;
        row.instance = instance;
        row.n = cell.n;
        row.k = cell.k;
        row.param = cell.param;
        row.instance_seed = seed;
        row.algo = algo;
        row.opt = opt;

        const ObjectiveOracle& oracle = *ctx.oracle;
        const std::uint64_t evals_before = oracle.eval_count() +
            (ctx.raw_dag_oracle ? ctx.raw_dag_oracle->eval_count() : 0);
        Sequence best;
        if (algo == Algo::gsemo || algo == Algo::gsemo_k) {
          GsemoConfig cfg;
          cfg.k = cell.k;
          cfg.variant = algo == Algo::gsemo ? GsemoVariant::standard : GsemoVariant::k_variant;
          cfg.iterations = budget_for(problem_class_of(spec.family), oracle.ground_size(),
                                      cell.k, cfg.variant);
          cfg.allow_repeats = ctx.algo_repeats;
          cfg.seed = SeedDeriver(seed).absorb(static_cast<std::uint64_t>(algo) + 101).seed();
          cfg.record_trace = spec.trace;
          cfg.check_invariants = spec.check_invariants;
          RunRecord record = gsemo(oracle, cfg);
          if (ctx.dag_oracle) {
            record.best = reorder(ctx.dag_oracle->dag(), std::vector<Item>(
                record.best.begin(), record.best.end()));
          }
          best = record.best;
          row.value = record.best_value;
          row.invariant_violations = record.invariant_violations;
          if (spec.trace) {
            std::ostringstream os;
            write_run_record_csv(record, os);
            out.trace_files.emplace_back(trace_file_name(spec, cell, instance, algo), os.str());
          }
        } else if (algo == Algo::greedy) {
          const ObjectiveOracle& greedy_oracle =
              ctx.raw_dag_oracle ? *ctx.raw_dag_oracle : oracle;
          best = greedy(greedy_oracle, cell.k, ctx.algo_repeats);
          row.value = greedy_oracle.evaluate(best);
        } else if (algo == Algo::ggreedy) {
          best = generalized_greedy(oracle, cell.k, ctx.algo_repeats);
          row.value = oracle.evaluate(best);
        } else {  // omega
          best = omega(*ctx.dag_oracle, cell.k);
          row.value = ctx.dag_oracle->evaluate(best);
        }
        row.evals = oracle.eval_count() +
            (ctx.raw_dag_oracle ? ctx.raw_dag_oracle->eval_count() : 0) - evals_before;
        row.ratio = std::isnan(opt) || opt <= 0 ? kNaN : row.value / opt;

        if (spec.assert_consistency) {
          const ObjectiveOracle& check_oracle =
              algo == Algo::greedy && ctx.raw_dag_oracle ? *ctx.raw_dag_oracle : oracle;
          const double again = check_oracle.evaluate(best);
          if (compare_values(again, row.value, 1e-12) != 0) {
            out.failures.push_back("value of reported sequence does not reproduce: " +
                                   std::string(to_string(algo)));
          }
          if (!std::isnan(opt) && compare_values(row.value, opt) > 0) {
            out.failures.push_back(std::string(to_string(algo)) + " exceeds OPT");
          }
        }
        out.rows.push_back(row);
      }
    } catch (const std::exception& e) {
      out.failures.push_back(std::string("cell ") + std::to_string(cell_idx) + " instance " +
                             std::to_string(instance) + ": " + e.what());
    }
  }

  for (TaskOutput& out : outputs) {
    summary.rows.insert(summary.rows.end(), out.rows.begin(), out.rows.end());
    summary.failures.insert(summary.failures.end(), out.failures.begin(), out.failures.end());
  }

  // Aggregates: means per (cell, algorithm); sign test on the gsemo rows
  // against the family baseline.
  const Algo baseline = baseline_of(spec.family);
  for (std::size_t cell_idx = 0; cell_idx < cells.size(); ++cell_idx) {
    const Cell& cell = cells[cell_idx];
    for (Algo algo : spec.algos) {
      CellAggregate agg;
      agg.n = cell.n;
      agg.k = cell.k;
      agg.param = cell.param;
      agg.algo = algo;
      double value_sum = 0;
      double ratio_sum = 0;
      int count = 0;
      int ratio_count = 0;
      for (const RunRow& row : summary.rows) {
        if (row.cell != static_cast<int>(cell_idx) || row.algo != algo) continue;
        value_sum += row.value;
        ++count;
        if (!std::isnan(row.ratio)) {
          ratio_sum += row.ratio;
          ++ratio_count;
        }
      }
      agg.mean_value = count ? value_sum / count : kNaN;
      agg.mean_ratio = ratio_count == count && count ? ratio_sum / count : kNaN;
      if (algo == Algo::gsemo &&
          std::find(spec.algos.begin(), spec.algos.end(), baseline) != spec.algos.end() &&
          baseline != Algo::gsemo) {
        int wins = 0, ties = 0, losses = 0;
        for (int instance = 0; instance < spec.instances; ++instance) {
          double mine = kNaN, theirs = kNaN;
          for (const RunRow& row : summary.rows) {
            if (row.cell != static_cast<int>(cell_idx) || row.instance != instance) continue;
            if (row.algo == Algo::gsemo) mine = row.value;
            if (row.algo == baseline) theirs = row.value;
          }
          if (std::isnan(mine) || std::isnan(theirs)) continue;
          const int cmp = compare_values(mine, theirs);
          if (cmp > 0) ++wins;
          else if (cmp < 0) ++losses;
          else ++ties;
        }
        agg.has_sign_test = true;
        agg.sign = sign_test(wins, ties, losses);
      }
      summary.aggregates.push_back(agg);
    }
  }

  if (!spec.out_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(spec.out_dir);
    char stamp[64];
    const std::time_t now = std::time(nullptr);
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));

    std::ofstream runs(fs::path(spec.out_dir) / "runs.csv");
    runs << "# seqsub run family=" << to_string(spec.family) << " generated=" << stamp << '\n';
    runs << "family,n,k,param,instance_seed,algorithm,value,evals,opt,ratio\n";
    for (const RunRow& row : summary.rows) {
      runs << to_string(spec.family) << ',' << row.n << ',' << row.k << ','
           << format_double(row.param, "%g") << ',' << row.instance_seed << ','
           << to_string(row.algo) << ',' << format_double(row.value) << ',' << row.evals << ','
           << format_double(row.opt) << ',' << format_double(row.ratio) << '\n';
    }

    std::ofstream agg(fs::path(spec.out_dir) / "aggregate.csv");
    agg << "# seqsub aggregate family=" << to_string(spec.family) << " generated=" << stamp
        << '\n';
    agg << "family,n,k,param,algorithm,mean_value,mean_ratio,wins,ties,losses,p_value,"
           "significant\n";
    for (const CellAggregate& a : summary.aggregates) {
      agg << to_string(spec.family) << ',' << a.n << ',' << a.k << ','
          << format_double(a.param, "%g") << ',' << to_string(a.algo) << ','
          << format_double(a.mean_value) << ',' << format_double(a.mean_ratio) << ',';
      if (a.has_sign_test) {
        agg << a.sign.wins << ',' << a.sign.ties << ',' << a.sign.losses << ','
            << format_double(a.sign.p_value) << ',' << (a.sign.significant_at_05 ? 1 : 0);
      } else {
        agg << ",,,,";
      }
      agg << '\n';
    }

    bool any_trace = false;
    for (const TaskOutput& out : outputs) any_trace |= !out.trace_files.empty();
    if (any_trace) {
      fs::create_directories(fs::path(spec.out_dir) / "traces");
      for (const TaskOutput& out : outputs) {
        for (const auto& [name, content] : out.trace_files) {
          std::ofstream tf(fs::path(spec.out_dir) / "traces" / name);
          tf << content;
        }
      }
    }
    if (!summary.failures.empty()) {
      std::ofstream fail(fs::path(spec.out_dir) / "failures.csv");
      fail << "message\n";
      for (const std::string& f : summary.failures) {
        std::string clean = f;
        std::replace(clean.begin(), clean.end(), ',', ';');
        std::replace(clean.begin(), clean.end(), '\n', ' ');
        fail << clean << '\n';
      }
    }
  }
  return summary;
}

}  // namespace seqsub
