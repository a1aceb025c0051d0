#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqsub/algorithms.hpp"
#include "seqsub/dag.hpp"
#include "seqsub/objectives.hpp"
#include "seqsub/optimum.hpp"

namespace seqsub {

enum class Family {
  tasks,
  infogain,
  searchtrack,
  recommender,
  dag_mod,
  dag_sub,
  movielens_mod,
  movielens_sub,
};

enum class Algo { gsemo, gsemo_k, greedy, ggreedy, omega };

const char* to_string(Family family);
const char* to_string(Algo algo);
Family family_from_string(const std::string& name);
Algo algo_from_string(const std::string& name);

// Problem class of a family, for the theorem budgets.
ProblemClass problem_class_of(Family family);

// m tasks, n actions, 2k evaluable stages. Per (task, action) success
// probabilities are drawn uniformly from [0, 0.2] and shared across stages;
// per-stage resampling would break the prefix submodularity this family is
// benchmarked under.
TaskInstance gen_tasks(int n, int k, int m, std::uint64_t seed);

// 1000 diagonal unit-Frobenius candidates a in {1/1000, ..., 1} sorted by
// decreasing |sqrt(a) - sqrt(1-a)| (ties toward larger a), first n kept;
// positive prior diagonal entries from [0, 1); sigma_i uniform in [i-1, i)
// for stages i = 1..2k, so the noise level never decreases.
InfoGainInstance gen_infogain(int n, int k, std::uint64_t seed);

// Detection probability min{max{m*i/(n-1) + 1/2 - m/2, 0.001}, 0.999} with
// i = 0..n-1; each path joins a pattern's subset independently with
// probability 1/2; time stamps cumulative with fresh r uniform in (0, n);
// penalty K = max stamp.
SearchTrackInstance gen_searchtrack(int n, int k, int num_paths, double m_slope,
                                    std::uint64_t seed);

// Satisfaction and per-topic coverage entries uniform in [0, 1).
RecommenderInstance gen_recommender(int n, int num_topics, std::uint64_t seed);

struct SignTestResult {
  int wins = 0;
  int ties = 0;
  int losses = 0;
  double p_value = 1.0;
  bool significant_at_05 = false;
};

// Two-sided exact binomial sign test at 1/2 with ties discarded:
// p = min(1, 2 P[X <= min(wins, losses)]), X ~ Binomial(wins + losses, 1/2).
SignTestResult sign_test(int wins, int ties, int losses);

struct ExperimentSpec {
  Family family = Family::tasks;
  std::vector<int> n_values{500};
  std::vector<int> k_values{20};
  std::vector<double> params{0};  // d for dag families, m-slope for searchtrack
  int topics = 50;
  int tasks_m = 50;
  int num_paths = 0;  // searchtrack; 0 means 2n
  int instances = 50;
  std::vector<Algo> algos{Algo::gsemo, Algo::greedy};
  std::uint64_t base_seed = 1;
  std::string opt_method = "off";  // off | full | subset | timesort
  std::uint64_t opt_guard = kDefaultOptGuard;
  std::string out_dir;  // empty: no files written
  bool trace = false;
  bool parallel = true;
  bool check_invariants = false;
  bool assert_consistency = false;  // re-evaluate best sequences, check value <= OPT
  std::string movielens_dag;        // serialized dag file for the movielens families
};

struct RunRow {
  int cell = 0;
  int instance = 0;
  int n = 0;
  int k = 0;
  double param = 0;
  std::uint64_t instance_seed = 0;
  Algo algo = Algo::gsemo;
  double value = 0;
  std::uint64_t evals = 0;
  double opt = 0;  // NaN when unavailable
  double ratio = 0;
  std::uint64_t invariant_violations = 0;
};

struct CellAggregate {
  int n = 0;
  int k = 0;
  double param = 0;
  Algo algo = Algo::gsemo;
  double mean_value = 0;
  double mean_ratio = 0;  // NaN when no OPT
  bool has_sign_test = false;
  SignTestResult sign;
};

struct ExperimentSummary {
  std::vector<RunRow> rows;
  std::vector<CellAggregate> aggregates;
  std::vector<std::string> failures;
  bool timesort_validated = true;  // meaningful when opt_method == "timesort"
  std::string timesort_failure;
};

// Runs the full grid: per (cell, instance), generate the instance from its
// derived seed, run every algorithm at the theorem budget, optionally compute
// OPT, then aggregate means, win/tie/loss against the family baseline and
// sign-test verdicts. Rows are produced in a fixed order regardless of the
// worker count; with out_dir set, writes runs.csv, aggregate.csv, traces/ and
// (on errors) failures.csv.
ExperimentSummary run_experiment(const ExperimentSpec& spec);

// Win/tie/loss comparison tolerance shared with the checkers.
int compare_values(double a, double b, double tolerance = 1e-9);

// Baseline algorithm the sign test pits gsemo against.
Algo baseline_of(Family family);

std::uint64_t derive_instance_seed(std::uint64_t base_seed, Family family, int n, int k,
                                   double param, int instance);

}  // namespace seqsub
