#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "seqsub/oracle.hpp"
#include "seqsub/sequence.hpp"

namespace seqsub {

// Accomplishing tasks: f(s) = (1/m) sum_i (1 - prod_j (1 - p_i^j(s_j))),
// where p_i^j(a) is the probability that action a performed at stage j
// accomplishes task i. Only sequences up to `stages` items are evaluable.
struct TaskInstance {
  int m = 0;       // tasks
  int n = 0;       // actions
  int stages = 0;  // maximum evaluable stage count
  // Stage-major layout: p[(j * n + a) * m + i] = p_i^{j+1}(a); keeps the
  // per-(stage, action) task slice contiguous for the evaluation loop.
  std::vector<double> p;

  std::size_t index(int task, int stage, int action) const {
    return (static_cast<std::size_t>(stage) * n + action) * m + task;
  }
  double prob(int task, int stage, int action) const { return p[index(task, stage, action)]; }
};

double eval_tasks(const TaskInstance& inst, const Sequence& s);

// Information gain for Bayesian estimation with diagonal 2x2 measurements:
// f(s) = (log det P0 - log det P_l) / 2 in closed diagonal form. Natural log.
struct InfoGainInstance {
  int n = 0;
  int d = 2;
  std::vector<double> entries;     // per candidate, d diagonal entries of A^T A: (a, 1-a)
  std::vector<double> prior_diag;  // d positive prior covariance entries
  std::vector<double> sigma2;      // noise variance per stage, sigma2[i-1] for stage i

  double entry(int candidate, int dim) const {
    return entries[static_cast<std::size_t>(candidate) * d + dim];
  }
};

double eval_infogain(const InfoGainInstance& inst, const Sequence& s);

// Search-and-tracking: expected reward K - E[first detection time] for a
// sequence of search patterns, each covering a path subset with a detection
// probability and a fixed time stamp.
struct SearchTrackPattern {
  std::vector<std::uint8_t> covers;  // covers[path] = 1 if the path is in Gamma_sigma
  double time_stamp = 0;
  double detect_prob = 0;
};

struct SearchTrackInstance {
  int num_paths = 0;
  std::vector<SearchTrackPattern> patterns;
  double penalty = 0;  // K >= max time stamp
};

double eval_searchtrack(const SearchTrackInstance& inst, const Sequence& s);

// Recommender systems: a user picks a topic uniformly, scans the sequence and
// selects movie i with probability p_i(t) after rejecting all earlier ones;
// f is the expected satisfaction of the selected movie.
struct RecommenderInstance {
  int n = 0;
  int num_topics = 0;
  std::vector<double> satisfaction;  // g, per movie, in [0, 1)
  std::vector<double> coverage;      // p[movie * num_topics + topic], in [0, 1)

  double cover(int movie, int topic) const {
    return coverage[static_cast<std::size_t>(movie) * num_topics + topic];
  }
};

double eval_recommender(const RecommenderInstance& inst, const Sequence& s);

class TasksOracle final : public ObjectiveOracle {
 public:
  explicit TasksOracle(TaskInstance inst)
      : ObjectiveOracle(inst.n, /*allows_repeats=*/true), inst_(std::move(inst)) {}
  const TaskInstance& instance() const { return inst_; }

 protected:
  double eval_impl(const Sequence& s) const override { return eval_tasks(inst_, s); }

 private:
  TaskInstance inst_;
};

class InfoGainOracle final : public ObjectiveOracle {
 public:
  explicit InfoGainOracle(InfoGainInstance inst)
      : ObjectiveOracle(inst.n, /*allows_repeats=*/true), inst_(std::move(inst)) {}
  const InfoGainInstance& instance() const { return inst_; }

 protected:
  double eval_impl(const Sequence& s) const override { return eval_infogain(inst_, s); }

 private:
  InfoGainInstance inst_;
};

// The benchmark space is sequences of distinct patterns: a UAV flies each
// selected pattern once, in some order. The formula itself evaluates repeat
// sequences (as independent detection chances), and optimizers probe
// arbitrary orders; the weakly-monotone/strongly-submodular structure holds
// on the time-consistent orders, which is what in_check_space describes.
// (Inserting a pattern out of time order can carry a negative marginal whose
// magnitude shrinks as the context grows, which defeats both properties on
// the unconstrained space.)
class SearchTrackOracle final : public ObjectiveOracle {
 public:
  explicit SearchTrackOracle(SearchTrackInstance inst)
      : ObjectiveOracle(static_cast<int>(inst.patterns.size()), /*allows_repeats=*/false),
        inst_(std::move(inst)) {}
  const SearchTrackInstance& instance() const { return inst_; }

  bool in_check_space(const Sequence& s) const override {
    if (has_repeats(s)) return false;
    for (int i = 0; i + 1 < s.length(); ++i) {
      const auto& a = inst_.patterns[static_cast<std::size_t>(s[i])];
      const auto& b = inst_.patterns[static_cast<std::size_t>(s[i + 1])];
      if (a.time_stamp > b.time_stamp ||
          (a.time_stamp == b.time_stamp && s[i] > s[i + 1])) {
        return false;
      }
    }
    return true;
  }

 protected:
  double eval_impl(const Sequence& s) const override { return eval_searchtrack(inst_, s); }

 private:
  SearchTrackInstance inst_;
};

// Sequences of distinct movies. The class structure lives on the orders that
// never place a worse movie ahead of a better one, i.e. nonincreasing
// satisfaction; see SearchTrackOracle for the analogous reasoning.
class RecommenderOracle final : public ObjectiveOracle {
 public:
  explicit RecommenderOracle(RecommenderInstance inst)
      : ObjectiveOracle(inst.n, /*allows_repeats=*/false), inst_(std::move(inst)) {}
  const RecommenderInstance& instance() const { return inst_; }

  bool in_check_space(const Sequence& s) const override {
    if (has_repeats(s)) return false;
    for (int i = 0; i + 1 < s.length(); ++i) {
      const double ga = inst_.satisfaction[static_cast<std::size_t>(s[i])];
      const double gb = inst_.satisfaction[static_cast<std::size_t>(s[i + 1])];
      if (ga < gb || (ga == gb && s[i] > s[i + 1])) return false;
    }
    return true;
  }

 protected:
  double eval_impl(const Sequence& s) const override { return eval_recommender(inst_, s); }

 private:
  RecommenderInstance inst_;
};

// Self-describing text serialization; values round-trip bit-identically.
void save_instance(const TaskInstance& inst, std::ostream& os);
void save_instance(const InfoGainInstance& inst, std::ostream& os);
void save_instance(const SearchTrackInstance& inst, std::ostream& os);
void save_instance(const RecommenderInstance& inst, std::ostream& os);

TaskInstance load_task_instance(std::istream& is);
InfoGainInstance load_infogain_instance(std::istream& is);
SearchTrackInstance load_searchtrack_instance(std::istream& is);
RecommenderInstance load_recommender_instance(std::istream& is);

}  // namespace seqsub
