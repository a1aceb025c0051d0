#include "seqsub/optimum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "seqsub/errors.hpp"
#include "seqsub/rng.hpp"

namespace seqsub {

namespace {

constexpr std::uint64_t kCountCap = std::uint64_t{1} << 63;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kCountCap / b) return kCountCap;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kCountCap - b ? kCountCap : a + b;
}

struct Best {
  bool have = false;
  double value = 0;
  Sequence seq;

  // Strict improvement only, so the first candidate in enumeration order wins
  // ties; merging subtree results in enumeration order reproduces the serial
  // scan.
  void consider(double f, const Sequence& s) {
    if (!have || f > value) {
      have = true;
      value = f;
      seq = s;
    }
  }

  void merge(const Best& other) {
    if (other.have) consider(other.value, other.seq);
  }
};

void dfs_full(const ObjectiveOracle& oracle, int k, bool with_repeats, Sequence& cur,
              std::vector<char>& used, Best& best, std::uint64_t& enumerated) {
  ++enumerated;
  best.consider(oracle.evaluate(cur), cur);
  if (cur.length() == k) return;
  for (Item v = 0; v < oracle.ground_size(); ++v) {
    if (!with_repeats && used[static_cast<std::size_t>(v)]) continue;
    cur.push_back(v);
    if (!with_repeats) used[static_cast<std::size_t>(v)] = 1;
    dfs_full(oracle, k, with_repeats, cur, used, best, enumerated);
    cur.erase_at(cur.length() - 1);
    if (!with_repeats) used[static_cast<std::size_t>(v)] = 0;
  }
}

}  // namespace

std::uint64_t count_sequences(int n, int k, bool with_repeats) {
  std::uint64_t total = 1;  // empty sequence
  std::uint64_t level = 1;
  for (int l = 1; l <= k; ++l) {
    const std::uint64_t choices =
        with_repeats ? static_cast<std::uint64_t>(n)
                     : static_cast<std::uint64_t>(std::max(0, n - (l - 1)));
    level = sat_mul(level, choices);
    total = sat_add(total, level);
  }
  return total;
}

std::uint64_t count_subsets(int n, int k) {
  std::uint64_t total = 0;
  std::uint64_t choose = 1;  // C(n, 0)
  for (int j = 0; j <= std::min(n, k); ++j) {
    total = sat_add(total, choose);
    choose = sat_mul(choose, static_cast<std::uint64_t>(n - j)) / static_cast<std::uint64_t>(j + 1);
  }
  return total;
}

OptResult opt_full(const ObjectiveOracle& oracle, int k, std::uint64_t guard, RepeatPolicy policy,
                   bool parallel) {
  const bool with_repeats =
      policy == RepeatPolicy::follow_oracle ? oracle.allows_repeats()
                                            : policy == RepeatPolicy::with_repeats;
  const int n = oracle.ground_size();
  const std::uint64_t candidates = count_sequences(n, k, with_repeats);
  if (candidates > guard) throw TooLarge(candidates, guard);

  OptResult result;
  result.method = OptMethod::full_sequence;
  Best best;
  {
    Sequence empty;
    best.consider(oracle.evaluate(empty), empty);
    result.enumerated = 1;
  }
  if (k == 0) {
    result.value = best.value;
    result.witness = best.seq;
    return result;
  }

  std::vector<Best> bests(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (Item v = 0; v < n; ++v) {
    Sequence cur;
    cur.push_back(v);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[static_cast<std::size_t>(v)] = 1;
    dfs_full(oracle, k, with_repeats, cur, used, bests[static_cast<std::size_t>(v)],
             counts[static_cast<std::size_t>(v)]);
  }
  for (Item v = 0; v < n; ++v) {
    best.merge(bests[static_cast<std::size_t>(v)]);
    result.enumerated += counts[static_cast<std::size_t>(v)];
  }
  result.value = best.value;
  result.witness = best.seq;
  return result;
}

namespace {

void dfs_subsets(const DagOracle& oracle, int k, Item from, std::vector<Item>& cur, Best& best,
                 std::uint64_t& enumerated) {
  ++enumerated;
  const Sequence ordered = reorder(oracle.dag(), cur);
  best.consider(oracle.evaluate(ordered), ordered);
  if (static_cast<int>(cur.size()) == k) return;
  for (Item v = from; v < oracle.ground_size(); ++v) {
    cur.push_back(v);
    dfs_subsets(oracle, k, v + 1, cur, best, enumerated);
    cur.pop_back();
  }
}

}  // namespace

OptResult opt_subset_reorder(const DagOracle& oracle, int k, std::uint64_t guard, bool parallel) {
  const int n = oracle.ground_size();
  const std::uint64_t candidates = count_subsets(n, k);
  if (candidates > guard) throw TooLarge(candidates, guard);

  OptResult result;
  result.method = OptMethod::subset_reorder;
  Best best;
  {
    Sequence empty;
    best.consider(oracle.evaluate(empty), empty);
    result.enumerated = 1;
  }
  if (k == 0) {
    result.value = best.value;
    result.witness = best.seq;
    return result;
  }
  std::vector<Best> bests(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (Item v = 0; v < n; ++v) {
    std::vector<Item> cur{v};
    dfs_subsets(oracle, k, v + 1, cur, bests[static_cast<std::size_t>(v)],
                counts[static_cast<std::size_t>(v)]);
  }
  for (Item v = 0; v < n; ++v) {
    best.merge(bests[static_cast<std::size_t>(v)]);
    result.enumerated += counts[static_cast<std::size_t>(v)];
  }
  result.value = best.value;
  result.witness = best.seq;
  return result;
}

namespace {

// DFS over pattern subsets taken in increasing time-stamp order; the running
// f value and per-path survival probabilities extend incrementally.
struct TimesortState {
  const SearchTrackInstance* inst;
  const std::vector<int>* by_time;  // pattern indices sorted by (time, index)
  int k;
};

void dfs_timesort(const TimesortState& st, int from, std::vector<Item>& chosen,
                  std::vector<double>& survive, double p_prev, double f, Best& best,
                  std::uint64_t& enumerated) {
  ++enumerated;
  best.consider(f, Sequence(chosen));
  if (static_cast<int>(chosen.size()) == st.k) return;
  const int total = static_cast<int>(st.by_time->size());
  for (int idx = from; idx < total; ++idx) {
    const int pattern = (*st.by_time)[static_cast<std::size_t>(idx)];
    const SearchTrackPattern& pat = st.inst->patterns[static_cast<std::size_t>(pattern)];
    std::vector<double> next_survive = survive;
    for (int g = 0; g < st.inst->num_paths; ++g) {
      if (pat.covers[static_cast<std::size_t>(g)]) {
        next_survive[static_cast<std::size_t>(g)] *= 1.0 - pat.detect_prob;
      }
    }
    double p_cur = 0;
    for (double q : next_survive) p_cur += q;
    p_cur /= st.inst->num_paths;
    const double f_next = f + (st.inst->penalty - pat.time_stamp) * (p_prev - p_cur);
    chosen.push_back(static_cast<Item>(pattern));
    dfs_timesort(st, idx + 1, chosen, next_survive, p_cur, f_next, best, enumerated);
    chosen.pop_back();
  }
}

OptResult timesort_unchecked(const SearchTrackInstance& inst, int k, std::uint64_t guard,
                             bool parallel) {
  const int n = static_cast<int>(inst.patterns.size());
  const std::uint64_t candidates = count_subsets(n, k);
  if (candidates > guard) throw TooLarge(candidates, guard);

  std::vector<int> by_time(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) by_time[static_cast<std::size_t>(i)] = i;
  std::sort(by_time.begin(), by_time.end(), [&inst](int a, int b) {
    const double ta = inst.patterns[static_cast<std::size_t>(a)].time_stamp;
    const double tb = inst.patterns[static_cast<std::size_t>(b)].time_stamp;
    if (ta != tb) return ta < tb;
    return a < b;
  });
  const TimesortState st{&inst, &by_time, k};

  OptResult result;
  result.method = OptMethod::subset_timesort;
  Best best;
  best.consider(0.0, Sequence{});
  result.enumerated = 1;
  if (k == 0) {
    result.value = 0;
    return result;
  }

  std::vector<Best> bests(static_cast<std::size_t>(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int first = 0; first < n; ++first) {
    const int pattern = by_time[static_cast<std::size_t>(first)];
    const SearchTrackPattern& pat = inst.patterns[static_cast<std::size_t>(pattern)];
    std::vector<double> survive(static_cast<std::size_t>(inst.num_paths), 1.0);
    for (int g = 0; g < inst.num_paths; ++g) {
      if (pat.covers[static_cast<std::size_t>(g)]) survive[static_cast<std::size_t>(g)] = 1.0 - pat.detect_prob;
    }
    double p_cur = 0;
    for (double q : survive) p_cur += q;
    p_cur /= inst.num_paths;
    const double f = (inst.penalty - pat.time_stamp) * (1.0 - p_cur);
    std::vector<Item> chosen{static_cast<Item>(pattern)};
    dfs_timesort(st, first + 1, chosen, survive, p_cur, f, bests[static_cast<std::size_t>(first)],
                 counts[static_cast<std::size_t>(first)]);
  }
  for (int first = 0; first < n; ++first) {
    best.merge(bests[static_cast<std::size_t>(first)]);
    result.enumerated += counts[static_cast<std::size_t>(first)];
  }
  result.value = best.value;
  result.witness = best.seq;
  return result;
}

}  // namespace

TimesortValidation validate_subset_timesort(std::uint64_t seed, int trials) {
  TimesortValidation validation;
  validation.trials = trials;
  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    SearchTrackInstance inst;
    const int patterns = 1 + static_cast<int>(rng.uniform_int(4));
    inst.num_paths = 1 + static_cast<int>(rng.uniform_int(3));
    const int k = 1 + static_cast<int>(rng.uniform_int(3));
    double t = 0;
    for (int i = 0; i < patterns; ++i) {
      SearchTrackPattern pat;
      t += 1.0 + rng.uniform(0.0, 4.0);
      pat.time_stamp = t;
      pat.detect_prob = rng.uniform(0.001, 0.999);
      pat.covers.resize(static_cast<std::size_t>(inst.num_paths));
      for (auto& c : pat.covers) c = rng.uniform() < 0.5 ? 1 : 0;
      inst.patterns.push_back(std::move(pat));
    }
    inst.penalty = t + (rng.uniform() < 0.5 ? 0.0 : rng.uniform(0.0, 5.0));

    SearchTrackOracle oracle(inst);
    const OptResult full =
        opt_full(oracle, k, kDefaultOptGuard, RepeatPolicy::without_repeats, false);
    const OptResult fast = timesort_unchecked(inst, k, kDefaultOptGuard, false);
    const double scale = std::max({1.0, std::fabs(full.value), std::fabs(fast.value)});
    if (std::fabs(full.value - fast.value) > 1e-9 * scale) {
      std::ostringstream os;
      os << "trial " << trial << ": full=" << full.value << " witness=" << to_string(full.witness)
         << " timesort=" << fast.value << " witness=" << to_string(fast.witness) << "\n";
      save_instance(inst, os);
      validation.failure = os.str();
      return validation;
    }
  }
  validation.passed = true;
  return validation;
}

OptResult opt_subset_timesort(const SearchTrackInstance& inst, int k,
                              const TimesortValidation& validation, std::uint64_t guard,
                              bool parallel) {
  if (!validation.passed) {
    throw OracleUnvalidated("subset_timesort used before its cross-check suite passed");
  }
  return timesort_unchecked(inst, k, guard, parallel);
}

}  // namespace seqsub
