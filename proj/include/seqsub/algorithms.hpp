#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "seqsub/dag.hpp"
#include "seqsub/oracle.hpp"
#include "seqsub/rng.hpp"
#include "seqsub/sequence.hpp"

namespace seqsub {

// (f1, f2) in the bi-objective reformulation: f1 is f(s), or a sentinel below
// every real once the length cap is reached; f2 = -|s|. The sentinel never
// enters arithmetic.
struct BiValue {
  double f1 = 0;
  int f2 = 0;
  bool neg_inf = false;
};

enum class Domination { a_strict, b_strict, equal, incomparable };

Domination dominate_relation(const BiValue& a, const BiValue& b);

// Mutually incomparable archive of (sequence, bi-value) pairs; at most one
// member per length, so its size never exceeds the length cap.
class ParetoArchive {
 public:
  struct Entry {
    Sequence seq;
    BiValue value;
  };

  // Inserts the offspring unless some member strictly dominates it, removing
  // every member it weakly dominates (an equal member is replaced). Returns
  // whether the offspring was added.
  bool offer(Sequence seq, const BiValue& value);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
};

struct MutationStats {
  std::uint64_t calls = 0;
  std::uint64_t r_counts[21] = {};  // draws of the Poisson op count, capped at 20
  std::uint64_t insertions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t empty_deletion_noops = 0;
  std::uint64_t full_insertion_noops = 0;
};

// Poisson(1)-many uniform insertions/deletions. Insertion draws the item from
// the whole ground set, or from the unused items when repeats are forbidden
// (a no-op at full length); deletion on the empty sequence is a no-op.
Sequence mutate(const Sequence& s, int ground_size, bool allow_repeats, Rng& rng,
                MutationStats* stats = nullptr);

enum class GsemoVariant {
  standard,   // f1 sentinel from length 2k; archive size <= 2k
  k_variant,  // f1 sentinel from length k+1; archive size <= k+1
};

struct GsemoConfig {
  int k = 1;
  std::uint64_t iterations = 0;
  GsemoVariant variant = GsemoVariant::standard;
  bool allow_repeats = true;
  std::uint64_t seed = 1;
  bool record_trace = false;
  int trace_stride = 0;  // evaluations between checkpoints; 0 means k * n
  bool check_invariants = false;
};

struct TracePoint {
  std::uint64_t evals = 0;
  double best_f = 0;
};

struct RunRecord {
  Sequence best;
  double best_value = 0;
  std::uint64_t evaluations_used = 0;
  std::uint64_t iterations = 0;
  std::vector<TracePoint> trace;
  std::uint64_t invariant_violations = 0;  // populated when check_invariants is set
};

// GSEMO over the bi-objective reformulation: start from the empty sequence,
// mutate a uniformly drawn parent, keep the offspring unless strictly
// dominated. Returns the best archive member of length <= k. Deterministic
// given the seed.
RunRecord gsemo(const ObjectiveOracle& oracle, const GsemoConfig& config);

// Appends the best item k times; ties to the lowest item index.
Sequence greedy(const ObjectiveOracle& oracle, int k, bool allow_repeats);

// Inserts the best (position, item) k times; ties to the lowest position,
// then the lowest item index.
Sequence generalized_greedy(const ObjectiveOracle& oracle, int k, bool allow_repeats);

// Edge greedy for DAG objectives: grows an edge set while some edge keeps the
// covered-item count within k, maximizing f of the reordered covered items;
// ties to the lexicographically smallest edge.
Sequence omega(const DagOracle& oracle, int k);

enum class ProblemClass { prefix_monotone, weakly_monotone, dag };

// Theorem-derived iteration budgets, rounded up:
//   standard  — 2ek^2(k+1)n for the first two classes, 4ek^2n^2 for dag;
//   k_variant — ek(k+1)^2n  for the first two classes, 2ek(k+1)n^2 for dag.
std::uint64_t budget_for(ProblemClass problem_class, int n, int k, GsemoVariant variant);

// CSV rows `eval_count,best_f`, then a footer with the best sequence as
// space-separated item indices.
void write_run_record_csv(const RunRecord& record, std::ostream& os);

}  // namespace seqsub
