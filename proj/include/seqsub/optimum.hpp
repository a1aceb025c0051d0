#pragma once

#include <cstdint>
#include <string>

#include "seqsub/dag.hpp"
#include "seqsub/objectives.hpp"
#include "seqsub/oracle.hpp"
#include "seqsub/sequence.hpp"

namespace seqsub {

enum class OptMethod { full_sequence, subset_reorder, subset_timesort };

struct OptResult {
  double value = 0;
  Sequence witness;
  std::uint64_t enumerated = 0;
  OptMethod method = OptMethod::full_sequence;
};

enum class RepeatPolicy { follow_oracle, with_repeats, without_repeats };

inline constexpr std::uint64_t kDefaultOptGuard = 10'000'000;

// Exhaustive maximum of f over all sequences of length <= k, enumerated in
// lexicographic order (ties go to the lexicographically smallest sequence).
// Throws TooLarge when the candidate count exceeds the guard. The parallel
// path partitions by leading item and reproduces the serial result exactly.
OptResult opt_full(const ObjectiveOracle& oracle, int k, std::uint64_t guard = kDefaultOptGuard,
                   RepeatPolicy policy = RepeatPolicy::follow_oracle, bool parallel = true);

// Exact maximum for DAG objectives via item subsets of size <= k, each
// evaluated at its optimal (topological) order. Equals opt_full in reordered
// mode.
OptResult opt_subset_reorder(const DagOracle& oracle, int k,
                             std::uint64_t guard = kDefaultOptGuard, bool parallel = true);

// Certificate that the time-sorted-subset fast path agreed with opt_full on a
// randomized suite of tiny search-and-tracking instances.
struct TimesortValidation {
  bool passed = false;
  int trials = 0;
  std::string failure;  // first failing instance, serialized; empty when passed
};

// Cross-check suite: random instances with <= 4 patterns, <= 3 paths and
// k <= 3, comparing the fast path against no-repeat exhaustive enumeration.
TimesortValidation validate_subset_timesort(std::uint64_t seed, int trials = 200);

// Maximum of f over pattern subsets of size <= k, each executed in increasing
// time-stamp order. Refuses to run (OracleUnvalidated) unless the cross-check
// suite passed.
OptResult opt_subset_timesort(const SearchTrackInstance& inst, int k,
                              const TimesortValidation& validation,
                              std::uint64_t guard = kDefaultOptGuard, bool parallel = true);

// Candidate counts used for the guards, saturated at 2^63.
std::uint64_t count_sequences(int n, int k, bool with_repeats);
std::uint64_t count_subsets(int n, int k);

}  // namespace seqsub
