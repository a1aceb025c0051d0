#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqsub/oracle.hpp"
#include "seqsub/sequence.hpp"

namespace seqsub {

enum class MonotonicityKind { subsequence, prefix, suffix, weak };
enum class SubmodularityKind { strong, subsequence, prefix };

const char* to_string(MonotonicityKind kind);
const char* to_string(SubmodularityKind kind);

struct CheckOptions {
  int max_len = 3;
  std::uint64_t eval_budget = 1'000'000;
  double tolerance = 1e-9;
  bool parallel = true;
};

// A counterexample to a defining inequality. seqs holds, in order:
//   monotonicity kinds: {s, t};  weak: {s, t} (no admissible w beats f(s));
//   prefix/subsequence submodularity: {s, t};  strong: {s, t, o}.
// item is the inserted item v for submodularity kinds. lhs is the side the
// inequality requires to be >= rhs.
struct PropertyWitness {
  std::vector<Sequence> seqs;
  std::optional<Item> item;
  double lhs = 0;
  double rhs = 0;
};

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<PropertyWitness> witness;
  int max_len = 0;
  int ground_size = 0;
  std::uint64_t evals_used = 0;
  std::uint64_t combinations_checked = 0;
  // Combinations whose composite sequences fall outside a no-repeat oracle's
  // sequence space, plus weak-monotonicity pairs with no admissible
  // supersequence at all. Reported so a vacuous pass is auditable.
  std::uint64_t combinations_skipped = 0;
};

// Inequality test with relative slack: lhs >= rhs fails only if it is off by
// more than tolerance at the scale of the values involved.
inline bool violates_geq(double lhs, double rhs, double tolerance, double scale) {
  return lhs < rhs - tolerance * std::max(1.0, scale);
}

// Exhaustive test of a monotonicity notion over all sequences up to
// options.max_len (weak monotonicity searches supersequences up to twice
// that). Throws BudgetExceeded if the required evaluations exceed the budget.
PropertyReport check_monotonicity(const ObjectiveOracle& oracle, MonotonicityKind kind,
                                  const CheckOptions& options = {});

// Exhaustive test of a submodularity notion; strong submodularity enumerates
// the extra suffix o up to options.max_len as well.
PropertyReport check_submodularity(const ObjectiveOracle& oracle, SubmodularityKind kind,
                                   const CheckOptions& options = {});

// Curvature of f w.r.t. s over probe sequences t with 0 < |t| <= m:
//   max_t 1 - (f(t + s) - f(s)) / f(t).
// Requires m >= 1 and a nonempty s; throws DegenerateInstance when some
// enumerated t has f(t) = 0.
double curvature(const ObjectiveOracle& oracle, const Sequence& s, int m,
                 const CheckOptions& options = {});

// All interleavings of s and t that contain both as subsequences, with equal
// items optionally merged where they align; lengths range from
// max(|s|, |t|) to |s| + |t|. Deduplicated, deterministic order.
std::vector<Sequence> weak_candidates(const Sequence& s, const Sequence& t);

// Enumeration of every sequence over items [0, n) with length <= max_len,
// ordered by length then lexicographically, with dense ranks.
class SequenceSpace {
 public:
  SequenceSpace(int n, int max_len, bool allow_repeats);

  std::uint64_t size() const { return offset_.back(); }
  int ground_size() const { return n_; }
  int max_len() const { return max_len_; }
  bool allow_repeats() const { return allow_repeats_; }

  Sequence unrank(std::uint64_t idx) const;
  std::uint64_t rank(const Sequence& s) const;
  bool contains(const Sequence& s) const;

 private:
  int n_;
  int max_len_;
  bool allow_repeats_;
  std::vector<std::uint64_t> count_;   // sequences of each exact length
  std::vector<std::uint64_t> offset_;  // cumulative; offset_[l] = first rank of length l
};

// f values for every sequence of a SequenceSpace, evaluated once each. The
// build is the data-parallel kernel; pass parallel = false for the serial
// reference. Both produce identical tables and evaluation counts.
class ValueTable {
 public:
  ValueTable(const ObjectiveOracle& oracle, const SequenceSpace& space, bool parallel);

  double value_at(std::uint64_t idx) const { return values_[idx]; }
  double value(const Sequence& s) const { return values_[space_->rank(s)]; }
  std::uint64_t size() const { return values_.size(); }
  const SequenceSpace& space() const { return *space_; }

 private:
  const SequenceSpace* space_;
  std::vector<double> values_;
};

}  // namespace seqsub
