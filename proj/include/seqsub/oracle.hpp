#pragma once

#include <atomic>
#include <cstdint>

#include "seqsub/sequence.hpp"

namespace seqsub {

// Abstract objective f: sequences over [0, n) -> reals. Instances built by
// this library are normalized (f of the empty sequence is 0) and evaluation
// is deterministic and pure apart from the call counter, which is safe to
// bump from concurrent evaluations.
class ObjectiveOracle {
 public:
  ObjectiveOracle(int ground_size, bool allows_repeats)
      : n_(ground_size), allows_repeats_(allows_repeats) {}
  virtual ~ObjectiveOracle() = default;

  ObjectiveOracle(const ObjectiveOracle&) = delete;
  ObjectiveOracle& operator=(const ObjectiveOracle&) = delete;

  int ground_size() const { return n_; }
  bool allows_repeats() const { return allows_repeats_; }

  double evaluate(const Sequence& s) const {
    eval_count_.fetch_add(1, std::memory_order_relaxed);
    return eval_impl(s);
  }

  std::uint64_t eval_count() const { return eval_count_.load(std::memory_order_relaxed); }
  void reset_eval_count() const { eval_count_.store(0, std::memory_order_relaxed); }

  // The sequence space the objective's structural properties are defined on.
  // evaluate() may accept more (optimizers probe arbitrary orders); the
  // property checkers quantify over this space only and report how many
  // combinations fell outside it. Overrides must be subsequence-closed: every
  // subsequence of a member is a member.
  virtual bool in_check_space(const Sequence& s) const {
    return allows_repeats_ || !has_repeats(s);
  }

 protected:
  virtual double eval_impl(const Sequence& s) const = 0;

 private:
  int n_;
  bool allows_repeats_;
  mutable std::atomic<std::uint64_t> eval_count_{0};
};

}  // namespace seqsub
