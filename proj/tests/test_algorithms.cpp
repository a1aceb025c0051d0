#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "seqsub/algorithms.hpp"
#include "seqsub/bench.hpp"
#include "seqsub/errors.hpp"
#include "test_oracles.hpp"

using namespace seqsub;
using namespace seqsub::testing;

TEST_CASE("domination relation") {
  const BiValue a{2, -1, false};
  const BiValue b{1, -2, false};
  CHECK(dominate_relation(a, b) == Domination::a_strict);
  CHECK(dominate_relation(b, a) == Domination::b_strict);
  CHECK(dominate_relation(b, b) == Domination::equal);
  CHECK(dominate_relation(BiValue{2, -3, false}, BiValue{1, -2, false}) ==
        Domination::incomparable);
  // The sentinel sits below every real.
  const BiValue bottom{0, -4, true};
  CHECK(dominate_relation(BiValue{-100, -4, false}, bottom) == Domination::a_strict);
  CHECK(dominate_relation(bottom, bottom) == Domination::equal);
}

TEST_CASE("archive keeps mutually incomparable members and replaces equals") {
  ParetoArchive archive;
  CHECK(archive.offer(Sequence{}, BiValue{0, 0, false}));
  CHECK(archive.offer(Sequence{0}, BiValue{0.5, -1, false}));
  CHECK(archive.offer(Sequence{1, 0}, BiValue{0.9, -2, false}));
  CHECK(archive.size() == 3);
  // Dominated offspring is rejected.
  CHECK_FALSE(archive.offer(Sequence{2}, BiValue{0.4, -1, false}));
  // Equal pair replaces the incumbent.
  CHECK(archive.offer(Sequence{2}, BiValue{0.5, -1, false}));
  CHECK(archive.size() == 3);
  bool found = false;
  for (const auto& e : archive.entries()) {
    if (e.seq == Sequence{2}) found = true;
    CHECK(e.seq != Sequence{0});
  }
  CHECK(found);
  // A strong offspring sweeps out everything it weakly dominates.
  CHECK(archive.offer(Sequence{3}, BiValue{1.5, -1, false}));
  CHECK(archive.size() == 2);  // the empty sequence and (3)
}

TEST_CASE("mutation operators") {
  Rng rng(7);
  // Forced deletion on the empty sequence is a no-op.
  MutationStats stats;
  for (int i = 0; i < 4000; ++i) {
    const Sequence out = mutate(Sequence{}, 3, true, rng, &stats);
    CHECK(out.length() <= 20 + 0);  // at most r insertions
  }
  CHECK(stats.empty_deletion_noops > 0);
  CHECK(stats.calls == 4000);

  // No-repeat insertion at full length is a no-op.
  Rng rng2(8);
  MutationStats stats2;
  for (int i = 0; i < 2000; ++i) {
    const Sequence out = mutate(Sequence{0, 1, 2}, 3, false, rng2, &stats2);
    CHECK_FALSE(has_repeats(out));
    CHECK(out.length() <= 3);
  }
  CHECK(stats2.full_insertion_noops > 0);
}

TEST_CASE("mutation statistics approximate their distributions") {
  Rng rng(123);
  MutationStats stats;
  const int trials = 200000;
  int target_appends = 0;
  const Sequence base{0, 1};
  const Sequence appended{0, 1, 4};
  for (int i = 0; i < trials; ++i) {
    if (mutate(base, 5, true, rng, &stats) == appended) ++target_appends;
  }
  const double freq_r1 = static_cast<double>(stats.r_counts[1]) / trials;
  CHECK(freq_r1 == doctest::Approx(0.3679).epsilon(0.02));
  const double ops = static_cast<double>(stats.insertions + stats.deletions);
  CHECK(static_cast<double>(stats.insertions) / ops == doctest::Approx(0.5).epsilon(0.02));
  // Appending one specific item to the end has probability at least
  // (1/e) * (1/2) * (1/n) * (1/(|s|+1)) = 0.01226 at n = 5, |s| = 2.
  const double p_bound = (1.0 / std::exp(1.0)) * 0.5 * (1.0 / 5.0) * (1.0 / 3.0);
  const double se = std::sqrt(p_bound * (1 - p_bound) / trials);
  CHECK(static_cast<double>(target_appends) / trials >= p_bound - 3 * se);
}

TEST_CASE("gsemo with zero iterations returns the empty sequence") {
  WeightSetOracle oracle({0.3, 0.2});
  GsemoConfig cfg;
  cfg.k = 2;
  cfg.iterations = 0;
  const RunRecord record = gsemo(oracle, cfg);
  CHECK(record.best == Sequence{});
  CHECK(record.best_value == 0.0);
  CHECK(record.evaluations_used == 1);
}

TEST_CASE("gsemo finds the optimum of the two-vertex dag") {
  DagOracle oracle(PreferenceDag(2, {{0, 0, 0.3}, {1, 1, 0.4}, {0, 1, 0.5}}), HKind::modular,
                   DagEvalMode::reordered);
  GsemoConfig cfg;
  cfg.k = 2;
  cfg.iterations = 10000;
  cfg.allow_repeats = false;
  cfg.seed = 5;
  cfg.check_invariants = true;
  const RunRecord record = gsemo(oracle, cfg);
  CHECK(record.best_value == doctest::Approx(1.2).epsilon(1e-12));
  CHECK(record.invariant_violations == 0);
  CHECK(item_set(record.best) == std::vector<Item>{0, 1});
}

TEST_CASE("gsemo is deterministic given the seed and records a trace") {
  TasksOracle oracle(gen_tasks(6, 3, 5, 3));
  GsemoConfig cfg;
  cfg.k = 3;
  cfg.iterations = 3000;
  cfg.seed = 11;
  cfg.record_trace = true;
  const RunRecord a = gsemo(oracle, cfg);
  const RunRecord b = gsemo(oracle, cfg);
  CHECK(a.best == b.best);
  CHECK(a.best_value == b.best_value);
  CHECK(a.evaluations_used == b.evaluations_used);
  REQUIRE(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].evals == b.trace[i].evals);
    CHECK(a.trace[i].best_f == b.trace[i].best_f);
  }
  // Anytime curve never decreases.
  for (std::size_t i = 1; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].best_f >= a.trace[i - 1].best_f);
    CHECK(a.trace[i].evals >= a.trace[i - 1].evals);
  }

  GsemoConfig other = cfg;
  other.seed = 12;
  const RunRecord c = gsemo(oracle, other);
  CHECK(c.iterations == a.iterations);
  // Offspring at the length cap skip evaluation, so evals never exceed
  // iterations plus the initial member.
  CHECK(c.evaluations_used <= c.iterations + 1);
}

TEST_CASE("gsemo archive never stores overlong members") {
  // Instrumented run on a no-repeat oracle with the k-variant cap.
  DagOracle oracle(gen_dag_synthetic(6, 2, 0.0, 1.0, 4), HKind::coverage,
                   DagEvalMode::reordered);
  GsemoConfig cfg;
  cfg.k = 2;
  cfg.variant = GsemoVariant::k_variant;
  cfg.iterations = 5000;
  cfg.allow_repeats = false;
  cfg.seed = 9;
  cfg.check_invariants = true;
  const RunRecord record = gsemo(oracle, cfg);
  CHECK(record.invariant_violations == 0);
  CHECK(record.best.length() <= 2);
}

TEST_CASE("greedy picks the top-k items of a modular objective") {
  WeightSetOracle oracle({0.1, 0.9, 0.5, 0.7}, false);
  const Sequence s = greedy(oracle, 2, false);
  CHECK(s == Sequence{1, 3});
  // Tie goes to the lowest item index.
  WeightSetOracle ties({0.5, 0.5, 0.1}, false);
  CHECK(greedy(ties, 1, false) == Sequence{0});
}

TEST_CASE("generalized greedy first pick equals greedy's and matches it on set functions") {
  RecommenderOracle oracle(gen_recommender(6, 3, 19));
  const Sequence g1 = greedy(oracle, 1, false);
  const Sequence gg1 = generalized_greedy(oracle, 1, false);
  CHECK(g1 == gg1);

  WeightSetOracle set_fn({0.4, 0.8, 0.2, 0.6, 0.1}, false);
  const Sequence g = greedy(set_fn, 3, false);
  const Sequence gg = generalized_greedy(set_fn, 3, false);
  CHECK(set_fn.evaluate(g) == doctest::Approx(set_fn.evaluate(gg)).epsilon(1e-12));
}

TEST_CASE("omega with k = 1 returns the best self-loop vertex") {
  DagOracle oracle(PreferenceDag(3, {{0, 0, 0.2}, {1, 1, 0.8}, {2, 2, 0.5}, {0, 1, 0.9}}),
                   HKind::modular, DagEvalMode::reordered);
  CHECK(omega(oracle, 1) == Sequence{1});
}

TEST_CASE("omega on the two-vertex example") {
  DagOracle oracle(PreferenceDag(2, {{0, 0, 0.3}, {1, 1, 0.4}, {0, 1, 0.5}}), HKind::modular,
                   DagEvalMode::reordered);
  const Sequence s = omega(oracle, 2);
  CHECK(oracle.evaluate(s) == doctest::Approx(1.2).epsilon(1e-12));
}

TEST_CASE("theorem budgets") {
  CHECK(budget_for(ProblemClass::dag, 30, 5, GsemoVariant::standard) == 244646);
  CHECK(budget_for(ProblemClass::dag, 30, 5, GsemoVariant::k_variant) == 146788);
  CHECK(budget_for(ProblemClass::prefix_monotone, 1, 1, GsemoVariant::standard) == 11);
  CHECK(budget_for(ProblemClass::weakly_monotone, 20, 10, GsemoVariant::standard) ==
        budget_for(ProblemClass::prefix_monotone, 20, 10, GsemoVariant::standard));
  CHECK_THROWS_AS(budget_for(ProblemClass::dag, 0, 5, GsemoVariant::standard), ValidationError);
}

TEST_CASE("run record csv has trace rows and a best-sequence footer") {
  RunRecord record;
  record.best = Sequence{2, 0, 1};
  record.best_value = 0.5;
  record.trace = {{100, 0.25}, {200, 0.5}};
  std::ostringstream os;
  write_run_record_csv(record, os);
  CHECK(os.str() == "eval_count,best_f\n100,0.25\n200,0.5\nbest,2 0 1\n");
}
