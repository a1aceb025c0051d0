#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "seqsub/bench.hpp"
#include "seqsub/errors.hpp"
#include "seqsub/objectives.hpp"
#include "seqsub/properties.hpp"

using namespace seqsub;

namespace {

// Independent reference for the search-and-tracking objective: K - E[tau]
// with E[tau] computed by enumerating every detection-outcome string per
// path, using the outcome-probability product directly.
double searchtrack_reference(const SearchTrackInstance& inst, const Sequence& s) {
  const int l = s.length();
  double expected_tau = 0;
  for (int path = 0; path < inst.num_paths; ++path) {
    for (unsigned outcome = 0; outcome < (1u << l); ++outcome) {
      double prob = 1.0;
      for (int i = 0; i < l; ++i) {
        const SearchTrackPattern& pat = inst.patterns[static_cast<std::size_t>(s[i])];
        const bool on_path = pat.covers[static_cast<std::size_t>(path)] != 0;
        const bool detected = (outcome >> i) & 1u;
        if (detected) {
          prob *= on_path ? pat.detect_prob : 0.0;
        } else {
          prob *= on_path ? 1.0 - pat.detect_prob : 1.0;
        }
      }
      double tau = inst.penalty;
      for (int i = 0; i < l; ++i) {
        if ((outcome >> i) & 1u) {
          tau = inst.patterns[static_cast<std::size_t>(s[i])].time_stamp;
          break;
        }
      }
      expected_tau += prob * tau / inst.num_paths;
    }
  }
  return inst.penalty - expected_tau;
}

}  // namespace

TEST_CASE("tasks evaluation matches hand computation") {
  TaskInstance inst;
  inst.m = 1;
  inst.n = 1;
  inst.stages = 2;
  inst.p.resize(2);
  inst.p[inst.index(0, 0, 0)] = 0.1;
  inst.p[inst.index(0, 1, 0)] = 0.2;
  CHECK(eval_tasks(inst, Sequence{}) == 0.0);
  CHECK(eval_tasks(inst, Sequence{0, 0}) == doctest::Approx(0.28).epsilon(1e-12));
  CHECK_THROWS_AS(eval_tasks(inst, Sequence{0, 0, 0}), StageOutOfRange);
}

TEST_CASE("tasks values stay in [0, 1] and append gains are bounded") {
  TaskInstance inst = gen_tasks(5, 3, 10, 42);
  TasksOracle oracle(std::move(inst));
  SequenceSpace space(5, 4, true);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Sequence s = space.unrank(i);
    const double f = oracle.evaluate(s);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    if (s.length() < 4) {
      for (Item v = 0; v < 5; ++v) {
        Sequence ext = s;
        ext.push_back(v);
        const double gain = oracle.evaluate(ext) - f;
        CHECK(gain >= -1e-12);
        CHECK(gain <= 0.2 + 1e-12);  // no single stage success probability exceeds 0.2
      }
    }
  }
}

TEST_CASE("information gain matches hand computation") {
  InfoGainInstance inst;
  inst.n = 1;
  inst.d = 2;
  inst.entries = {1.0, 0.0};  // candidate a = 1
  inst.prior_diag = {1.0, 1.0};
  inst.sigma2 = {1.0};
  CHECK(eval_infogain(inst, Sequence{}) == 0.0);
  CHECK(eval_infogain(inst, Sequence{0}) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("information gain is nonnegative and prefix monotone submodular") {
  InfoGainOracle oracle(gen_infogain(4, 4, 5));
  SequenceSpace space(4, 4, true);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    CHECK(oracle.evaluate(space.unrank(i)) >= -1e-12);
  }
  CheckOptions opt;
  opt.max_len = 3;
  CHECK(check_monotonicity(oracle, MonotonicityKind::prefix, opt).holds);
  CHECK(check_submodularity(oracle, SubmodularityKind::prefix, opt).holds);
}

TEST_CASE("search-and-tracking matches hand computation") {
  SearchTrackInstance inst;
  inst.num_paths = 1;
  SearchTrackPattern pat;
  pat.covers = {1};
  pat.time_stamp = 2;
  pat.detect_prob = 0.5;
  inst.patterns.push_back(pat);
  inst.penalty = 10;
  CHECK(eval_searchtrack(inst, Sequence{}) == 0.0);
  CHECK(eval_searchtrack(inst, Sequence{0}) == doctest::Approx(4.0).epsilon(1e-12));
  // A repeated pattern acts as an extra independent chance at the same stamp.
  CHECK(eval_searchtrack(inst, Sequence{0, 0}) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("search-and-tracking equals the expectation-based definition") {
  // Formula-level comparison over all length <= 3 sequences, repeats included.
  for (std::uint64_t seed : {3u, 4u, 5u, 6u}) {
    SearchTrackInstance inst = gen_searchtrack(3, 2, 3, 0.4, seed);
    SequenceSpace space(3, 3, true);
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const Sequence s = space.unrank(i);
      const double direct = eval_searchtrack(inst, s);
      const double reference = searchtrack_reference(inst, s);
      CHECK(direct == doctest::Approx(reference).epsilon(1e-10));
      CHECK(direct >= -1e-12);
      CHECK(direct <= inst.penalty + 1e-12);
    }
  }
}

TEST_CASE("search-and-tracking class membership at tiny scale") {
  SearchTrackOracle oracle(gen_searchtrack(4, 2, 3, 0.5, 9));
  CheckOptions opt;
  opt.max_len = 2;
  CHECK(check_monotonicity(oracle, MonotonicityKind::weak, opt).holds);
  CHECK(check_submodularity(oracle, SubmodularityKind::strong, opt).holds);
}

TEST_CASE("recommender matches hand computation") {
  RecommenderInstance inst;
  inst.n = 2;
  inst.num_topics = 1;
  inst.satisfaction = {1.0, 1.0};
  inst.coverage = {0.5, 0.5};
  CHECK(eval_recommender(inst, Sequence{}) == 0.0);
  CHECK(eval_recommender(inst, Sequence{0, 1}) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("recommender class membership at tiny scale") {
  RecommenderOracle oracle(gen_recommender(4, 2, 17));
  CheckOptions opt;
  opt.max_len = 2;
  CHECK(check_monotonicity(oracle, MonotonicityKind::weak, opt).holds);
  CHECK(check_submodularity(oracle, SubmodularityKind::strong, opt).holds);
  SequenceSpace space(4, 3, true);
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const double f = oracle.evaluate(space.unrank(i));
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
  }
}

TEST_CASE("instances round-trip through serialization bit-identically") {
  {
    const TaskInstance inst = gen_tasks(4, 2, 3, 11);
    std::stringstream ss;
    save_instance(inst, ss);
    const TaskInstance back = load_task_instance(ss);
    CHECK(back.p == inst.p);
    CHECK(back.m == inst.m);
    CHECK(back.stages == inst.stages);
  }
  {
    const InfoGainInstance inst = gen_infogain(6, 2, 12);
    std::stringstream ss;
    save_instance(inst, ss);
    const InfoGainInstance back = load_infogain_instance(ss);
    CHECK(back.entries == inst.entries);
    CHECK(back.prior_diag == inst.prior_diag);
    CHECK(back.sigma2 == inst.sigma2);
  }
  {
    const SearchTrackInstance inst = gen_searchtrack(5, 2, 4, -0.6, 13);
    std::stringstream ss;
    save_instance(inst, ss);
    const SearchTrackInstance back = load_searchtrack_instance(ss);
    CHECK(back.penalty == inst.penalty);
    REQUIRE(back.patterns.size() == inst.patterns.size());
    for (std::size_t i = 0; i < inst.patterns.size(); ++i) {
      CHECK(back.patterns[i].time_stamp == inst.patterns[i].time_stamp);
      CHECK(back.patterns[i].detect_prob == inst.patterns[i].detect_prob);
      CHECK(back.patterns[i].covers == inst.patterns[i].covers);
    }
  }
  {
    const RecommenderInstance inst = gen_recommender(4, 3, 14);
    std::stringstream ss;
    save_instance(inst, ss);
    const RecommenderInstance back = load_recommender_instance(ss);
    CHECK(back.satisfaction == inst.satisfaction);
    CHECK(back.coverage == inst.coverage);
  }
}

TEST_CASE("oracle evaluation counter increments once per call") {
  RecommenderOracle oracle(gen_recommender(3, 2, 1));
  CHECK(oracle.eval_count() == 0);
  oracle.evaluate(Sequence{0});
  oracle.evaluate(Sequence{0, 1});
  CHECK(oracle.eval_count() == 2);
  oracle.reset_eval_count();
  CHECK(oracle.eval_count() == 0);
}
