#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "seqsub/dag.hpp"
#include "seqsub/errors.hpp"
#include "seqsub/properties.hpp"

using namespace seqsub;

namespace {

// Two vertices, self-loops 0.3 and 0.4, forward edge 0.5.
PreferenceDag two_vertex_dag() {
  return PreferenceDag(2, {{0, 0, 0.3}, {1, 1, 0.4}, {0, 1, 0.5}});
}

}  // namespace

TEST_CASE("induced edges follow the sequence order") {
  const PreferenceDag dag = two_vertex_dag();
  CHECK(induced_edges(dag, Sequence{}).empty());
  CHECK(induced_edges(dag, Sequence{0, 1}) ==
        std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(induced_edges(dag, Sequence{1, 0}) == std::vector<Edge>{{0, 0}, {1, 1}});
  CHECK_THROWS_AS(induced_edges(dag, Sequence{0, 0}), RepeatViolation);

  // Chain with a skip edge: picking the endpoints still induces the skip.
  const PreferenceDag chain(3, {{0, 0, 0.1}, {1, 1, 0.1}, {2, 2, 0.1},
                                {0, 1, 0.2}, {1, 2, 0.2}, {0, 2, 0.2}});
  CHECK(induced_edges(chain, Sequence{0, 2}) ==
        std::vector<Edge>{{0, 0}, {0, 2}, {2, 2}});
}

TEST_CASE("h values for modular and coverage kinds") {
  const PreferenceDag dag = two_vertex_dag();
  const std::vector<Edge> all{{0, 0}, {0, 1}, {1, 1}};
  CHECK(h_value(dag, HKind::modular, {}) == 0.0);
  CHECK(h_value(dag, HKind::coverage, {}) == 0.0);
  CHECK(h_value(dag, HKind::modular, all) == doctest::Approx(1.2).epsilon(1e-12));
  // Target v0 misses with 0.7; target v1 with (1-0.4)(1-0.5) = 0.3.
  CHECK(h_value(dag, HKind::coverage, all) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("h is monotone and submodular over edge subsets") {
  const PreferenceDag dag = gen_dag_synthetic(5, 2, 0.0, 1.0, 3);
  const std::vector<Edge>& edges = dag.edges();
  REQUIRE(edges.size() <= 13);
  const unsigned full = 1u << std::min<std::size_t>(edges.size(), 10);
  auto pick = [&edges](unsigned mask) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < 10 && i < edges.size(); ++i) {
      if (mask & (1u << i)) out.push_back(edges[i]);
    }
    return out;
  };
  for (HKind kind : {HKind::modular, HKind::coverage}) {
    for (unsigned y = 0; y < full; ++y) {
      const double hy = h_value(dag, kind, pick(y));
      // Submasks of y cover every X subset of Y.
      for (unsigned x = y;; x = (x - 1) & y) {
        CHECK(h_value(dag, kind, pick(x)) <= hy + 1e-12);
        if (x == 0) break;
      }
      for (std::size_t e = 0; e < 10 && e < edges.size(); ++e) {
        if (y & (1u << e)) continue;
        const double gain_y = h_value(dag, kind, pick(y | (1u << e))) - hy;
        for (unsigned x = y;; x = (x - 1) & y) {
          const double hx = h_value(dag, kind, pick(x));
          const double gain_x = h_value(dag, kind, pick(x | (1u << e))) - hx;
          CHECK(gain_x >= gain_y - 1e-12);
          if (x == 0) break;
        }
      }
    }
  }
}

TEST_CASE("reorder sorts by the stored topological order") {
  const PreferenceDag chain(3, {{0, 1, 0.5}, {1, 2, 0.5}});
  CHECK(reorder(chain, {}) == Sequence{});
  CHECK(reorder(chain, {2, 0}) == Sequence{0, 2});
}

TEST_CASE("reorder is f-optimal over all orderings of a set") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
    const PreferenceDag dag = gen_dag_synthetic(5, 2, 0.0, 1.0, seed);
    for (HKind kind : {HKind::modular, HKind::coverage}) {
      for (unsigned mask = 0; mask < 32; ++mask) {
        std::vector<Item> items;
        for (Item v = 0; v < 5; ++v) {
          if (mask & (1u << v)) items.push_back(v);
        }
        if (items.size() > 3) continue;
        const double reordered = eval_dag(dag, kind, reorder(dag, items), DagEvalMode::raw);
        std::vector<Item> perm = items;
        std::sort(perm.begin(), perm.end());
        double best = 0;
        do {
          best = std::max(best, eval_dag(dag, kind, Sequence(perm), DagEvalMode::raw));
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(reordered == doctest::Approx(best).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("eval_dag raw vs reordered") {
  const PreferenceDag dag = two_vertex_dag();
  CHECK(eval_dag(dag, HKind::modular, Sequence{}, DagEvalMode::raw) == 0.0);
  CHECK(eval_dag(dag, HKind::modular, Sequence{1, 0}, DagEvalMode::raw) ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(eval_dag(dag, HKind::modular, Sequence{1, 0}, DagEvalMode::reordered) ==
        doctest::Approx(1.2).epsilon(1e-12));

  // Reordered evaluation dominates raw on every repeat-free sequence.
  const PreferenceDag big = gen_dag_synthetic(5, 3, 0.0, 1.0, 8);
  SequenceSpace space(5, 3, false);
  for (HKind kind : {HKind::modular, HKind::coverage}) {
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const Sequence s = space.unrank(i);
      CHECK(eval_dag(big, kind, s, DagEvalMode::reordered) >=
            eval_dag(big, kind, s, DagEvalMode::raw) - 1e-12);
    }
  }
}

TEST_CASE("raw dag objective is subsequence monotone") {
  DagOracle oracle(gen_dag_synthetic(5, 2, 0.0, 1.0, 11), HKind::coverage, DagEvalMode::raw);
  CheckOptions opt;
  opt.max_len = 3;
  CHECK(check_monotonicity(oracle, MonotonicityKind::subsequence, opt).holds);
}

TEST_CASE("dag construction validates") {
  CHECK_THROWS_AS(PreferenceDag(2, {{0, 1, 0.5}, {1, 0, 0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceDag(2, {{0, 1, 0.5}, {0, 1, 0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceDag(2, {{0, 2, 0.5}}), ValidationError);
  // Self-loops do not make it cyclic.
  const PreferenceDag ok(2, {{0, 0, 0.5}, {1, 1, 0.5}, {0, 1, 0.5}});
  CHECK(ok.topo_rank(0) == 0);
  CHECK(ok.topo_rank(1) == 1);
}

TEST_CASE("synthetic generator structure") {
  const PreferenceDag one = gen_dag_synthetic(1, 3, 0.0, 1.0, 5);
  CHECK(one.edges() == std::vector<Edge>{{0, 0}});

  const PreferenceDag dag = gen_dag_synthetic(30, 5, 0.0, 1.0, 6);
  std::vector<int> out_degree(30, 0);
  bool has_self_loop[30] = {};
  for (const Edge& e : dag.edges()) {
    if (e.src == e.dst) {
      has_self_loop[e.src] = true;
    } else {
      CHECK(e.src < e.dst);
      ++out_degree[static_cast<std::size_t>(e.src)];
    }
  }
  for (int i = 0; i < 30; ++i) {
    CHECK(has_self_loop[i]);
    CHECK(out_degree[static_cast<std::size_t>(i)] == std::min(5, 29 - i));
    CHECK(dag.weight(i, i) >= 0.0);
    CHECK(dag.weight(i, i) <= 1.0);
  }

  const PreferenceDag again = gen_dag_synthetic(30, 5, 0.0, 1.0, 6);
  CHECK(again.edges() == dag.edges());
  for (const Edge& e : dag.edges()) CHECK(again.weight(e.src, e.dst) == dag.weight(e.src, e.dst));

  const PreferenceDag sub = gen_dag_synthetic(12, 3, 0.0, 0.1, 7);
  for (const Edge& e : sub.edges()) {
    if (e.src == e.dst) CHECK(sub.weight(e.src, e.dst) <= 0.1);
  }
}

TEST_CASE("dag serialization round-trips") {
  const PreferenceDag dag = gen_dag_synthetic(6, 2, 0.0, 1.0, 9);
  std::stringstream ss;
  save_dag(dag, ss);
  const PreferenceDag back = load_dag(ss);
  CHECK(back.n() == dag.n());
  CHECK(back.edges() == dag.edges());
  for (const Edge& e : dag.edges()) {
    CHECK(back.weight(e.src, e.dst) == dag.weight(e.src, e.dst));
  }
}

TEST_CASE("movielens fixture with hand-computed weights") {
  // Users 1..4 and movies 10, 20; user 4 rates both at the same timestamp,
  // which counts as neither order.
  const std::string ratings =
      "1::10::5::100\n"
      "1::20::4::200\n"
      "2::10::3::300\n"
      "2::20::2::250\n"
      "3::10::4::400\n"
      "4::10::5::500\n"
      "4::20::5::500\n";
  MovielensOptions options;
  options.user_min_ratings = 1;
  options.user_max_ratings = 10;
  options.movie_min_ratings = 1;
  std::istringstream in(ratings);
  const MovielensResult result = load_movielens(in, options);
  CHECK(result.retained_users == 4);
  CHECK(result.retained_movies == 2);
  REQUIRE(result.movie_ids == std::vector<long>{10, 20});
  const PreferenceDag& dag = result.dag;
  // N_10 = 4, N_20 = 3, N_{10 before 20} = 1 (only user 1), U = 4.
  CHECK(dag.weight(0, 0) == doctest::Approx(4.0 / 24.0).epsilon(1e-15));
  CHECK(dag.weight(1, 1) == doctest::Approx(3.0 / 24.0).epsilon(1e-15));
  CHECK(dag.weight(0, 1) == doctest::Approx(1.0 / 24.0).epsilon(1e-15));
  CHECK(dag.edges() == std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("movielens filters and errors") {
  {
    std::istringstream in("");
    CHECK_THROWS_AS(load_movielens(in), EmptyResult);
  }
  {
    std::istringstream in("1::10::5\n");
    CHECK_THROWS_AS(load_movielens(in), MalformedRecord);
  }
  {
    std::istringstream in("1::10::5::abc\n");
    CHECK_THROWS_AS(load_movielens(in), MalformedRecord);
  }
  {
    // User 1 exceeds the max rating count and is dropped; movie 30 falls
    // under the movie threshold.
    const std::string ratings =
        "1::10::5::100\n"
        "1::20::5::110\n"
        "1::30::5::120\n"
        "2::10::5::200\n"
        "2::20::5::300\n"
        "3::10::4::50\n"
        "3::20::4::40\n";
    MovielensOptions options;
    options.user_min_ratings = 1;
    options.user_max_ratings = 2;
    options.movie_min_ratings = 2;
    std::istringstream in(ratings);
    const MovielensResult result = load_movielens(in, options);
    CHECK(result.retained_users == 2);
    CHECK(result.retained_movies == 2);
    // Earliest retained-user stamps: movie 20 at 40 precedes movie 10 at 50.
    CHECK(result.movie_ids == std::vector<long>{20, 10});
  }
}
