#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "seqsub/oracle.hpp"
#include "seqsub/sequence.hpp"

namespace seqsub {

struct Edge {
  Item src = 0;
  Item dst = 0;
  auto operator<=>(const Edge&) const = default;
};

struct WeightedEdge {
  Item src = 0;
  Item dst = 0;
  double weight = 0;
};

// Weighted directed graph that is acyclic apart from self-loops, with a fixed
// topological order of its vertices (self-loops ignored). Immutable after
// construction.
class PreferenceDag {
 public:
  PreferenceDag(int n, const std::vector<WeightedEdge>& edges);

  int n() const { return n_; }
  bool has_edge(Item src, Item dst) const {
    return present_[static_cast<std::size_t>(src) * n_ + dst] != 0;
  }
  double weight(Item src, Item dst) const {
    return weight_[static_cast<std::size_t>(src) * n_ + dst];
  }
  // All edges, self-loops included, in lexicographic (src, dst) order.
  const std::vector<Edge>& edges() const { return edges_; }
  // Position of a vertex in the stored topological order.
  int topo_rank(Item v) const { return topo_rank_[static_cast<std::size_t>(v)]; }

 private:
  int n_;
  std::vector<double> weight_;
  std::vector<char> present_;
  std::vector<Edge> edges_;
  std::vector<int> topo_rank_;
};

enum class HKind { modular, coverage };
enum class DagEvalMode { raw, reordered };

// Edges induced by a repeat-free sequence: every (s_i, s_j) in the edge set
// with i <= j, so self-loops of all items are included.
std::vector<Edge> induced_edges(const PreferenceDag& dag, const Sequence& s);

// The f-optimal ordering of an item set: sorted by the dag's topological
// order.
Sequence reorder(const PreferenceDag& dag, std::vector<Item> items);

// Set function over edges. modular: sum of weights. coverage: per target
// vertex, a noisy-or over its incoming selected edges (a self-loop counts as
// incoming to its own vertex).
double h_value(const PreferenceDag& dag, HKind kind, std::span<const Edge> edges);

// f(s) = h(E(s)) in raw mode; h(E(reorder(V(s)))) in reordered mode.
double eval_dag(const PreferenceDag& dag, HKind kind, const Sequence& s, DagEvalMode mode);

class DagOracle final : public ObjectiveOracle {
 public:
  DagOracle(PreferenceDag dag, HKind kind, DagEvalMode mode)
      : ObjectiveOracle(dag.n(), /*allows_repeats=*/false),
        dag_(std::move(dag)),
        kind_(kind),
        mode_(mode) {}

  const PreferenceDag& dag() const { return dag_; }
  HKind h_kind() const { return kind_; }
  DagEvalMode mode() const { return mode_; }

 protected:
  double eval_impl(const Sequence& s) const override { return eval_dag(dag_, kind_, s, mode_); }

 private:
  PreferenceDag dag_;
  HKind kind_;
  DagEvalMode mode_;
};

// Random DAG in the synthetic-benchmark shape: vertex i gets forward edges to
// a uniform random min{d, n-1-i}-subset of later vertices (weights uniform in
// [0, 1]) plus a self-loop with weight uniform in self_loop_range.
PreferenceDag gen_dag_synthetic(int n, int d, double self_loop_lo, double self_loop_hi,
                                std::uint64_t seed);

struct MovielensOptions {
  int user_min_ratings = 20;
  int user_max_ratings = 50;
  int movie_min_ratings = 1000;
};

struct MovielensResult {
  PreferenceDag dag;
  int retained_users = 0;
  int retained_movies = 0;
  std::vector<long> movie_ids;  // original ids in vertex order
};

// Builds the preference DAG from a ratings stream of lines
// UserID::MovieID::Rating::Timestamp. Users are kept when their raw rating
// count lies in [user_min, user_max]; movies when their raw rating count is
// at least movie_min. Movies are ordered by earliest retained-user rating
// timestamp (ties by movie id); the DAG is complete over that order, with
// w(i,j) = N_ij / (N_i + 20) and self-loops w(i,i) = N_i / (U + 20), where
// counts are over retained users and "i before j" compares timestamps
// strictly.
MovielensResult load_movielens(std::istream& ratings, const MovielensOptions& options = {});
MovielensResult load_movielens_file(const std::string& path, const MovielensOptions& options = {});

// Text form: header "n m", then one "src dst weight" line per edge.
void save_dag(const PreferenceDag& dag, std::ostream& os);
PreferenceDag load_dag(std::istream& is);

}  // namespace seqsub
