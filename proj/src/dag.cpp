#include "seqsub/dag.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <unordered_map>

#include "seqsub/errors.hpp"
#include "seqsub/rng.hpp"

namespace seqsub {

PreferenceDag::PreferenceDag(int n, const std::vector<WeightedEdge>& edges)
    : n_(n),
      weight_(static_cast<std::size_t>(n) * n, 0.0),
      present_(static_cast<std::size_t>(n) * n, 0),
      topo_rank_(static_cast<std::size_t>(n), 0) {
  edges_.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    const std::size_t idx = static_cast<std::size_t>(e.src) * n + e.dst;
    if (present_[idx]) throw ValidationError("duplicate edge");
    present_[idx] = 1;
    weight_[idx] = e.weight;
    edges_.push_back({e.src, e.dst});
  }
  std::sort(edges_.begin(), edges_.end());

  // Kahn's algorithm ignoring self-loops, always taking the smallest ready
  // vertex, so the stored order is canonical.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    if (e.src != e.dst) ++indeg[static_cast<std::size_t>(e.dst)];
  }
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int rank = 0; rank < n; ++rank) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!placed[static_cast<std::size_t>(v)] && indeg[static_cast<std::size_t>(v)] == 0) {
        pick = v;
        break;
      }
    }
    if (pick < 0) throw ValidationError("edge set is cyclic (ignoring self-loops)");
    placed[static_cast<std::size_t>(pick)] = 1;
    topo_rank_[static_cast<std::size_t>(pick)] = rank;
    for (int v = 0; v < n; ++v) {
      if (pick != v && has_edge(pick, v)) --indeg[static_cast<std::size_t>(v)];
    }
  }
}

std::vector<Edge> induced_edges(const PreferenceDag& dag, const Sequence& s) {
  if (has_repeats(s)) throw RepeatViolation("induced_edges: sequence repeats an item");
  std::vector<Edge> out;
  for (int a = 0; a < s.length(); ++a) {
    for (int b = a; b < s.length(); ++b) {
      if (dag.has_edge(s[a], s[b])) out.push_back({s[a], s[b]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Sequence reorder(const PreferenceDag& dag, std::vector<Item> items) {
  std::sort(items.begin(), items.end(),
            [&dag](Item a, Item b) { return dag.topo_rank(a) < dag.topo_rank(b); });
  return Sequence(std::move(items));
}

double h_value(const PreferenceDag& dag, HKind kind, std::span<const Edge> edges) {
  if (kind == HKind::modular) {
    double sum = 0;
    for (const Edge& e : edges) sum += dag.weight(e.src, e.dst);
    return sum;
  }
  // Noisy-or per target vertex; vertices covered only as sources contribute 0.
  std::map<Item, double> miss;
  for (const Edge& e : edges) {
    auto [it, inserted] = miss.try_emplace(e.dst, 1.0);
    it->second *= 1.0 - dag.weight(e.src, e.dst);
  }
  double sum = 0;
  for (const auto& [v, product] : miss) sum += 1.0 - product;
  return sum;
}

namespace {

// h(E(s)) for a repeat-free sequence without materializing the edge set.
double h_of_order(const PreferenceDag& dag, HKind kind, const std::vector<Item>& order) {
  double sum = 0;
  if (kind == HKind::modular) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      for (std::size_t a = 0; a <= b; ++a) {
        if (dag.has_edge(order[a], order[b])) sum += dag.weight(order[a], order[b]);
      }
    }
  } else {
    for (std::size_t b = 0; b < order.size(); ++b) {
      double miss = 1.0;
      for (std::size_t a = 0; a <= b; ++a) {
        if (dag.has_edge(order[a], order[b])) miss *= 1.0 - dag.weight(order[a], order[b]);
      }
      sum += 1.0 - miss;
    }
  }
  return sum;
}

}  // namespace

double eval_dag(const PreferenceDag& dag, HKind kind, const Sequence& s, DagEvalMode mode) {
  if (has_repeats(s)) throw RepeatViolation("eval_dag: sequence repeats an item");
  std::vector<Item> order(s.begin(), s.end());
  if (mode == DagEvalMode::reordered) {
    std::sort(order.begin(), order.end(),
              [&dag](Item a, Item b) { return dag.topo_rank(a) < dag.topo_rank(b); });
  }
  return h_of_order(dag, kind, order);
}

PreferenceDag gen_dag_synthetic(int n, int d, double self_loop_lo, double self_loop_hi,
                                std::uint64_t seed) {
  if (n < 1 || d < 1) throw ValidationError("gen_dag_synthetic requires n >= 1 and d >= 1");
  Rng rng(seed);
  std::vector<WeightedEdge> edges;
  std::vector<Item> pool;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, i, rng.uniform(self_loop_lo, self_loop_hi)});
    const int take = std::min(d, n - 1 - i);
    pool.clear();
    for (int j = i + 1; j < n; ++j) pool.push_back(j);
    // Partial Fisher-Yates for the target subset, then ascending targets.
    for (int t = 0; t < take; ++t) {
      const std::size_t pick = t + rng.uniform_int(pool.size() - t);
      std::swap(pool[static_cast<std::size_t>(t)], pool[pick]);
    }
    std::sort(pool.begin(), pool.begin() + take);
    for (int t = 0; t < take; ++t) {
      edges.push_back({i, pool[static_cast<std::size_t>(t)], rng.uniform(0.0, 1.0)});
    }
  }
  return PreferenceDag(n, edges);
}

namespace {

struct Rating {
  long user;
  long movie;
  long timestamp;
};

long parse_long_field(const std::string& text, std::size_t begin, std::size_t end,
                      std::uint64_t line_no) {
  if (begin >= end) throw MalformedRecord(line_no, "empty field");
  long value = 0;
  for (std::size_t i = begin; i < end; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw MalformedRecord(line_no, "non-integer field");
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

MovielensResult load_movielens(std::istream& ratings, const MovielensOptions& options) {
  std::vector<Rating> rows;
  std::unordered_map<long, int> user_raw_count;
  std::unordered_map<long, int> movie_raw_count;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(ratings, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = 0;
    long fields[4];
    for (int f = 0; f < 4; ++f) {
      std::size_t next = f < 3 ? line.find("::", pos) : line.size();
      if (next == std::string::npos) throw MalformedRecord(line_no, "expected 4 '::'-separated fields");
      fields[f] = parse_long_field(line, pos, next, line_no);
      pos = next + 2;
    }
    rows.push_back({fields[0], fields[1], fields[3]});
    ++user_raw_count[fields[0]];
    ++movie_raw_count[fields[1]];
  }

  std::unordered_map<long, char> user_kept;
  for (const auto& [user, count] : user_raw_count) {
    if (count >= options.user_min_ratings && count <= options.user_max_ratings) user_kept[user] = 1;
  }
  std::unordered_map<long, char> movie_kept;
  for (const auto& [movie, count] : movie_raw_count) {
    if (count >= options.movie_min_ratings) movie_kept[movie] = 1;
  }
  if (user_kept.empty() || movie_kept.empty()) {
    throw EmptyResult("movielens preprocessing removed all users or movies");
  }

  // Earliest retained-user timestamp per retained movie; movies never rated
  // by a retained user sort last.
  std::map<long, long> first_ts;
  for (const Rating& r : rows) {
    if (!user_kept.count(r.user) || !movie_kept.count(r.movie)) continue;
    auto [it, inserted] = first_ts.try_emplace(r.movie, r.timestamp);
    if (!inserted) it->second = std::min(it->second, r.timestamp);
  }
  std::vector<std::pair<long, long>> order;  // (timestamp, movie id)
  for (const auto& [movie, kept] : std::map<long, char>(movie_kept.begin(), movie_kept.end())) {
    auto it = first_ts.find(movie);
    order.emplace_back(it == first_ts.end() ? std::numeric_limits<long>::max() : it->second, movie);
  }
  std::sort(order.begin(), order.end());
  const int num_movies = static_cast<int>(order.size());
  std::unordered_map<long, int> vertex_of;
  std::vector<long> movie_ids(static_cast<std::size_t>(num_movies));
  for (int v = 0; v < num_movies; ++v) {
    vertex_of[order[static_cast<std::size_t>(v)].second] = v;
    movie_ids[static_cast<std::size_t>(v)] = order[static_cast<std::size_t>(v)].second;
  }

  // Per retained user, timestamps on retained movies; strict comparison
  // decides "rated i before j", equal stamps count as neither.
  std::unordered_map<long, std::vector<std::pair<int, long>>> per_user;
  for (const Rating& r : rows) {
    if (!user_kept.count(r.user) || !movie_kept.count(r.movie)) continue;
    per_user[r.user].emplace_back(vertex_of[r.movie], r.timestamp);
  }
  std::vector<long> rated(static_cast<std::size_t>(num_movies), 0);
  std::vector<long> before(static_cast<std::size_t>(num_movies) * num_movies, 0);
  for (const auto& [user, seen] : per_user) {
    for (const auto& [v, ts] : seen) ++rated[static_cast<std::size_t>(v)];
    for (std::size_t a = 0; a < seen.size(); ++a) {
      for (std::size_t b = 0; b < seen.size(); ++b) {
        if (a == b) continue;
        if (seen[a].second < seen[b].second) {
          ++before[static_cast<std::size_t>(seen[a].first) * num_movies + seen[b].first];
        }
      }
    }
  }

  const long retained_users = static_cast<long>(user_kept.size());
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(num_movies) * (num_movies + 1) / 2);
  for (int i = 0; i < num_movies; ++i) {
    edges.push_back({i, i, static_cast<double>(rated[static_cast<std::size_t>(i)]) /
                               static_cast<double>(retained_users + 20)});
    for (int j = i + 1; j < num_movies; ++j) {
      const double w = static_cast<double>(before[static_cast<std::size_t>(i) * num_movies + j]) /
                       static_cast<double>(rated[static_cast<std::size_t>(i)] + 20);
      edges.push_back({i, j, w});
    }
  }
  return MovielensResult{PreferenceDag(num_movies, edges), static_cast<int>(retained_users),
                         num_movies, std::move(movie_ids)};
}

MovielensResult load_movielens_file(const std::string& path, const MovielensOptions& options) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open ratings file: " + path);
  return load_movielens(in, options);
}

void save_dag(const PreferenceDag& dag, std::ostream& os) {
  os << dag.n() << ' ' << dag.edges().size() << '\n';
  char buf[32];
  for (const Edge& e : dag.edges()) {
    std::snprintf(buf, sizeof buf, "%.17g", dag.weight(e.src, e.dst));
    os << e.src << ' ' << e.dst << ' ' << buf << '\n';
  }
}

PreferenceDag load_dag(std::istream& is) {
  int n = 0;
  std::size_t m = 0;
  if (!(is >> n >> m)) throw ValidationError("dag file: bad header");
  std::vector<WeightedEdge> edges(m);
  for (WeightedEdge& e : edges) {
    if (!(is >> e.src >> e.dst >> e.weight)) throw ValidationError("dag file: truncated edge list");
  }
  return PreferenceDag(n, edges);
}

}  // namespace seqsub
