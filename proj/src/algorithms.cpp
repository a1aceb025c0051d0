#include "seqsub/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "seqsub/errors.hpp"

namespace seqsub {

namespace {

int compare_f1(const BiValue& a, const BiValue& b) {
  if (a.neg_inf && b.neg_inf) return 0;
  if (a.neg_inf) return -1;
  if (b.neg_inf) return 1;
  if (a.f1 < b.f1) return -1;
  if (a.f1 > b.f1) return 1;
  return 0;
}

}  // namespace

Domination dominate_relation(const BiValue& a, const BiValue& b) {
  const int c1 = compare_f1(a, b);
  const int c2 = a.f2 < b.f2 ? -1 : a.f2 > b.f2 ? 1 : 0;
  if (c1 == 0 && c2 == 0) return Domination::equal;
  if (c1 >= 0 && c2 >= 0) return Domination::a_strict;
  if (c1 <= 0 && c2 <= 0) return Domination::b_strict;
  return Domination::incomparable;
}

bool ParetoArchive::offer(Sequence seq, const BiValue& value) {
  for (const Entry& e : entries_) {
    if (dominate_relation(e.value, value) == Domination::a_strict) return false;
  }
  std::erase_if(entries_, [&value](const Entry& e) {
    const Domination rel = dominate_relation(value, e.value);
    return rel == Domination::a_strict || rel == Domination::equal;
  });
  entries_.push_back(Entry{std::move(seq), value});
  return true;
}

Sequence mutate(const Sequence& s, int ground_size, bool allow_repeats, Rng& rng,
                MutationStats* stats) {
  Sequence out = s;
  const int r = rng.poisson1();
  if (stats) {
    ++stats->calls;
    ++stats->r_counts[r];
  }
  for (int op = 0; op < r; ++op) {
    const bool insertion = rng.uniform() < 0.5;
    if (insertion) {
      if (stats) ++stats->insertions;
      Item picked;
      if (allow_repeats) {
        picked = static_cast<Item>(rng.uniform_int(static_cast<std::uint64_t>(ground_size)));
      } else {
        std::vector<char> used(static_cast<std::size_t>(ground_size), 0);
        for (Item v : out) used[static_cast<std::size_t>(v)] = 1;
        std::vector<Item> unused;
        unused.reserve(static_cast<std::size_t>(ground_size) - out.items().size());
        for (Item v = 0; v < ground_size; ++v) {
          if (!used[static_cast<std::size_t>(v)]) unused.push_back(v);
        }
        if (unused.empty()) {
          if (stats) ++stats->full_insertion_noops;
          continue;
        }
        picked = unused[rng.uniform_int(unused.size())];
      }
      const int pos = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(out.length()) + 1));
      out.insert_at(pos, picked);
    } else {
      if (stats) ++stats->deletions;
      if (out.empty()) {
        if (stats) ++stats->empty_deletion_noops;
        continue;
      }
      out.erase_at(static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(out.length()))));
    }
  }
  return out;
}

namespace {

std::uint64_t archive_invariant_violations(const ParetoArchive& archive, int cap) {
  std::uint64_t bad = 0;
  const auto& entries = archive.entries();
  if (entries.size() > static_cast<std::size_t>(cap)) ++bad;
  for (const auto& e : entries) {
    if (e.value.neg_inf) ++bad;
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      if (dominate_relation(entries[i].value, entries[j].value) != Domination::incomparable) ++bad;
    }
  }
  return bad;
}

}  // namespace

RunRecord gsemo(const ObjectiveOracle& oracle, const GsemoConfig& config) {
  if (config.k < 1) throw ValidationError("gsemo requires k >= 1");
  const int n = oracle.ground_size();
  const int cap = config.variant == GsemoVariant::standard ? 2 * config.k : config.k + 1;
  const int stride = config.trace_stride > 0 ? config.trace_stride : config.k * n;
  Rng rng(config.seed);
  const std::uint64_t evals_before = oracle.eval_count();

  RunRecord record;
  ParetoArchive archive;
  double best_f;
  {
    BiValue empty_value{oracle.evaluate(Sequence{}), 0, false};
    archive.offer(Sequence{}, empty_value);
    best_f = empty_value.f1;
  }
  std::uint64_t next_checkpoint = static_cast<std::uint64_t>(stride);

  for (std::uint64_t iter = 0; iter < config.iterations; ++iter) {
    const auto& entries = archive.entries();
    const Sequence& parent = entries[rng.uniform_int(entries.size())].seq;
    Sequence child = mutate(parent, n, config.allow_repeats, rng);
    BiValue value;
    value.f2 = -child.length();
    if (child.length() >= cap) {
      value.neg_inf = true;
    } else {
      value.f1 = oracle.evaluate(child);
    }
    const int child_len = child.length();
    const bool added = archive.offer(std::move(child), value);
    const double prev_best = best_f;
    if (added && !value.neg_inf && child_len <= config.k && value.f1 > best_f) best_f = value.f1;

    if (config.check_invariants) {
      record.invariant_violations += archive_invariant_violations(archive, cap);
      if (best_f < prev_best) ++record.invariant_violations;
    }

    if (config.record_trace) {
      const std::uint64_t used = oracle.eval_count() - evals_before;
      while (used >= next_checkpoint) {
        record.trace.push_back(TracePoint{next_checkpoint, best_f});
        next_checkpoint += static_cast<std::uint64_t>(stride);
      }
    }
  }

  // Final answer from the archive: best f among members of length <= k,
  // shortest such member on ties. Equals the running best by the archive's
  // replacement rule.
  std::vector<const ParetoArchive::Entry*> final_entries;
  for (const auto& e : archive.entries()) final_entries.push_back(&e);
  std::sort(final_entries.begin(), final_entries.end(),
            [](const auto* a, const auto* b) { return a->seq.length() < b->seq.length(); });
  bool have_best = false;
  for (const auto* e : final_entries) {
    if (e->seq.length() > config.k || e->value.neg_inf) continue;
    if (!have_best || e->value.f1 > record.best_value) {
      record.best = e->seq;
      record.best_value = e->value.f1;
      have_best = true;
    }
  }
  record.iterations = config.iterations;
  record.evaluations_used = oracle.eval_count() - evals_before;
  if (config.record_trace) {
    record.trace.push_back(TracePoint{record.evaluations_used, record.best_value});
  }
  return record;
}

Sequence greedy(const ObjectiveOracle& oracle, int k, bool allow_repeats) {
  if (k < 1) throw ValidationError("greedy requires k >= 1");
  const int n = oracle.ground_size();
  Sequence s;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int iter = 0; iter < k; ++iter) {
    Item best_item = -1;
    double best_f = -std::numeric_limits<double>::infinity();
    for (Item v = 0; v < n; ++v) {
      if (!allow_repeats && used[static_cast<std::size_t>(v)]) continue;
      s.push_back(v);
      const double f = oracle.evaluate(s);
      s.erase_at(s.length() - 1);
      if (f > best_f) {
        best_f = f;
        best_item = v;
      }
    }
    if (best_item < 0) break;
    s.push_back(best_item);
    used[static_cast<std::size_t>(best_item)] = 1;
  }
  return s;
}

Sequence generalized_greedy(const ObjectiveOracle& oracle, int k, bool allow_repeats) {
  if (k < 1) throw ValidationError("generalized_greedy requires k >= 1");
  const int n = oracle.ground_size();
  Sequence s;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int iter = 0; iter < k; ++iter) {
    int best_pos = -1;
    Item best_item = -1;
    double best_f = -std::numeric_limits<double>::infinity();
    for (int pos = 0; pos <= s.length(); ++pos) {
      for (Item v = 0; v < n; ++v) {
        if (!allow_repeats && used[static_cast<std::size_t>(v)]) continue;
        s.insert_at(pos, v);
        const double f = oracle.evaluate(s);
        s.erase_at(pos);
        if (f > best_f) {
          best_f = f;
          best_pos = pos;
          best_item = v;
        }
      }
    }
    if (best_item < 0) break;
    s.insert_at(best_pos, best_item);
    used[static_cast<std::size_t>(best_item)] = 1;
  }
  return s;
}

Sequence omega(const DagOracle& oracle, int k) {
  if (k < 1) throw ValidationError("omega requires k >= 1");
  const PreferenceDag& dag = oracle.dag();
  const std::vector<Edge>& all_edges = dag.edges();
  std::vector<char> in_q(all_edges.size(), 0);
  std::vector<char> covered(static_cast<std::size_t>(dag.n()), 0);
  std::vector<Item> covered_items;

  auto with_edge = [&](const Edge& e) {
    std::vector<Item> items = covered_items;
    if (!covered[static_cast<std::size_t>(e.src)]) items.push_back(e.src);
    if (e.dst != e.src && !covered[static_cast<std::size_t>(e.dst)]) items.push_back(e.dst);
    return items;
  };

  for (;;) {
    int best_edge = -1;
    double best_f = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < all_edges.size(); ++i) {
      if (in_q[i]) continue;
      const Edge& e = all_edges[i];
      std::vector<Item> items = with_edge(e);
      if (static_cast<int>(items.size()) > k) continue;
      const double f = oracle.evaluate(reorder(dag, std::move(items)));
      if (f > best_f) {
        best_f = f;
        best_edge = static_cast<int>(i);
      }
    }
    if (best_edge < 0) break;
    in_q[static_cast<std::size_t>(best_edge)] = 1;
    const Edge& e = all_edges[static_cast<std::size_t>(best_edge)];
    if (!covered[static_cast<std::size_t>(e.src)]) {
      covered[static_cast<std::size_t>(e.src)] = 1;
      covered_items.push_back(e.src);
    }
    if (!covered[static_cast<std::size_t>(e.dst)]) {
      covered[static_cast<std::size_t>(e.dst)] = 1;
      covered_items.push_back(e.dst);
    }
  }
  return reorder(dag, covered_items);
}

std::uint64_t budget_for(ProblemClass problem_class, int n, int k, GsemoVariant variant) {
  if (n < 1 || k < 1) throw ValidationError("budget_for requires n >= 1 and k >= 1");
  const long double e = std::exp(1.0L);
  const long double kd = k;
  const long double nd = n;
  long double value = 0;
  if (problem_class == ProblemClass::dag) {
    value = variant == GsemoVariant::standard ? 4 * e * kd * kd * nd * nd
                                              : 2 * e * kd * (kd + 1) * nd * nd;
  } else {
    value = variant == GsemoVariant::standard ? 2 * e * kd * kd * (kd + 1) * nd
                                              : e * kd * (kd + 1) * (kd + 1) * nd;
  }
  return static_cast<std::uint64_t>(std::ceil(value));
}

void write_run_record_csv(const RunRecord& record, std::ostream& os) {
  os << "eval_count,best_f\n";
  char buf[32];
  for (const TracePoint& tp : record.trace) {
    std::snprintf(buf, sizeof buf, "%.12g", tp.best_f);
    os << tp.evals << ',' << buf << '\n';
  }
  os << "best,";
  for (int i = 0; i < record.best.length(); ++i) {
    if (i) os << ' ';
    os << record.best[i];
  }
  os << '\n';
}

}  // namespace seqsub
