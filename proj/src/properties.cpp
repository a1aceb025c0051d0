#include "seqsub/properties.hpp"

#include <algorithm>
#include <limits>

#include "seqsub/errors.hpp"

namespace seqsub {

const char* to_string(MonotonicityKind kind) {
  switch (kind) {
    case MonotonicityKind::subsequence: return "subsequence-monotone";
    case MonotonicityKind::prefix: return "prefix-monotone";
    case MonotonicityKind::suffix: return "suffix-monotone";
    case MonotonicityKind::weak: return "weak-monotone";
  }
  return "?";
}

const char* to_string(SubmodularityKind kind) {
  switch (kind) {
    case SubmodularityKind::strong: return "strong-submodular";
    case SubmodularityKind::subsequence: return "subsequence-submodular";
    case SubmodularityKind::prefix: return "prefix-submodular";
  }
  return "?";
}

SequenceSpace::SequenceSpace(int n, int max_len, bool allow_repeats)
    : n_(n), max_len_(max_len), allow_repeats_(allow_repeats) {
  count_.resize(static_cast<std::size_t>(max_len_) + 1);
  offset_.resize(static_cast<std::size_t>(max_len_) + 2);
  count_[0] = 1;
  offset_[0] = 0;
  offset_[1] = 1;
  for (int l = 1; l <= max_len_; ++l) {
    const std::uint64_t choices =
        allow_repeats_ ? static_cast<std::uint64_t>(n_)
                       : static_cast<std::uint64_t>(std::max(0, n_ - (l - 1)));
    count_[l] = count_[l - 1] * choices;
    offset_[l + 1] = offset_[l] + count_[l];
  }
}

Sequence SequenceSpace::unrank(std::uint64_t idx) const {
  int l = 0;
  while (idx >= offset_[l + 1]) ++l;
  std::uint64_t r = idx - offset_[l];
  std::vector<Item> items(static_cast<std::size_t>(l));
  if (allow_repeats_) {
    for (int pos = l - 1; pos >= 0; --pos) {
      items[static_cast<std::size_t>(pos)] = static_cast<Item>(r % static_cast<std::uint64_t>(n_));
      r /= static_cast<std::uint64_t>(n_);
    }
  } else {
    // Mixed radix with shrinking choice counts, digits index the unused items.
    std::vector<std::uint64_t> digits(static_cast<std::size_t>(l));
    for (int pos = l - 1; pos >= 0; --pos) {
      const std::uint64_t choices = static_cast<std::uint64_t>(n_ - pos);
      digits[static_cast<std::size_t>(pos)] = r % choices;
      r /= choices;
    }
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    for (int pos = 0; pos < l; ++pos) {
      std::uint64_t want = digits[static_cast<std::size_t>(pos)];
      for (Item v = 0; v < n_; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        if (want == 0) {
          items[static_cast<std::size_t>(pos)] = v;
          used[static_cast<std::size_t>(v)] = 1;
          break;
        }
        --want;
      }
    }
  }
  return Sequence(std::move(items));
}

std::uint64_t SequenceSpace::rank(const Sequence& s) const {
  const int l = s.length();
  std::uint64_t r = 0;
  if (allow_repeats_) {
    for (int pos = 0; pos < l; ++pos) {
      r = r * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(s[pos]);
    }
  } else {
    std::vector<char> used(static_cast<std::size_t>(n_), 0);
    for (int pos = 0; pos < l; ++pos) {
      std::uint64_t smaller_unused = 0;
      for (Item v = 0; v < s[pos]; ++v) {
        if (!used[static_cast<std::size_t>(v)]) ++smaller_unused;
      }
      r = r * static_cast<std::uint64_t>(n_ - pos) + smaller_unused;
      used[static_cast<std::size_t>(s[pos])] = 1;
    }
  }
  return offset_[l] + r;
}

bool SequenceSpace::contains(const Sequence& s) const {
  if (s.length() > max_len_) return false;
  for (Item v : s) {
    if (v < 0 || v >= n_) return false;
  }
  if (!allow_repeats_ && has_repeats(s)) return false;
  return true;
}

ValueTable::ValueTable(const ObjectiveOracle& oracle, const SequenceSpace& space, bool parallel)
    : space_(&space), values_(space.size()) {
  const std::int64_t total = static_cast<std::int64_t>(space.size());
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 256) if (parallel)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      const Sequence s = space.unrank(static_cast<std::uint64_t>(i));
      values_[static_cast<std::size_t>(i)] =
          oracle.in_check_space(s) ? oracle.evaluate(s)
                                   : std::numeric_limits<double>::quiet_NaN();
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Violation {
  std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
  PropertyWitness witness;
};

struct ScanTally {
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
};

// Full scan over outer indices; fn reports the first violation inside index i
// (if any) and accumulates tallies. The minimum outer index wins, so the
// resulting report is identical under any schedule.
template <typename Fn>
std::optional<Violation> scan_outer(std::uint64_t count, bool parallel, ScanTally& tally, Fn&& fn) {
  Violation best;
  bool found = false;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  const std::int64_t total = static_cast<std::int64_t>(count);
#pragma omp parallel if (parallel)
  {
    Violation local;
    bool local_found = false;
    ScanTally local_tally;
#pragma omp for schedule(dynamic, 16) nowait
    for (std::int64_t i = 0; i < total; ++i) {
      auto v = fn(static_cast<std::uint64_t>(i), local_tally);
      if (v && (!local_found || v->key < local.key)) {
        local = std::move(*v);
        local_found = true;
      }
    }
#pragma omp critical
    {
      if (local_found && (!found || local.key < best.key)) {
        best = std::move(local);
        found = true;
      }
      checked += local_tally.checked;
      skipped += local_tally.skipped;
    }
  }
  tally.checked = checked;
  tally.skipped = skipped;
  if (!found) return std::nullopt;
  return best;
}

std::vector<Sequence> subsequences_of(const Sequence& t) {
  const int l = t.length();
  std::vector<Sequence> out;
  out.reserve(std::size_t{1} << l);
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<Item> items;
    for (int j = 0; j < l; ++j) {
      if (mask & (1u << j)) items.push_back(t[j]);
    }
    out.emplace_back(std::move(items));
  }
  return out;
}

double max_abs4(double a, double b, double c, double d) {
  return std::max(std::max(std::fabs(a), std::fabs(b)), std::max(std::fabs(c), std::fabs(d)));
}

}  // namespace

std::vector<Sequence> weak_candidates(const Sequence& s, const Sequence& t) {
  std::vector<Sequence> out;
  std::vector<Item> cur;
  cur.reserve(static_cast<std::size_t>(s.length() + t.length()));
  auto rec = [&](auto&& self, int i, int j) -> void {
    if (i == s.length() && j == t.length()) {
      out.emplace_back(cur);
      return;
    }
    if (i < s.length() && j < t.length() && s[i] == t[j]) {
      cur.push_back(s[i]);
      self(self, i + 1, j + 1);
      cur.pop_back();
    }
    if (i < s.length()) {
      cur.push_back(s[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < t.length()) {
      cur.push_back(t[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Sequence& a, const Sequence& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return lex_less(a, b);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PropertyReport check_monotonicity(const ObjectiveOracle& oracle, MonotonicityKind kind,
                                  const CheckOptions& options) {
  const int table_len = kind == MonotonicityKind::weak ? 2 * options.max_len : options.max_len;
  SequenceSpace space(oracle.ground_size(), table_len, oracle.allows_repeats());
  if (space.size() > options.eval_budget) throw BudgetExceeded(space.size(), options.eval_budget);
  const std::uint64_t evals_before = oracle.eval_count();
  ValueTable table(oracle, space, options.parallel);

  SequenceSpace base(oracle.ground_size(), options.max_len, oracle.allows_repeats());
  const double tol = options.tolerance;

  ScanTally tally;
  std::optional<Violation> violation;

  if (kind == MonotonicityKind::weak) {
    const std::uint64_t pairs = base.size() * base.size();
    violation = scan_outer(pairs, options.parallel, tally,
                           [&](std::uint64_t pi, ScanTally& t_local) -> std::optional<Violation> {
      const Sequence s = base.unrank(pi / base.size());
      const Sequence t = base.unrank(pi % base.size());
      if (!oracle.in_check_space(s) || !oracle.in_check_space(t)) {
        ++t_local.skipped;
        return std::nullopt;
      }
      const double fs = table.value(s);
      std::vector<Sequence> cands = weak_candidates(s, t);
      std::erase_if(cands, [&oracle](const Sequence& w) { return !oracle.in_check_space(w); });
      if (cands.empty()) {
        ++t_local.skipped;
        return std::nullopt;
      }
      ++t_local.checked;
      double best_w = -std::numeric_limits<double>::infinity();
      for (const Sequence& w : cands) best_w = std::max(best_w, table.value(w));
      if (violates_geq(best_w, fs, tol, std::max(std::fabs(best_w), std::fabs(fs)))) {
        return Violation{pi, PropertyWitness{{s, t}, std::nullopt, best_w, fs}};
      }
      return std::nullopt;
    });
  } else {
    violation = scan_outer(base.size(), options.parallel, tally,
                           [&](std::uint64_t ti, ScanTally& t_local) -> std::optional<Violation> {
      const Sequence t = base.unrank(ti);
      if (!oracle.in_check_space(t)) {
        ++t_local.skipped;
        return std::nullopt;
      }
      const double ft = table.value_at(ti);
      std::vector<Sequence> subs;
      switch (kind) {
        case MonotonicityKind::subsequence:
          subs = subsequences_of(t);
          break;
        case MonotonicityKind::prefix:
          for (int l = 0; l <= t.length(); ++l) {
            subs.emplace_back(std::vector<Item>(t.items().begin(), t.items().begin() + l));
          }
          break;
        case MonotonicityKind::suffix:
          for (int l = 0; l <= t.length(); ++l) {
            subs.emplace_back(std::vector<Item>(t.items().end() - l, t.items().end()));
          }
          break;
        case MonotonicityKind::weak:
          break;
      }
      for (const Sequence& s : subs) {
        if (!oracle.in_check_space(s)) {
          ++t_local.skipped;
          continue;
        }
        ++t_local.checked;
        const double fs = table.value(s);
        if (violates_geq(ft, fs, tol, std::max(std::fabs(ft), std::fabs(fs)))) {
          return Violation{ti, PropertyWitness{{s, t}, std::nullopt, ft, fs}};
        }
      }
      return std::nullopt;
    });
  }

  PropertyReport report;
  report.property = to_string(kind);
  report.max_len = options.max_len;
  report.ground_size = oracle.ground_size();
  report.evals_used = oracle.eval_count() - evals_before;
  report.combinations_checked = tally.checked;
  report.combinations_skipped = tally.skipped;
  if (violation) {
    report.holds = false;
    report.witness = std::move(violation->witness);
  }
  return report;
}

PropertyReport check_submodularity(const ObjectiveOracle& oracle, SubmodularityKind kind,
                                   const CheckOptions& options) {
  const int L = options.max_len;
  const int table_len = kind == SubmodularityKind::strong ? 2 * L + 1 : L + 1;
  SequenceSpace space(oracle.ground_size(), table_len, oracle.allows_repeats());
  if (space.size() > options.eval_budget) throw BudgetExceeded(space.size(), options.eval_budget);
  const std::uint64_t evals_before = oracle.eval_count();
  ValueTable table(oracle, space, options.parallel);

  SequenceSpace base(oracle.ground_size(), L, oracle.allows_repeats());
  const int n = oracle.ground_size();
  const double tol = options.tolerance;

  ScanTally tally;
  auto violation = scan_outer(base.size(), options.parallel, tally,
                              [&](std::uint64_t ti, ScanTally& t_local) -> std::optional<Violation> {
    const Sequence t = base.unrank(ti);
    if (!oracle.in_check_space(t)) {
      ++t_local.skipped;
      return std::nullopt;
    }
    std::vector<Sequence> ss;
    if (kind == SubmodularityKind::prefix) {
      for (int l = 0; l <= t.length(); ++l) {
        ss.emplace_back(std::vector<Item>(t.items().begin(), t.items().begin() + l));
      }
    } else {
      ss = subsequences_of(t);
    }
    const std::uint64_t o_count = kind == SubmodularityKind::strong ? base.size() : 1;
    for (std::uint64_t oi = 0; oi < o_count; ++oi) {
      const Sequence o = kind == SubmodularityKind::strong ? base.unrank(oi) : Sequence{};
      for (Item v = 0; v < n; ++v) {
        Sequence t_v_o = t;
        t_v_o.push_back(v);
        for (Item x : o) t_v_o.push_back(x);
        // Subsequence closure of the check space covers the s-side composites.
        if (!oracle.in_check_space(t_v_o)) {
          t_local.skipped += ss.size();
          continue;
        }
        const Sequence t_o = concat(t, o);
        const double gain_t = table.value(t_v_o) - table.value(t_o);
        for (const Sequence& s : ss) {
          ++t_local.checked;
          Sequence s_v_o = s;
          s_v_o.push_back(v);
          for (Item x : o) s_v_o.push_back(x);
          const Sequence s_o = concat(s, o);
          const double gain_s = table.value(s_v_o) - table.value(s_o);
          const double scale = max_abs4(table.value(t_v_o), table.value(t_o),
                                        table.value(s_v_o), table.value(s_o));
          if (violates_geq(gain_s, gain_t, tol, scale)) {
            PropertyWitness w;
            w.seqs = kind == SubmodularityKind::strong ? std::vector<Sequence>{s, t, o}
                                                       : std::vector<Sequence>{s, t};
            w.item = v;
            w.lhs = gain_s;
            w.rhs = gain_t;
            return Violation{ti, std::move(w)};
          }
        }
      }
    }
    return std::nullopt;
  });

  PropertyReport report;
  report.property = to_string(kind);
  report.max_len = options.max_len;
  report.ground_size = oracle.ground_size();
  report.evals_used = oracle.eval_count() - evals_before;
  report.combinations_checked = tally.checked;
  report.combinations_skipped = tally.skipped;
  if (violation) {
    report.holds = false;
    report.witness = std::move(violation->witness);
  }
  return report;
}

double curvature(const ObjectiveOracle& oracle, const Sequence& s, int m,
                 const CheckOptions& options) {
  if (m < 1) throw ValidationError("curvature requires m >= 1");
  if (s.empty()) throw ValidationError("curvature is undefined for the empty sequence");
  SequenceSpace probes(oracle.ground_size(), m, oracle.allows_repeats());
  if (probes.size() > options.eval_budget) throw BudgetExceeded(probes.size(), options.eval_budget);
  const double fs = oracle.evaluate(s);
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 1; i < probes.size(); ++i) {  // rank 0 is the empty sequence
    const Sequence t = probes.unrank(i);
    Sequence t_s = concat(t, s);
    if (!oracle.allows_repeats() && has_repeats(t_s)) continue;
    if (!oracle.in_check_space(t)) continue;
    const double ft = oracle.evaluate(t);
    if (ft <= 0.0) {
      throw DegenerateInstance("curvature ratio undefined: f" + seqsub::to_string(t) + " = 0");
    }
    const double val = 1.0 - (oracle.evaluate(t_s) - fs) / ft;
    worst = std::max(worst, val);
  }
  return worst;
}

}  // namespace seqsub
