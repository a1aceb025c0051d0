#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "seqsub/errors.hpp"

namespace seqsub {

// Ground-set item, identified by its index in [0, n).
using Item = std::int32_t;

// Immutable-by-convention ordered list of items; the search-space element.
// Length 0 is the empty sequence.
class Sequence {
 public:
  Sequence() = default;
  explicit Sequence(std::vector<Item> items) : items_(std::move(items)) {}
  Sequence(std::initializer_list<Item> items) : items_(items) {}

  int length() const { return static_cast<int>(items_.size()); }
  bool empty() const { return items_.empty(); }
  Item operator[](int i) const { return items_[static_cast<std::size_t>(i)]; }
  const std::vector<Item>& items() const { return items_; }

  void push_back(Item v) { items_.push_back(v); }
  void insert_at(int pos, Item v) { items_.insert(items_.begin() + pos, v); }
  void erase_at(int pos) { items_.erase(items_.begin() + pos); }

  bool operator==(const Sequence&) const = default;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Item> items_;
};

struct RelationFlags {
  bool subseq = false;
  bool prefix = false;
  bool suffix = false;
};

inline bool is_subsequence(const Sequence& s, const Sequence& t) {
  int i = 0;
  for (int j = 0; j < t.length() && i < s.length(); ++j) {
    if (s[i] == t[j]) ++i;
  }
  return i == s.length();
}

inline bool is_prefix(const Sequence& s, const Sequence& t) {
  if (s.length() > t.length()) return false;
  return std::equal(s.begin(), s.end(), t.begin());
}

inline bool is_suffix(const Sequence& s, const Sequence& t) {
  if (s.length() > t.length()) return false;
  return std::equal(s.begin(), s.end(), t.end() - s.length());
}

// All relations that hold between s and t. A prefix or suffix is always also
// a subsequence, and relation(s, s) reports all three.
inline RelationFlags relation(const Sequence& s, const Sequence& t) {
  RelationFlags r;
  r.prefix = is_prefix(s, t);
  r.suffix = is_suffix(s, t);
  r.subseq = r.prefix || r.suffix || is_subsequence(s, t);
  return r;
}

inline Sequence concat(const Sequence& s, const Sequence& t) {
  std::vector<Item> out;
  out.reserve(static_cast<std::size_t>(s.length() + t.length()));
  out.insert(out.end(), s.begin(), s.end());
  out.insert(out.end(), t.begin(), t.end());
  return Sequence(std::move(out));
}

inline bool has_repeats(const Sequence& s) {
  for (int i = 0; i < s.length(); ++i) {
    for (int j = i + 1; j < s.length(); ++j) {
      if (s[i] == s[j]) return true;
    }
  }
  return false;
}

// Concatenation that honors a no-repeat context.
inline Sequence concat_checked(const Sequence& s, const Sequence& t, bool allow_repeats) {
  Sequence out = concat(s, t);
  if (!allow_repeats && has_repeats(out)) {
    throw RepeatViolation("concatenation repeats an item in a no-repeat context");
  }
  return out;
}

inline bool lex_less(const Sequence& a, const Sequence& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Distinct items of s in ascending order.
inline std::vector<Item> item_set(const Sequence& s) {
  std::vector<Item> out(s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::string to_string(const Sequence& s) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < s.length(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
  os << ')';
  return os.str();
}

}  // namespace seqsub
