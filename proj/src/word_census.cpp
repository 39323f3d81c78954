#include "coxgrowth/word_census.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace coxgrowth {

namespace {

bool has_adjacent_repeat(const std::string& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return true;
  return false;
}

struct WordClass {
  bool reduced = true;
  std::string least;  // lexicographically least braid-equivalent word
};

// Walks the braid closure of `start`: for each adjacent pair of distinct
// letters (a, b) with m = m(a,b) finite, an alternating run abab... of
// length m may be rewritten as baba.... Braid moves preserve length so the
// closure is finite; by Tits the word is reduced iff no member of the
// closure has an adjacent repeated letter, and two reduced words are equal
// in the group iff their closures coincide. Stops early on a repeat.
WordClass classify_word(const CoxeterMatrix& m, const std::string& start) {
  WordClass out;
  out.least = start;
  if (has_adjacent_repeat(start)) {
    out.reduced = false;
    return out;
  }
  std::unordered_set<std::string> seen{start};
  std::vector<std::string> queue{start};
  for (size_t head = 0; head < queue.size(); ++head) {
    std::string w = queue[head];
    const size_t len = w.size();
    for (size_t i = 0; i + 1 < len; ++i) {
      char a = w[i], b = w[i + 1];
      if (a == b) continue;
      int rel = m.label(a, b);
      if (rel == CoxeterMatrix::kInfinity) continue;
      if (i + static_cast<size_t>(rel) > len) continue;
      bool alternating = true;
      for (int j = 2; j < rel; ++j) {
        char expect = (j % 2 == 0) ? a : b;
        if (w[i + static_cast<size_t>(j)] != expect) {
          alternating = false;
          break;
        }
      }
      if (!alternating) continue;
      std::string flipped = w;
      for (int j = 0; j < rel; ++j) flipped[i + static_cast<size_t>(j)] = (j % 2 == 0) ? b : a;
      if (!seen.insert(flipped).second) continue;
      if (has_adjacent_repeat(flipped)) {
        out.reduced = false;
        return out;
      }
      if (flipped < out.least) out.least = flipped;
      queue.push_back(flipped);
    }
  }
  return out;
}

}  // namespace

WordCensus count_by_length(const CoxeterMatrix& m, int max_len, long budget) {
  if (max_len < 0) throw std::invalid_argument("count_by_length wants max_len >= 0");
  const int rank = m.rank();
  // crude pre-estimate of the search volume
  long estimate = 1;
  for (int i = 0; i < max_len; ++i) {
    estimate *= std::max(rank, 1);
    if (estimate > budget)
      throw std::invalid_argument("census budget exceeded: rank^max_len = " +
                                  std::to_string(rank) + "^" + std::to_string(max_len) +
                                  " > " + std::to_string(budget));
  }

  WordCensus census;
  census.counts.push_back(1);  // the identity
  std::unordered_set<std::string> layer{std::string()};
  for (int len = 1; len <= max_len + 1; ++len) {
    std::unordered_set<std::string> next;
    for (const std::string& w : layer) {
      for (char s = 0; s < static_cast<char>(rank); ++s) {
        WordClass cls = classify_word(m, w + s);
        if (cls.reduced) next.insert(std::move(cls.least));
      }
    }
    if (next.empty()) {
      census.complete = true;
      break;
    }
    if (len == max_len + 1) break;  // probe layer only told us we are not done
    census.counts.push_back(static_cast<long>(next.size()));
    layer = std::move(next);
  }
  return census;
}

}  // namespace coxgrowth
