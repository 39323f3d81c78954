#ifndef COXGROWTH_WORD_CENSUS_HPP
#define COXGROWTH_WORD_CENSUS_HPP

#include <cstdint>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

// counts[k] = number of group elements of length exactly k. The list stops
// early if the whole (finite) group is exhausted, in which case complete
// is true.
struct WordCensus {
  std::vector<long> counts;
  bool complete = false;
};

// Breadth-first census of reduced words, one layer per length. Element
// identity is decided purely combinatorially: two reduced words represent
// the same element iff they are connected by braid moves, so each class is
// kept as its lexicographically least member. Nothing here touches the
// series machinery; this is the independent oracle.
//
// Cost is exponential in max_len; the call refuses to start if
// rank^max_len exceeds the budget, naming the bound in the error.
WordCensus count_by_length(const CoxeterMatrix& m, int max_len, long budget = 50'000'000);

}  // namespace coxgrowth

#endif
