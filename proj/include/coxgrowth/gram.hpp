#ifndef COXGROWTH_GRAM_HPP
#define COXGROWTH_GRAM_HPP

#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/real.hpp"

namespace coxgrowth {

// The cosine matrix B with B[s][r] = -cos(pi / m[s][r]) and pi/inf = 0.
// Exactly symmetric with unit diagonal at every precision; label-2 entries
// are exactly 0, label-3 exactly -1/2, infinity exactly -1.
struct GramMatrix {
  int rank = 0;
  long digits = 0;
  std::vector<Real> entries;  // row-major, rank*rank

  const Real& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * static_cast<size_t>(rank) + static_cast<size_t>(j)];
  }
};

// precision is in decimal digits, at least 15.
GramMatrix gram_matrix(const CoxeterMatrix& m, long precision_digits = 40);

}  // namespace coxgrowth

#endif
