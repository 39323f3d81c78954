#ifndef COXGROWTH_ORDER_HPP
#define COXGROWTH_ORDER_HPP

#include <optional>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

// Witness for (W,S) <= (W',S'): an injection phi with
// m[s][r] <= m'[phi(s)][phi(r)] everywhere, infinity on top.
struct OrderWitness {
  std::vector<int> injection;  // source vertex -> target vertex
};

// Backtracking search for a witnessing injection, pruned by sorted
// row-label domination.
std::optional<OrderWitness> leq_witness(const CoxeterMatrix& a, const CoxeterMatrix& b);
inline bool is_leq(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  return leq_witness(a, b).has_value();
}

// Irreducible and neither spherical nor affine.
bool in_X(const CoxeterMatrix& m);

// One-step descents in the order: every single vertex deletion and every
// single label decrement (label 3 drops to 2, deleting the edge; label-2
// pairs have nothing below). Exposed for the pruning-rule validation tests.
std::vector<CoxeterMatrix> order_children(const CoxeterMatrix& m);

// Whether no member of X sits strictly below m (strictly: comparable and
// not Coxeter-isomorphic). Requires in_X(m) and finite labels; a system
// with an infinite label is decided only in the rank-3 triangle family
// (where every such system has a finite-label triangle below it) and is an
// error otherwise.
bool is_minimal(const CoxeterMatrix& m);

}  // namespace coxgrowth

#endif
