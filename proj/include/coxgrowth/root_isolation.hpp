#ifndef COXGROWTH_ROOT_ISOLATION_HPP
#define COXGROWTH_ROOT_ISOLATION_HPP

#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// Dyadic interval (lo/2^k, hi/2^k); lo == hi marks an exact root.
struct DyadicCell {
  Int lo;
  Int hi;
  unsigned long k = 0;
  bool exact = false;
};

// Descartes bound on the number of roots in the open interval (0,1): the
// sign variations of (x+1)^deg p(1/(x+1)). Zero variations mean no roots,
// one variation exactly one.
int root_count_bound_01(const IntPolynomial& p);

// Same bound on the open dyadic interval (a/2^k, b/2^k).
int root_count_bound(const IntPolynomial& p, const Int& a, const Int& b, unsigned long k);

// Isolating intervals (or exact dyadic points) for all roots of a
// squarefree polynomial in (0,1), left to right, by repeated bisection of
// the Descartes test. p(0) must be nonzero.
std::vector<DyadicCell> isolate_roots_01(const IntPolynomial& p);

}  // namespace coxgrowth

#endif
