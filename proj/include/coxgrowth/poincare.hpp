#ifndef COXGROWTH_POINCARE_HPP
#define COXGROWTH_POINCARE_HPP

#include <string>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/rational_function.hpp"

namespace coxgrowth {

enum class SeriesProvenance { SolomonProduct, BottProduct, SteinbergSum, TriangleClosedForm };
std::string to_string(SeriesProvenance p);

// A Poincare series as a canonical rational function. Construction always
// checks the two leading series coefficients: a_0 = 1 and a_1 = rank.
struct PoincareSeries {
  RationalFunction rf;
  SeriesProvenance provenance = SeriesProvenance::SteinbergSum;
};

// Product over the degrees of (t^d - 1)/(t - 1); a polynomial whose value
// at 1 is the group order and whose degree is the number of positive roots.
PoincareSeries spherical_poincare(const FiniteTypeName& t);

// Bott: p of the underlying finite type times prod_d 1/(1 - t^(d-1)).
PoincareSeries affine_poincare(const AffineTypeName& t);
// The finite type whose degrees drive the Bott product.
FiniteTypeName affine_underlying_finite(const AffineTypeName& t);

// The alternating sum over spherical residues, valid for every system:
//   1/p(1/t) = sum_{I spherical} (-1)^|I| / p_I(t).
// Accumulated over the common denominator built from the residues' degree
// multisets, one term per residue; with OpenMP the terms are reduced in
// parallel (exact arithmetic, so the result is order-independent).
PoincareSeries steinberg_poincare(const CoxeterMatrix& m);
// Reference implementation: literal pairwise rational-function additions in
// residue order. Kept for testing and benchmarking against the kernel.
PoincareSeries steinberg_poincare_serial(const CoxeterMatrix& m);

// Closed forms for the hyperbolic triangle groups; labels may be
// CoxeterMatrix::kInfinity. Requires 1/a + 1/b + 1/c < 1 (with 1/inf = 0)
// and throws std::domain_error otherwise.
PoincareSeries triangle_poincare(int a, int b, int c);

}  // namespace coxgrowth

#endif
