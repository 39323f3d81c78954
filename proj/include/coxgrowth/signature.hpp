#ifndef COXGROWTH_SIGNATURE_HPP
#define COXGROWTH_SIGNATURE_HPP

#include <string>

#include "coxgrowth/gram.hpp"

namespace coxgrowth {

enum class SignatureClass { PositiveDefinite, SemidefiniteCorank1, Lorentzian, Other };
std::string to_string(SignatureClass s);

struct EigenvalueCensus {
  int positive = 0;
  int negative = 0;
  int zero = 0;  // |lambda| < tolerance
};

// Eigenvalue signs of the cosine matrix by cyclic Jacobi rotations at the
// matrix's own precision; eigenvalues within the tolerance of zero count as
// zero. This is the numeric cross-check of the diagram classifier, so it
// deliberately shares no code with it.
EigenvalueCensus eigenvalue_census(const GramMatrix& g, const Real& tolerance);

SignatureClass signature_class(const CoxeterMatrix& m, long precision_digits = 40,
                               const std::string& tolerance = "1e-20");

}  // namespace coxgrowth

#endif
