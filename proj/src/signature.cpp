#include "coxgrowth/signature.hpp"

#include <vector>

namespace coxgrowth {

std::string to_string(SignatureClass s) {
  switch (s) {
    case SignatureClass::PositiveDefinite: return "positive-definite";
    case SignatureClass::SemidefiniteCorank1: return "semidefinite-corank-1";
    case SignatureClass::Lorentzian: return "signature (n-1,1)";
    case SignatureClass::Other: return "other";
  }
  return "?";
}

EigenvalueCensus eigenvalue_census(const GramMatrix& g, const Real& tolerance) {
  const int n = g.rank;
  EigenvalueCensus census;
  if (n == 0) return census;
  const mpfr_prec_t prec = g.entries.front().prec();
  std::vector<Real> a(g.entries);
  auto at = [&a, n](int i, int j) -> Real& { return a[static_cast<size_t>(i) * n + j]; };

  const Real one(1, prec);
  const Real two(2, prec);
  // entries are bounded by 1, so an absolute sweep threshold suffices
  Real stop("1e-" + std::to_string(g.digits + 8), prec);

  for (int sweep = 0; sweep < 60; ++sweep) {
    Real off(0, prec);
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = off + at(p, q).abs();
    if (off < stop) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        Real apq = at(p, q);
        if (apq.abs() < stop) continue;
        Real theta = (at(q, q) - at(p, p)) / (two * apq);
        Real t = one / (theta.abs() + (theta * theta + one).sqrt());
        if (theta.sign() < 0) t = -t;
        Real c = one / (t * t + one).sqrt();
        Real s = t * c;
        for (int k = 0; k < n; ++k) {
          Real akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          Real apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  for (int i = 0; i < n; ++i) {
    const Real& lambda = at(i, i);
    if (lambda.abs() < tolerance)
      ++census.zero;
    else if (lambda.sign() > 0)
      ++census.positive;
    else
      ++census.negative;
  }
  return census;
}

SignatureClass signature_class(const CoxeterMatrix& m, long precision_digits,
                               const std::string& tolerance) {
  GramMatrix g = gram_matrix(m, precision_digits);
  Real tol(tolerance, bits_for_digits(precision_digits));
  EigenvalueCensus c = eigenvalue_census(g, tol);
  if (c.zero == 0 && c.negative == 0) return SignatureClass::PositiveDefinite;
  if (c.zero == 1 && c.negative == 0) return SignatureClass::SemidefiniteCorank1;
  if (c.zero == 0 && c.negative == 1) return SignatureClass::Lorentzian;
  return SignatureClass::Other;
}

}  // namespace coxgrowth
