#ifndef COXGROWTH_GROWTH_HPP
#define COXGROWTH_GROWTH_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/poincare.hpp"

namespace coxgrowth {

enum class GrowthKind { FiniteGroup, PolynomialGrowth, Exponential };
std::string to_string(GrowthKind k);

// Exact dyadic bracket around the smallest positive denominator root r:
// lo/2^k <= r <= hi/2^k with den changing sign across it (or an exact
// dyadic root when exact is set).
struct GrowthCertificate {
  Int lo;
  Int hi;
  unsigned long k = 0;
  bool exact = false;
};

struct GrowthRate {
  GrowthKind kind = GrowthKind::Exponential;
  std::string value;        // "0", "1", or the first `digits` significant digits of omega
  std::string error_bound;  // "0" for exact values, otherwise "1e-<n>"
  int certified_digits = 0;
  std::optional<GrowthCertificate> certificate;
  std::string to_json() const;
};

// The exponential growth rate limsup a_n^(1/n), read off the series as the
// reciprocal of its convergence radius. A polynomial series is a finite
// group (omega 0 by convention); a denominator whose smallest positive root
// is exactly 1 is polynomial growth (omega 1); otherwise omega = 1/r for
// the smallest positive real root r of the denominator, which the series'
// nonnegative coefficients put on the positive axis. r is isolated by the
// Descartes subdivision and refined to `digits` significant digits by
// dyadic bisection, with Newton steps used only inside the certified
// bracket; the returned digits are exact truncations.
//
// digits must be >= 10; max_steps caps the refinement loop and an
// exhausted budget throws std::runtime_error.
GrowthRate growth_rate(const PoincareSeries& p, int digits = 30, long max_steps = 100000);

// First `count` coefficients a_0, a_1, ... of the series.
std::vector<Int> coefficients(const PoincareSeries& p, int count);

}  // namespace coxgrowth

#endif
