#ifndef COXGROWTH_RATIONAL_FUNCTION_HPP
#define COXGROWTH_RATIONAL_FUNCTION_HPP

#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// Quotient of integer polynomials in canonical form:
//   * den != 0,
//   * num and den coprime over Q,
//   * the lowest nonzero coefficient of den is positive,
//   * the gcd of all integer coefficients across num and den jointly is 1.
// The zero function is 0/1. Equality of canonical forms is memberwise.
class RationalFunction {
 public:
  // Canonicalizes an arbitrary quotient. Throws std::domain_error on a zero
  // denominator.
  static RationalFunction normalized(IntPolynomial num, IntPolynomial den);
  static RationalFunction from_polynomial(IntPolynomial p);
  static RationalFunction zero() { return from_polynomial(IntPolynomial()); }
  static RationalFunction one() { return from_polynomial(IntPolynomial::one()); }

  RationalFunction() : num_(), den_(IntPolynomial::one()) {}

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0 && den_.coeff(0) == 1; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  bool operator==(const RationalFunction& o) const = default;

  // den/num. Throws std::domain_error on the zero function.
  RationalFunction reciprocal() const;

  // g with g(t) = f(1/t): pad num and den to a common degree with powers of
  // t, reverse both coefficient arrays, re-normalize. Throws on zero input.
  RationalFunction reverse_variable() const;

  // First `count` power-series coefficients at t = 0. Requires den(0) != 0
  // ("not a power series at 0" otherwise); throws std::domain_error if a
  // coefficient is not an integer.
  std::vector<Int> series_coeffs(int count) const;

  // Exact value at a rational point; throws std::domain_error on a pole.
  Rat eval(const Rat& x) const;

  std::string to_pretty_string(const std::string& var = "t") const;

 private:
  RationalFunction(IntPolynomial num, IntPolynomial den)
      : num_(std::move(num)), den_(std::move(den)) {}
  IntPolynomial num_;
  IntPolynomial den_;
};

}  // namespace coxgrowth

#endif
