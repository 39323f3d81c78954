#ifndef COXGROWTH_POLYNOMIAL_HPP
#define COXGROWTH_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "coxgrowth/bigint.hpp"

namespace coxgrowth {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored in ascending degree order. The zero polynomial is the empty
// coefficient vector; otherwise the last stored coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial constant(Int c);
  // c * t^e
  static IntPolynomial monomial(Int c, int e);
  // 1 + t + ... + t^(d-1), the t-analogue (t^d - 1)/(t - 1).
  static IntPolynomial q_integer(int d);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  // Coefficient of t^i; zero outside the stored range.
  const Int& coeff(int i) const;
  const Int& leading() const;
  // Index of the lowest nonzero coefficient; -1 for zero.
  int valuation() const;

  IntPolynomial operator-() const;
  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const Int& c) const;
  bool operator==(const IntPolynomial& o) const = default;

  // Multiply by t^e.
  IntPolynomial shifted_up(int e) const;
  IntPolynomial derivative() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  // p(num/2^k) * 2^(k*deg), i.e. the integer sum( c_i num^i 2^(k(deg-i)) );
  // same sign and zeros as the value at the dyadic point.
  Int value_at_dyadic(const Int& num, unsigned long k) const;
  int sign_at_dyadic(const Int& num, unsigned long k) const;

  // Nonnegative gcd of all coefficients (0 for the zero polynomial).
  Int content() const;
  // this / content, with the leading coefficient made positive.
  IntPolynomial primitive_part() const;

  // Exact division: throws std::logic_error if the remainder is nonzero or
  // a quotient coefficient would be fractional.
  IntPolynomial divide_exact(const IntPolynomial& d) const;

  // p(x + 1) by iterated Horner; coefficients grow binomially.
  IntPolynomial taylor_shift_1() const;
  // p(x + s) for an arbitrary integer s.
  IntPolynomial taylor_shift(const Int& s) const;
  // 2^deg * p(x/2), used to map (0,1) root isolation onto subintervals.
  IntPolynomial scale_half() const;
  // Coefficients reversed: t^deg * p(1/t).
  IntPolynomial reversed() const;

  // Number of sign changes in the coefficient sequence (Descartes bound on
  // the positive real roots).
  int sign_variations() const;

  // this / gcd(this, derivative): same real roots, all simple.
  IntPolynomial squarefree_part() const;

  // "1+4t+8t^2-t^3" style, ascending powers.
  std::string to_pretty_string(const std::string& var = "t") const;
  std::vector<std::string> to_decimal_strings() const;
  static IntPolynomial from_decimal_strings(const std::vector<std::string>& v);

 private:
  void trim();
  std::vector<Int> coeffs_;
};

// Primitive gcd with positive leading coefficient (the gcd over Q up to a
// rational unit), computed with a primitive-part pseudo-remainder sequence
// so intermediate coefficients stay bounded.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace coxgrowth

#endif
