#include "coxgrowth/rational_function.hpp"

#include <sstream>
#include <stdexcept>

namespace coxgrowth {

RationalFunction RationalFunction::normalized(IntPolynomial num, IntPolynomial den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return RationalFunction(IntPolynomial(), IntPolynomial::one());

  Int cn = num.content();
  Int cd = den.content();
  IntPolynomial pn = num.primitive_part();
  IntPolynomial pd = den.primitive_part();
  IntPolynomial g = poly_gcd(pn, pd);
  if (g.degree() > 0) {
    pn = pn.divide_exact(g);
    pd = pd.divide_exact(g);
  }
  Int c;
  mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  pn = pn * (cn / c);
  pd = pd * (cd / c);
  // primitive_part() forced both leading coefficients positive; restore the
  // sign of the represented function, then make den's lowest nonzero
  // coefficient positive.
  if (sgn(num.leading()) * sgn(den.leading()) < 0) pn = -pn;
  if (pd.coeff(pd.valuation()) < 0) {
    pn = -pn;
    pd = -pd;
  }
  return RationalFunction(std::move(pn), std::move(pd));
}

RationalFunction RationalFunction::from_polynomial(IntPolynomial p) {
  return normalized(std::move(p), IntPolynomial::one());
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return normalized(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return normalized(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero function");
  return normalized(den_, num_);
}

RationalFunction RationalFunction::reverse_variable() const {
  if (is_zero()) throw std::domain_error("variable reversal of zero function");
  int d = std::max(num_.degree(), den_.degree());
  // multiply num and den by t^d and substitute 1/t: each polynomial turns
  // into its reversal padded up to degree d
  IntPolynomial rn = num_.reversed().shifted_up(d - num_.degree());
  IntPolynomial rd = den_.reversed().shifted_up(d - den_.degree());
  return normalized(std::move(rn), std::move(rd));
}

std::vector<Int> RationalFunction::series_coeffs(int count) const {
  if (count < 0) throw std::invalid_argument("series_coeffs wants count >= 0");
  if (den_.coeff(0) == 0) throw std::domain_error("not a power series at 0");
  const Int& d0 = den_.coeff(0);
  const int D = den_.degree();
  std::vector<Int> a;
  a.reserve(static_cast<size_t>(count));
  // Long division: d0*a_k = num_k - sum_{r=1..min(k,D)} den_r * a_{k-r}.
  // For k past deg(num) this is the linear recurrence driven by den alone.
  for (int k = 0; k < count; ++k) {
    Int s = num_.coeff(k);
    for (int r = 1; r <= std::min(k, D); ++r) s -= den_.coeff(r) * a[static_cast<size_t>(k - r)];
    if (d0 == 1) {
      a.push_back(std::move(s));
    } else {
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), s.get_mpz_t(), d0.get_mpz_t());
      if (rem != 0) throw std::domain_error("series coefficient is not an integer");
      a.push_back(std::move(q));
    }
  }
  return a;
}

Rat RationalFunction::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

std::string RationalFunction::to_pretty_string(const std::string& var) const {
  std::ostringstream out;
  out << "(" << num_.to_pretty_string(var) << ") / (" << den_.to_pretty_string(var) << ")";
  return out.str();
}

}  // namespace coxgrowth
