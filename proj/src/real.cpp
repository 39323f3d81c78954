#include "coxgrowth/real.hpp"

#include <stdexcept>

#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

Real Real::neg_cos_pi_over(int m, mpfr_prec_t prec) {
  Real r(prec);
  if (m == CoxeterMatrix::kInfinity) {
    mpfr_set_si(r.v_, -1, MPFR_RNDN);
  } else if (m == 1) {
    mpfr_set_si(r.v_, 1, MPFR_RNDN);  // -cos(pi) = 1, the diagonal case
  } else if (m == 2) {
    mpfr_set_zero(r.v_, 1);
  } else if (m == 3) {
    mpfr_set_d(r.v_, -0.5, MPFR_RNDN);
  } else if (m > 3) {
    mpfr_const_pi(r.v_, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, m, MPFR_RNDN);
    mpfr_cos(r.v_, r.v_, MPFR_RNDN);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  } else {
    throw std::invalid_argument("neg_cos_pi_over: bad label " + std::to_string(m));
  }
  return r;
}

std::string Real::to_string(int digits) const {
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string s(raw);
  mpfr_free_str(raw);
  bool neg = !s.empty() && s[0] == '-';
  std::string mant = neg ? s.substr(1) : s;
  std::string out = neg ? "-" : "";
  if (mpfr_zero_p(v_)) return "0";
  if (exp <= 0) {
    out += "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else if (static_cast<size_t>(exp) >= mant.size()) {
    out += mant + std::string(static_cast<size_t>(exp) - mant.size(), '0');
  } else {
    out += mant.substr(0, static_cast<size_t>(exp)) + "." + mant.substr(static_cast<size_t>(exp));
  }
  return out;
}

}  // namespace coxgrowth
