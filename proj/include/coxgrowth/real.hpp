#ifndef COXGROWTH_REAL_HPP
#define COXGROWTH_REAL_HPP

#include <mpfr.h>

#include <string>
#include <utility>

namespace coxgrowth {

// Thin RAII wrapper over mpfr_t with the handful of operations the Gram
// matrix and the eigenvalue census need. Binary operations take the larger
// precision of the two operands; rounding is to nearest.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long value, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  Real(const std::string& decimal, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN);
  }
  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  // -cos(pi/m); m = 2, 3 and infinity give 0, -1/2 and -1 exactly.
  static Real neg_cos_pi_over(int m, mpfr_prec_t prec);

  Real operator+(const Real& o) const { return binary(mpfr_add, *this, o); }
  Real operator-(const Real& o) const { return binary(mpfr_sub, *this, o); }
  Real operator*(const Real& o) const { return binary(mpfr_mul, *this, o); }
  Real operator/(const Real& o) const { return binary(mpfr_div, *this, o); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int cmp(const Real& o) const { return mpfr_cmp(v_, o.v_); }
  bool operator<(const Real& o) const { return cmp(o) < 0; }
  bool operator<=(const Real& o) const { return cmp(o) <= 0; }
  bool operator>(const Real& o) const { return cmp(o) > 0; }
  bool operator>=(const Real& o) const { return cmp(o) >= 0; }
  bool operator==(const Real& o) const { return cmp(o) == 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits) const;

 private:
  using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real binary(BinaryFn fn, const Real& a, const Real& b) {
    Real r(std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

// Working precision in bits for a decimal digit count, with guard bits.
inline mpfr_prec_t bits_for_digits(long digits) {
  return static_cast<mpfr_prec_t>(digits * 3.3219280948873623 + 48);
}

}  // namespace coxgrowth

#endif
