#ifndef COXGROWTH_BIGINT_HPP
#define COXGROWTH_BIGINT_HPP

#include <gmpxx.h>

#include <string>

namespace coxgrowth {

// Arbitrary-precision integers and rationals. All exact arithmetic in the
// library goes through these; machine integers are used only for indices,
// ranks and edge labels.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_from_string(const std::string& s) {
  return Int(s, 10);
}

inline std::string to_string(const Int& x) {
  return x.get_str(10);
}

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

// 10^e for nonnegative e.
inline Int pow10(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// 2^e for nonnegative e.
inline Int pow2(unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

}  // namespace coxgrowth

#endif
