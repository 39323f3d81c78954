#include "coxgrowth/growth.hpp"

#include <stdexcept>

#include "coxgrowth/root_isolation.hpp"
#include "json.hpp"

namespace coxgrowth {

std::string to_string(GrowthKind k) {
  switch (k) {
    case GrowthKind::FiniteGroup: return "finite-group";
    case GrowthKind::PolynomialGrowth: return "polynomial-growth";
    case GrowthKind::Exponential: return "exponential";
  }
  return "?";
}

std::string GrowthRate::to_json() const {
  nlohmann::ordered_json doc;
  doc["kind"] = to_string(kind);
  doc["value"] = value;
  doc["error_bound"] = error_bound;
  doc["certified_digits"] = certified_digits;
  return doc.dump();
}

namespace {

int decimal_length(const Int& x) {
  int n = static_cast<int>(mpz_sizeinbase(x.get_mpz_t(), 10));
  if (n > 1 && x < pow10(static_cast<unsigned long>(n - 1))) --n;
  return n;
}

std::string with_point(const std::string& digits_str, int int_len) {
  if (int_len >= static_cast<int>(digits_str.size())) return digits_str;
  return digits_str.substr(0, static_cast<size_t>(int_len)) + "." +
         digits_str.substr(static_cast<size_t>(int_len));
}

struct Refiner {
  const IntPolynomial& q;   // squarefree denominator factor carrying the root
  IntPolynomial dq;
  GrowthCertificate cert;
  int e_lo = 0, e_hi = 0;   // effective signs just inside the bracket
  long steps = 0;
  long max_steps;

  Refiner(const IntPolynomial& poly, const DyadicCell& cell, long budget)
      : q(poly), dq(poly.derivative()), max_steps(budget) {
    cert.lo = cell.lo;
    cert.hi = cell.hi;
    cert.k = cell.k;
    cert.exact = cell.exact;
    if (cert.exact) return;
    int s_lo = q.sign_at_dyadic(cert.lo, cert.k);
    int s_hi = q.sign_at_dyadic(cert.hi, cert.k);
    // An endpoint can be some other (exact dyadic) root of q; the sign just
    // inside is then read off the derivative, exact because q is squarefree.
    e_lo = s_lo ? s_lo : sgn(dq.value_at_dyadic(cert.lo, cert.k));
    e_hi = s_hi ? s_hi : -sgn(dq.value_at_dyadic(cert.hi, cert.k));
    if (e_lo * e_hi >= 0) throw std::logic_error("growth_rate: isolating cell lost its sign change");
  }

  void spend() {
    if (++steps > max_steps) throw std::runtime_error("growth_rate: iteration budget exhausted");
  }

  void bisect_once() {
    spend();
    Int mid = cert.lo + cert.hi;
    cert.k += 1;
    cert.lo *= 2;
    cert.hi *= 2;
    int s = q.sign_at_dyadic(mid, cert.k);
    if (s == 0) {
      cert.lo = cert.hi = mid;
      cert.exact = true;
      return;
    }
    if (s == e_lo)
      cert.lo = std::move(mid);
    else
      cert.hi = std::move(mid);
  }

  // Newton on fixed-point mantissas at scale 2^-W; every candidate bracket
  // is re-certified by exact sign evaluation before it replaces the
  // bisection bracket, so a wild step can only cost time, not correctness.
  void try_newton(unsigned long W) {
    if (cert.exact || W <= cert.k + 8) return;
    Int lo_w = cert.lo << (W - cert.k);
    Int hi_w = cert.hi << (W - cert.k);
    Int mx = (lo_w + hi_w) / 2;
    bool converged = false;
    for (int iter = 0; iter < 80; ++iter) {
      spend();
      Int value = q.value_at_dyadic(mx, W);
      if (value == 0) {
        cert.lo = cert.hi = mx;
        cert.k = W;
        cert.exact = true;
        return;
      }
      Int slope = dq.value_at_dyadic(mx, W);
      if (slope == 0) return;  // fall back to bisection
      Int delta;
      mpz_tdiv_q(delta.get_mpz_t(), value.get_mpz_t(), slope.get_mpz_t());
      mx -= delta;
      if (mx <= lo_w) mx = lo_w + 1;
      if (mx >= hi_w) mx = hi_w - 1;
      Int mag = abs(delta);
      if (mag <= 2) {
        converged = true;
        break;
      }
    }
    if (!converged) return;
    for (unsigned long margin : {16UL, 4096UL, 1UL << 20}) {
      Int nlo = mx - static_cast<long>(margin);
      Int nhi = mx + static_cast<long>(margin);
      if (nlo < lo_w) nlo = lo_w;
      if (nhi > hi_w) nhi = hi_w;
      spend();
      int sl = q.sign_at_dyadic(nlo, W);
      int sh = q.sign_at_dyadic(nhi, W);
      if (sl == 0 || sh == 0) {
        cert.lo = cert.hi = (sl == 0 ? nlo : nhi);
        cert.k = W;
        cert.exact = true;
        return;
      }
      if (sl == e_lo && sh == e_hi) {
        cert.lo = std::move(nlo);
        cert.hi = std::move(nhi);
        cert.k = W;
        return;
      }
    }
  }
};

}  // namespace

GrowthRate growth_rate(const PoincareSeries& p, int digits, long max_steps) {
  if (digits < 10) throw std::invalid_argument("growth_rate wants digits >= 10");
  const IntPolynomial& den = p.rf.den();
  const IntPolynomial& num = p.rf.num();

  GrowthRate out;
  out.certified_digits = digits;
  if (den.degree() <= 0) {
    out.kind = GrowthKind::FiniteGroup;
    out.value = "0";
    out.error_bound = "0";
    return out;
  }

  IntPolynomial q = den.squarefree_part();
  if (q.eval(Int(1)) == 0) q = q.divide_exact(IntPolynomial({1, -1}));  // drop the root at t = 1
  std::vector<DyadicCell> cells =
      q.degree() >= 1 ? isolate_roots_01(q) : std::vector<DyadicCell>{};
  if (cells.empty()) {
    if (den.eval(Int(1)) == 0) {
      out.kind = GrowthKind::PolynomialGrowth;
      out.value = "1";
      out.error_bound = "0";
      return out;
    }
    throw std::logic_error("growth_rate: no denominator root in (0,1] for a non-polynomial series");
  }

  out.kind = GrowthKind::Exponential;
  Refiner refiner(q, cells.front(), max_steps);

  if (!refiner.cert.exact) {
    while (!refiner.cert.exact && refiner.cert.k < 48) refiner.bisect_once();
    const unsigned long W =
        static_cast<unsigned long>((digits + 6) * 3.3219281) + 64;
    refiner.try_newton(W);
  }

  // Refine until both omega bounds 2^k/hi and 2^k/lo truncate to the same
  // `digits` significant digits and the bracket is narrow enough for the
  // reported error bound.
  Int shown;       // the agreed truncation of omega * 10^scale
  int int_len = 1;
  while (!refiner.cert.exact) {
    const Int& lo = refiner.cert.lo;
    const Int& hi = refiner.cert.hi;
    Int two_k = pow2(refiner.cert.k);
    Int f_lo = two_k / hi;
    Int f_hi = two_k / lo;
    if (f_lo == f_hi && f_lo >= 1) {
      int_len = decimal_length(f_lo);
      if (int_len > digits)
        throw std::invalid_argument("growth_rate: integer part wider than the requested digits");
      unsigned long scale = static_cast<unsigned long>(digits - int_len);
      Int scaled = two_k * pow10(scale);
      Int t_min = scaled / hi;
      Int t_max = scaled / lo;
      bool width_ok = (hi - lo) * two_k * pow10(static_cast<unsigned long>(digits + 1)) <= lo * hi;
      if (t_min == t_max && width_ok) {
        // numerator must keep constant sign on the bracket (it cannot
        // vanish at the root itself, being coprime to the denominator)
        int ns_lo = num.sign_at_dyadic(lo, refiner.cert.k);
        int ns_hi = num.sign_at_dyadic(hi, refiner.cert.k);
        if (ns_lo != 0 && ns_lo == ns_hi &&
            root_count_bound(num, lo, hi, refiner.cert.k) == 0) {
          shown = t_min;
          break;
        }
      }
    }
    refiner.bisect_once();
  }

  // The isolation already proved the bracket holds the smallest positive
  // root. Re-assert through the sign-variation bound below the bracket: an
  // odd bound proves a root (the bound has the parity of the root count);
  // an even one is inconclusive, since Descartes may overcount by two.
  if (refiner.cert.lo > 0 &&
      root_count_bound(q, Int(0), refiner.cert.lo, refiner.cert.k) % 2 != 0)
    throw std::logic_error("growth_rate: a denominator root below the bracket");

  if (refiner.cert.exact) {
    // omega = 2^k / m exactly
    const Int& m = refiner.cert.lo;
    Int two_k = pow2(refiner.cert.k);
    if (m <= 0 || m >= two_k) throw std::logic_error("growth_rate: exact root outside (0,1)");
    Int f = two_k / m;
    int_len = decimal_length(f);
    if (int_len > digits)
      throw std::invalid_argument("growth_rate: integer part wider than the requested digits");
    unsigned long scale = static_cast<unsigned long>(digits - int_len);
    Int scaled = two_k * pow10(scale);
    Int rem;
    mpz_fdiv_qr(shown.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), m.get_mpz_t());
    out.error_bound = rem == 0 ? "0" : "1e-" + std::to_string(scale);
    if (num.value_at_dyadic(m, refiner.cert.k) == 0)
      throw std::logic_error("growth_rate: numerator vanishes at the denominator root");
  } else {
    out.error_bound = "1e-" + std::to_string(digits - int_len);
    // final certificate: the original denominator itself changes sign
    if (den.sign_at_dyadic(refiner.cert.lo, refiner.cert.k) *
            den.sign_at_dyadic(refiner.cert.hi, refiner.cert.k) >=
        0)
      throw std::logic_error("growth_rate: denominator does not change sign across the bracket");
  }

  out.value = with_point(shown.get_str(), int_len);
  out.certificate = refiner.cert;
  return out;
}

std::vector<Int> coefficients(const PoincareSeries& p, int count) {
  return p.rf.series_coeffs(count);
}

}  // namespace coxgrowth
