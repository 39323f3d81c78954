#include "coxgrowth/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxgrowth {

int root_count_bound_01(const IntPolynomial& p) {
  // x^deg p(1/x) then x -> x+1 maps (0,1) onto (0,inf); roots at the
  // endpoints drop out when the reversal trims them.
  return p.reversed().taylor_shift_1().sign_variations();
}

int root_count_bound(const IntPolynomial& p, const Int& a, const Int& b, unsigned long k) {
  if (a >= b) throw std::invalid_argument("root_count_bound wants a < b");
  // q(x) = 2^(k deg) p((a + (b-a) x) / 2^k) maps (0,1) onto the interval
  IntPolynomial q = p;
  const int deg = p.degree();
  {
    std::vector<Int> c = q.coeffs();
    for (int i = 0; i < static_cast<int>(c.size()); ++i)
      mpz_mul_2exp(c[static_cast<size_t>(i)].get_mpz_t(), c[static_cast<size_t>(i)].get_mpz_t(),
                   k * static_cast<unsigned long>(deg - i));
    q = IntPolynomial(std::move(c));
  }
  q = q.taylor_shift(a);
  {
    Int w = b - a;
    Int power = 1;
    std::vector<Int> c = q.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
      c[i] *= power;
      power *= w;
    }
    q = IntPolynomial(std::move(c));
  }
  return root_count_bound_01(q);
}

std::vector<DyadicCell> isolate_roots_01(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots_01 wants a nonzero polynomial");
  if (p.coeff(0) == 0) throw std::invalid_argument("isolate_roots_01 wants p(0) != 0");

  struct Frame {
    IntPolynomial poly;  // the input transplanted onto (0,1)
    Int base;
    unsigned long k;
  };
  std::vector<DyadicCell> cells;
  std::vector<Frame> stack{{p, Int(0), 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.k > 4096) throw std::logic_error("root isolation did not terminate; input not squarefree?");
    int v = root_count_bound_01(f.poly);
    if (v == 0) continue;
    if (v == 1) {
      cells.push_back({f.base, f.base + 1, f.k, false});
      continue;
    }
    IntPolynomial left = f.poly.scale_half();
    IntPolynomial right = left.taylor_shift_1();
    // midpoint of the current cell; left(1) = 2^deg poly(1/2)
    if (left.eval(Int(1)) == 0) {
      Int mid = 2 * f.base + 1;
      cells.push_back({mid, mid, f.k + 1, true});
    }
    stack.push_back({std::move(left), 2 * f.base, f.k + 1});
    stack.push_back({std::move(right), 2 * f.base + 1, f.k + 1});
  }
  std::sort(cells.begin(), cells.end(), [](const DyadicCell& a, const DyadicCell& b) {
    // compare lo/2^ka against lo/2^kb; an exact point at a shared endpoint
    // precedes the open cell to its right
    Int lhs = a.lo, rhs = b.lo;
    mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), b.k);
    mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), a.k);
    if (lhs != rhs) return lhs < rhs;
    return a.exact && !b.exact;
  });
  return cells;
}

}  // namespace coxgrowth
