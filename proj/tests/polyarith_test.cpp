#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/rational_function.hpp"
#include "doctest.h"

using namespace coxgrowth;

namespace {

IntPolynomial random_poly(std::mt19937& rng, int max_deg = 6, bool nonzero = false) {
  std::uniform_int_distribution<int> deg_dist(0, max_deg);
  std::uniform_int_distribution<long> coeff_dist(-9, 9);
  for (;;) {
    int deg = deg_dist(rng);
    std::vector<Int> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(coeff_dist(rng));
    IntPolynomial p(std::move(c));
    if (!nonzero || !p.is_zero()) return p;
  }
}

RationalFunction random_rf(std::mt19937& rng, bool den_nonzero_at_0 = false) {
  for (;;) {
    IntPolynomial den = random_poly(rng, 4, true);
    if (den_nonzero_at_0 && den.coeff(0) == 0) continue;
    RationalFunction f = RationalFunction::normalized(random_poly(rng, 4), den);
    if (den_nonzero_at_0 && f.den().coeff(0) == 0) continue;
    return f;
  }
}

}  // namespace

TEST_CASE("polynomial basics") {
  IntPolynomial p({1, 0, -2});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 0);
  CHECK(p.coeff(5) == 0);
  CHECK(p.eval(Int(3)) == 1 - 2 * 9);
  CHECK((p * p).degree() == 4);
  CHECK(IntPolynomial{}.is_zero());
  CHECK((p - p).is_zero());
  CHECK(p.to_pretty_string() == "1-2t^2");
  CHECK(IntPolynomial({0, 1, 1}).to_pretty_string() == "t+t^2");
  CHECK(IntPolynomial::q_integer(4) == IntPolynomial({1, 1, 1, 1}));
}

TEST_CASE("polynomial gcd and exact division") {
  IntPolynomial a({-1, 0, 1});        // t^2 - 1
  IntPolynomial b({1, 1});            // t + 1
  CHECK(poly_gcd(a, b) == b);
  CHECK(a.divide_exact(b) == IntPolynomial({-1, 1}));
  CHECK_THROWS_AS(IntPolynomial({1, 1, 1}).divide_exact(IntPolynomial({1, 1})), std::logic_error);
  // content is pulled out before the gcd
  IntPolynomial c({-2, 0, 2});
  CHECK(poly_gcd(c, b) == b);
  CHECK(poly_gcd(IntPolynomial{}, b) == b);
}

TEST_CASE("normalization fixes signs, cancellation and content") {
  // (t, t) -> (1, 1)
  RationalFunction f = RationalFunction::normalized(IntPolynomial({0, 1}), IntPolynomial({0, 1}));
  CHECK(f.num() == IntPolynomial::one());
  CHECK(f.den() == IntPolynomial::one());

  // (1 - t^2, 1 - t) -> (1 + t, 1)
  RationalFunction g = RationalFunction::normalized(IntPolynomial({1, 0, -1}), IntPolynomial({1, -1}));
  CHECK(g.num() == IntPolynomial({1, 1}));
  CHECK(g.den() == IntPolynomial::one());
  CHECK(g.is_polynomial());

  // the printed pair of the first cocompact rank-4 system: both polynomials
  // negated, so the denominator's constant term comes out +1
  IntPolynomial printed_num({-1, -2, -3, -5, -6, -7, -8, -8, -8, -8, -7, -6, -5, -3, -2, -1});
  IntPolynomial printed_den({-1, 2, -2, 2, -1, 1, -1, 1, -1, 1, -1, 1, -2, 2, -2, 1});
  RationalFunction h = RationalFunction::normalized(printed_num, printed_den);
  CHECK(h.num() == -printed_num);
  CHECK(h.den() == -printed_den);
  CHECK(h.den().coeff(0) == 1);

  CHECK_THROWS_AS(RationalFunction::normalized(IntPolynomial::one(), IntPolynomial{}),
                  std::domain_error);
}

TEST_CASE("rational function addition") {
  RationalFunction one_over_1mt =
      RationalFunction::normalized(IntPolynomial::one(), IntPolynomial({1, -1}));
  // additive inverse collapses to zero
  RationalFunction minus = RationalFunction::normalized(IntPolynomial({-1}), IntPolynomial({1, -1}));
  CHECK((one_over_1mt + minus).is_zero());

  // 1/1 + 1/(1-t) = (2-t)/(1-t); cross-checked by exact evaluation at 1/2
  RationalFunction sum = RationalFunction::one() + one_over_1mt;
  CHECK(sum.num() == IntPolynomial({2, -1}));
  CHECK(sum.den() == IntPolynomial({1, -1}));
  Rat half(1, 2);
  CHECK(sum.eval(half) == RationalFunction::one().eval(half) + one_over_1mt.eval(half));

  // 1/(1+t) + 1/(1-t) = 2/(1-t^2)
  RationalFunction a = RationalFunction::normalized(IntPolynomial::one(), IntPolynomial({1, 1}));
  RationalFunction b = one_over_1mt;
  RationalFunction c = a + b;
  CHECK(c.num() == IntPolynomial({2}));
  CHECK(c.den() == IntPolynomial({1, 0, -1}));
}

TEST_CASE("variable reversal") {
  // (1+t)/(1-2t) reversed and normalized: (-1-t)/(2-t)
  RationalFunction f = RationalFunction::normalized(IntPolynomial({1, 1}), IntPolynomial({1, -2}));
  RationalFunction r = f.reverse_variable();
  CHECK(r.num() == IntPolynomial({-1, -1}));
  CHECK(r.den() == IntPolynomial({2, -1}));

  // constants are fixed
  RationalFunction c = RationalFunction::from_polynomial(IntPolynomial({5}));
  CHECK(c.reverse_variable() == c);

  // t becomes 1/t
  RationalFunction t = RationalFunction::from_polynomial(IntPolynomial({0, 1}));
  RationalFunction rt = t.reverse_variable();
  CHECK(rt.num() == IntPolynomial::one());
  CHECK(rt.den() == IntPolynomial({0, 1}));

  CHECK_THROWS_AS(RationalFunction::zero().reverse_variable(), std::domain_error);
}

TEST_CASE("series expansion") {
  // the <3,3,4> triangle system's printed pair expands to the printed
  // census prefix
  RationalFunction f = RationalFunction::normalized(IntPolynomial({1, 3, 5, 6, 5, 3, 1}),
                                                    IntPolynomial({1, 0, -1, -1, -1, 0, 1}));
  std::vector<Int> a = f.series_coeffs(7);
  CHECK(a == std::vector<Int>{1, 3, 6, 10, 15, 22, 31});

  RationalFunction g = RationalFunction::normalized(IntPolynomial({1, 1}), IntPolynomial({1, -2}));
  CHECK(g.series_coeffs(5) == std::vector<Int>{1, 3, 6, 12, 24});

  CHECK(RationalFunction::one().series_coeffs(3) == std::vector<Int>{1, 0, 0});

  RationalFunction pole = RationalFunction::normalized(IntPolynomial::one(), IntPolynomial({0, 1}));
  CHECK_THROWS_AS(pole.series_coeffs(3), std::domain_error);
}

TEST_CASE("property: normalization is idempotent") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 300; ++trial) {
    RationalFunction f = random_rf(rng);
    RationalFunction again = RationalFunction::normalized(f.num(), f.den());
    CHECK(again == f);
  }
}

TEST_CASE("property: convolution identity of normalized series") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 200; ++trial) {
    RationalFunction f = random_rf(rng, /*den_nonzero_at_0=*/true);
    const int N = f.num().degree();
    const int D = f.den().degree();
    const int count = N + D + 12;
    std::vector<Rat> a;  // the series over Q; random inputs need not be integral
    for (int k = 0; k < count; ++k) {
      Rat s(f.num().coeff(k));
      for (int r = 1; r <= std::min(k, D); ++r) s -= Rat(f.den().coeff(r)) * a[static_cast<size_t>(k - r)];
      s /= Rat(f.den().coeff(0));
      a.push_back(s);
    }
    for (int k = 0; k < count; ++k) {
      Rat conv(0);
      for (int r = 0; r <= std::min(k, D); ++r)
        conv += Rat(f.den().coeff(r)) * a[static_cast<size_t>(k - r)];
      if (k <= N)
        CHECK(conv == Rat(f.num().coeff(k)));
      else
        CHECK(conv == 0);
    }
  }
}

TEST_CASE("property: reversal is an involution") {
  std::mt19937 rng(20240813);
  for (int trial = 0; trial < 300; ++trial) {
    RationalFunction f = random_rf(rng);
    if (f.is_zero()) continue;
    CHECK(f.reverse_variable().reverse_variable() == f);
  }
}

TEST_CASE("property: addition is commutative and associative") {
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 150; ++trial) {
    RationalFunction a = random_rf(rng);
    RationalFunction b = random_rf(rng);
    RationalFunction c = random_rf(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("property: evaluation respects addition") {
  std::mt19937 rng(20240815);
  std::uniform_int_distribution<long> num_dist(-20, 20);
  std::uniform_int_distribution<long> den_dist(1, 20);
  for (int trial = 0; trial < 200; ++trial) {
    RationalFunction a = random_rf(rng);
    RationalFunction b = random_rf(rng);
    Rat q(num_dist(rng), den_dist(rng));
    q.canonicalize();
    if (a.den().eval(q) == 0 || b.den().eval(q) == 0) continue;
    RationalFunction sum = a + b;
    if (sum.den().eval(q) == 0) continue;
    CHECK(sum.eval(q) == a.eval(q) + b.eval(q));
  }
}

TEST_CASE("decimal string round trip carries big integers") {
  std::vector<std::string> big{"1", "4032330316365198", "-18210722000000000000000001"};
  IntPolynomial p = IntPolynomial::from_decimal_strings(big);
  CHECK(p.to_decimal_strings() == big);
  CHECK(p.coeff(2) < 0);
}
