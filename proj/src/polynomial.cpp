#include "coxgrowth/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace coxgrowth {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.coeffs_.push_back(std::move(c));
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, int e) {
  IntPolynomial p;
  if (c != 0) {
    p.coeffs_.assign(static_cast<size_t>(e) + 1, Int(0));
    p.coeffs_.back() = std::move(c);
  }
  return p;
}

IntPolynomial IntPolynomial::q_integer(int d) {
  if (d < 1) throw std::invalid_argument("q_integer wants d >= 1");
  IntPolynomial p;
  p.coeffs_.assign(static_cast<size_t>(d), Int(1));
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPolynomial::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

int IntPolynomial::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r(*this);
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  IntPolynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] -= o.coeffs_[i];
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  IntPolynomial r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
  if (c == 0) return IntPolynomial();
  IntPolynomial r(*this);
  for (Int& x : r.coeffs_) x *= c;
  return r;
}

IntPolynomial IntPolynomial::shifted_up(int e) const {
  if (is_zero() || e == 0) return *this;
  IntPolynomial r;
  r.coeffs_.assign(coeffs_.size() + static_cast<size_t>(e), Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + static_cast<size_t>(e)] = coeffs_[i];
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  IntPolynomial r;
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_[i - 1] = coeffs_[i] * static_cast<long>(i);
  r.trim();
  return r;
}

Int IntPolynomial::eval(const Int& x) const {
  Int acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += coeffs_[i];
  }
  return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= x;
    acc += Rat(coeffs_[i]);
  }
  return acc;
}

Int IntPolynomial::value_at_dyadic(const Int& num, unsigned long k) const {
  if (is_zero()) return 0;
  Int acc = 0;
  const int deg = degree();
  for (int i = deg; i >= 0; --i) {
    acc *= num;
    if (coeffs_[static_cast<size_t>(i)] != 0) {
      Int term = coeffs_[static_cast<size_t>(i)];
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k * static_cast<unsigned long>(deg - i));
      acc += term;
    }
  }
  return acc;
}

int IntPolynomial::sign_at_dyadic(const Int& num, unsigned long k) const {
  return sgn(value_at_dyadic(num, k));
}

Int IntPolynomial::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return IntPolynomial();
  Int g = content();
  if (leading() < 0) g = -g;
  IntPolynomial r(*this);
  for (Int& c : r.coeffs_) c /= g;
  return r;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero()) throw std::logic_error("exact division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < d.degree()) throw std::logic_error("exact division: degree too low");
  std::vector<Int> rem = coeffs_;
  std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1);
  const Int& lead = d.leading();
  for (int i = degree(); i >= d.degree(); --i) {
    Int& top = rem[static_cast<size_t>(i)];
    if (top == 0) continue;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::logic_error("exact division: non-divisible coefficient");
    quot[static_cast<size_t>(i - d.degree())] = q;
    for (int j = 0; j <= d.degree(); ++j)
      rem[static_cast<size_t>(i - d.degree() + j)] -= q * d.coeffs_[static_cast<size_t>(j)];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::logic_error("exact division: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::taylor_shift_1() const {
  // Synthetic division by (x - (-1)) repeated: classical O(deg^2) shift.
  std::vector<Int> c = coeffs_;
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j) c[j - 1] += c[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::taylor_shift(const Int& s) const {
  std::vector<Int> c = coeffs_;
  const size_t n = c.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j > i; --j)
      mpz_addmul(c[j - 1].get_mpz_t(), c[j].get_mpz_t(), s.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::scale_half() const {
  // coefficient i picks up 2^(deg - i)
  IntPolynomial r(*this);
  const int deg = degree();
  for (int i = 0; i < deg; ++i) {
    Int& c = r.coeffs_[static_cast<size_t>(i)];
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(deg - i));
  }
  return r;
}

IntPolynomial IntPolynomial::reversed() const {
  std::vector<Int> c(coeffs_.rbegin(), coeffs_.rend());
  return IntPolynomial(std::move(c));
}

int IntPolynomial::sign_variations() const {
  int v = 0, last = 0;
  for (const Int& c : coeffs_) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

IntPolynomial IntPolynomial::squarefree_part() const {
  if (degree() <= 1) return primitive_part();
  IntPolynomial g = poly_gcd(*this, derivative());
  if (g.degree() == 0) return primitive_part();
  return primitive_part().divide_exact(g);
}

std::string IntPolynomial::to_pretty_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Int& c = coeffs_[i];
    if (c == 0) continue;
    Int a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str();
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
  std::vector<std::string> v;
  v.reserve(coeffs_.size());
  for (const Int& c : coeffs_) v.push_back(c.get_str());
  return v;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& v) {
  std::vector<Int> c;
  c.reserve(v.size());
  for (const std::string& s : v) c.emplace_back(s, 10);
  return IntPolynomial(std::move(c));
}

namespace {

// Remainder of lc(d)^j * n by d for some j <= deg n - deg d + 1; only the
// remainder up to a scalar is needed since the caller re-primitivizes.
IntPolynomial pseudo_rem(const IntPolynomial& n, const IntPolynomial& d) {
  IntPolynomial r = n;
  const Int& lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    Int c = r.leading();
    int e = r.degree() - d.degree();
    r = r * lead - (d * c).shifted_up(e);
  }
  return r;
}

}  // namespace

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = a.is_zero() ? IntPolynomial() : a.primitive_part();
  IntPolynomial v = b.is_zero() ? IntPolynomial() : b.primitive_part();
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_rem(u, v).primitive_part();
    u = std::move(v);
    v = std::move(r);
  }
  return u;  // primitive, positive leading coefficient
}

}  // namespace coxgrowth
