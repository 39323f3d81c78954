#include "coxgrowth/poincare.hpp"

#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coxgrowth {

std::string to_string(SeriesProvenance p) {
  switch (p) {
    case SeriesProvenance::SolomonProduct: return "solomon-product";
    case SeriesProvenance::BottProduct: return "bott-product";
    case SeriesProvenance::SteinbergSum: return "steinberg-sum";
    case SeriesProvenance::TriangleClosedForm: return "triangle-closed-form";
  }
  return "?";
}

namespace {

PoincareSeries make_series(RationalFunction rf, SeriesProvenance prov, int rank) {
  if (rf.den().coeff(0) == 0) throw std::logic_error("poincare series has no expansion at 0");
  std::vector<Int> head = rf.series_coeffs(2);
  if (head[0] != 1 || head[1] != rank)
    throw std::logic_error("poincare series fails a_0 = 1, a_1 = rank");
  return PoincareSeries{std::move(rf), prov};
}

using DegreeMultiset = std::map<int, int>;

DegreeMultiset residue_degrees(const CoxeterMatrix& m, const std::vector<int>& subset) {
  DegreeMultiset out;
  CoxeterMatrix sub = m.induced(subset);
  for (const auto& comp : sub.components()) {
    auto t = finite_type_of(sub.induced(comp));
    if (!t) throw std::logic_error("residue_degrees: subset is not spherical");
    for (int d : degrees(*t)) ++out[d];
  }
  return out;
}

IntPolynomial degree_product(const DegreeMultiset& ds) {
  IntPolynomial p = IntPolynomial::one();
  for (const auto& [d, mult] : ds)
    for (int i = 0; i < mult; ++i) p = p * IntPolynomial::q_integer(d);
  return p;
}

}  // namespace

PoincareSeries spherical_poincare(const FiniteTypeName& t) {
  DegreeMultiset ds;
  for (int d : degrees(t)) ++ds[d];
  return make_series(RationalFunction::from_polynomial(degree_product(ds)),
                     SeriesProvenance::SolomonProduct, t.rank);
}

FiniteTypeName affine_underlying_finite(const AffineTypeName& t) {
  switch (t.family) {
    case 'A': return {'A', t.n, 0};
    case 'B': return {'B', t.n, 0};
    case 'C': return {'B', t.n, 0};  // same Coxeter system, same degrees
    case 'D': return {'D', t.n, 0};
    case 'E': return {'E', t.n, 0};
    case 'F': return {'F', t.n, 0};
    case 'G': return {'I', 2, 6};
  }
  throw std::invalid_argument("affine_underlying_finite: bad family");
}

PoincareSeries affine_poincare(const AffineTypeName& t) {
  FiniteTypeName base = affine_underlying_finite(t);
  IntPolynomial num = IntPolynomial::one();
  for (int d : degrees(base)) num = num * IntPolynomial::q_integer(d);
  IntPolynomial den = IntPolynomial::one();
  for (int d : degrees(base)) {
    // 1 - t^(d-1)
    IntPolynomial factor = IntPolynomial::one() - IntPolynomial::monomial(1, d - 1);
    den = den * factor;
  }
  return make_series(RationalFunction::normalized(std::move(num), std::move(den)),
                     SeriesProvenance::BottProduct, t.n + 1);
}

namespace {

struct SteinbergTerms {
  std::vector<DegreeMultiset> residues;  // degree multiset per spherical residue
  std::vector<int> parity;               // |I| mod 2
  DegreeMultiset lcm;                    // pointwise max of all multisets
};

SteinbergTerms steinberg_terms(const CoxeterMatrix& m) {
  SteinbergTerms t;
  for (const auto& subset : spherical_residues(m)) {
    DegreeMultiset ds = residue_degrees(m, subset);
    for (const auto& [d, mult] : ds) t.lcm[d] = std::max(t.lcm[d], mult);
    t.parity.push_back(static_cast<int>(subset.size() % 2));
    t.residues.push_back(std::move(ds));
  }
  return t;
}

// The cofactor lcm / p_I as a polynomial product.
IntPolynomial cofactor(const SteinbergTerms& t, size_t i) {
  DegreeMultiset rest = t.lcm;
  for (const auto& [d, mult] : t.residues[i]) rest[d] -= mult;
  return degree_product(rest);
}

PoincareSeries finish_steinberg(const CoxeterMatrix& m, IntPolynomial num_sum,
                                IntPolynomial common_den) {
  if (num_sum.is_zero()) throw std::logic_error("steinberg sum vanished");
  // The sum is Q(t) = 1/p(1/t); so p(t) = (1/Q)(1/t).
  RationalFunction reciprocal = RationalFunction::normalized(std::move(common_den), std::move(num_sum));
  return make_series(reciprocal.reverse_variable(), SeriesProvenance::SteinbergSum, m.rank());
}

}  // namespace

PoincareSeries steinberg_poincare(const CoxeterMatrix& m) {
  SteinbergTerms t = steinberg_terms(m);
  const long n = static_cast<long>(t.residues.size());
  IntPolynomial num_sum;
#ifdef _OPENMP
#pragma omp parallel
  {
    IntPolynomial local;
#pragma omp for schedule(dynamic, 8) nowait
    for (long i = 0; i < n; ++i) {
      IntPolynomial c = cofactor(t, static_cast<size_t>(i));
      local = t.parity[static_cast<size_t>(i)] ? local - c : local + c;
    }
#pragma omp critical(coxgrowth_steinberg_reduce)
    num_sum = num_sum + local;
  }
#else
  for (long i = 0; i < n; ++i) {
    IntPolynomial c = cofactor(t, static_cast<size_t>(i));
    num_sum = t.parity[static_cast<size_t>(i)] ? num_sum - c : num_sum + c;
  }
#endif
  return finish_steinberg(m, std::move(num_sum), degree_product(t.lcm));
}

PoincareSeries steinberg_poincare_serial(const CoxeterMatrix& m) {
  RationalFunction sum = RationalFunction::zero();
  for (const auto& subset : spherical_residues(m)) {
    IntPolynomial p_I = degree_product(residue_degrees(m, subset));
    IntPolynomial one = subset.size() % 2 ? IntPolynomial({-1}) : IntPolynomial::one();
    sum = sum + RationalFunction::normalized(std::move(one), std::move(p_I));
  }
  if (sum.is_zero()) throw std::logic_error("steinberg sum vanished");
  return make_series(sum.reciprocal().reverse_variable(), SeriesProvenance::SteinbergSum, m.rank());
}

PoincareSeries triangle_poincare(int a, int b, int c) {
  std::vector<int> labels{a, b, c};
  for (int v : labels)
    if (v != CoxeterMatrix::kInfinity && v < 2)
      throw std::invalid_argument("triangle labels must be >= 2 or infinity");
  // finite labels first; the closed forms are symmetric in a, b, c
  std::sort(labels.begin(), labels.end());
  Rat angle_sum(0);
  for (int v : labels)
    if (v != CoxeterMatrix::kInfinity) angle_sum += Rat(1, v);
  if (angle_sum >= 1) throw std::domain_error("not a hyperbolic triangle group");

  int finite_count = 0;
  for (int v : labels)
    if (v != CoxeterMatrix::kInfinity) ++finite_count;

  IntPolynomial num({1, 1});  // 1 + t
  std::map<int, Int> den_terms;
  den_terms[0] += 1;
  den_terms[1] += -2;
  int total = 0;
  for (int i = 0; i < finite_count; ++i) {
    int v = labels[static_cast<size_t>(i)];
    num = num * (IntPolynomial::one() - IntPolynomial::monomial(1, v));
    den_terms[v + 1] += 1;
    total += v;
    for (int j = 0; j < i; ++j) den_terms[labels[static_cast<size_t>(j)] + v] += -1;
  }
  if (finite_count == 3) {
    den_terms[total] += 2;
    den_terms[total + 1] += -1;
  }
  IntPolynomial den;
  for (const auto& [e, coeff] : den_terms) den = den + IntPolynomial::monomial(coeff, e);
  return make_series(RationalFunction::normalized(std::move(num), std::move(den)),
                     SeriesProvenance::TriangleClosedForm, 3);
}

}  // namespace coxgrowth
