#include "coxgrowth/gram.hpp"

#include <map>
#include <stdexcept>

namespace coxgrowth {

GramMatrix gram_matrix(const CoxeterMatrix& m, long precision_digits) {
  if (precision_digits < 15) throw std::invalid_argument("gram_matrix wants precision >= 15 digits");
  const mpfr_prec_t prec = bits_for_digits(precision_digits);
  GramMatrix g;
  g.rank = m.rank();
  g.digits = precision_digits;
  g.entries.assign(static_cast<size_t>(g.rank) * static_cast<size_t>(g.rank), Real(prec));
  // one evaluation per distinct label keeps symmetric slots bit-identical
  std::map<int, Real> cache;
  for (int i = 0; i < g.rank; ++i) {
    for (int j = i; j < g.rank; ++j) {
      int label = m.label(i, j);
      auto it = cache.find(label);
      if (it == cache.end()) it = cache.emplace(label, Real::neg_cos_pi_over(label, prec)).first;
      g.entries[static_cast<size_t>(i) * g.rank + j] = it->second;
      g.entries[static_cast<size_t>(j) * g.rank + i] = it->second;
    }
  }
  return g;
}

}  // namespace coxgrowth
