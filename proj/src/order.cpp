#include "coxgrowth/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "coxgrowth/classify.hpp"

namespace coxgrowth {

namespace {

// Sorted-descending row labels of b must dominate those of a entrywise for
// phi(s) = v to be extendable; necessary, cheap, and sharp enough here.
bool row_dominates(const std::vector<int>& target_desc, const std::vector<int>& source_desc) {
  if (target_desc.size() < source_desc.size()) return false;
  for (size_t i = 0; i < source_desc.size(); ++i)
    if (target_desc[i] < source_desc[i]) return false;
  return true;
}

std::vector<int> row_desc(const CoxeterMatrix& m, int s) {
  std::vector<int> p;
  p.reserve(static_cast<size_t>(m.rank()) - 1);
  for (int r = 0; r < m.rank(); ++r)
    if (r != s) p.push_back(m.label(s, r));
  std::sort(p.rbegin(), p.rend());
  return p;
}

}  // namespace

std::optional<OrderWitness> leq_witness(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  if (a.rank() > b.rank()) return std::nullopt;
  const int n = a.rank(), m = b.rank();
  std::vector<std::vector<int>> a_rows(static_cast<size_t>(n)), b_rows(static_cast<size_t>(m));
  for (int s = 0; s < n; ++s) a_rows[static_cast<size_t>(s)] = row_desc(a, s);
  for (int v = 0; v < m; ++v) b_rows[static_cast<size_t>(v)] = row_desc(b, v);

  // most-constrained source vertices first
  std::vector<int> order(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) order[static_cast<size_t>(s)] = s;
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return a_rows[static_cast<size_t>(x)] > a_rows[static_cast<size_t>(y)]; });

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(m), false);
  auto backtrack = [&](auto&& self, size_t pos) -> bool {
    if (pos == order.size()) return true;
    int s = order[pos];
    for (int v = 0; v < m; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (!row_dominates(b_rows[static_cast<size_t>(v)], a_rows[static_cast<size_t>(s)])) continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos; ++prev) {
        int t = order[prev];
        if (a.label(s, t) > b.label(v, map[static_cast<size_t>(t)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(s)] = v;
      used[static_cast<size_t>(v)] = true;
      if (self(self, pos + 1)) return true;
      used[static_cast<size_t>(v)] = false;
      map[static_cast<size_t>(s)] = -1;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return OrderWitness{std::move(map)};
  return std::nullopt;
}

bool in_X(const CoxeterMatrix& m) {
  if (!m.is_irreducible()) return false;
  Verdict v = classify(m).verdict;
  return v != Verdict::Spherical && v != Verdict::Affine;
}

std::vector<CoxeterMatrix> order_children(const CoxeterMatrix& m) {
  std::vector<CoxeterMatrix> children;
  for (int v = 0; v < m.rank(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < m.rank(); ++w)
      if (w != v) rest.push_back(w);
    children.push_back(m.induced(rest));
  }
  for (int s = 0; s < m.rank(); ++s) {
    for (int r = s + 1; r < m.rank(); ++r) {
      int label = m.label(s, r);
      if (label == CoxeterMatrix::kInfinity || label <= 2) continue;
      children.push_back(m.with_label(s, r, label - 1));
    }
  }
  return children;
}

namespace {

// Anything comparable below a system whose components are all spherical or
// affine stays spherical or affine (validated at desk scale by the pruning
// tests), so the descent stops there. A component that is neither is
// itself an X member sitting strictly below. The memo keys canonical forms
// so isomorphic children are explored once.
bool downset_meets_X(const CoxeterMatrix& m, std::unordered_map<std::string, bool>& memo) {
  std::string key = m.canonical_key();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool result = false;
  for (const auto& comp : m.components()) {
    CoxeterMatrix sub = m.induced(comp);
    if (!finite_type_of(sub) && !affine_type_of(sub)) {
      result = true;  // irreducible, neither spherical nor affine: in X
      break;
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

bool is_minimal(const CoxeterMatrix& m) {
  if (!in_X(m)) throw std::invalid_argument("is_minimal expects a member of X");
  bool has_infinite = false;
  for (int s = 0; s < m.rank() && !has_infinite; ++s)
    for (int r = s + 1; r < m.rank(); ++r)
      if (m.label(s, r) == CoxeterMatrix::kInfinity) {
        has_infinite = true;
        break;
      }
  if (has_infinite) {
    if (m.rank() == 3) return false;  // some finite-label hyperbolic triangle sits below
    throw std::invalid_argument(
        "is_minimal with infinite labels is only decided for rank-3 triangle systems");
  }
  std::unordered_map<std::string, bool> memo;
  for (const CoxeterMatrix& child : order_children(m))
    if (downset_meets_X(child, memo)) return false;
  return true;
}

}  // namespace coxgrowth
