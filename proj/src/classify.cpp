#include "coxgrowth/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coxgrowth {

std::string FiniteTypeName::to_string() const {
  if (family == 'I') return "I2(" + std::to_string(label) + ")";
  return std::string(1, family) + "_" + std::to_string(rank);
}

std::string AffineTypeName::to_string() const {
  return "~" + std::string(1, family) + "_" + std::to_string(n);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Spherical: return "spherical";
    case Verdict::Affine: return "affine";
    case Verdict::Hyperbolic: return "hyperbolic";
    case Verdict::Other: return "other";
    case Verdict::Reducible: return "reducible";
  }
  return "?";
}

std::string ComponentLabel::type_string() const {
  if (finite) return finite->to_string();
  if (affine) return affine->to_string();
  return coxgrowth::to_string(verdict);
}

std::string ClassLabel::to_json() const {
  nlohmann::ordered_json doc;
  doc["verdict"] = coxgrowth::to_string(verdict);
  auto comps = nlohmann::ordered_json::array();
  for (const ComponentLabel& c : components) {
    nlohmann::ordered_json jc;
    jc["vertices"] = c.vertices;
    jc["type"] = c.type_string();
    comps.push_back(std::move(jc));
  }
  doc["components"] = std::move(comps);
  return doc.dump();
}

std::vector<int> degrees(const FiniteTypeName& t) {
  std::vector<int> d;
  switch (t.family) {
    case 'A':
      for (int i = 2; i <= t.rank + 1; ++i) d.push_back(i);
      break;
    case 'B':
      for (int i = 2; i <= 2 * t.rank; i += 2) d.push_back(i);
      break;
    case 'D':
      for (int i = 2; i <= 2 * t.rank - 2; i += 2) d.push_back(i);
      d.push_back(t.rank);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (t.rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (t.rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (t.rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'H':
      if (t.rank == 3) d = {2, 6, 10};
      if (t.rank == 4) d = {2, 12, 20, 30};
      break;
    case 'I':
      d = {2, t.label};
      break;
  }
  if (d.empty()) throw std::invalid_argument("degrees: bad finite type " + t.to_string());
  return d;
}

Int group_order(const FiniteTypeName& t) {
  Int n = 1;
  for (int d : degrees(t)) n *= d;
  return n;
}

std::vector<FiniteTypeName> finite_types_of_rank(int rank) {
  std::vector<FiniteTypeName> out;
  if (rank >= 1) out.push_back({'A', rank, 0});
  if (rank >= 2) out.push_back({'B', rank, 0});
  if (rank >= 4) out.push_back({'D', rank, 0});
  if (rank == 6 || rank == 7 || rank == 8) out.push_back({'E', rank, 0});
  if (rank == 4) out.push_back({'F', rank, 0});
  if (rank == 3 || rank == 4) out.push_back({'H', rank, 0});
  return out;
}

std::vector<AffineTypeName> affine_types_of_rank(int rank) {
  const int n = rank - 1;
  std::vector<AffineTypeName> out;
  if (rank == 2) out.push_back({'A', 1});
  if (n >= 2) out.push_back({'A', n});
  if (n >= 3) out.push_back({'B', n});
  if (n >= 2) out.push_back({'C', n});
  if (n >= 4) out.push_back({'D', n});
  if (n == 6 || n == 7 || n == 8) out.push_back({'E', n});
  if (n == 4) out.push_back({'F', n});
  if (n == 2) out.push_back({'G', n});
  return out;
}

namespace {

// Path with the given consecutive edge labels; all other pairs commute.
CoxeterMatrix path_matrix(const std::vector<int>& edge_labels) {
  int n = static_cast<int>(edge_labels.size()) + 1;
  std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (int i = 0; i + 1 < n; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = edge_labels[static_cast<size_t>(i)];
    m[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = edge_labels[static_cast<size_t>(i)];
  }
  return CoxeterMatrix(m);
}

CoxeterMatrix cycle_matrix(int n) {
  std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 2));
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    int j = (i + 1) % n;
    m[static_cast<size_t>(i)][static_cast<size_t>(j)] = 3;
    m[static_cast<size_t>(j)][static_cast<size_t>(i)] = 3;
  }
  return CoxeterMatrix(m);
}

// Vertex 0 in the middle, label-3 arms of the given lengths.
CoxeterMatrix star_matrix(const std::vector<int>& arm_lengths) {
  int n = 1;
  for (int a : arm_lengths) n += a;
  std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  auto link = [&m](int a, int b) {
    m[static_cast<size_t>(a)][static_cast<size_t>(b)] = 3;
    m[static_cast<size_t>(b)][static_cast<size_t>(a)] = 3;
  };
  int next = 1;
  for (int a : arm_lengths) {
    int prev = 0;
    for (int i = 0; i < a; ++i) {
      link(prev, next);
      prev = next++;
    }
  }
  return CoxeterMatrix(m);
}

std::vector<int> repeat(int value, int count) { return std::vector<int>(static_cast<size_t>(count), value); }

}  // namespace

CoxeterMatrix finite_type_matrix(const FiniteTypeName& t) {
  switch (t.family) {
    case 'A':
      return t.rank == 1 ? CoxeterMatrix(std::vector<std::vector<int>>{{1}})
                         : path_matrix(repeat(3, t.rank - 1));
    case 'B': {
      std::vector<int> e = repeat(3, t.rank - 1);
      e.back() = 4;
      return path_matrix(e);
    }
    case 'D':
      return star_matrix({1, 1, t.rank - 3});
    case 'E':
      return star_matrix({1, 2, t.rank - 4});
    case 'F':
      return path_matrix({3, 4, 3});
    case 'H': {
      std::vector<int> e = repeat(3, t.rank - 1);
      e.front() = 5;
      return path_matrix(e);
    }
    case 'I':
      return CoxeterMatrix::dihedral(t.label);
  }
  throw std::invalid_argument("finite_type_matrix: bad family");
}

CoxeterMatrix affine_type_matrix(const AffineTypeName& t) {
  switch (t.family) {
    case 'A':
      return t.n == 1 ? CoxeterMatrix::dihedral(CoxeterMatrix::kInfinity) : cycle_matrix(t.n + 1);
    case 'B': {
      // fork at one end of a label-3 path, label 4 at the other; rank n+1
      CoxeterMatrix forked = star_matrix({1, 1, t.n - 2});
      int last = t.n;
      for (int w = 0; w < last; ++w)
        if (forked.label(last, w) == 3) return forked.with_label(last, w, 4);
      break;
    }
    case 'C': {
      std::vector<int> e = repeat(3, t.n);
      e.front() = 4;
      e.back() = 4;
      return path_matrix(e);
    }
    case 'D': {
      // forks at both ends of a label-3 path; rank n+1
      int r = t.n + 1;
      std::vector<std::vector<int>> mm(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 2));
      for (int i = 0; i < r; ++i) mm[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      auto link = [&mm](int a, int b) {
        mm[static_cast<size_t>(a)][static_cast<size_t>(b)] = 3;
        mm[static_cast<size_t>(b)][static_cast<size_t>(a)] = 3;
      };
      link(0, 2);
      link(1, 2);
      for (int i = 2; i + 1 <= t.n - 2; ++i) link(i, i + 1);
      link(t.n - 2, t.n - 1);
      link(t.n - 2, t.n);
      return CoxeterMatrix(mm);
    }
    case 'E':
      if (t.n == 6) return star_matrix({2, 2, 2});
      if (t.n == 7) return star_matrix({1, 3, 3});
      if (t.n == 8) return star_matrix({1, 2, 5});
      break;
    case 'F':
      return path_matrix({3, 3, 4, 3});
    case 'G':
      return path_matrix({6, 3});
  }
  throw std::invalid_argument("affine_type_matrix: bad type " + t.to_string());
}

namespace {

void require_irreducible(const CoxeterMatrix& m, const char* who) {
  if (!m.is_irreducible()) throw std::invalid_argument(std::string(who) + " expects irreducible input");
}

}  // namespace

std::optional<FiniteTypeName> finite_type_of(const CoxeterMatrix& m) {
  require_irreducible(m, "finite_type_of");
  if (m.rank() == 1) return FiniteTypeName{'A', 1, 0};
  if (m.rank() == 2) {
    int label = m.label(0, 1);
    if (label == CoxeterMatrix::kInfinity) return std::nullopt;
    if (label == 3) return FiniteTypeName{'A', 2, 0};
    if (label == 4) return FiniteTypeName{'B', 2, 0};
    return FiniteTypeName{'I', 2, label};
  }
  for (const FiniteTypeName& t : finite_types_of_rank(m.rank()))
    if (are_isomorphic(m, finite_type_matrix(t))) return t;
  return std::nullopt;
}

std::optional<AffineTypeName> affine_type_of(const CoxeterMatrix& m) {
  require_irreducible(m, "affine_type_of");
  for (const AffineTypeName& t : affine_types_of_rank(m.rank()))
    if (are_isomorphic(m, affine_type_matrix(t))) return t;
  return std::nullopt;
}

namespace {

bool every_proper_parabolic_spherical_or_affine(const CoxeterMatrix& m) {
  // Proper parabolics of spherical systems are spherical and those of
  // affine systems are spherical as well, so checking the one-vertex
  // deletions covers the whole downward closure.
  for (int v = 0; v < m.rank(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < m.rank(); ++w)
      if (w != v) rest.push_back(w);
    if (!is_spherical_or_affine_system(m.induced(rest))) return false;
  }
  return true;
}

ComponentLabel label_component(const CoxeterMatrix& whole, const std::vector<int>& vertices) {
  ComponentLabel lab;
  lab.vertices = vertices;
  CoxeterMatrix sub = whole.induced(vertices);
  if (auto ft = finite_type_of(sub)) {
    lab.verdict = Verdict::Spherical;
    lab.finite = ft;
    return lab;
  }
  if (auto at = affine_type_of(sub)) {
    lab.verdict = Verdict::Affine;
    lab.affine = at;
    return lab;
  }
  lab.verdict =
      every_proper_parabolic_spherical_or_affine(sub) ? Verdict::Hyperbolic : Verdict::Other;
  return lab;
}

}  // namespace

ClassLabel classify(const CoxeterMatrix& m) {
  ClassLabel out;
  if (m.rank() == 0) {
    out.verdict = Verdict::Spherical;
    return out;
  }
  std::vector<std::vector<int>> comps = m.components();
  if (comps.size() > 1) {
    out.verdict = Verdict::Reducible;
    for (const auto& c : comps) out.components.push_back(label_component(m, c));
    return out;
  }
  ComponentLabel lab = label_component(m, comps.front());
  out.verdict = lab.verdict;
  out.components.push_back(std::move(lab));
  return out;
}

bool is_spherical_system(const CoxeterMatrix& m) {
  for (const auto& c : m.components())
    if (!finite_type_of(m.induced(c))) return false;
  return true;
}

bool is_spherical_or_affine_system(const CoxeterMatrix& m) {
  for (const auto& c : m.components()) {
    CoxeterMatrix sub = m.induced(c);
    if (!finite_type_of(sub) && !affine_type_of(sub)) return false;
  }
  return true;
}

std::vector<std::vector<int>> spherical_residues(const CoxeterMatrix& m) {
  const int n = m.rank();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) subset.push_back(v);
    if (is_spherical_system(m.induced(subset))) out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_cocompact(const CoxeterMatrix& m) {
  if (classify(m).verdict != Verdict::Hyperbolic)
    throw std::invalid_argument("is_cocompact expects a hyperbolic system");
  for (int v = 0; v < m.rank(); ++v) {
    std::vector<int> rest;
    for (int w = 0; w < m.rank(); ++w)
      if (w != v) rest.push_back(w);
    if (!is_spherical_system(m.induced(rest))) return false;
  }
  return true;
}

}  // namespace coxgrowth
