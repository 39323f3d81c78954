#include "coxgrowth/coxeter_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace coxgrowth {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw std::invalid_argument("coxeter matrix: " + what);
}

}  // namespace

CoxeterMatrix::CoxeterMatrix(const std::vector<std::vector<int>>& labels) {
  rank_ = static_cast<int>(labels.size());
  m_.resize(static_cast<size_t>(rank_) * rank_);
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(labels[i].size()) != rank_)
      parse_fail("row " + std::to_string(i) + " has " + std::to_string(labels[i].size()) +
                 " entries, expected " + std::to_string(rank_));
    for (int j = 0; j < rank_; ++j) m_[index(i, j)] = labels[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  for (int i = 0; i < rank_; ++i) {
    if (label(i, i) != 1) parse_fail("diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") must be 1");
    for (int j = i + 1; j < rank_; ++j) {
      if (label(i, j) != label(j, i))
        parse_fail("asymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      int v = label(i, j);
      if (v != kInfinity && v < 2)
        parse_fail("off-diagonal label at (" + std::to_string(i) + "," + std::to_string(j) +
                   ") must be >= 2 or infinity");
    }
  }
}

CoxeterMatrix CoxeterMatrix::parse(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return (c == '{' || c == '[') ? parse_json(text) : parse_compact(text);
  }
  parse_fail("empty input");
}

CoxeterMatrix CoxeterMatrix::parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("bad JSON: ") + e.what());
  }
  nlohmann::json rows;
  std::optional<int> declared_rank;
  if (doc.is_array()) {
    rows = doc;
  } else if (doc.is_object()) {
    if (!doc.contains("matrix")) parse_fail("JSON object lacks \"matrix\"");
    rows = doc["matrix"];
    if (doc.contains("rank")) declared_rank = doc["rank"].get<int>();
  } else {
    parse_fail("JSON must be an array or an object with \"matrix\"");
  }
  if (!rows.is_array()) parse_fail("\"matrix\" must be an array of rows");
  std::vector<std::vector<int>> labels;
  for (const auto& row : rows) {
    if (!row.is_array()) parse_fail("matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        if (cell.get<std::string>() == "inf")
          r.push_back(kInfinity);
        else
          parse_fail("unrecognized label \"" + cell.get<std::string>() + "\"");
      } else if (cell.is_number_integer()) {
        long v = cell.get<long>();
        r.push_back(v == 0 ? kInfinity : static_cast<int>(v));
      } else {
        parse_fail("labels must be integers or \"inf\"");
      }
    }
    labels.push_back(std::move(r));
  }
  if (declared_rank && *declared_rank != static_cast<int>(labels.size()))
    parse_fail("declared rank " + std::to_string(*declared_rank) + " but " +
               std::to_string(labels.size()) + " rows");
  return CoxeterMatrix(labels);
}

CoxeterMatrix CoxeterMatrix::parse_compact(const std::string& text) {
  std::vector<std::vector<int>> labels;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    long v;
    while (ls >> v) row.push_back(v == 0 ? kInfinity : static_cast<int>(v));
    if (!ls.eof()) parse_fail("non-integer token in line \"" + line + "\"");
    if (!row.empty()) labels.push_back(std::move(row));
  }
  return CoxeterMatrix(labels);
}

CoxeterMatrix CoxeterMatrix::dihedral(int m) {
  return CoxeterMatrix({{1, m}, {m, 1}});
}

CoxeterMatrix CoxeterMatrix::triangle(int a, int b, int c) {
  return CoxeterMatrix({{1, a, c}, {a, 1, b}, {c, b, 1}});
}

CoxeterMatrix CoxeterMatrix::with_label(int s, int r, int value) const {
  if (s == r) throw std::invalid_argument("with_label wants an off-diagonal pair");
  CoxeterMatrix copy(*this);
  copy.m_[index(s, r)] = value;
  copy.m_[index(r, s)] = value;
  if (value != kInfinity && value < 2) throw std::invalid_argument("label must be >= 2 or infinity");
  return copy;
}

std::string CoxeterMatrix::to_json() const {
  nlohmann::ordered_json doc;
  doc["rank"] = rank_;
  auto rows = nlohmann::ordered_json::array();
  for (int i = 0; i < rank_; ++i) {
    auto row = nlohmann::ordered_json::array();
    for (int j = 0; j < rank_; ++j) {
      int v = label(i, j);
      if (v == kInfinity)
        row.push_back("inf");
      else
        row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  doc["matrix"] = std::move(rows);
  return doc.dump();
}

std::string CoxeterMatrix::to_compact() const {
  std::ostringstream out;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      if (j) out << ' ';
      int v = label(i, j);
      out << (v == kInfinity ? 0 : v);
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::vector<int>> CoxeterMatrix::components() const {
  std::vector<int> comp(static_cast<size_t>(rank_), -1);
  int n_comp = 0;
  for (int start = 0; start < rank_; ++start) {
    if (comp[static_cast<size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<size_t>(start)] = n_comp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w = 0; w < rank_; ++w) {
        if (w == v || comp[static_cast<size_t>(w)] >= 0) continue;
        if (label(v, w) != 2) {
          comp[static_cast<size_t>(w)] = n_comp;
          stack.push_back(w);
        }
      }
    }
    ++n_comp;
  }
  std::vector<std::vector<int>> out(static_cast<size_t>(n_comp));
  for (int v = 0; v < rank_; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);
  return out;
}

CoxeterMatrix CoxeterMatrix::induced(const std::vector<int>& subset) const {
  std::vector<int> vs = subset;
  std::sort(vs.begin(), vs.end());
  for (size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= rank_)
      throw std::invalid_argument("induced: vertex " + std::to_string(vs[i]) + " out of range");
    if (i > 0 && vs[i] == vs[i - 1])
      throw std::invalid_argument("induced: repeated vertex " + std::to_string(vs[i]));
  }
  CoxeterMatrix sub;
  sub.rank_ = static_cast<int>(vs.size());
  sub.m_.resize(static_cast<size_t>(sub.rank_) * sub.rank_);
  for (int i = 0; i < sub.rank_; ++i)
    for (int j = 0; j < sub.rank_; ++j)
      sub.m_[sub.index(i, j)] = label(vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
  return sub;
}

std::vector<int> CoxeterMatrix::row_profile(int s) const {
  std::vector<int> p;
  p.reserve(static_cast<size_t>(rank_) - 1);
  for (int r = 0; r < rank_; ++r)
    if (r != s) p.push_back(label(s, r));
  std::sort(p.begin(), p.end());
  return p;
}

namespace {

// Canonical form: the lexicographically least strict lower triangle, read
// row by row, over all vertex orderings. Those entries become known exactly
// as vertices are placed, so prefix comparison against the best-so-far is
// sound. The symmetric matrix with unit diagonal is recovered uniquely from
// the triangle, hence equal keys iff isomorphic.
struct CanonicalSearch {
  const CoxeterMatrix& m;
  int n;
  std::vector<int> placed;   // canonical position -> original vertex
  std::vector<bool> used;
  std::vector<int> best;     // lower-triangle entries of the best ordering
  std::vector<int> current;  // lower-triangle prefix of the current one

  explicit CanonicalSearch(const CoxeterMatrix& mat)
      : m(mat), n(mat.rank()), used(static_cast<size_t>(mat.rank()), false) {}

  void extend() {
    int pos = static_cast<int>(placed.size());
    if (pos == n) {
      if (current < best) best = current;
      return;
    }
    std::set<std::vector<int>> seen;
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      // Candidates indistinguishable from the current partial placement
      // lead to identical subtrees; try one representative. This keeps
      // matrices with many automorphisms from exploding.
      std::vector<int> sig;
      sig.reserve(static_cast<size_t>(n));
      for (int p : placed) sig.push_back(m.label(v, p));
      std::vector<int> rest;
      for (int w = 0; w < n; ++w)
        if (!used[static_cast<size_t>(w)] && w != v) rest.push_back(m.label(v, w));
      std::sort(rest.begin(), rest.end());
      sig.insert(sig.end(), rest.begin(), rest.end());
      if (!seen.insert(sig).second) continue;

      size_t row_start = current.size();
      int cmp = 0;
      for (int p = 0; p < pos; ++p) {
        int entry = m.label(v, placed[static_cast<size_t>(p)]);
        int b = best[row_start + static_cast<size_t>(p)];
        if (entry != b) {
          cmp = entry > b ? 1 : -1;
          break;
        }
      }
      if (cmp > 0) continue;  // prefix already beaten
      if (cmp < 0) {
        // This subtree strictly beats the incumbent. Pruning deeper down
        // must not compare against the stale suffix, so rewrite best as the
        // improved prefix padded with maximal labels; the subtree is then
        // searched exhaustively and its minimum lands in best at a leaf.
        for (int p = 0; p < pos; ++p)
          best[row_start + static_cast<size_t>(p)] = m.label(v, placed[static_cast<size_t>(p)]);
        std::fill(best.begin() + static_cast<long>(row_start) + pos, best.end(),
                  std::numeric_limits<int>::max());
      }
      for (int p : placed) current.push_back(m.label(v, p));
      used[static_cast<size_t>(v)] = true;
      placed.push_back(v);
      extend();
      placed.pop_back();
      used[static_cast<size_t>(v)] = false;
      current.resize(row_start);
    }
  }
};

}  // namespace

std::string CoxeterMatrix::canonical_key() const {
  CanonicalSearch search(*this);
  // Seed with an actual ordering so pruning has a baseline.
  search.best.reserve(static_cast<size_t>(rank_) * rank_ / 2);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < i; ++j) search.best.push_back(label(i, j));
  search.placed.reserve(static_cast<size_t>(rank_));
  search.extend();
  std::ostringstream out;
  out << rank_ << ':';
  for (int v : search.best) out << (v == kInfinity ? 0 : v) << ',';
  return out.str();
}

CoxeterGraph graph_of(const CoxeterMatrix& m) {
  CoxeterGraph g;
  g.rank = m.rank();
  for (int s = 0; s < m.rank(); ++s)
    for (int r = s + 1; r < m.rank(); ++r)
      if (m.label(s, r) != 2) g.edges.push_back({s, r, m.label(s, r)});
  return g;
}

CoxeterMatrix matrix_of(const CoxeterGraph& g) {
  std::vector<std::vector<int>> labels(static_cast<size_t>(g.rank),
                                       std::vector<int>(static_cast<size_t>(g.rank), 2));
  for (int i = 0; i < g.rank; ++i) labels[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  for (const CoxeterGraph::Edge& e : g.edges) {
    labels[static_cast<size_t>(e.s)][static_cast<size_t>(e.r)] = e.label;
    labels[static_cast<size_t>(e.r)][static_cast<size_t>(e.s)] = e.label;
  }
  return CoxeterMatrix(labels);
}

std::optional<std::vector<int>> isomorphism(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  if (a.rank() != b.rank()) return std::nullopt;
  const int n = a.rank();
  // label multiset must match globally
  {
    std::multiset<int> la, lb;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        la.insert(a.label(i, j));
        lb.insert(b.label(i, j));
      }
    if (la != lb) return std::nullopt;
  }
  std::vector<std::vector<int>> profiles_b(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) profiles_b[static_cast<size_t>(v)] = b.row_profile(v);

  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto backtrack = [&](auto&& self, int s) -> bool {
    if (s == n) return true;
    std::vector<int> prof_a = a.row_profile(s);
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      if (profiles_b[static_cast<size_t>(v)] != prof_a) continue;
      bool ok = true;
      for (int r = 0; r < s; ++r) {
        if (a.label(s, r) != b.label(v, map[static_cast<size_t>(r)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[static_cast<size_t>(s)] = v;
      used[static_cast<size_t>(v)] = true;
      if (self(self, s + 1)) return true;
      used[static_cast<size_t>(v)] = false;
      map[static_cast<size_t>(s)] = -1;
    }
    return false;
  };
  if (backtrack(backtrack, 0)) return map;
  return std::nullopt;
}

}  // namespace coxgrowth
