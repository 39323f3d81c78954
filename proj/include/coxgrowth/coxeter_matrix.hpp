#ifndef COXGROWTH_COXETER_MATRIX_HPP
#define COXGROWTH_COXETER_MATRIX_HPP

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace coxgrowth {

// Symmetric matrix of edge labels: 1 on the diagonal, entries in
// {2, 3, ...} u {infinity} off it. Immutable after construction; rank 0 is
// admitted (the empty residue has the trivial group).
class CoxeterMatrix {
 public:
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  CoxeterMatrix() = default;
  // Validates symmetry, the diagonal and the label ranges; throws
  // std::invalid_argument with a description otherwise.
  explicit CoxeterMatrix(const std::vector<std::vector<int>>& labels);

  // Accepts either the JSON document {"rank": n, "matrix": [[...]]} (with
  // "inf" or 0 for infinity) or compact text: n lines of n whitespace
  // separated labels with 0 for infinity. Detected by the first character.
  static CoxeterMatrix parse(const std::string& text);
  static CoxeterMatrix parse_json(const std::string& text);
  static CoxeterMatrix parse_compact(const std::string& text);

  // Rank-2 system with the given label (kInfinity allowed).
  static CoxeterMatrix dihedral(int m);
  // Triangle system with pairwise labels a = m(0,1), b = m(1,2), c = m(0,2).
  static CoxeterMatrix triangle(int a, int b, int c);

  int rank() const { return rank_; }
  int label(int s, int r) const { return m_[index(s, r)]; }
  // Copy with one off-diagonal label replaced (both symmetric slots).
  CoxeterMatrix with_label(int s, int r, int value) const;

  bool operator==(const CoxeterMatrix& o) const = default;

  std::string to_json() const;
  std::string to_compact() const;

  // Connected components of the Coxeter graph (edges where the label is
  // >= 3 or infinity), ordered by smallest vertex; vertices ascending.
  std::vector<std::vector<int>> components() const;
  bool is_irreducible() const { return rank_ >= 1 && components().size() == 1; }

  // Submatrix on the given vertices in ascending original order; indices
  // out of range or repeated throw std::invalid_argument.
  CoxeterMatrix induced(const std::vector<int>& subset) const;

  // Lexicographically least flattened matrix over all vertex relabelings;
  // equal keys iff Coxeter-isomorphic.
  std::string canonical_key() const;

  // All labels on one vertex's row (excluding the diagonal), sorted.
  std::vector<int> row_profile(int s) const;

 private:
  size_t index(int s, int r) const { return static_cast<size_t>(s) * rank_ + r; }
  int rank_ = 0;
  std::vector<int> m_;
};

// Label-preserving vertex bijection from a to b if one exists (witness
// per a-vertex), found by backtracking with row-profile pruning.
std::optional<std::vector<int>> isomorphism(const CoxeterMatrix& a, const CoxeterMatrix& b);

inline bool are_isomorphic(const CoxeterMatrix& a, const CoxeterMatrix& b) {
  return isomorphism(a, b).has_value();
}

// Edge view of a matrix: one edge per pair with label >= 3 or infinity
// (label-2 pairs commute and are non-edges). Derived deterministically and
// convertible back without loss.
struct CoxeterGraph {
  struct Edge {
    int s;
    int r;  // s < r
    int label;
    bool operator==(const Edge&) const = default;
  };
  int rank = 0;
  std::vector<Edge> edges;  // ordered by (s, r)
  bool operator==(const CoxeterGraph&) const = default;
};

CoxeterGraph graph_of(const CoxeterMatrix& m);
CoxeterMatrix matrix_of(const CoxeterGraph& g);

}  // namespace coxgrowth

#endif
