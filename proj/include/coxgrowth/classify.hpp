#ifndef COXGROWTH_CLASSIFY_HPP
#define COXGROWTH_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/bigint.hpp"
#include "coxgrowth/coxeter_matrix.hpp"

namespace coxgrowth {

// Name of an irreducible finite (spherical) type. I2(3) and I2(4) are
// canonicalized to A_2 and B_2; B_n and C_n coincide as Coxeter systems and
// get the single name B_n.
struct FiniteTypeName {
  char family = 'A';  // A, B, D, E, F, H, I (I = dihedral I2(m))
  int rank = 1;
  int label = 0;  // edge label for I2(m), 0 otherwise
  bool operator==(const FiniteTypeName&) const = default;
  std::string to_string() const;
};

// Name of an irreducible affine type X~_n (rank n+1); A~_1 is the rank-2
// system with the infinite label.
struct AffineTypeName {
  char family = 'A';  // A, B, C, D, E, F, G
  int n = 1;
  bool operator==(const AffineTypeName&) const = default;
  std::string to_string() const;  // "~A_2", "~F_4", ...
};

enum class Verdict { Spherical, Affine, Hyperbolic, Other, Reducible };
std::string to_string(Verdict v);

struct ComponentLabel {
  std::vector<int> vertices;
  Verdict verdict = Verdict::Spherical;
  std::optional<FiniteTypeName> finite;
  std::optional<AffineTypeName> affine;
  // finite/affine name when recognized, otherwise the verdict word.
  std::string type_string() const;
};

struct ClassLabel {
  Verdict verdict = Verdict::Spherical;
  std::vector<ComponentLabel> components;
  std::string to_json() const;
};

// Classical degrees of the polynomial invariants; their product is the
// group order.
std::vector<int> degrees(const FiniteTypeName& t);
Int group_order(const FiniteTypeName& t);
// All finite type names of the given rank (I2 excluded; rank-2 systems are
// recognized directly from the label).
std::vector<FiniteTypeName> finite_types_of_rank(int rank);
std::vector<AffineTypeName> affine_types_of_rank(int rank);

// Reference diagram for a type name, used both for recognition (up to
// isomorphism) and as a generator in tests.
CoxeterMatrix finite_type_matrix(const FiniteTypeName& t);
CoxeterMatrix affine_type_matrix(const AffineTypeName& t);

// Recognition by diagram pattern. Both expect an irreducible input and
// throw std::invalid_argument otherwise.
std::optional<FiniteTypeName> finite_type_of(const CoxeterMatrix& m);
std::optional<AffineTypeName> affine_type_of(const CoxeterMatrix& m);

// The spherical / affine / hyperbolic / other tetrachotomy for irreducible
// input; per-component labels under verdict Reducible otherwise. Rank 0 is
// spherical by convention (trivial group).
ClassLabel classify(const CoxeterMatrix& m);

// True when every irreducible component has finite type.
bool is_spherical_system(const CoxeterMatrix& m);
// True when every irreducible component is of finite or affine type.
bool is_spherical_or_affine_system(const CoxeterMatrix& m);

// All subsets I (including the empty one) whose induced system is
// spherical, ordered by size then lexicographically.
std::vector<std::vector<int>> spherical_residues(const CoxeterMatrix& m);

// True iff no affine component appears among proper parabolic subsystems,
// i.e. every proper parabolic is spherical. Requires a hyperbolic input and
// throws std::invalid_argument otherwise.
bool is_cocompact(const CoxeterMatrix& m);

}  // namespace coxgrowth

#endif
