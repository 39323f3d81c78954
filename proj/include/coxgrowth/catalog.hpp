#ifndef COXGROWTH_CATALOG_HPP
#define COXGROWTH_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/coxeter_matrix.hpp"
#include "coxgrowth/rational_function.hpp"

namespace coxgrowth {

// One system of the embedded dataset: the defining matrix plus every value
// the dataset records for it. The printed numerator/denominator pair keeps
// the signs of the source tables; `expected` is its canonical form.
struct CatalogEntry {
  std::string id;  // "T(2,3,7)", "H_c^4(1)", "H_nc^9(52)", ...
  int rank = 0;
  CoxeterMatrix matrix;
  IntPolynomial printed_num;
  IntPolynomial printed_den;
  RationalFunction expected;
  std::vector<Int> expected_coeffs;   // a_0 .. a_N, N = deg printed_num
  std::string expected_growth;        // 30 significant digits
  bool cocompact = false;
  bool in_M = false;
  std::optional<int> magma_index;     // 1..72 for the exceptional systems
};

// Directory baked in at build time; the CLI can override it.
std::string default_data_dir();

// Loads and caches the 75 entries in dataset order: the three triangle
// systems, then the cocompact exceptional systems 1-14, then the
// non-cocompact ones 1-58. Throws std::runtime_error when files are
// missing or malformed.
const std::vector<CatalogEntry>& catalog_entries(const std::string& dir = default_data_dir());

// nullptr when nothing matches. Accepts the entry id, the "EHC n" /
// "EHNC n" sequence labels (with or without a space), a bare Magma index
// 1..72, or "T(a,b,c)".
const CatalogEntry* find_entry(const std::string& query, const std::string& dir = default_data_dir());

// Verifies the manifest checksums; returns false and fills `error` on the
// first mismatch.
bool verify_manifest(const std::string& dir, std::string& error);

struct EntryChecks {
  bool numerator = false;
  bool denominator = false;
  bool coefficients = false;
  bool growth = false;
  bool cocompact = false;
  bool in_M = false;
  int growth_digits_matched = 0;
  bool all_ok() const {
    return numerator && denominator && coefficients && growth && cocompact && in_M;
  }
};

// Recomputes everything from the matrix alone (Steinberg series, series
// coefficients, 30-digit growth rate, cocompactness, minimality) and
// compares against the entry's recorded values; >= 28 matching significant
// digits pass the growth check.
EntryChecks verify_entry(const CatalogEntry& e);

struct VerificationReport {
  std::vector<std::pair<std::string, EntryChecks>> results;  // in dataset order
  int entries_checked = 0;
  int entries_passed = 0;
  bool all_ok() const { return entries_checked == entries_passed; }
  std::string to_json() const;
};

// Runs verify_entry over the whole dataset (entries are independent, so
// with OpenMP they run in parallel); the report order is dataset order
// regardless of scheduling.
VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries);

}  // namespace coxgrowth

#endif
