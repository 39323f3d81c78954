#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <set>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/poincare.hpp"
#include "coxgrowth/sha256.hpp"
#include "doctest.h"

using namespace coxgrowth;

TEST_CASE("dataset loads with the expected shape") {
  const auto& entries = catalog_entries();
  REQUIRE(entries.size() == 75);
  CHECK(entries[0].id == "T(2,3,7)");
  CHECK(entries[1].id == "T(2,4,5)");
  CHECK(entries[2].id == "T(3,3,4)");
  CHECK(entries[3].id == "H_c^4(1)");
  CHECK(entries[74].id == "H_nc^10(58)");

  // ids unique
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  CHECK(ids.size() == 75);

  // sequence order matches the magma indices 1..72 after the triangles
  for (size_t i = 3; i < entries.size(); ++i) {
    REQUIRE(entries[i].magma_index.has_value());
    CHECK(*entries[i].magma_index == static_cast<int>(i) - 2);
  }
}

TEST_CASE("find_entry accepts ids, sequence labels and magma indices") {
  CHECK(find_entry("T(2,3,7)") != nullptr);
  CHECK(find_entry("T(2,3,7)")->expected_growth.substr(0, 16) == "1.17628081825991");
  CHECK(find_entry("EHC 1") == find_entry("1"));
  CHECK(find_entry("EHC1") == find_entry("H_c^4(1)"));
  CHECK(find_entry("EHNC 1") == find_entry("15"));
  CHECK(find_entry("EHNC 58") == find_entry("72"));
  CHECK(find_entry("magma:66") == find_entry("EHNC 52"));
  CHECK(find_entry("muffin") == nullptr);
  CHECK(find_entry("73") == nullptr);

  const CatalogEntry* first = find_entry("1");
  REQUIRE(first != nullptr);
  CHECK(first->rank == 4);
  CHECK(first->cocompact);
  CHECK(first->in_M);
}

TEST_CASE("embedded data is self-consistent before any recomputation") {
  for (const CatalogEntry& e : catalog_entries()) {
    CAPTURE(e.id);
    // expanding the printed pair reproduces the printed census exactly
    std::vector<Int> a = e.expected.series_coeffs(static_cast<int>(e.expected_coeffs.size()));
    CHECK(a == e.expected_coeffs);
    CHECK(static_cast<int>(e.expected_coeffs.size()) == e.printed_num.degree() + 1);
    CHECK(e.expected_coeffs[0] == 1);
    CHECK(e.expected_coeffs[1] == e.rank);
    // growth strings are 30 significant digits
    CHECK(e.expected_growth.size() == 31);
    CHECK(e.expected_growth[1] == '.');
  }
}

TEST_CASE("flag and rank censuses") {
  int cocompact = 0, minimal = 0, exceptional = 0;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.magma_index) {
      ++exceptional;
      if (e.cocompact) ++cocompact;
      if (e.in_M) ++minimal;
      CHECK(e.rank >= 4);
      CHECK(e.rank <= 10);
    } else {
      CHECK(e.rank == 3);
      CHECK(e.cocompact);
      CHECK(e.in_M);
    }
  }
  CHECK(exceptional == 72);
  CHECK(cocompact == 14);
  CHECK(minimal == 35);
}

TEST_CASE("manifest checksums hold") {
  std::string error;
  CHECK(verify_manifest(default_data_dir(), error));
  CHECK(error.empty());
  std::string bogus_error;
  CHECK_FALSE(verify_manifest("/nonexistent-dir", bogus_error));
  CHECK_FALSE(bogus_error.empty());
}

TEST_CASE("sha256 known answers") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  // 56 bytes forces the two-block padding path
  CHECK(sha256_hex("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq") ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST_CASE("verification passes a pristine entry and pinpoints a corrupted one") {
  const CatalogEntry* ehc2 = find_entry("EHC 2");
  REQUIRE(ehc2 != nullptr);
  // the printed census of this entry, frozen
  std::vector<Int> expect{1, 4, 9, 16, 26, 41, 62, 90, 128, 181, 254, 352};
  CHECK(ehc2->expected_coeffs == expect);
  EntryChecks clean = verify_entry(*ehc2);
  CHECK(clean.all_ok());
  CHECK(clean.growth_digits_matched >= 28);

  // perturb one coefficient: exactly that check fails
  CatalogEntry tampered = *ehc2;
  tampered.expected_coeffs[5] += 1;
  EntryChecks c = verify_entry(tampered);
  CHECK_FALSE(c.coefficients);
  CHECK(c.numerator);
  CHECK(c.denominator);
  CHECK(c.growth);
  CHECK(c.cocompact);
  CHECK(c.in_M);
  CHECK_FALSE(c.all_ok());

  // perturb the flags: only those fail
  CatalogEntry flipped = *ehc2;
  flipped.cocompact = !flipped.cocompact;
  flipped.in_M = !flipped.in_M;
  EntryChecks f = verify_entry(flipped);
  CHECK(f.coefficients);
  CHECK_FALSE(f.cocompact);
  CHECK_FALSE(f.in_M);

  // perturb the growth string in a late digit
  CatalogEntry drip = *ehc2;
  drip.expected_growth[15] = drip.expected_growth[15] == '5' ? '6' : '5';
  EntryChecks d = verify_entry(drip);
  CHECK_FALSE(d.growth);
  CHECK(d.growth_digits_matched < 28);
}

TEST_CASE("deep coefficients of the rank-9 system verify from the matrix alone") {
  const CatalogEntry* e = find_entry("EHNC 52");
  REQUIRE(e != nullptr);
  REQUIRE(e->expected_coeffs.size() == 121);
  CHECK(e->expected_coeffs[120] == Int("4032330316365198"));
  std::vector<Int> a = steinberg_poincare(e->matrix).rf.series_coeffs(121);
  CHECK(a == e->expected_coeffs);

  // the largest tabulated value in the dataset exceeds 64 bits
  const CatalogEntry* big = find_entry("EHNC 55");
  REQUIRE(big != nullptr);
  CHECK(big->expected_coeffs[120] == Int("24664039594390624031805157"));
}

TEST_CASE("report serialization is stable and complete") {
  std::vector<CatalogEntry> two{*find_entry("T(2,3,7)"), *find_entry("EHNC 23")};
  VerificationReport r1 = verify_catalog(two);
  VerificationReport r2 = verify_catalog(two);
  CHECK(r1.to_json() == r2.to_json());
  CHECK(r1.entries_checked == 2);
  CHECK(r1.entries_passed == 2);
  CHECK(r1.all_ok());
  CHECK(r1.results[0].first == "T(2,3,7)");
}
