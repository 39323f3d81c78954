#include "coxgrowth/catalog.hpp"

#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "coxgrowth/classify.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/order.hpp"
#include "coxgrowth/poincare.hpp"
#include "coxgrowth/sha256.hpp"
#include "json.hpp"

#ifndef COXGROWTH_DATA_DIR
#define COXGROWTH_DATA_DIR "data/catalog"
#endif

namespace coxgrowth {

std::string default_data_dir() { return COXGROWTH_DATA_DIR; }

namespace {

std::vector<std::string> dataset_files() {
  std::vector<std::string> names{"t_2_3_7.json", "t_2_4_5.json", "t_3_3_4.json"};
  for (int i = 1; i <= 14; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "ehc_%02d.json", i);
    names.emplace_back(buf);
  }
  for (int i = 1; i <= 58; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "ehnc_%02d.json", i);
    names.emplace_back(buf);
  }
  return names;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("catalog: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CatalogEntry load_entry(const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("catalog: bad JSON in " + path + ": " + e.what());
  }
  CatalogEntry e;
  try {
    e.id = doc.at("id").get<std::string>();
    e.rank = doc.at("rank").get<int>();
    e.matrix = CoxeterMatrix(doc.at("matrix").get<std::vector<std::vector<int>>>());
    e.printed_num =
        IntPolynomial::from_decimal_strings(doc.at("as_printed").at("numerator").get<std::vector<std::string>>());
    e.printed_den =
        IntPolynomial::from_decimal_strings(doc.at("as_printed").at("denominator").get<std::vector<std::string>>());
    e.expected = RationalFunction::normalized(e.printed_num, e.printed_den);
    for (const auto& s : doc.at("coefficients").get<std::vector<std::string>>())
      e.expected_coeffs.push_back(int_from_string(s));
    e.expected_growth = doc.at("growth_rate").get<std::string>();
    e.cocompact = doc.at("cocompact").get<bool>();
    e.in_M = doc.at("in_M").get<bool>();
    if (doc.contains("magma_index")) e.magma_index = doc["magma_index"].get<int>();
  } catch (const nlohmann::json::exception& err) {
    throw std::runtime_error("catalog: missing or mistyped field in " + path + ": " + err.what());
  }
  if (e.rank != e.matrix.rank()) throw std::runtime_error("catalog: rank mismatch in " + path);
  if (static_cast<int>(e.expected_coeffs.size()) != e.printed_num.degree() + 1)
    throw std::runtime_error("catalog: coefficient count mismatch in " + path);
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries(const std::string& dir) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(dir);
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> entries;
  for (const std::string& name : dataset_files()) entries.push_back(load_entry(dir + "/" + name));
  return cache.emplace(dir, std::move(entries)).first->second;
}

const CatalogEntry* find_entry(const std::string& query, const std::string& dir) {
  std::string wanted;
  for (char c : query)
    if (!std::isspace(static_cast<unsigned char>(c))) wanted.push_back(c);
  if (wanted.empty()) return nullptr;

  const std::vector<CatalogEntry>& entries = catalog_entries(dir);
  // bare Magma index
  if (wanted.find_first_not_of("0123456789") == std::string::npos) {
    int idx = std::atoi(wanted.c_str());
    for (const CatalogEntry& e : entries)
      if (e.magma_index && *e.magma_index == idx) return &e;
    return nullptr;
  }
  auto matches = [&wanted](const std::string& name) {
    std::string stripped;
    for (char c : name)
      if (!std::isspace(static_cast<unsigned char>(c))) stripped.push_back(c);
    return stripped == wanted;
  };
  for (size_t i = 0; i < entries.size(); ++i) {
    const CatalogEntry& e = entries[i];
    if (matches(e.id)) return &e;
    if (i >= 3) {
      // sequence labels: EHC 1..14 then EHNC 1..58
      std::string seq = i < 17 ? "EHC" + std::to_string(i - 2) : "EHNC" + std::to_string(i - 16);
      if (matches(seq)) return &e;
      std::string magma = "magma:" + std::to_string(*e.magma_index);
      if (matches(magma)) return &e;
    }
  }
  return nullptr;
}

bool verify_manifest(const std::string& dir, std::string& error) {
  std::ifstream in(dir + "/MANIFEST.sha256");
  if (!in) {
    error = "missing MANIFEST.sha256 in " + dir;
    return false;
  }
  std::string hash, name;
  int lines = 0;
  while (in >> hash >> name) {
    ++lines;
    std::string actual;
    try {
      actual = sha256_hex(slurp(dir + "/" + name));
    } catch (const std::exception& e) {
      error = e.what();
      return false;
    }
    if (actual != hash) {
      error = "checksum mismatch for " + name;
      return false;
    }
  }
  if (lines != 75) {
    error = "manifest lists " + std::to_string(lines) + " files, expected 75";
    return false;
  }
  return true;
}

EntryChecks verify_entry(const CatalogEntry& e) {
  EntryChecks checks;
  PoincareSeries series = steinberg_poincare(e.matrix);
  checks.numerator = series.rf.num() == e.expected.num();
  checks.denominator = series.rf.den() == e.expected.den();

  std::vector<Int> coeffs = series.rf.series_coeffs(static_cast<int>(e.expected_coeffs.size()));
  checks.coefficients = coeffs == e.expected_coeffs;

  GrowthRate growth = growth_rate(series, 30);
  int agree = 0;
  {
    std::string mine, theirs;
    for (char c : growth.value)
      if (c != '.') mine.push_back(c);
    for (char c : e.expected_growth)
      if (c != '.') theirs.push_back(c);
    // significant-digit count must line up, i.e. equal integer-part length
    size_t mine_int = growth.value.find('.');
    size_t theirs_int = e.expected_growth.find('.');
    if (mine_int == theirs_int) {
      for (size_t i = 0; i < mine.size() && i < theirs.size() && mine[i] == theirs[i]; ++i) ++agree;
    }
  }
  checks.growth_digits_matched = agree;
  checks.growth = agree >= 28;

  checks.cocompact = is_cocompact(e.matrix) == e.cocompact;
  checks.in_M = is_minimal(e.matrix) == e.in_M;
  return checks;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["entries"] = entries_checked;
  doc["passed"] = entries_passed;
  doc["all_ok"] = all_ok();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [id, c] : results) {
    nlohmann::ordered_json jc;
    jc["id"] = id;
    jc["numerator"] = c.numerator;
    jc["denominator"] = c.denominator;
    jc["coefficients"] = c.coefficients;
    jc["growth"] = c.growth;
    jc["growth_digits_matched"] = c.growth_digits_matched;
    jc["cocompact"] = c.cocompact;
    jc["in_M"] = c.in_M;
    jc["ok"] = c.all_ok();
    arr.push_back(std::move(jc));
  }
  doc["results"] = std::move(arr);
  return doc.dump(2);
}

VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries) {
  VerificationReport report;
  const long n = static_cast<long>(entries.size());
  std::vector<EntryChecks> checks(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (long i = 0; i < n; ++i) {
    try {
      checks[static_cast<size_t>(i)] = verify_entry(entries[static_cast<size_t>(i)]);
    } catch (const std::exception&) {
      checks[static_cast<size_t>(i)] = EntryChecks{};  // every check stays false
    }
  }
  for (size_t i = 0; i < entries.size(); ++i) {
    report.results.emplace_back(entries[i].id, checks[i]);
    ++report.entries_checked;
    if (checks[i].all_ok()) ++report.entries_passed;
  }
  return report;
}

}  // namespace coxgrowth
