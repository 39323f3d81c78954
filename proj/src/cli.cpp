#include "coxgrowth/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "coxgrowth/catalog.hpp"
#include "coxgrowth/classify.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/order.hpp"
#include "coxgrowth/poincare.hpp"
#include "coxgrowth/word_census.hpp"
#include "json.hpp"

namespace coxgrowth {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format = "human";
  std::string data_dir = default_data_dir();
  bool json() const { return format == "json"; }
};

// Input resolution: an existing file, a catalog id, or an inline matrix
// (JSON or compact text), in that order. An unreadable catalog must not
// block inline input, so lookup failures fall through to the parser.
CoxeterMatrix resolve_matrix(const std::string& input, const Options& opt) {
  if (std::filesystem::exists(input)) {
    std::ifstream in(input, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return CoxeterMatrix::parse(buf.str());
  }
  try {
    if (const CatalogEntry* e = find_entry(input, opt.data_dir)) return e->matrix;
  } catch (const std::runtime_error&) {
  }
  return CoxeterMatrix::parse(input);
}

ordered_json poly_json(const IntPolynomial& p) {
  ordered_json arr = ordered_json::array();
  for (const std::string& s : p.to_decimal_strings()) arr.push_back(s);
  return arr;
}

void print_classify(const CoxeterMatrix& m, const Options& opt, std::ostream& out) {
  ClassLabel label = classify(m);
  if (opt.json()) {
    out << label.to_json() << "\n";
    return;
  }
  out << to_string(label.verdict);
  if (label.verdict != Verdict::Reducible) {
    if (!label.components.empty() &&
        (label.components.front().finite || label.components.front().affine))
      out << " " << label.components.front().type_string();
    out << "\n";
    return;
  }
  out << ":";
  for (const ComponentLabel& c : label.components) {
    out << " [";
    for (size_t i = 0; i < c.vertices.size(); ++i) out << (i ? " " : "") << c.vertices[i];
    out << "] " << c.type_string() << ";";
  }
  out << "\n";
}

void print_poincare(const CoxeterMatrix& m, const Options& opt, std::ostream& out) {
  PoincareSeries p = steinberg_poincare(m);
  if (opt.json()) {
    ordered_json doc;
    doc["numerator"] = poly_json(p.rf.num());
    doc["denominator"] = poly_json(p.rf.den());
    doc["provenance"] = to_string(p.provenance);
    out << doc.dump() << "\n";
    return;
  }
  out << "numerator:   " << p.rf.num().to_pretty_string() << "\n";
  out << "denominator: " << p.rf.den().to_pretty_string() << "\n";
}

void print_coeffs(const CoxeterMatrix& m, int count, const Options& opt, std::ostream& out) {
  std::vector<Int> a = steinberg_poincare(m).rf.series_coeffs(count);
  if (opt.json()) {
    ordered_json arr = ordered_json::array();
    for (const Int& v : a) arr.push_back(v.get_str());
    out << arr.dump() << "\n";
    return;
  }
  for (size_t i = 0; i < a.size(); ++i) out << (i ? ", " : "") << a[i].get_str();
  out << "\n";
}

void print_growth(const CoxeterMatrix& m, int digits, const Options& opt, std::ostream& out) {
  GrowthRate g = growth_rate(steinberg_poincare(m), digits);
  if (opt.json()) {
    out << g.to_json() << "\n";
    return;
  }
  out << g.value << "\n";
}

void print_residues(const CoxeterMatrix& m, const Options& opt, std::ostream& out) {
  std::vector<std::vector<int>> residues = spherical_residues(m);
  if (opt.json()) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : residues) arr.push_back(r);
    out << arr.dump() << "\n";
    return;
  }
  for (const auto& r : residues) {
    out << "{";
    for (size_t i = 0; i < r.size(); ++i) out << (i ? " " : "") << r[i];
    out << "}\n";
  }
}

void print_minimal(const CoxeterMatrix& m, const Options& opt, std::ostream& out) {
  bool minimal = is_minimal(m);
  if (opt.json()) {
    ordered_json doc;
    doc["in_M"] = minimal;
    out << doc.dump() << "\n";
  } else {
    out << (minimal ? "minimal: yes" : "minimal: no") << "\n";
  }
}

ordered_json witness_json(const std::optional<OrderWitness>& w) {
  ordered_json doc;
  doc["holds"] = w.has_value();
  if (w) doc["injection"] = w->injection;
  return doc;
}

void print_compare(const CoxeterMatrix& a, const CoxeterMatrix& b, const Options& opt,
                   std::ostream& out) {
  auto ab = leq_witness(a, b);
  auto ba = leq_witness(b, a);
  if (opt.json()) {
    ordered_json doc;
    doc["a_leq_b"] = witness_json(ab);
    doc["b_leq_a"] = witness_json(ba);
    out << doc.dump() << "\n";
    return;
  }
  auto show = [&out](const char* name, const std::optional<OrderWitness>& w) {
    out << name << ": " << (w ? "yes" : "no");
    if (w) {
      out << " (injection:";
      for (int v : w->injection) out << " " << v;
      out << ")";
    }
    out << "\n";
  };
  show("a <= b", ab);
  show("b <= a", ba);
}

void print_oracle(const CoxeterMatrix& m, int max_len, const Options& opt, std::ostream& out) {
  WordCensus census = count_by_length(m, max_len);
  if (opt.json()) {
    ordered_json doc;
    doc["counts"] = census.counts;
    doc["complete"] = census.complete;
    out << doc.dump() << "\n";
    return;
  }
  for (size_t i = 0; i < census.counts.size(); ++i) out << (i ? ", " : "") << census.counts[i];
  out << (census.complete ? "  (complete)" : "") << "\n";
}

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json doc;
  doc["id"] = e.id;
  doc["rank"] = e.rank;
  doc["matrix"] = ordered_json::parse(e.matrix.to_json())["matrix"];
  doc["numerator"] = poly_json(e.expected.num());
  doc["denominator"] = poly_json(e.expected.den());
  ordered_json coeffs = ordered_json::array();
  for (const Int& v : e.expected_coeffs) coeffs.push_back(v.get_str());
  doc["coefficients"] = std::move(coeffs);
  doc["growth_rate"] = e.expected_growth;
  doc["cocompact"] = e.cocompact;
  doc["in_M"] = e.in_M;
  if (e.magma_index) doc["magma_index"] = *e.magma_index;
  return doc;
}

int catalog_list(const Options& opt, std::ostream& out) {
  const auto& entries = catalog_entries(opt.data_dir);
  if (opt.json()) {
    ordered_json arr = ordered_json::array();
    for (const CatalogEntry& e : entries) {
      ordered_json doc;
      doc["id"] = e.id;
      doc["rank"] = e.rank;
      doc["cocompact"] = e.cocompact;
      doc["in_M"] = e.in_M;
      if (e.magma_index) doc["magma_index"] = *e.magma_index;
      arr.push_back(std::move(doc));
    }
    out << arr.dump() << "\n";
    return 0;
  }
  for (const CatalogEntry& e : entries) {
    out << e.id << "  rank " << e.rank << (e.cocompact ? "  cocompact" : "  non-cocompact")
        << (e.in_M ? "  minimal" : "") << "\n";
  }
  return 0;
}

int catalog_verify(const Options& opt, const std::string& only_id, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  std::string manifest_error;
  if (!verify_manifest(opt.data_dir, manifest_error)) {
    err << "manifest check failed: " << manifest_error << "\n";
    return 1;
  }
  std::vector<CatalogEntry> subset;
  const std::vector<CatalogEntry>* entries = &catalog_entries(opt.data_dir);
  if (!only_id.empty()) {
    const CatalogEntry* e = find_entry(only_id, opt.data_dir);
    if (!e) {
      err << "unknown catalog id: " << only_id << "\n";
      return 2;
    }
    subset.push_back(*e);
    entries = &subset;
  }
  VerificationReport report = verify_catalog(*entries);
  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    file << report.to_json() << "\n";
  }
  if (opt.json()) {
    out << report.to_json() << "\n";
  } else {
    for (const auto& [id, c] : report.results) {
      out << (c.all_ok() ? "pass" : "FAIL") << "  " << id;
      if (!c.all_ok()) {
        out << "  (";
        if (!c.numerator) out << " numerator";
        if (!c.denominator) out << " denominator";
        if (!c.coefficients) out << " coefficients";
        if (!c.growth) out << " growth";
        if (!c.cocompact) out << " cocompact";
        if (!c.in_M) out << " in_M";
        out << " )";
      }
      out << "\n";
    }
    out << report.entries_passed << "/" << report.entries_checked << " entries verified\n";
  }
  return report.all_ok() ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact growth-series engine for finite-rank Coxeter systems"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Output format: human or json")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--data-dir", opt.data_dir, "Catalog data directory");

  std::string input, input_b, only_id, out_path;
  int count = 10, digits = 30, max_len = 4;

  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a system");
  classify_cmd->add_option("input", input, "Matrix file, inline matrix, or catalog id")->required();

  CLI::App* poincare_cmd = app.add_subcommand("poincare", "Poincare series as a rational function");
  poincare_cmd->add_option("input", input)->required();

  CLI::App* coeffs_cmd = app.add_subcommand("coeffs", "Series coefficients");
  coeffs_cmd->add_option("input", input)->required();
  coeffs_cmd->add_option("--count", count, "How many coefficients")->check(CLI::NonNegativeNumber);

  CLI::App* growth_cmd = app.add_subcommand("growth", "Exponential growth rate");
  growth_cmd->add_option("input", input)->required();
  growth_cmd->add_option("--digits", digits, "Significant digits (>= 10)");

  CLI::App* residues_cmd = app.add_subcommand("residues", "Spherical residues");
  residues_cmd->add_option("input", input)->required();

  CLI::App* minimal_cmd = app.add_subcommand("minimal", "Minimality in the order");
  minimal_cmd->add_option("input", input)->required();

  CLI::App* compare_cmd = app.add_subcommand("compare", "Compare two systems in the order");
  compare_cmd->add_option("a", input)->required();
  compare_cmd->add_option("b", input_b)->required();

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Brute-force word census");
  oracle_cmd->add_option("input", input)->required();
  oracle_cmd->add_option("--max-len", max_len, "Census depth")->check(CLI::NonNegativeNumber);

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Embedded dataset access");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "List the dataset entries");
  CLI::App* show_cmd = catalog_cmd->add_subcommand("show", "Show one entry");
  show_cmd->add_option("id", input)->required();
  CLI::App* verify_cmd = catalog_cmd->add_subcommand("verify", "Recompute and compare everything");
  verify_cmd->add_option("--id", only_id, "Verify a single entry");
  verify_cmd->add_option("--out", out_path, "Also write the JSON report to a file");

  // app-level flags may trail the subcommand
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*classify_cmd) print_classify(resolve_matrix(input, opt), opt, out);
    else if (*poincare_cmd) print_poincare(resolve_matrix(input, opt), opt, out);
    else if (*coeffs_cmd) print_coeffs(resolve_matrix(input, opt), count, opt, out);
    else if (*growth_cmd) print_growth(resolve_matrix(input, opt), digits, opt, out);
    else if (*residues_cmd) print_residues(resolve_matrix(input, opt), opt, out);
    else if (*minimal_cmd) print_minimal(resolve_matrix(input, opt), opt, out);
    else if (*compare_cmd)
      print_compare(resolve_matrix(input, opt), resolve_matrix(input_b, opt), opt, out);
    else if (*oracle_cmd) print_oracle(resolve_matrix(input, opt), max_len, opt, out);
    else if (*catalog_cmd) {
      try {
        if (*catalog_cmd->get_subcommand("list")) return catalog_list(opt, out);
        if (*catalog_cmd->get_subcommand("show")) {
          const CatalogEntry* e = find_entry(input, opt.data_dir);
          if (!e) {
            err << "unknown catalog id: " << input << "\n";
            return 2;
          }
          out << entry_json(*e).dump(2) << "\n";
          return 0;
        }
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";  // unreadable data directory
        return 2;
      }
      return catalog_verify(opt, only_id, out_path, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace coxgrowth
