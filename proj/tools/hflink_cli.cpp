// hflink command line front end. Talks to the core exclusively through the
// C API in hflink/hflink.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "hflink/hflink.h"

namespace {

// Exit codes: 0 ok, 1 schema/io, 2 validation/domain, 3 oracle mismatch.
int exit_code(hflink_status status) {
  switch (status) {
    case HFLINK_OK: return 0;
    case HFLINK_ERR_SCHEMA: return 1;
    case HFLINK_ERR_UNKNOWN_NAME: return 1;
    case HFLINK_ERR_VALIDATION: return 2;
    case HFLINK_ERR_MISMATCH: return 3;
    case HFLINK_ERR_INTERNAL: return 4;
  }
  return 4;
}

struct StringOut {
  char* value = nullptr;
  ~StringOut() { hflink_string_free(value); }
};

struct DocHandle {
  hflink_doc* doc = nullptr;
  ~DocHandle() { hflink_doc_free(doc); }
};

int report_failure(hflink_status status, const StringOut& err) {
  std::cerr << "error: " << (err.value ? err.value : "unknown failure") << "\n";
  return exit_code(status);
}

int open_document(const std::string& file, DocHandle& handle) {
  StringOut err;
  hflink_status status = hflink_doc_parse_file(file.c_str(), &handle.doc, &err.value);
  if (status != HFLINK_OK) return report_failure(status, err);
  return 0;
}

// Lattice coordinates arrive as "2", "-3" or "p/2" strings; passed on doubled.
bool parse_lattice_coord(const std::string& text, std::int64_t& doubled) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(text, &pos);
    if (pos == text.size()) {
      doubled = 2 * v;
      return true;
    }
    if (text.substr(pos) == "/2") {
      doubled = v;
      return true;
    }
  } catch (const std::exception&) {
  }
  return false;
}

bool parse_rational(const std::string& text, std::int64_t& num, std::int64_t& den) {
  try {
    std::size_t pos = 0;
    num = std::stoll(text, &pos);
    den = 1;
    if (pos == text.size()) return true;
    if (text[pos] != '/') return false;
    std::size_t pos2 = 0;
    den = std::stoll(text.substr(pos + 1), &pos2);
    return pos2 == text.size() - pos - 1 && den != 0;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"link Floer homology of two-component L-space links from Alexander polynomials"};
  app.require_subcommand(1);

  // validate
  std::string validate_file;
  auto* cmd_validate = app.add_subcommand("validate", "check a link file against the input conventions");
  cmd_validate->add_option("file", validate_file, "link document (JSON)")->required();

  // h-table
  std::string htable_file, htable_format = "ascii";
  std::int64_t htable_window = 0;
  auto* cmd_htable = app.add_subcommand("h-table", "print the h-function grid");
  cmd_htable->add_option("file", htable_file, "link or h-grid document")->required();
  cmd_htable->add_option("--window", htable_window, "half-width of the printed window");
  cmd_htable->add_option("--format", htable_format, "ascii or structured")
      ->check(CLI::IsMember({"ascii", "structured"}));

  // hfl
  std::string hfl_file, hfl_flavor = "hat", hfl_format = "ascii";
  std::vector<std::string> hfl_point;
  bool hfl_table = false, hfl_euler = false;
  std::int64_t hfl_window = 0;
  auto* cmd_hfl = app.add_subcommand("hfl", "graded link Floer homology groups");
  cmd_hfl->add_option("file", hfl_file, "link, h-grid or pattern document")->required();
  cmd_hfl->add_option("--flavor", hfl_flavor, "minus or hat")->check(CLI::IsMember({"minus", "hat"}));
  auto* point_opt = cmd_hfl->add_option("--point", hfl_point, "lattice point s1 s2 (integers or p/2)")
                        ->expected(2);
  cmd_hfl->add_flag("--table", hfl_table, "print a rank table over the window");
  cmd_hfl->add_flag("--euler", hfl_euler, "print Euler characteristics in the table");
  cmd_hfl->add_option("--window", hfl_window, "half-width of the table window");
  cmd_hfl->add_option("--format", hfl_format, "ascii or structured")
      ->check(CLI::IsMember({"ascii", "structured"}));

  // polytope
  std::string poly_file, poly_format = "ascii";
  bool poly_dual = false, poly_floer = false, poly_newton = false;
  auto* cmd_poly = app.add_subcommand("polytope", "link Floer and dual Thurston polytopes");
  cmd_poly->add_option("file", poly_file, "link document")->required();
  cmd_poly->add_flag("--dual-thurston", poly_dual, "dual Thurston polytope (Newton-comparable units)");
  cmd_poly->add_flag("--floer", poly_floer, "link Floer homology polytope");
  cmd_poly->add_flag("--newton-compare", poly_newton, "compare with the Newton polytope");
  cmd_poly->add_option("--format", poly_format, "ascii, structured or tikz")
      ->check(CLI::IsMember({"ascii", "structured", "tikz"}));

  // oracle-check
  std::string oracle_file;
  std::int64_t oracle_truncation = 0;
  auto* cmd_oracle = app.add_subcommand("oracle-check", "cross-validate against the cone models");
  cmd_oracle->add_option("file", oracle_file, "link, h-grid or pattern document")->required();
  cmd_oracle->add_option("--truncation", oracle_truncation, "tower truncation N");

  // catalog
  auto* cmd_catalog = app.add_subcommand("catalog", "built-in example documents");
  auto* cat_list = cmd_catalog->add_subcommand("list", "list entries");
  std::string cat_name, cat_file;
  auto* cat_show = cmd_catalog->add_subcommand("show", "print one document");
  cat_show->add_option("name", cat_name, "entry name")->required();
  auto* cat_export = cmd_catalog->add_subcommand("export", "write one document to a file");
  cat_export->add_option("name", cat_name, "entry name")->required();
  cat_export->add_option("file", cat_file, "output path")->required();
  cmd_catalog->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  if (cmd_validate->parsed()) {
    DocHandle doc;
    if (int rc = open_document(validate_file, doc)) return rc;
    StringOut report, err;
    int n_errors = 0, n_warnings = 0;
    hflink_status status = hflink_validate(doc.doc, &report.value, &n_errors, &n_warnings, &err.value);
    if (status != HFLINK_OK) return report_failure(status, err);
    std::cout << report.value;
    return n_errors == 0 ? 0 : 2;
  }

  if (cmd_htable->parsed()) {
    DocHandle doc;
    if (int rc = open_document(htable_file, doc)) return rc;
    StringOut out, err;
    hflink_status status =
        hflink_h_table(doc.doc, 2 * htable_window, htable_format.c_str(), &out.value, &err.value);
    if (status != HFLINK_OK) return report_failure(status, err);
    std::cout << out.value;
    return 0;
  }

  if (cmd_hfl->parsed()) {
    if (hfl_table == !hfl_point.empty()) {
      std::cerr << "error: pass exactly one of --point or --table\n";
      return 1;
    }
    DocHandle doc;
    if (int rc = open_document(hfl_file, doc)) return rc;
    hflink_flavor flavor = hfl_flavor == "minus" ? HFLINK_FLAVOR_MINUS : HFLINK_FLAVOR_HAT;
    StringOut out, err;
    hflink_status status;
    if (point_opt->count()) {
      std::int64_t s1 = 0, s2 = 0;
      if (!parse_lattice_coord(hfl_point[0], s1) || !parse_lattice_coord(hfl_point[1], s2)) {
        std::cerr << "error: bad lattice coordinates '" << hfl_point[0] << " " << hfl_point[1] << "'\n";
        return 1;
      }
      status = hflink_group_at(doc.doc, s1, s2, flavor, hfl_format.c_str(), &out.value, &err.value);
    } else {
      status = hflink_group_table(doc.doc, flavor, hfl_euler ? 1 : 0, 2 * hfl_window,
                                  hfl_format.c_str(), &out.value, &err.value);
    }
    if (status != HFLINK_OK) return report_failure(status, err);
    std::cout << out.value;
    return 0;
  }

  if (cmd_poly->parsed()) {
    int picked = (poly_dual ? 1 : 0) + (poly_floer ? 1 : 0) + (poly_newton ? 1 : 0);
    if (picked != 1) {
      std::cerr << "error: pass exactly one of --dual-thurston, --floer, --newton-compare\n";
      return 1;
    }
    DocHandle doc;
    if (int rc = open_document(poly_file, doc)) return rc;
    hflink_polytope_kind kind = poly_floer  ? HFLINK_POLY_FLOER
                                : poly_dual ? HFLINK_POLY_DUAL_THURSTON
                                            : HFLINK_POLY_NEWTON_COMPARE;
    StringOut out, err;
    hflink_status status = hflink_polytope(doc.doc, kind, poly_format.c_str(), &out.value, &err.value);
    if (status != HFLINK_OK) return report_failure(status, err);
    std::cout << out.value;
    return 0;
  }

  if (cmd_oracle->parsed()) {
    DocHandle doc;
    if (int rc = open_document(oracle_file, doc)) return rc;
    StringOut out, err;
    hflink_status status = hflink_oracle_check(doc.doc, oracle_truncation, &out.value, &err.value);
    if (status == HFLINK_OK || status == HFLINK_ERR_MISMATCH) {
      std::cout << (out.value ? out.value : "");
      return exit_code(status);
    }
    return report_failure(status, err);
  }

  if (cmd_catalog->parsed()) {
    StringOut out, err;
    if (cat_list->parsed()) {
      hflink_status status = hflink_catalog_list(&out.value, &err.value);
      if (status != HFLINK_OK) return report_failure(status, err);
      std::cout << out.value;
      return 0;
    }
    if (cat_show->parsed()) {
      hflink_status status = hflink_catalog_show(cat_name.c_str(), &out.value, &err.value);
      if (status != HFLINK_OK) return report_failure(status, err);
      std::cout << out.value;
      return 0;
    }
    if (cat_export->parsed()) {
      hflink_status status = hflink_catalog_show(cat_name.c_str(), &out.value, &err.value);
      if (status != HFLINK_OK) return report_failure(status, err);
      std::ofstream file(cat_file);
      if (!file) {
        std::cerr << "error: cannot write '" << cat_file << "'\n";
        return 1;
      }
      file << out.value;
      return 0;
    }
  }

  return 1;
}
