#include "hflink/hflink.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "catalog.hpp"
#include "errors.hpp"
#include "render.hpp"

using namespace hfl;

struct hflink_doc {
  Session session;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** errmsg, const std::string& message) {
  if (errmsg) *errmsg = dup_string(message);
}

hflink_status status_of(Err code) {
  switch (code) {
    case Err::Schema:
    case Err::Io:
      return HFLINK_ERR_SCHEMA;
    case Err::UnknownName: return HFLINK_ERR_UNKNOWN_NAME;
    case Err::Internal: return HFLINK_ERR_INTERNAL;
    default: return HFLINK_ERR_VALIDATION;
  }
}

template <typename F>
hflink_status guarded(char** errmsg, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    set_error(errmsg, e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_error(errmsg, e.what());
    return HFLINK_ERR_INTERNAL;
  }
}

Format format_of(const char* format) { return parse_format(format ? format : "ascii"); }

}  // namespace

extern "C" {

const char* hflink_version(void) { return "1.0.0"; }

void hflink_string_free(char* s) { std::free(s); }

hflink_status hflink_doc_parse_file(const char* path, hflink_doc** out, char** errmsg) {
  if (!path || !out) {
    set_error(errmsg, "null argument");
    return HFLINK_ERR_SCHEMA;
  }
  return guarded(errmsg, [&] {
    *out = new hflink_doc{Session(parse_document_file(path))};
    return HFLINK_OK;
  });
}

hflink_status hflink_doc_parse_text(const char* json_text, hflink_doc** out, char** errmsg) {
  if (!json_text || !out) {
    set_error(errmsg, "null argument");
    return HFLINK_ERR_SCHEMA;
  }
  return guarded(errmsg, [&] {
    *out = new hflink_doc{Session(parse_document_text(json_text))};
    return HFLINK_OK;
  });
}

void hflink_doc_free(hflink_doc* doc) { delete doc; }

hflink_doc_kind hflink_doc_get_kind(const hflink_doc* doc) {
  switch (doc->session.kind()) {
    case DocKind::Link: return HFLINK_DOC_LINK;
    case DocKind::HGrid: return HFLINK_DOC_HGRID;
    case DocKind::Pattern: return HFLINK_DOC_PATTERN;
  }
  return HFLINK_DOC_LINK;
}

hflink_status hflink_doc_name(const hflink_doc* doc, char** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = dup_string(doc->session.name());
    return HFLINK_OK;
  });
}

hflink_status hflink_validate(hflink_doc* doc, char** report_json, int* n_errors, int* n_warnings,
                              char** errmsg) {
  return guarded(errmsg, [&] {
    const LinkData* link = doc->session.link();
    if (!link) fail(Err::Schema, "validate applies to link documents");
    ValidationReport report = validate(*link);
    if (report_json) *report_json = dup_string(render_validation(report, link->name));
    if (n_errors) *n_errors = static_cast<int>(report.errors.size());
    if (n_warnings) *n_warnings = static_cast<int>(report.warnings.size());
    return HFLINK_OK;
  });
}

hflink_status hflink_h_at(hflink_doc* doc, int64_t s1_doubled, int64_t s2_doubled, int64_t* h_out,
                          char** errmsg) {
  return guarded(errmsg, [&] {
    *h_out = doc->session.source().at({HalfInt::half(s1_doubled), HalfInt::half(s2_doubled)});
    return HFLINK_OK;
  });
}

hflink_status hflink_h_table(hflink_doc* doc, int64_t window_doubled, const char* format, char** out,
                             char** errmsg) {
  return guarded(errmsg, [&] {
    *out = dup_string(render_h_table(doc->session, window_doubled, format_of(format)));
    return HFLINK_OK;
  });
}

hflink_status hflink_group_table(hflink_doc* doc, hflink_flavor flavor, int euler,
                                 int64_t window_doubled, const char* format, char** out, char** errmsg) {
  return guarded(errmsg, [&] {
    HflTableOptions opts;
    opts.flavor = flavor == HFLINK_FLAVOR_MINUS ? Flavor::Minus : Flavor::Hat;
    opts.euler = euler != 0;
    opts.window_doubled = window_doubled;
    opts.format = format_of(format);
    *out = dup_string(render_hfl_table(doc->session, opts));
    return HFLINK_OK;
  });
}

hflink_status hflink_group_at(hflink_doc* doc, int64_t s1_doubled, int64_t s2_doubled,
                              hflink_flavor flavor, const char* format, char** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = dup_string(render_group_at(doc->session, {HalfInt::half(s1_doubled), HalfInt::half(s2_doubled)},
                                      flavor == HFLINK_FLAVOR_MINUS ? Flavor::Minus : Flavor::Hat,
                                      format_of(format)));
    return HFLINK_OK;
  });
}

hflink_status hflink_polytope(hflink_doc* doc, hflink_polytope_kind kind, const char* format, char** out,
                              char** errmsg) {
  return guarded(errmsg, [&] {
    PolytopeKind k = kind == HFLINK_POLY_FLOER          ? PolytopeKind::Floer
                     : kind == HFLINK_POLY_DUAL_THURSTON ? PolytopeKind::DualThurston
                                                         : PolytopeKind::NewtonCompare;
    *out = dup_string(render_polytope(doc->session, k, format_of(format)));
    return HFLINK_OK;
  });
}

hflink_status hflink_norms(hflink_doc* doc, int64_t h1_num, int64_t h1_den, int64_t h2_num,
                           int64_t h2_den, char** json_out, char** errmsg) {
  return guarded(errmsg, [&] {
    if (h1_den == 0 || h2_den == 0) fail(Err::Schema, "zero denominator in a norm direction");
    *json_out = dup_string(render_norms(doc->session, Rat(h1_num, h1_den), Rat(h2_num, h2_den)));
    return HFLINK_OK;
  });
}

hflink_status hflink_oracle_check(hflink_doc* doc, int64_t truncation, char** report, char** errmsg) {
  return guarded(errmsg, [&]() -> hflink_status {
    OracleCheckResult result = oracle_check(doc->session, truncation);
    if (report) *report = dup_string(result.report);
    return result.mismatches == 0 ? HFLINK_OK : HFLINK_ERR_MISMATCH;
  });
}

hflink_status hflink_catalog_list(char** json_out, char** errmsg) {
  return guarded(errmsg, [&] {
    *json_out = dup_string(catalog_list_json());
    return HFLINK_OK;
  });
}

hflink_status hflink_catalog_show(const char* name, char** json_out, char** errmsg) {
  return guarded(errmsg, [&] {
    *json_out = dup_string(catalog_show_json(name ? name : ""));
    return HFLINK_OK;
  });
}

hflink_status hflink_catalog_open(const char* name, hflink_doc** out, char** errmsg) {
  return guarded(errmsg, [&] {
    *out = new hflink_doc{Session(catalog_get(name ? name : "").document)};
    return HFLINK_OK;
  });
}

}  // extern "C"
