#include "linkdata.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace hfl {

using nlohmann::json;

std::int64_t GridData::at(HalfInt s1, HalfInt s2) const {
  std::int64_t col = (s1 - s1_min).doubled() / 2;
  std::int64_t row_from_top = (s2_max() - s2).doubled() / 2;
  return rows[static_cast<std::size_t>(row_from_top)][static_cast<std::size_t>(col)];
}

const std::string& Document::name() const {
  switch (kind) {
    case DocKind::Link: return link->name;
    case DocKind::HGrid: return grid->name;
    case DocKind::Pattern: return pattern->name;
  }
  fail(Err::Internal, "bad document kind");
}

HalfInt parse_halfint(const json& v) {
  if (v.is_number_integer()) return HalfInt::whole(v.get<std::int64_t>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t pos = 0;
      std::int64_t num = std::stoll(s, &pos);
      if (pos == s.size()) return HalfInt::whole(num);
      if (s.substr(pos) == "/2") return HalfInt::half(num);
    } catch (const std::exception&) {
    }
    fail(Err::Schema, "bad exponent string '" + s + "' (expected an integer or \"p/2\")");
  }
  fail(Err::Schema, "exponent must be an integer or a \"p/2\" string");
}

namespace {

json render_halfint(HalfInt h) {
  if (h.is_integer()) return json(h.as_integer());
  return json(h.str());
}

const json& require_field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(Err::Schema, std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t require_int(const json& doc, const char* key) {
  const json& v = require_field(doc, key);
  if (!v.is_number_integer()) fail(Err::Schema, std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::string require_string(const json& doc, const char* key) {
  const json& v = require_field(doc, key);
  if (!v.is_string()) fail(Err::Schema, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Laurent1 parse_poly1(const json& arr, const char* key) {
  if (!arr.is_array()) fail(Err::Schema, std::string("field '") + key + "' must be an array of terms");
  Laurent1 out;
  for (const auto& term : arr) {
    if (!term.is_object()) fail(Err::Schema, std::string("terms of '") + key + "' must be objects");
    HalfInt e = parse_halfint(require_field(term, "e"));
    std::int64_t c = require_int(term, "c");
    if (c == 0) fail(Err::Schema, std::string("zero coefficient in '") + key + "'");
    if (out.coeff(e) != 0) fail(Err::Schema, std::string("duplicate exponent in '") + key + "'");
    out.add_term(e, c);
  }
  return out;
}

Laurent2 parse_poly2(const json& arr, const char* key) {
  if (!arr.is_array()) fail(Err::Schema, std::string("field '") + key + "' must be an array of terms");
  Laurent2 out;
  for (const auto& term : arr) {
    if (!term.is_object()) fail(Err::Schema, std::string("terms of '") + key + "' must be objects");
    HalfInt e1 = parse_halfint(require_field(term, "e1"));
    HalfInt e2 = parse_halfint(require_field(term, "e2"));
    std::int64_t c = require_int(term, "c");
    if (c == 0) fail(Err::Schema, std::string("zero coefficient in '") + key + "'");
    if (out.coeff(e1, e2) != 0) fail(Err::Schema, std::string("duplicate exponent pair in '") + key + "'");
    out.add_term(e1, e2, c);
  }
  return out;
}

GridData parse_grid(const json& doc) {
  GridData out;
  out.name = require_string(doc, "name");
  out.lk = require_int(doc, "linking_number");
  out.s1_min = parse_halfint(require_field(doc, "s1_min"));
  out.s2_min = parse_halfint(require_field(doc, "s2_min"));
  if ((out.s1_min.doubled() - out.lk) % 2 != 0 || (out.s2_min.doubled() - out.lk) % 2 != 0)
    fail(Err::Parity, "grid corner is not on the lattice Z + lk/2");
  const json& rows = require_field(doc, "rows");
  if (!rows.is_array() || rows.empty()) fail(Err::Schema, "'rows' must be a nonempty array");
  std::size_t width = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) fail(Err::Schema, "grid rows must be nonempty arrays");
    if (width == 0) width = row.size();
    if (row.size() != width) fail(Err::Schema, "grid rows must all have the same length");
    std::vector<std::int64_t> vals;
    for (const auto& v : row) {
      if (!v.is_number_integer()) fail(Err::Schema, "grid entries must be integers");
      std::int64_t h = v.get<std::int64_t>();
      if (h < 0) fail(Err::Schema, "grid entries must be nonnegative");
      vals.push_back(h);
    }
    out.rows.push_back(std::move(vals));
  }
  return out;
}

PatternData parse_pattern(const json& doc) {
  PatternData out;
  out.name = require_string(doc, "name");
  const json& center = require_field(doc, "center");
  if (!center.is_array() || center.size() != 2) fail(Err::Schema, "'center' must be [s1, s2]");
  out.center = {parse_halfint(center[0]), parse_halfint(center[1])};
  if (!out.center.s1.is_integer() || !out.center.s2.is_integer())
    fail(Err::Parity, "pattern center must be on the integer lattice");
  const json& rows = require_field(doc, "rows");
  if (!rows.is_array() || rows.size() != 3) fail(Err::Schema, "'rows' must be a 3x3 array");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3) fail(Err::Schema, "'rows' must be a 3x3 array");
    for (std::size_t j = 0; j < 3; ++j) {
      if (!rows[i][j].is_number_integer()) fail(Err::Schema, "pattern entries must be integers");
      out.rows[i][j] = rows[i][j].get<std::int64_t>();
    }
  }
  return out;
}

}  // namespace

LinkData parse_link(const json& doc) {
  if (!doc.is_object()) fail(Err::Schema, "document must be a JSON object");
  LinkData out;
  out.name = require_string(doc, "name");
  out.lk = require_int(doc, "linking_number");
  out.delta_link = parse_poly2(require_field(doc, "alexander_link"), "alexander_link");
  out.delta_1 = parse_poly1(require_field(doc, "alexander_component_1"), "alexander_component_1");
  out.delta_2 = parse_poly1(require_field(doc, "alexander_component_2"), "alexander_component_2");

  // Exponents of the link polynomial live in (Z + (lk-1)/2)^2.
  for (const auto& [e, c] : out.delta_link.terms()) {
    if ((e.first.doubled() - (out.lk - 1)) % 2 != 0 || (e.second.doubled() - (out.lk - 1)) % 2 != 0)
      fail(Err::Parity, "alexander_link exponent " + e.first.str() + ", " + e.second.str() +
                            " is not in Z + (lk-1)/2 for lk = " + std::to_string(out.lk));
  }
  if (!out.delta_1.integral_exponents() || !out.delta_2.integral_exponents())
    fail(Err::HalfIntegralExponent, "component polynomials must have integer exponents");
  out.series_1 = torsion_series(out.delta_1);
  out.series_2 = torsion_series(out.delta_2);
  return out;
}

Document parse_document(const json& doc) {
  if (!doc.is_object()) fail(Err::Schema, "document must be a JSON object");
  std::string kind = doc.value("kind", std::string("link"));
  Document out;
  if (kind == "link") {
    out.kind = DocKind::Link;
    out.link = parse_link(doc);
  } else if (kind == "h-grid") {
    out.kind = DocKind::HGrid;
    out.grid = parse_grid(doc);
  } else if (kind == "pattern") {
    out.kind = DocKind::Pattern;
    out.pattern = parse_pattern(doc);
  } else {
    fail(Err::Schema, "unknown document kind '" + kind + "'");
  }
  return out;
}

Document parse_document_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Err::Schema, "invalid JSON");
  return parse_document(doc);
}

Document parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::Io, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document_text(buf.str());
}

json render_link(const LinkData& link) {
  json out;
  out["name"] = link.name;
  out["linking_number"] = link.lk;
  json terms = json::array();
  for (const auto& [e, c] : link.delta_link.terms())
    terms.push_back({{"e1", render_halfint(e.first)}, {"e2", render_halfint(e.second)}, {"c", c}});
  out["alexander_link"] = std::move(terms);
  auto poly1 = [](const Laurent1& p) {
    json arr = json::array();
    for (const auto& [e, c] : p.terms()) arr.push_back({{"e", render_halfint(e)}, {"c", c}});
    return arr;
  };
  out["alexander_component_1"] = poly1(link.delta_1);
  out["alexander_component_2"] = poly1(link.delta_2);
  return out;
}

json render_document(const Document& doc) {
  switch (doc.kind) {
    case DocKind::Link: return render_link(*doc.link);
    case DocKind::HGrid: {
      json out;
      out["kind"] = "h-grid";
      out["name"] = doc.grid->name;
      out["linking_number"] = doc.grid->lk;
      out["s1_min"] = render_halfint(doc.grid->s1_min);
      out["s2_min"] = render_halfint(doc.grid->s2_min);
      out["rows"] = doc.grid->rows;
      return out;
    }
    case DocKind::Pattern: {
      json out;
      out["kind"] = "pattern";
      out["name"] = doc.pattern->name;
      out["center"] = {render_halfint(doc.pattern->center.s1), render_halfint(doc.pattern->center.s2)};
      out["rows"] = doc.pattern->rows;
      return out;
    }
  }
  fail(Err::Internal, "bad document kind");
}

Laurent1 multiply_geometric(const Laurent1& delta, std::int64_t lk) {
  Laurent1 out;
  if (lk > 0) {
    for (std::int64_t m = 0; m < lk; ++m)
      for (const auto& [e, c] : delta.terms()) out.add_term(e + HalfInt::whole(m), c);
  } else if (lk < 0) {
    // (1 - t^lk)/(1 - t) = -(t^lk + ... + t^-1)
    for (std::int64_t m = lk; m < 0; ++m)
      for (const auto& [e, c] : delta.terms()) out.add_term(e + HalfInt::whole(m), -c);
  }
  return out;
}

namespace {

// Def-2.9-style (i0, j0): lexicographic maximum, j first.
std::pair<HalfInt, HalfInt> top_index(const Laurent2& p) {
  auto it = p.terms().begin();
  HalfInt j0 = it->first.second;
  for (const auto& [e, c] : p.terms()) j0 = std::max(j0, e.second);
  HalfInt i0 = HalfInt::half(INT64_MIN / 2);
  for (const auto& [e, c] : p.terms())
    if (e.second == j0) i0 = std::max(i0, e.first);
  return {i0, j0};
}

}  // namespace

ValidationReport validate(const LinkData& link) {
  ValidationReport report;

  if (link.delta_1.zero() || link.delta_1.leading_coeff() != 1)
    report.error("LeadingCoefficient", "leading coefficient of alexander_component_1 is not 1");
  if (link.delta_2.zero() || link.delta_2.leading_coeff() != 1)
    report.error("LeadingCoefficient", "leading coefficient of alexander_component_2 is not 1");

  if (link.split_alexander()) {
    if (link.lk != 0)
      report.error("SplitLinkingNumber",
                   "alexander_link vanishes but linking number is " + std::to_string(link.lk) +
                       "; a vanishing link polynomial forces lk = 0");
    return report;
  }

  // Normalization condition on the top coefficient.
  auto [i0, j0] = top_index(link.delta_link);
  std::int64_t a2 = link.series_2.at((j0 - link.half_lk() + HalfInt::half(1)).as_integer());
  std::int64_t expected = (a2 == 1) ? 1 : -1;
  std::int64_t actual = link.delta_link.coeff(i0, j0);
  if (actual != expected) {
    std::string msg = "top coefficient at (" + i0.str() + ", " + j0.str() + ") is " +
                      std::to_string(actual) + ", expected " + std::to_string(expected);
    if (actual == -expected) msg += " (a global sign flip of alexander_link normalizes this)";
    report.error("NormalizationSign", msg);
  }

  // Compatibility of the t2 = 1 specialization with component 1.
  Laurent1 lhs = substitute_unit(link.delta_link);
  Laurent1 rhs = multiply_geometric(link.delta_1, link.lk);
  int eps = 1;
  HalfInt shift;
  if (!lhs.unit_equal(rhs, eps, shift)) {
    report.error("ComponentMismatch",
                 "alexander_link(t, 1) = " + lhs.str() + " is not a unit multiple of (1-t^lk)/(1-t) * alexander_component_1 = " + rhs.str());
  } else if (shift.doubled() != 0 || eps != 1) {
    report.note("ComponentUnit", std::string("alexander_link(t, 1) matches component 1 up to the unit ") +
                                     (eps < 0 ? "-" : "") + "t^(" + shift.str() + ")");
  }

  // Mirror check for component 2 (warning level; see README on conventions).
  Laurent1 lhs2;
  for (const auto& [e, c] : link.delta_link.terms()) lhs2.add_term(e.second, c);
  Laurent1 rhs2 = multiply_geometric(link.delta_2, link.lk);
  if (!lhs2.unit_equal(rhs2, eps, shift))
    report.warn("ComponentMismatch2",
                "alexander_link(1, t) = " + lhs2.str() + " is not a unit multiple of (1-t^lk)/(1-t) * alexander_component_2 = " + rhs2.str());

  SymmetryDefect sym = symmetry_defect(link.delta_link);
  if (!sym.unit_symmetric) {
    report.warn("Asymmetric", "alexander_link is not invariant under (t1, t2) -> (1/t1, 1/t2) up to a unit");
  } else if (!sym.is_symmetric) {
    report.warn("SymmetryShift", "alexander_link is symmetric only up to the shift t1^(" + sym.shift1.str() +
                                     ") t2^(" + sym.shift2.str() + "); it is not centered");
  }
  return report;
}

LinkData with_normalized_sign(const LinkData& link) {
  if (link.split_alexander()) return link;
  auto [i0, j0] = top_index(link.delta_link);
  std::int64_t a2 = link.series_2.at((j0 - link.half_lk() + HalfInt::half(1)).as_integer());
  std::int64_t expected = (a2 == 1) ? 1 : -1;
  if (link.delta_link.coeff(i0, j0) == -expected) {
    LinkData out = link;
    out.delta_link = link.delta_link.negated();
    return out;
  }
  return link;
}

}  // namespace hfl
