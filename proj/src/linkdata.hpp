#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "halfint.hpp"
#include "laurent.hpp"

namespace hfl {

// Alexander data of a two-component link, as read from a link document.
struct LinkData {
  std::string name;
  std::int64_t lk = 0;
  Laurent2 delta_link;
  Laurent1 delta_1, delta_2;
  TorsionSeries series_1, series_2;  // derived at parse time

  HalfInt half_lk() const { return HalfInt::half(lk); }
  bool split_alexander() const { return delta_link.zero(); }
};

// Direct h-function rectangle (rows top to bottom, each left to right).
struct GridData {
  std::string name;
  std::int64_t lk = 0;
  HalfInt s1_min, s2_min;
  std::vector<std::vector<std::int64_t>> rows;

  HalfInt s1_max() const { return s1_min + HalfInt::whole(static_cast<std::int64_t>(rows.empty() ? 0 : rows.front().size()) - 1); }
  HalfInt s2_max() const { return s2_min + HalfInt::whole(static_cast<std::int64_t>(rows.size()) - 1); }
  std::int64_t at(HalfInt s1, HalfInt s2) const;  // within the rectangle
};

// A 3x3 h-grid around a designated center on the integer lattice; the
// mirrored 3x3 follows from h(-s) = h(s) + s1 + s2.
struct PatternData {
  std::string name;
  LatticePoint center;
  std::array<std::array<std::int64_t, 3>, 3> rows;  // rows[0] is the top row
};

enum class DocKind { Link, HGrid, Pattern };

struct Document {
  DocKind kind = DocKind::Link;
  std::optional<LinkData> link;
  std::optional<GridData> grid;
  std::optional<PatternData> pattern;

  const std::string& name() const;
};

struct ValidationReport {
  struct Entry {
    std::string code;
    std::string message;
  };
  std::vector<Entry> errors;
  std::vector<Entry> warnings;
  std::vector<Entry> notes;  // informational, e.g. the unit absorbed by a "=." comparison

  bool ok() const { return errors.empty(); }
  void error(std::string code, std::string message) { errors.push_back({std::move(code), std::move(message)}); }
  void warn(std::string code, std::string message) { warnings.push_back({std::move(code), std::move(message)}); }
  void note(std::string code, std::string message) { notes.push_back({std::move(code), std::move(message)}); }
};

HalfInt parse_halfint(const nlohmann::json& v);

LinkData parse_link(const nlohmann::json& doc);
Document parse_document(const nlohmann::json& doc);
Document parse_document_text(const std::string& text);
Document parse_document_file(const std::string& path);

nlohmann::json render_link(const LinkData& link);
nlohmann::json render_document(const Document& doc);

// Normalization checks of the input data; failures are report entries, and
// asymmetry of the link polynomial only warns.
ValidationReport validate(const LinkData& link);

// (1 - t^lk) / (1 - t) * delta, a Laurent polynomial for every integer lk.
Laurent1 multiply_geometric(const Laurent1& delta, std::int64_t lk);

// Flips the sign of delta_link when Def-style normalization demands the
// opposite leading sign; identity when already normalized.
LinkData with_normalized_sign(const LinkData& link);

}  // namespace hfl
