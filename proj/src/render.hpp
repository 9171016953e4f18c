#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "hflminus.hpp"
#include "hfunc.hpp"
#include "linkdata.hpp"
#include "polygon.hpp"
#include "polytope.hpp"

namespace hfl {

enum class Format { Ascii, Structured, Tikz };
Format parse_format(const std::string& name);  // "ascii" | "structured" | "tikz"

// A parsed document plus lazily built pipeline state shared by the table and
// polytope front ends.
class Session {
public:
  explicit Session(Document doc);

  const Document& document() const { return doc_; }
  DocKind kind() const { return doc_.kind; }
  const std::string& name() const { return doc_.name(); }
  const LinkData* link() const { return doc_.link ? &*doc_.link : nullptr; }

  // h-function: available for link and h-grid documents.
  const HFunction& hfunction() const;
  // Any h source, including pattern documents.
  const HSource& source() const;
  const std::vector<LatticePoint>& support() const;

  std::int64_t lk() const { return source().lk(); }
  // Half of the table window: the document window for link/grid documents.
  HalfInt table_window(std::int64_t requested_doubled) const;

private:
  Document doc_;
  mutable std::optional<HFunction> hfunc_;
  mutable std::unique_ptr<PatternSource> pattern_;
  mutable std::optional<std::vector<LatticePoint>> support_;
};

// Validation report rendering (deterministic JSON).
std::string render_validation(const ValidationReport& report, const std::string& name);

std::string render_h_table(const Session& s, std::int64_t window_doubled, Format format);

struct HflTableOptions {
  Flavor flavor = Flavor::Hat;
  bool euler = false;  // ascii table shows Euler characteristics instead of ranks
  std::int64_t window_doubled = 0;
  Format format = Format::Ascii;
};
std::string render_hfl_table(const Session& s, const HflTableOptions& opts);

// One point; JSON record {point, gradings, rank, euler} or the plain
// "F[-2] + F[-3]" rendering.
std::string render_group_at(const Session& s, LatticePoint p, Flavor flavor, Format format);

enum class PolytopeKind { Floer, DualThurston, NewtonCompare };
std::string render_polytope(const Session& s, PolytopeKind kind, Format format);

std::string render_norms(const Session& s, const Rat& h1, const Rat& h2);

struct OracleCheckResult {
  std::string report;
  std::int64_t points_checked = 0;
  std::int64_t mismatches = 0;
  std::int64_t ambiguous = 0;
};
// Compares the cone-model homology with HFL^- and with the spectral sequence
// at every window point, at truncation N and N + 3.
OracleCheckResult oracle_check(const Session& s, std::int64_t truncation);

std::string catalog_list_json();
std::string catalog_show_json(const std::string& name);

std::string polygon_json(const Polygon& poly);

}  // namespace hfl
