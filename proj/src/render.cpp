#include "render.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "errors.hpp"
#include "hflhat.hpp"
#include "hflminus.hpp"
#include "oracle.hpp"

namespace hfl {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "ascii") return Format::Ascii;
  if (name == "structured") return Format::Structured;
  if (name == "tikz") return Format::Tikz;
  fail(Err::Schema, "unknown format '" + name + "' (expected ascii, structured or tikz)");
}

Session::Session(Document doc) : doc_(std::move(doc)) {}

const HFunction& Session::hfunction() const {
  if (!hfunc_) {
    switch (doc_.kind) {
      case DocKind::Link: hfunc_ = HFunction::from_link(*doc_.link); break;
      case DocKind::HGrid: hfunc_ = HFunction::from_grid(*doc_.grid); break;
      case DocKind::Pattern:
        fail(Err::Schema, "pattern documents carry no global h-function; query the center point");
    }
  }
  return *hfunc_;
}

const HSource& Session::source() const {
  if (doc_.kind == DocKind::Pattern) {
    if (!pattern_) pattern_ = std::make_unique<PatternSource>(*doc_.pattern);
    return *pattern_;
  }
  return hfunction();
}

const std::vector<LatticePoint>& Session::support() const {
  if (!support_) {
    if (doc_.kind == DocKind::Link && doc_.link->split_alexander()) {
      // window retry never triggers for split data, but keep one path
      support_ = support_hat(hfunction());
    } else if (doc_.kind == DocKind::Link) {
      auto [h, sup] = support_with_retry(*doc_.link);
      hfunc_ = std::move(h);
      support_ = std::move(sup);
    } else if (doc_.kind == DocKind::HGrid) {
      support_ = support_hat(hfunction());
    } else {
      fail(Err::Schema, "pattern documents have no support set");
    }
  }
  return *support_;
}

HalfInt Session::table_window(std::int64_t requested_doubled) const {
  if (doc_.kind == DocKind::Pattern)
    fail(Err::Schema, "pattern documents evaluate at their center point only");
  if (requested_doubled <= 0) return hfunction().window();
  std::int64_t d = requested_doubled;
  if ((d - lk()) % 2 != 0) ++d;
  return HalfInt::half(d);
}

namespace {

// Deterministic parallel fill: each row computed independently, assembled in
// order afterwards.
template <typename F>
void parallel_rows(std::size_t n, F&& fn) {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, n); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<HalfInt> lattice_range(HalfInt lo, HalfInt hi) {
  std::vector<HalfInt> out;
  for (HalfInt s = lo; s <= hi; s += HalfInt::whole(1)) out.push_back(s);
  return out;
}

std::string ascii_table(const std::vector<HalfInt>& cols, const std::vector<HalfInt>& rows_desc,
                        const std::vector<std::vector<std::string>>& cells) {
  std::size_t width = 1;
  for (const auto& c : cols) width = std::max(width, c.str().size());
  for (const auto& row : cells)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::size_t label_width = std::string("s2\\s1").size();
  for (const auto& r : rows_desc) label_width = std::max(label_width, r.str().size());

  std::ostringstream os;
  auto pad = [&os](const std::string& s, std::size_t w) {
    for (std::size_t i = s.size(); i < w; ++i) os << ' ';
    os << s;
  };
  pad("s2\\s1", label_width);
  for (const auto& c : cols) {
    os << "  ";
    pad(c.str(), width);
  }
  os << "\n";
  for (std::size_t j = 0; j < rows_desc.size(); ++j) {
    pad(rows_desc[j].str(), label_width);
    for (const auto& cell : cells[j]) {
      os << "  ";
      pad(cell, width);
    }
    os << "\n";
  }
  return os.str();
}

json point_json(LatticePoint p) { return json::array({p.s1.str(), p.s2.str()}); }

json group_json(LatticePoint p, const GradedDim& g) {
  json rec;
  rec["point"] = point_json(p);
  json gradings = json::object();
  for (const auto& [grading, mult] : g.dims()) gradings[std::to_string(grading)] = mult;
  rec["gradings"] = std::move(gradings);
  rec["rank"] = g.rank();
  rec["euler"] = g.euler();
  return rec;
}

GradedDim group_at(const Session& s, LatticePoint p, Flavor flavor) {
  if (flavor == Flavor::Minus) return hfl_minus_at(s.source(), p);
  return hfl_hat_at(s.source(), p);
}

}  // namespace

std::string render_validation(const ValidationReport& report, const std::string& name) {
  json out;
  out["name"] = name;
  out["ok"] = report.ok();
  json errs = json::array(), warns = json::array(), notes = json::array();
  for (const auto& e : report.errors) errs.push_back({{"code", e.code}, {"message", e.message}});
  for (const auto& w : report.warnings) warns.push_back({{"code", w.code}, {"message", w.message}});
  for (const auto& n : report.notes) notes.push_back({{"code", n.code}, {"message", n.message}});
  out["errors"] = std::move(errs);
  out["warnings"] = std::move(warns);
  out["notes"] = std::move(notes);
  return out.dump(2) + "\n";
}

std::string render_h_table(const Session& s, std::int64_t window_doubled, Format format) {
  HalfInt B = s.table_window(window_doubled);
  const HSource& h = s.source();
  auto cols = lattice_range(-B, B);
  std::vector<HalfInt> rows = cols;
  std::reverse(rows.begin(), rows.end());

  std::vector<std::vector<std::int64_t>> values(rows.size(), std::vector<std::int64_t>(cols.size()));
  parallel_rows(rows.size(), [&](std::size_t j) {
    for (std::size_t i = 0; i < cols.size(); ++i) values[j][i] = h.at({cols[i], rows[j]});
  });

  if (format == Format::Structured) {
    json arr = json::array();
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t i = 0; i < cols.size(); ++i) {
        json rec;
        rec["point"] = point_json({cols[i], rows[j]});
        rec["h"] = values[j][i];
        arr.push_back(std::move(rec));
      }
    return arr.dump(2) + "\n";
  }
  if (format != Format::Ascii) fail(Err::Schema, "h-table supports ascii and structured formats");
  std::vector<std::vector<std::string>> cells(rows.size(), std::vector<std::string>(cols.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < cols.size(); ++i) cells[j][i] = std::to_string(values[j][i]);
  return ascii_table(cols, rows, cells);
}

std::string render_hfl_table(const Session& s, const HflTableOptions& opts) {
  HalfInt B = s.table_window(opts.window_doubled);
  auto cols = lattice_range(-B, B);
  std::vector<HalfInt> rows = cols;
  std::reverse(rows.begin(), rows.end());

  std::vector<std::vector<GradedDim>> groups(rows.size(), std::vector<GradedDim>(cols.size()));
  parallel_rows(rows.size(), [&](std::size_t j) {
    for (std::size_t i = 0; i < cols.size(); ++i) groups[j][i] = group_at(s, {cols[i], rows[j]}, opts.flavor);
  });

  if (opts.format == Format::Structured) {
    json arr = json::array();
    for (std::size_t j = 0; j < rows.size(); ++j)
      for (std::size_t i = 0; i < cols.size(); ++i)
        arr.push_back(group_json({cols[i], rows[j]}, groups[j][i]));
    return arr.dump(2) + "\n";
  }
  if (opts.format != Format::Ascii) fail(Err::Schema, "hfl tables support ascii and structured formats");

  std::vector<std::vector<std::string>> cells(rows.size(), std::vector<std::string>(cols.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      std::int64_t v = opts.euler ? groups[j][i].euler() : groups[j][i].rank();
      cells[j][i] = (v == 0) ? "." : std::to_string(v);
    }
  }
  return ascii_table(cols, rows, cells);
}

std::string render_group_at(const Session& s, LatticePoint p, Flavor flavor, Format format) {
  GradedDim g = group_at(s, p, flavor);
  if (format == Format::Structured) return group_json(p, g).dump(2) + "\n";
  if (format != Format::Ascii) fail(Err::Schema, "point queries support ascii and structured formats");
  return g.str() + "\n";
}

namespace {

std::string polygon_ascii(const Polygon& poly) {
  if (poly.empty()) return "(empty)\n";
  std::ostringstream os;
  for (const auto& v : poly.vertices) os << "(" << rat_str(v.x) << ", " << rat_str(v.y) << ")\n";
  return os.str();
}

std::string polygon_tikz(const Polygon& poly) {
  if (poly.empty()) return "% empty polytope\n";
  std::ostringstream os;
  if (poly.size() == 1) {
    os << "\\fill (" << rat_str(poly.vertices[0].x) << "," << rat_str(poly.vertices[0].y)
       << ") circle (2pt);\n";
    return os.str();
  }
  os << "\\draw";
  for (const auto& v : poly.vertices) os << " (" << rat_str(v.x) << "," << rat_str(v.y) << ") --";
  if (poly.size() == 2) {
    std::string s = os.str();
    s.resize(s.size() - 3);  // drop the trailing " --"
    return s + ";\n";
  }
  os << " cycle;\n";
  return os.str();
}

}  // namespace

std::string polygon_json(const Polygon& poly) {
  json arr = json::array();
  for (const auto& v : poly.vertices) arr.push_back(json::array({rat_str(v.x), rat_str(v.y)}));
  json out;
  out["vertices"] = std::move(arr);
  return out.dump(2) + "\n";
}

std::string render_polytope(const Session& s, PolytopeKind kind, Format format) {
  if (kind == PolytopeKind::NewtonCompare) {
    const LinkData* link = s.link();
    if (!link) fail(Err::Schema, "newton-compare needs a link document with Alexander data");
    NewtonComparison cmp = newton_compare(*link, s.hfunction(), s.support());
    if (format == Format::Structured) {
      json out;
      out["outcome"] = newton_outcome_name(cmp.outcome);
      out["chi_hull_equals_hat_hull"] = cmp.chi_hull_equals_hat_hull;
      auto poly_arr = [](const Polygon& p) {
        json arr = json::array();
        for (const auto& v : p.vertices) arr.push_back(json::array({rat_str(v.x), rat_str(v.y)}));
        return arr;
      };
      out["newton"] = poly_arr(cmp.newton);
      out["dual_thurston"] = poly_arr(cmp.dual_thurston);
      return out.dump(2) + "\n";
    }
    if (format != Format::Ascii) fail(Err::Schema, "newton-compare supports ascii and structured formats");
    std::ostringstream os;
    os << newton_outcome_name(cmp.outcome) << "\n";
    os << "hat-support-hull-equals-euler-support-hull: " << (cmp.chi_hull_equals_hat_hull ? "yes" : "no")
       << "\n";
    return os.str();
  }

  Polygon poly;
  if (kind == PolytopeKind::Floer) {
    poly = floer_polytope(s.support());
  } else {
    const LinkData* link = s.link();
    if (!link) fail(Err::Schema, "dual-thurston needs a link document with Alexander data");
    poly = dual_thurston_polytope(*link, s.support());
  }
  switch (format) {
    case Format::Ascii: return polygon_ascii(poly);
    case Format::Structured: return polygon_json(poly);
    case Format::Tikz: return polygon_tikz(poly);
  }
  fail(Err::Internal, "bad format");
}

std::string render_norms(const Session& s, const Rat& h1, const Rat& h2) {
  const LinkData* link = s.link();
  if (!link) fail(Err::Schema, "norms need a link document with Alexander data");
  NormReport report = thurston_x(*link, s.support(), h1, h2);
  json out;
  out["h"] = json::array({rat_str(report.h1), rat_str(report.h2)});
  out["y"] = rat_str(report.y_value);
  out["x"] = rat_str(report.x_value);
  return out.dump(2) + "\n";
}

OracleCheckResult oracle_check(const Session& s, std::int64_t truncation) {
  const HSource& h = s.source();
  std::vector<LatticePoint> points;
  std::int64_t max_h = 0;
  if (s.kind() == DocKind::Pattern) {
    LatticePoint c = s.document().pattern->center;
    points.push_back(c);
    const HalfInt one = HalfInt::whole(1);
    for (HalfInt s1 = c.s1 - one; s1 <= c.s1 + one; s1 += one)
      for (HalfInt s2 = c.s2 - one; s2 <= c.s2 + one; s2 += one)
        max_h = std::max(max_h, h.at({s1, s2}));
  } else {
    const HalfInt one = HalfInt::whole(1);
    HalfInt inner = s.hfunction().window() - one;
    for (HalfInt s2 = inner; s2 >= -inner; s2 -= one)
      for (HalfInt s1 = -inner; s1 <= inner; s1 += one) points.push_back({s1, s2});
    HalfInt B = s.hfunction().window();
    for (HalfInt s2 = -B; s2 <= B; s2 += one)
      for (HalfInt s1 = -B; s1 <= B; s1 += one) max_h = std::max(max_h, h.at({s1, s2}));
  }

  std::int64_t N = truncation > 0 ? truncation : std::max<std::int64_t>(2 * max_h + 8, 16);
  if (N < max_h + 4) fail(Err::TruncationTooSmall, "requested truncation is below max h + 4");

  OracleCheckResult result;
  std::ostringstream os;
  os << "oracle check: " << points.size() << " points, truncation " << N << " and " << N + 3 << "\n";
  struct Line {
    std::string text;
    bool mismatch = false;
    bool ambiguous = false;
  };
  std::vector<Line> lines(points.size());
  parallel_rows(points.size(), [&](std::size_t i) {
    LatticePoint p = points[i];
    GradedDim minus = hfl_minus_at(h, p);
    GradedDim minus_model = graded_homology(build_minus_model(h, p, N));
    GradedDim minus_model_stable = graded_homology(build_minus_model(h, p, N + 3));
    bool minus_ok = (minus == minus_model) && (minus == minus_model_stable);

    SpectralState st = build_e1(h, p);
    apply_d1(st);
    GradedDim hat_model = graded_homology(build_hat_model(h, p, N));
    GradedDim hat_model_stable = graded_homology(build_hat_model(h, p, N + 3));
    bool stable = (hat_model == hat_model_stable);
    bool hat_ok;
    std::string note;
    if (st.ambiguous_pairs.empty()) {
      hat_ok = stable && (hat_model == st.e2);
    } else {
      GradedDim final_group = hfl_hat_at(h, p);
      hat_ok = stable && (hat_model == final_group);
      std::ostringstream n;
      n << "  [d2-flagged: e2 rank " << st.e2.rank() << ", final rank " << final_group.rank()
        << (st.e2 == final_group ? ", d2 = 0" : ", expected-d2") << "]";
      note = n.str();
    }
    std::ostringstream line;
    line << p.str() << "  minus=" << (minus_ok ? "pass" : "FAIL") << "  hat=" << (hat_ok ? "pass" : "FAIL")
         << note;
    lines[i] = {line.str(), !minus_ok || !hat_ok, !st.ambiguous_pairs.empty()};
  });
  for (const auto& line : lines) {
    os << line.text << "\n";
    if (line.mismatch) ++result.mismatches;
    if (line.ambiguous) ++result.ambiguous;
  }
  result.points_checked = static_cast<std::int64_t>(points.size());
  os << "summary: " << result.points_checked << " points, " << result.mismatches << " mismatches, "
     << result.ambiguous << " d2-flagged\n";
  result.report = os.str();
  return result;
}

std::string catalog_list_json() {
  json arr = json::array();
  for (const auto& e : catalog()) {
    json rec;
    rec["name"] = e.name;
    rec["summary"] = e.summary;
    switch (e.document.kind) {
      case DocKind::Link: rec["kind"] = "link"; break;
      case DocKind::HGrid: rec["kind"] = "h-grid"; break;
      case DocKind::Pattern: rec["kind"] = "pattern"; break;
    }
    if (e.warning_expected) rec["warning_expected"] = true;
    arr.push_back(std::move(rec));
  }
  return arr.dump(2) + "\n";
}

std::string catalog_show_json(const std::string& name) {
  return render_document(catalog_get(name).document).dump(2) + "\n";
}

}  // namespace hfl
