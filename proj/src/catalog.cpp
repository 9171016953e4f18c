#include "catalog.hpp"

#include <algorithm>

#include "errors.hpp"

namespace hfl {

namespace {

Laurent1 poly1(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  Laurent1 out;
  for (const auto& [e, c] : terms) out.add_term(HalfInt::whole(e), c);
  return out;
}

Laurent1 unknot_poly() { return poly1({{0, 1}}); }
Laurent1 trefoil_poly() { return poly1({{1, 1}, {0, -1}, {-1, 1}}); }

LinkData make_link(std::string name, std::int64_t lk,
                   std::initializer_list<std::tuple<std::int64_t, std::int64_t, std::int64_t>> link_terms,
                   const Laurent1& d1, const Laurent1& d2) {
  LinkData out;
  out.name = std::move(name);
  out.lk = lk;
  for (const auto& [e1, e2, c] : link_terms)
    out.delta_link.add_term(HalfInt::half(e1), HalfInt::half(e2), c);
  out.delta_1 = d1;
  out.delta_2 = d2;
  out.series_1 = torsion_series(d1);
  out.series_2 = torsion_series(d2);
  return out;
}

Document link_doc(LinkData link) {
  Document d;
  d.kind = DocKind::Link;
  d.link = std::move(link);
  return d;
}

Document pattern_doc(std::string name, std::array<std::array<std::int64_t, 3>, 3> rows) {
  Document d;
  d.kind = DocKind::Pattern;
  d.pattern = PatternData{std::move(name), {HalfInt::whole(4), HalfInt::whole(4)}, rows};
  return d;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  // L7n1: unknot + right-handed trefoil, lk = 2.
  out.push_back({"L7n1",
                 "unknot and right-handed trefoil, lk = 2",
                 link_doc(make_link("L7n1", 2, {{1, 3, 1}, {-1, -3, 1}}, unknot_poly(), trefoil_poly())),
                 false,
                 true});

  // Two-bridge link b(20, -3): two unknots, lk = 2.
  out.push_back({"b(20,-3)",
                 "two-bridge link b(20,-3), two unknots, lk = 2",
                 link_doc(make_link("b(20,-3)", 2,
                                    {{1, 3, 1},
                                     {3, 1, 1},
                                     {1, -1, 1},
                                     {-1, 1, 1},
                                     {-3, -1, 1},
                                     {-1, -3, 1},
                                     {3, 3, -1},
                                     {1, 1, -1},
                                     {-1, -1, -1},
                                     {-3, -3, -1}},
                                    unknot_poly(), unknot_poly())),
                 false,
                 true});

  // Split union of two right-handed trefoils.
  out.push_back({"split-trefoils",
                 "split union of two right-handed trefoils",
                 link_doc(make_link("split-trefoils", 0, {}, trefoil_poly(), trefoil_poly())),
                 false,
                 true});

  // Split union of two unknots.
  out.push_back({"split-unknots",
                 "split union of two unknots",
                 link_doc(make_link("split-unknots", 0, {}, unknot_poly(), unknot_poly())),
                 false,
                 true});

  // Pretzel link b(-2,3,8): the polynomial as printed is not
  // negation-symmetric, so it only validates with warnings and the
  // h-function pipeline rejects it; the h-grid entry below carries its
  // h-function directly.
  out.push_back({"b(-2,3,8)",
                 "pretzel link b(-2,3,8), unknot and trefoil, lk = 5 (asymmetric polynomial as printed)",
                 link_doc(make_link("b(-2,3,8)", 5,
                                    {{-4, -6, 1}, {-2, -4, 1}, {0, 0, 1}, {2, 2, 1}, {4, 6, 1}},
                                    unknot_poly(), trefoil_poly())),
                 true,
                 false});

  {
    GridData grid;
    grid.name = "b(-2,3,8)-hgrid";
    grid.lk = 5;
    grid.s1_min = HalfInt::half(-9);
    grid.s2_min = HalfInt::half(-9);
    grid.rows = {
        {7, 6, 5, 4, 3, 2, 1, 0, 0},  // s2 = 9/2
        {7, 6, 5, 4, 3, 2, 1, 0, 0},  // s2 = 7/2
        {7, 6, 5, 4, 3, 2, 1, 1, 1},  // s2 = 5/2
        {7, 6, 5, 4, 3, 2, 1, 1, 1},  // s2 = 3/2
        {7, 6, 5, 4, 3, 2, 2, 2, 2},  // s2 = 1/2
        {7, 6, 5, 4, 3, 3, 3, 3, 3},  // s2 = -1/2
        {7, 6, 5, 4, 4, 4, 4, 4, 4},  // s2 = -3/2
        {8, 7, 6, 5, 5, 5, 5, 5, 5},  // s2 = -5/2
        {8, 7, 6, 6, 6, 6, 6, 6, 6},  // s2 = -7/2
        {9, 8, 7, 7, 7, 7, 7, 7, 7},  // s2 = -9/2
    };
    Document d;
    d.kind = DocKind::HGrid;
    d.grid = std::move(grid);
    out.push_back({"b(-2,3,8)-hgrid", "h-function grid of b(-2,3,8), columns s1 = -9/2..7/2", std::move(d),
                   false, true});
  }

  // The eight 3x3 blocks where a d2 needs attention, centered at (4, 4)
  // with base value 0.
  auto pat = [&out](const char* name, const char* summary,
                    std::array<std::array<std::int64_t, 3>, 3> rows) {
    out.push_back({name, summary, pattern_doc(name, rows), false, true});
  };
  pat("pattern-2a", "d2 candidate block 2a (final rank 3)", {{{1, 1, 0}, {2, 1, 1}, {3, 2, 1}}});
  pat("pattern-2b", "d2 candidate block 2b (mirror-resolved, final rank 1)", {{{2, 1, 0}, {2, 1, 1}, {3, 2, 2}}});
  pat("pattern-2c", "d2 candidate block 2c (final rank 2)", {{{2, 1, 0}, {2, 1, 1}, {3, 2, 1}}});
  pat("pattern-2d", "d2 candidate block 2d (final rank 2)", {{{1, 1, 0}, {2, 1, 1}, {3, 2, 2}}});
  pat("pattern-3c", "d2 candidate block 3c (mirror-resolved, final rank 1)", {{{1, 1, 0}, {2, 2, 1}, {3, 2, 1}}});
  pat("pattern-3d", "d2 candidate block 3d (final rank 3)", {{{2, 1, 0}, {2, 2, 1}, {3, 2, 2}}});
  pat("pattern-3e", "d2 candidate block 3e (final rank 2)", {{{1, 1, 0}, {2, 2, 1}, {3, 2, 2}}});
  pat("pattern-3f", "d2 candidate block 3f (final rank 2)", {{{2, 1, 0}, {2, 2, 1}, {3, 2, 1}}});

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_get(const std::string& name) {
  const auto& entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&name](const CatalogEntry& e) { return e.name == name; });
  if (it == entries.end()) fail(Err::UnknownName, "no catalog entry named '" + name + "'");
  return *it;
}

}  // namespace hfl
