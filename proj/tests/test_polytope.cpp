#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "polytope.hpp"
#include "support/fixtures.hpp"

using namespace hfl;
using hfl::testing::catalog_link;

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> as_set(const std::vector<LatticePoint>& pts) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : pts) out.insert({p.s1.doubled(), p.s2.doubled()});
  return out;
}

}  // namespace

TEST_CASE("hat support of L7n1 is the nine printed points") {
  auto [h, support] = support_with_retry(catalog_link("L7n1"));
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t s2 = -2; s2 <= 2; ++s2) expected.insert({0, 2 * s2});
  expected.insert({2, 4});
  expected.insert({2, 2});
  expected.insert({-2, -4});
  expected.insert({-2, -2});
  CHECK(as_set(support) == expected);
}

TEST_CASE("hat support of split links") {
  auto [h, support] = support_with_retry(catalog_link("split-trefoils"));
  std::set<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t a = -1; a <= 1; ++a)
    for (std::int64_t b = -1; b <= 1; ++b) expected.insert({2 * a, 2 * b});
  CHECK(as_set(support) == expected);

  auto [h2, support2] = support_with_retry(catalog_link("split-unknots"));
  CHECK(as_set(support2) == std::set<std::pair<std::int64_t, std::int64_t>>{{0, 0}});
}

TEST_CASE("y norm on the L7n1 support") {
  auto [h, support] = support_with_retry(catalog_link("L7n1"));
  CHECK(y_norm(support, Rat(0), Rat(1)) == Rat(2));
  CHECK(y_norm(support, Rat(1), Rat(0)) == Rat(1));
  CHECK(y_norm(support, Rat(0), Rat(0)) == Rat(0));
  CHECK_THROWS_AS(y_norm({}, Rat(1), Rat(0)), Error);
}

TEST_CASE("y norm is positively homogeneous and subadditive") {
  auto [h, support] = support_with_retry(catalog_link("b(20,-3)"));
  for (std::int64_t a = -3; a <= 3; ++a) {
    for (std::int64_t b = -3; b <= 3; ++b) {
      Rat y = y_norm(support, Rat(a), Rat(b));
      CHECK(y_norm(support, Rat(3 * a), Rat(3 * b)) == Rat(3) * y);
      for (std::int64_t c = -2; c <= 2; ++c)
        for (std::int64_t d = -2; d <= 2; ++d) {
          Rat rhs = y + y_norm(support, Rat(c), Rat(d));
          CHECK(y_norm(support, Rat(a + c), Rat(b + d)) <= rhs);
        }
    }
  }
}

TEST_CASE("Thurston norms of L7n1") {
  auto [h, support] = support_with_retry(catalog_link("L7n1"));
  NormReport x10 = thurston_x(catalog_link("L7n1"), support, Rat(1), Rat(0));
  CHECK(x10.y_value == Rat(1));
  CHECK(x10.x_value == Rat(1));
  NormReport x01 = thurston_x(catalog_link("L7n1"), support, Rat(0), Rat(1));
  CHECK(x01.y_value == Rat(2));
  CHECK(x01.x_value == Rat(3));
  // the report invariant x = 2y - |h1| - |h2|
  CHECK(x01.x_value == Rat(2) * x01.y_value - Rat(1));
}

TEST_CASE("Thurston norm of the split trefoils") {
  auto [h, support] = support_with_retry(catalog_link("split-trefoils"));
  NormReport r = thurston_x(catalog_link("split-trefoils"), support, Rat(1), Rat(0));
  CHECK(r.x_value == Rat(1));
}

TEST_CASE("split unknots have a trivial component") {
  auto [h, support] = support_with_retry(catalog_link("split-unknots"));
  CHECK_THROWS_AS(thurston_x(catalog_link("split-unknots"), support, Rat(1), Rat(0)), Error);
  CHECK_THROWS_AS(dual_thurston_polytope(catalog_link("split-unknots"), support), Error);
}

TEST_CASE("dual Thurston polytope of L7n1 is the Newton segment") {
  auto [h, support] = support_with_retry(catalog_link("L7n1"));
  Polygon d = dual_thurston_polytope(catalog_link("L7n1"), support);
  REQUIRE(d.size() == 2);
  CHECK(d.vertices[0] == RatPoint{Rat(-1, 2), Rat(-3, 2)});
  CHECK(d.vertices[1] == RatPoint{Rat(1, 2), Rat(3, 2)});
  CHECK(d == newton_polytope(catalog_link("L7n1").delta_link));
}

TEST_CASE("dual Thurston polytope of b(20,-3) against a dense direction fan") {
  const LinkData& link = catalog_link("b(20,-3)");
  auto [h, support] = support_with_retry(link);
  Polygon d = dual_thurston_polytope(link, support);
  CHECK(d == newton_polytope(link.delta_link));
  // oracle: the support function of the result must match the defining
  // formula in every primitive direction, not only on the construction fan
  for (std::int64_t a = -8; a <= 8; ++a) {
    for (std::int64_t b = -8; b <= 8; ++b) {
      if (a == 0 && b == 0) continue;
      Rat x = Rat(2) * y_norm(support, Rat(a), Rat(b)) - rat_abs(Rat(a)) - rat_abs(Rat(b));
      CHECK(d.support(Rat(a), Rat(b)) == x / Rat(2));
    }
  }
}

TEST_CASE("dual Thurston polytope of the split trefoils") {
  auto [h, support] = support_with_retry(catalog_link("split-trefoils"));
  Polygon d = dual_thurston_polytope(catalog_link("split-trefoils"), support);
  REQUIRE(d.size() == 4);
  for (const auto& v : d.vertices) {
    CHECK(rat_abs(v.x) == Rat(1, 2));
    CHECK(rat_abs(v.y) == Rat(1, 2));
  }
}

TEST_CASE("floer polytope of the split trefoils is the unit square") {
  auto [h, support] = support_with_retry(catalog_link("split-trefoils"));
  Polygon p = floer_polytope(support);
  REQUIRE(p.size() == 4);
  for (const auto& v : p.vertices) {
    CHECK(rat_abs(v.x) == Rat(1));
    CHECK(rat_abs(v.y) == Rat(1));
  }
}

TEST_CASE("newton comparison outcomes") {
  {
    const LinkData& link = catalog_link("L7n1");
    auto [h, support] = support_with_retry(link);
    NewtonComparison cmp = newton_compare(link, h, support);
    CHECK(cmp.outcome == NewtonOutcome::Equal);
    CHECK(cmp.chi_hull_equals_hat_hull);
  }
  {
    const LinkData& link = catalog_link("b(20,-3)");
    auto [h, support] = support_with_retry(link);
    NewtonComparison cmp = newton_compare(link, h, support);
    CHECK(cmp.outcome == NewtonOutcome::Equal);
    CHECK(cmp.chi_hull_equals_hat_hull);
  }
  {
    const LinkData& link = catalog_link("split-trefoils");
    auto [h, support] = support_with_retry(link);
    NewtonComparison cmp = newton_compare(link, h, support);
    CHECK(cmp.outcome == NewtonOutcome::ZeroAlexander);
  }
}

TEST_CASE("produced polytopes are centrally symmetric") {
  for (const char* name : {"L7n1", "b(20,-3)", "split-trefoils"}) {
    const LinkData& link = catalog_link(name);
    auto [h, support] = support_with_retry(link);
    CHECK(floer_polytope(support).centrally_symmetric());
    CHECK(dual_thurston_polytope(link, support).centrally_symmetric());
  }
}

TEST_CASE("containments: dual Thurston inside the doubled hull, Newton inside dual Thurston") {
  for (const char* name : {"L7n1", "b(20,-3)"}) {
    const LinkData& link = catalog_link(name);
    auto [h, support] = support_with_retry(link);
    Polygon hull2 = floer_polytope(support).scaled(Rat(2));
    Polygon d = dual_thurston_polytope(link, support);
    CHECK(hull2.contains(d));
    CHECK(d.contains(newton_polytope(link.delta_link)));
  }
  {
    const LinkData& link = catalog_link("split-trefoils");
    auto [h, support] = support_with_retry(link);
    Polygon hull2 = floer_polytope(support).scaled(Rat(2));
    CHECK(hull2.contains(dual_thurston_polytope(link, support)));
  }
}
