#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mwhit/gt.hpp"
#include "mwhit/verify.hpp"

#include <set>

using namespace mwhit;

namespace {

const GaussCoeff one(1);
const GaussCoeff t = t_coeff();

GTPattern G(std::vector<std::vector<int>> rows) { return GTPattern{std::move(rows)}; }

ColoredGTPattern find_colored(const GTPattern &p, const Permutation &wp, const std::vector<std::vector<int>> &colors) {
  for (const auto &c : color_gt(p, wp))
    if (c.colors == colors)
      return c;
  FAIL("coloring not produced");
  return {};
}

} // namespace

TEST_CASE("enumerate_gt") {
  CHECK(enumerate_gt({1, 0}).size() == 2);
  CHECK(enumerate_gt({3, 1, 0}).size() == 15);
  auto z = enumerate_gt({0, 0});
  REQUIRE(z.size() == 1);
  CHECK(z[0] == G({{0, 0}, {0}}));
  CHECK(enumerate_gt({0, 1}).empty());
  // Betweenness count against a product-free brute force.
  int brute = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        brute += G({{4, 2, 0}, {a, b}, {c}}).valid();
  CHECK(enumerate_gt({4, 2, 0}).size() == static_cast<std::size_t>(brute));
}

TEST_CASE("bijection with Lusztig data") {
  CHECK(lusztig_to_gt(LusztigDatum(2, {1, 2, 1}), {1, 0, 0}) == G({{3, 1, 0}, {1, 0}, {0}}));
  CHECK(lusztig_to_gt(LusztigDatum(2), {1, 0, 0}) == G({{3, 1, 0}, {3, 1}, {3}}));
  auto [m, lam] = gt_to_lusztig(G({{3, 1, 0}, {3, 1}, {3}}));
  CHECK(m.m == std::vector<int>{0, 0, 0});
  CHECK(lam == Weight{1, 0, 0});
  CHECK_THROWS_AS(lusztig_to_gt(LusztigDatum(2, {0, 5, 0}), {1, 0, 0}), DomainError);
}

TEST_CASE("gt_weight") {
  CHECK(gt_weight(G({{3, 1, 0}, {1, 0}, {0}})) == monomial({0, 1, 3}));
  CHECK(gt_weight(G({{3, 1, 0}, {3, 1}, {3}})) == monomial({3, 1, 0}));
  CHECK(gt_weight(G({{0, 0, 0}, {0, 0}, {0}})) == monomial({0, 0, 0}));
  for (const auto &p : enumerate_gt({4, 2, 1, 0})) {
    auto [m, lam] = gt_to_lusztig(p);
    CHECK(gt_weight(p) == monomial_of(m, lam));
  }
}

TEST_CASE("color_gt on GL2") {
  auto e = Permutation::identity(2), s1 = Permutation::parse("s1", 2);
  auto a = color_gt(G({{1, 0}, {0}}), e);
  REQUIRE(a.size() == 1);
  CHECK(a[0].colors[1] == std::vector<int>{2});
  CHECK(a[0].output() == e);
  CHECK(to_string(a[0]) == "{_1 1, _2 0; _2 0}");
  auto b = color_gt(G({{1, 0}, {1}}), e);
  REQUIRE(b.size() == 1);
  CHECK(b[0].colors[1] == std::vector<int>{1});
  CHECK(b[0].output() == s1);
  auto c = color_gt(G({{1, 0}, {1}}), s1);
  REQUIRE(c.size() == 2);
  std::set<Permutation> outs{c[0].output(), c[1].output()};
  CHECK(outs == std::set<Permutation>{e, s1});
}

TEST_CASE("gt_contribution") {
  Weight top{3, 1, 0};
  auto e = Permutation::identity(3);
  auto r1 = find_colored(G({{3, 1, 0}, {1, 0}, {0}}), e, {{1, 2, 3}, {2, 3}, {3}});
  for (auto a : std::vector<PositiveRoot>{{1, 2}, {1, 3}, {2, 3}})
    CHECK(gt_contribution(r1, a, 1) == t);
  auto r14 = find_colored(G({{3, 1, 0}, {3, 0}, {3}}), e, {{1, 2, 3}, {1, 3}, {1}});
  CHECK(r14.output() == Permutation::parse("s2 s1", 3));
  CHECK(gt_contribution(r14, {1, 3}, 1) == one);
  CHECK(gt_contribution(r14, {2, 3}, 1) == t);
  CHECK(gt_contribution(r14, {1, 2}, 1) == one);
  // C < A with s >= 0 at n = 1.
  auto r6 = find_colored(G({{3, 1, 0}, {2, 0}, {1}}), e, {{1, 2, 3}, {2, 3}, {3}});
  CHECK(gt_contribution(r6, {1, 2}, 1) == one + t);
  CHECK(gt_contribution(r6, {1, 3}, 1) == one + t);
}

TEST_CASE("strictness on GT patterns") {
  for (const auto &c : color_gt(G({{4, 2, 0}, {3, 1}, {2}}), Permutation::identity(3)))
    CHECK(is_strict_gt(c));
  // Triangle C = A = B with a < b.
  auto tri = color_gt(G({{1, 1}, {1}}), Permutation::identity(2));
  REQUIRE(tri.size() == 1);
  CHECK(to_string(tri[0]) == "{_1 1, _2 1; _1 1}");
  CHECK(gt_contribution(tri[0], {1, 2}, 1).is_zero());
  CHECK_FALSE(is_strict_gt(tri[0]));
  for (const auto &p : enumerate_gt({3, 2, 1, 0}))
    for (const auto &c : color_gt(p, Permutation::identity(4)))
      CHECK(is_superstrict_gt(c, 1) == is_strict_gt(c));
}

TEST_CASE("round trips and transport on the grid") {
  Grid g;
  g.max_rank = 2;
  g.max_part = 4;
  g.max_n = 3;
  Report rep = verify_bijections(g);
  CHECK_MESSAGE(rep.ok, rep.first_failure);
}
