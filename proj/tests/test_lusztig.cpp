#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mwhit/lusztig.hpp"

#include <set>

using namespace mwhit;

namespace {

const GaussCoeff one(1);
const GaussCoeff t = t_coeff();

ColoredLusztigDatum find_colored(const LusztigDatum &m, const Weight &lam, const Permutation &wp,
                                 const std::vector<int> &colors) {
  for (const auto &c : color_datum(m, lam, wp))
    if (c.colors == colors)
      return c;
  FAIL("coloring not produced");
  return {};
}

} // namespace

TEST_CASE("enumerate_lusztig_data") {
  auto d0 = enumerate_lusztig_data({0, 0});
  REQUIRE(d0.size() == 2);
  CHECK(d0[0].m == std::vector<int>{0});
  CHECK(d0[1].m == std::vector<int>{1});
  for (int a = 0; a <= 5; ++a) {
    auto d = enumerate_lusztig_data({a, 0});
    REQUIRE(d.size() == static_cast<std::size_t>(a + 2));
    for (int k = 0; k <= a + 1; ++k)
      CHECK(d[k].m == std::vector<int>{k});
  }
  CHECK(enumerate_lusztig_data({1, 0, 0}).size() == 15);
  CHECK(enumerate_lusztig_data({0, 2}).empty());
}

TEST_CASE("Lusztig data are exactly m >= 0 with s >= -1") {
  for (Weight lam : {Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{2, 1, 0}, Weight{1, 1, 0, 0}}) {
    auto data = enumerate_lusztig_data(lam);
    std::set<LusztigDatum> got(data.begin(), data.end());
    int r = static_cast<int>(lam.size()) - 1, N = num_positive_roots(r);
    std::set<LusztigDatum> box;
    std::vector<int> m(N, 0);
    auto rec = [&](auto &&self, int k) -> void {
      if (k == N) {
        LusztigDatum d(r, m);
        bool ok = true;
        for (auto a : d.roots())
          ok = ok && s_stat(d, lam, a) >= -1;
        if (ok)
          box.insert(d);
        return;
      }
      for (int v = 0; v <= 6; ++v) {
        m[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    CHECK(got == box);
  }
}

TEST_CASE("outside Lu some positive entry has s < -1, so its Gauss sum vanishes") {
  for (Weight lam : {Weight{1, 0, 0}, Weight{0, 0, 0}, Weight{2, 0}}) {
    int r = static_cast<int>(lam.size()) - 1, N = num_positive_roots(r);
    std::vector<int> m(N, 0);
    int outside = 0;
    auto rec = [&](auto &&self, int k) -> void {
      if (k == N) {
        LusztigDatum d(r, m);
        bool in = true, killed = false;
        for (auto a : d.roots()) {
          int s = s_stat(d, lam, a);
          in = in && s >= -1;
          if (d.at(a) > 0 && s < -1)
            killed = killed || gauss_eval(r_stat(d, a), s, 1).is_zero();
        }
        if (!in) {
          ++outside;
          CHECK(killed);
        }
        return;
      }
      for (int v = 0; v <= 5; ++v) {
        m[k] = v;
        self(self, k + 1);
      }
    };
    rec(rec, 0);
    CHECK(outside > 0);
  }
}

TEST_CASE("monomial_of") {
  CHECK(monomial_of(LusztigDatum(2, {1, 2, 1}), {1, 0, 0}) == monomial({0, 1, 3}));
  CHECK(monomial_of(LusztigDatum(2), {1, 0, 0}) == monomial({3, 1, 0}));
  CHECK(monomial_of(LusztigDatum(0), {0}) == monomial({0}));
}

TEST_CASE("Procedure on the GL4 example") {
  // Rows j = 4, 3, 2 of m are (1,0,0), (0,1), (0); top row (4,2,1,0).
  LusztigDatum m(3);
  m.at(1, 4) = 1;
  m.at(2, 3) = 1;
  Weight lam{1, 0, 0, 0};
  auto cs = color_datum(m, lam, Permutation::identity(4));
  REQUIRE(cs.size() == 3);
  std::set<std::tuple<std::vector<int>, std::vector<int>, int, std::vector<int>>> got, want;
  for (const auto &c : cs)
    got.insert({{c.color(1, 4), c.color(2, 4), c.color(3, 4)},
                {c.color(1, 3), c.color(2, 3)},
                c.color(1, 2),
                c.output().one_line()});
  want.insert({{4, 2, 3}, {4, 3}, 4, {1, 2, 3, 4}});
  want.insert({{4, 2, 3}, {4, 3}, 3, {1, 2, 4, 3}});
  want.insert({{4, 2, 3}, {2, 3}, 2, {1, 4, 3, 2}});
  CHECK(got == want);
}

TEST_CASE("Procedure on small cases") {
  auto c = color_datum(LusztigDatum(1, {0}), {0, 0}, Permutation::identity(2));
  REQUIRE(c.size() == 1);
  CHECK(c[0].color(1, 2) == 1);
  CHECK(c[0].output() == Permutation::parse("s1", 2));
  // Every entry positive: one coloring, output w'.
  for (const auto &wp : Permutation::all(4)) {
    auto all = color_datum(LusztigDatum(3, {1, 1, 1, 1, 1, 1}), {3, 2, 1, 0}, wp);
    REQUIRE(all.size() == 1);
    CHECK(all[0].output() == wp);
  }
}

TEST_CASE("contribution examples") {
  auto c = color_datum(LusztigDatum(1, {1}), {0, 0}, Permutation::identity(2));
  REQUIRE(c.size() == 1);
  CHECK(c[0].output() == Permutation::identity(2));
  for (int n = 1; n <= 4; ++n)
    CHECK(contribution(c[0], {0, 0}, {1, 2}, n) == gauss_eval(1, -1, n));
  CHECK(contribution(c[0], {1, 2}, 1) == t);

  // GL3, lambda = (1,0,0), m = 0: colors (3,2) on row j = 3 and 1 below, output w0.
  Weight lam{1, 0, 0};
  auto c17 = find_colored(LusztigDatum(2), lam, Permutation::identity(3), {1, 1, 2});
  CHECK(c17.output() == Permutation::longest(3));
  for (auto a : c17.datum.roots())
    CHECK(contribution(c17, a, 1) == one);

  // GT {3,1,0; 1,1; 1} colored (3,2) then 2, output s2. The contribution formula gives
  // (1+t, 1; t); the companion coloring with bottom color 3 gives (1+t, 1; -t).
  LusztigDatum m3(2);
  m3.at(1, 3) = 2;
  auto c3 = find_colored(m3, lam, Permutation::identity(3), {2, 3, 2});
  CHECK(c3.output() == Permutation::parse("s2", 3));
  CHECK(contribution(c3, {1, 3}, 1) == one + t);
  CHECK(contribution(c3, {2, 3}, 1) == one);
  CHECK(contribution(c3, {1, 2}, 1) == t);
  auto c4 = find_colored(m3, lam, Permutation::identity(3), {3, 3, 2});
  CHECK(c4.output() == Permutation::identity(3));
  CHECK(contribution(c4, {1, 2}, 1) == -t);

  // Colors the Procedure cannot produce are rejected.
  auto bad = c17;
  bad.colors = {3, 1, 2};
  CHECK_THROWS_AS(contribution(bad, {1, 2}, 1), DomainError);
}

TEST_CASE("strictness") {
  for (const auto &wp : Permutation::all(3)) {
    auto all = color_datum(LusztigDatum(2, {1, 1, 1}), {2, 1, 0}, wp);
    for (const auto &c : all)
      CHECK(is_strict(c));
  }
  auto c = color_datum(LusztigDatum(1, {1}), {0, 1}, Permutation::parse("s1", 2));
  REQUIRE(c.size() == 1);
  CHECK(is_strict(c[0]));
  // Zero-filter soundness and n = 1 superstrictness, exhaustively on small weights.
  for (Weight lam : {Weight{0, 0, 0}, Weight{1, 0, 0}, Weight{1, 1, 0}, Weight{0, 0, 0, 0}, Weight{1, 0, 1, 0}})
    for (const auto &m : enumerate_lusztig_data(lam))
      for (const auto &wp : Permutation::all(static_cast<int>(lam.size())))
        for (const auto &cd : color_datum(m, lam, wp)) {
          if (!is_strict(cd))
            CHECK(contribution_product(cd, 1).is_zero());
          CHECK(is_superstrict(cd, 1) == is_strict(cd));
          for (int n = 1; n <= 3; ++n)
            CHECK(is_superstrict(cd, n) == !contribution_product(cd, n).is_zero());
        }
}

TEST_CASE("Procedure replay holds for every emitted coloring") {
  for (Weight lam : {Weight{1, 0, 0, 0}, Weight{0, 1, 0, 0}, Weight{2, 0, 1, 0}})
    for (const auto &m : enumerate_lusztig_data(lam))
      for (const auto &wp : Permutation::all(4))
        for (const auto &c : color_datum(m, lam, wp))
          CHECK_NOTHROW(replay_buffer(c));
}

TEST_CASE("table layout text") {
  Weight lam{1, 0, 0};
  auto c17 = find_colored(LusztigDatum(2), lam, Permutation::identity(3), {1, 1, 2});
  CHECK(to_string(c17) == "{_1 0, _2 0; _1 0}");
}
