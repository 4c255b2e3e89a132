#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mwhit/lattice.hpp"
#include "mwhit/verify.hpp"
#include "mwhit/whittaker.hpp"

#include <set>

using namespace mwhit;

namespace {

const GaussCoeff t = t_coeff();
const GaussCoeff qi = GaussCoeff::qinv(1);

VertexConfig vertex(std::vector<int> top, std::vector<int> bottom, int left, int right, int row = 1, int rank = 3,
                    int scolors = 0) {
  VertexConfig v;
  v.top = std::move(top);
  v.bottom = std::move(bottom);
  v.left = left;
  v.right = right;
  v.row = row;
  v.rank = rank;
  v.scolor_count = scolors;
  return v;
}

LaurentPoly figure_state_weight(const LatticeState &s) {
  LaurentPoly w = LaurentPoly::constant(s.rank(), GaussCoeff(1));
  for (const auto &v : vertex_configs(s))
    w = w * figure_weight(v);
  return w;
}

} // namespace

TEST_CASE("single state for mu = (1,0)") {
  Boundary b{{1, 0}, Permutation::identity(2), Permutation::identity(2), 1};
  auto states = enumerate_states(b);
  REQUIRE(states.size() == 1);
  auto pats = color_gt(GTPattern{{{1, 0}, {0}}}, Permutation::identity(2));
  REQUIRE(pats.size() == 1);
  CHECK(gt_to_state(pats[0]) == states[0]);
  CHECK(state_to_gt(states[0]) == pats[0]);
  CHECK(to_string(state_to_gt(states[0])) == "{_1 1, _2 0; _2 0}");
  // The state's weight is the pattern's contribution times its monomial: t z_2.
  CHECK(partition_function(b) == monomial({0, 1}, t));
  CHECK(partition_function(b) == gt_weight(pats[0].pattern).scaled(gt_contribution_product(pats[0], 1)));
}

TEST_CASE("state from the example figure") {
  // Top colors 1, {2,3}, 4 on columns 3, 1, 0; colors leave in the order 3, 1, 4, 2.
  Weight mu{3, 1, 1, 0};
  Permutation wp({1, 3, 2, 4}), w({3, 1, 4, 2});
  LatticeState want{mu, wp, {{{3, 1}, {1, 2}, {1, 3}, {0, 4}}, {{3, 1}, {1, 2}, {0, 4}}, {{1, 2}, {1, 4}}, {{1, 2}}, {}}, {3, 1, 4, 2}};
  auto states = enumerate_states({mu, w, wp, 1});
  CHECK(std::find(states.begin(), states.end(), want) != states.end());
  ColoredGTPattern c = state_to_gt(want);
  CHECK(c.pattern.rows == std::vector<std::vector<int>>{{3, 1, 1, 0}, {3, 1, 0}, {1, 1}, {1}});
  CHECK(c.output() == w);
  CHECK(gt_to_state(c) == want);
  // The other order of the colors sharing column 1 admits no state.
  CHECK(enumerate_states({mu, w, Permutation({1, 2, 3, 4}), 1}).empty());
}

TEST_CASE("state count for mu = (3,1,0)") {
  auto all = enumerate_states_all({3, 1, 0}, Permutation::identity(3), 1);
  CHECK(all.size() == 17);
  std::size_t strict = 0;
  for (const auto &p : enumerate_gt({3, 1, 0}))
    for (const auto &c : color_gt(p, Permutation::identity(3)))
      strict += is_strict_gt(c);
  CHECK(strict == 17);
  for (const auto &s : all)
    CHECK(gt_to_state(state_to_gt(s)) == s);
}

TEST_CASE("Boltzmann weights") {
  CHECK(boltzmann_weight(vertex({}, {}, 0, 0, 2), 1) == monomial({0, 1, 0}));
  CHECK(boltzmann_weight(vertex({1, 2}, {1, 2}, 0, 0, 1), 1) == monomial({1, 0, 0}, qi * qi));
  CHECK(figure_weight(vertex({1, 2}, {1, 2}, 0, 0, 1)) == monomial({1, 0, 0}, qi * qi));
  // Color 2 passing over Sigma = {1}: the printed weight is q^-1, the model weight counts
  // colors of Sigma above c and gives 1.
  CHECK(figure_weight(vertex({1}, {1}, 2, 2)) == monomial({0, 0, 0}, qi));
  CHECK(boltzmann_weight(vertex({1}, {1}, 2, 2), 1) == monomial({0, 0, 0}));
  CHECK(boltzmann_weight(vertex({3}, {3}, 2, 2), 1) == monomial({0, 0, 0}, qi));
  // Crossing only with c > d.
  CHECK_NOTHROW(boltzmann_weight(vertex({3}, {1}, 3, 1), 1));
  CHECK_THROWS_AS(boltzmann_weight(vertex({1}, {3}, 1, 3), 1), DomainError);
  CHECK_THROWS_AS(boltzmann_weight(vertex({1}, {2}, 0, 0), 1), DomainError);
  // n > 1: the empty-horizontal vertex carries a formal Gauss sum, descents obey the congruence.
  CHECK(boltzmann_weight(vertex({1}, {1}, 0, 0, 1, 3, 1), 2) == monomial({1, 0, 0}, GaussCoeff::symbol(1)));
  CHECK(boltzmann_weight(vertex({}, {2}, 0, 2, 1, 3, 1), 2).is_zero());
  CHECK(boltzmann_weight(vertex({}, {2}, 0, 2, 1, 3, 2), 2) == monomial({1, 0, 0}, GaussCoeff(1) - qi));
}

TEST_CASE("printed weights do not transport; model weights do") {
  bool printed_fails = false;
  for (Weight mu : {Weight{2, 1, 0}, Weight{3, 1, 0}, Weight{2, 1, 1, 0}})
    for (const auto &wp : Permutation::all(static_cast<int>(mu.size()))) {
      for (const auto &s : enumerate_states_all(mu, wp, 1)) {
        ColoredGTPattern c = state_to_gt(s);
        LaurentPoly gt = gt_weight(c.pattern).scaled(gt_contribution_product(c, 1));
        CHECK(state_weight(s, 1) == gt);
        printed_fails = printed_fails || figure_state_weight(s) != gt;
      }
    }
  CHECK(printed_fails);
}

TEST_CASE("partition function edge cases") {
  CHECK(partition_function({{0}, Permutation::identity(1), Permutation::identity(1), 1}) ==
        LaurentPoly::constant(1, GaussCoeff(1)));
  CHECK(partition_function({{3}, Permutation::identity(1), Permutation::identity(1), 1}) == monomial({3}));
  // mu = (0,0) with w' = e has no admissible boundary.
  CHECK(partition_function({{0, 0}, Permutation::identity(2), Permutation::identity(2), 1}).is_zero());
  // Exit orders without states give the empty sum.
  std::size_t unreachable = 0;
  for (int R = 2; R <= 3; ++R)
    for (const auto &mu : decreasing_rows(R, 2))
      for (const auto &wp : Permutation::all(R)) {
        auto all = partition_functions(mu, wp, 1);
        for (const auto &w : Permutation::all(R))
          if (!all.count(w)) {
            ++unreachable;
            CHECK(partition_function({mu, w, wp, 1}).is_zero());
            CHECK(enumerate_states({mu, w, wp, 1}).empty());
          }
      }
  CHECK(unreachable > 0);
}

TEST_CASE("supersymmetric states respect the congruence and match GT per state") {
  for (int n = 1; n <= 3; ++n)
    for (const auto &s : enumerate_states_all({4, 2, 1, 0}, Permutation::identity(4), n)) {
      CHECK_FALSE(state_weight(s, n).is_zero());
      for (const auto &v : vertex_configs(s))
        CHECK_FALSE(boltzmann_weight(v, n).is_zero());
      LaurentPoly wt = state_weight(s, 1);
      if (n == 1)
        for (const auto &[e, c] : wt.terms())
          CHECK_FALSE(c.has_symbols());
    }
  Grid g;
  g.max_rank = 3;
  g.max_part = 3;
  Report rep = verify_bijections(g);
  CHECK_MESSAGE(rep.ok, rep.first_failure);
}

TEST_CASE("horizontal edges carry one color") {
  for (const auto &s : enumerate_states_all({3, 2, 1, 0}, Permutation({2, 4, 1, 3}), 1))
    CHECK_NOTHROW(vertex_configs(s));
}

TEST_CASE("text rendering is deterministic") {
  auto states = enumerate_states({{1, 0}, Permutation::identity(2), Permutation::identity(2), 1});
  REQUIRE(states.size() == 1);
  std::string a = render_state(states[0]);
  CHECK(a == render_state(states[0]));
  CHECK(a.find("col:") == 0);
}
