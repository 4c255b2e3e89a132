#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mwhit/gt.hpp"
#include "mwhit/lusztig.hpp"
#include "mwhit/typea.hpp"

#include <random>
#include <set>

using namespace mwhit;

TEST_CASE("delta word") {
  CHECK(delta_word(2) == ReducedWord{2, 1, 2});
  CHECK(delta_word(1) == ReducedWord{1});
  CHECK(delta_word(3) == ReducedWord{3, 2, 3, 1, 2, 3});
  CHECK(delta_word(0).empty());
}

TEST_CASE("roots in word order") {
  using R = std::vector<PositiveRoot>;
  CHECK(roots_in_word_order(delta_word(2)) == R{{1, 2}, {1, 3}, {2, 3}});
  CHECK(roots_in_word_order(delta_word(1)) == R{{1, 2}});
  CHECK(roots_in_word_order({1, 2, 1}) == R{{2, 3}, {1, 3}, {1, 2}});
  CHECK_THROWS_AS(roots_in_word_order({1, 1, 2}, 2), DomainError);
  CHECK_THROWS_AS(roots_in_word_order({1, 2}, 2), DomainError);
  // Delta order is column-major for every rank.
  for (int r = 1; r <= 5; ++r) {
    auto roots = roots_in_word_order(delta_word(r), r);
    CHECK(roots.size() == static_cast<std::size_t>(num_positive_roots(r)));
    CHECK(std::set<PositiveRoot>(roots.begin(), roots.end()).size() == roots.size());
    for (std::size_t k = 0; k + 1 < roots.size(); ++k) {
      auto a = roots[k], b = roots[k + 1];
      CHECK((a.j < b.j || (a.j == b.j && a.i < b.i)));
    }
  }
}

TEST_CASE("permutation parsing") {
  CHECK(Permutation::parse("e", 3) == Permutation::identity(3));
  CHECK(Permutation::parse("s2 s1", 3).one_line() == std::vector<int>{2, 3, 1});
  CHECK(Permutation::parse("s1 s2", 3).one_line() == std::vector<int>{3, 1, 2});
  CHECK(Permutation::parse("s2 s1 s2", 3) == Permutation::longest(3));
  CHECK(Permutation::parse("s1 s2 s1", 3) == Permutation::longest(3));
  CHECK(Permutation::parse("3,1,4,2", 4).one_line() == std::vector<int>{3, 1, 4, 2});
  CHECK(Permutation::parse("3,1,4,2", 0).size() == 4);
  CHECK_THROWS_AS(Permutation::parse("1,1,2", 3), DomainError);
  CHECK_THROWS_AS(Permutation::parse("s3", 3), DomainError);
  CHECK_THROWS_AS(Permutation::parse("x1", 3), DomainError);
  for (const auto &p : Permutation::all(4))
    CHECK(Permutation::parse(p.to_word(), 4) == p);
}

TEST_CASE("simple roots under permutations") {
  CHECK(is_positive_after(Permutation::identity(2), 1));
  CHECK_FALSE(is_positive_after(Permutation::parse("s1", 2), 1));
  CHECK(is_positive_after(Permutation({3, 1, 4, 2}), 2));
  // Exhaustive agreement with the vector action on S_4.
  for (const auto &w : Permutation::all(4))
    for (int i = 1; i <= 3; ++i)
      CHECK(is_positive_after(w, i) == apply_to_root(w, {i, i + 1}).positive());
}

TEST_CASE("s and r statistics") {
  LusztigDatum m1(1, {1});
  CHECK(s_stat(m1, {0, 0}, {1, 2}) == -1);
  CHECK(r_stat(m1, {1, 2}) == 1);
  LusztigDatum m2(2, {1, 2, 1});
  for (auto a : m2.roots())
    CHECK(s_stat(m2, {1, 0, 0}, a) == -1);
  LusztigDatum zero(3);
  Weight lam{3, 1, 1, 0};
  for (auto a : zero.roots())
    CHECK(s_stat(zero, lam, a) == lam[a.i - 1] - lam[a.i]);
  CHECK_THROWS_AS(s_stat(m2, {1, 0, 0}, {2, 4}), DomainError);
}

TEST_CASE("statistics agree with GT formulas on random data") {
  std::mt19937 rng(7);
  for (int it = 0; it < 50; ++it) {
    int r = 1 + static_cast<int>(rng() % 3);
    Weight lam(r + 1);
    for (int i = r - 1; i >= 0; --i)
      lam[i] = lam[i + 1] + static_cast<int>(rng() % 3);
    auto data = enumerate_lusztig_data(lam);
    const auto &m = data[rng() % data.size()];
    GTPattern t = lusztig_to_gt(m, lam);
    for (auto a : m.roots()) {
      CHECK(s_stat(m, lam, a) == t.a(a.i, a.j) - t.a(a.i + 1, a.j + 1) - 1);
      int rr = 0;
      for (int k = 1; k <= a.i; ++k)
        rr += t.a(k, a.j + 1) - t.a(k, a.j);
      CHECK(r_stat(m, a) == rr);
    }
  }
}

TEST_CASE("almost dominance") {
  CHECK(almost_dominant({0, 1}, Permutation::parse("s1", 2)));
  CHECK_FALSE(almost_dominant({0, 1}, Permutation::identity(2)));
  for (const auto &w : Permutation::all(2))
    CHECK(almost_dominant({0, 0}, w));
  CHECK_FALSE(almost_dominant({0, 2}, Permutation::parse("s1", 2)));
  CHECK(shift_to_last_zero({3, 2, 2}) == Weight{1, 0, 0});
}
