#pragma once

#include "mwhit/coloring.hpp"
#include "mwhit/gt.hpp"
#include "mwhit/lattice.hpp"
#include "mwhit/lusztig.hpp"
#include "mwhit/whittaker.hpp"

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

namespace mwhit {

/// Outcome of an exhaustive suite: number of cases and the first failure, if any.
struct Report {
  bool ok = true;
  std::size_t cases = 0;
  std::string first_failure;
};

/// Bounds for exhaustive suites: ranks r <= max_rank, parts of lambda+rho <= max_part, n <= max_n.
struct Grid {
  int max_rank = 3;
  int max_part = 4;
  int max_n = 3;
  int threads = 1;
};

/// Weakly decreasing non-negative rows of length R with entries <= max_part.
inline std::vector<Weight> decreasing_rows(int R, int max_part) {
  std::vector<Weight> out;
  Weight cur;
  auto rec = [&](auto &&self, int hi) -> void {
    if (static_cast<int>(cur.size()) == R) {
      out.push_back(cur);
      return;
    }
    for (int v = hi; v >= 0; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, max_part);
  return out;
}

inline Weight minus_rho(const Weight &mu) {
  Weight l = mu;
  int r = static_cast<int>(mu.size()) - 1;
  for (int i = 0; i <= r; ++i)
    l[i] -= r - i;
  return l;
}

namespace detail {

class Collector {
public:
  explicit Collector(Report &r) : r_(r) {}
  void count(std::size_t k = 1) {
    std::lock_guard<std::mutex> g(mu_);
    r_.cases += k;
  }
  void fail(const std::string &what) {
    std::lock_guard<std::mutex> g(mu_);
    if (r_.ok) {
      r_.ok = false;
      r_.first_failure = what;
    }
  }

private:
  Report &r_;
  std::mutex mu_;
};

inline std::string boundary_name(const Weight &mu, const Permutation &wp, int n) {
  return "mu=(" + weight_to_string(mu) + ") w'=" + wp.to_string() + " n=" + std::to_string(n);
}

struct Task {
  Weight mu;
  Permutation wprime;
  int n;
};

inline std::vector<Task> grid_tasks(const Grid &g, bool all_wprime = true) {
  std::vector<Task> out;
  for (int r = 0; r <= g.max_rank; ++r)
    for (const auto &mu : decreasing_rows(r + 1, g.max_part))
      for (const auto &wp : all_wprime ? Permutation::all(r + 1) : std::vector<Permutation>{Permutation::identity(r + 1)})
        for (int n = 1; n <= g.max_n; ++n)
          out.push_back({mu, wp, n});
  return out;
}

} // namespace detail

/// Lusztig sum, GT sum and lattice partition function agree for every (lambda, w, w', n).
inline Report verify_equivalence(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  auto tasks = detail::grid_tasks(g);
  parallel_for(tasks.size(), g.threads, [&](std::size_t i) {
    const auto &t = tasks[i];
    Weight lambda = minus_rho(t.mu);
    auto a = phi_all(lambda, t.wprime, t.n, 1, Model::Lusztig);
    auto b = phi_all(lambda, t.wprime, t.n, 1, Model::GT);
    std::map<Permutation, LaurentPoly> c;
    if (almost_dominant(lambda, t.wprime))
      c = partition_functions(t.mu, t.wprime, t.n);
    else if (!partition_functions(t.mu, t.wprime, t.n).empty())
      col.fail("lattice non-zero off almost-dominance at " + detail::boundary_name(t.mu, t.wprime, t.n));
    if (a != b)
      col.fail("lusztig != gt at " + detail::boundary_name(t.mu, t.wprime, t.n));
    if (b != c)
      col.fail("gt != lattice at " + detail::boundary_name(t.mu, t.wprime, t.n));
    col.count();
  });
  return rep;
}

/// spherical(lambda, w') is the same for every w'.
inline Report verify_spherical(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  auto tasks = detail::grid_tasks(g, false);
  parallel_for(tasks.size(), g.threads, [&](std::size_t i) {
    const auto &t = tasks[i];
    Weight lambda = minus_rho(t.mu);
    int R = static_cast<int>(t.mu.size());
    std::optional<LaurentPoly> ref;
    for (const auto &wp : Permutation::all(R)) {
      LaurentPoly s = spherical(lambda, wp, t.n);
      if (!ref)
        ref = s;
      else if (s != *ref)
        col.fail("spherical differs for w'=" + wp.to_string() + " at " + detail::boundary_name(t.mu, wp, t.n));
      col.count();
    }
  });
  return rep;
}

/// Casselman-Shalika factorization for dominant lambda with lambda_{r+1} = 0 (n = 1).
inline Report verify_cs(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  std::vector<Weight> lams;
  for (int r = 0; r <= g.max_rank; ++r)
    for (auto lam : decreasing_rows(r + 1, g.max_part))
      if (lam.back() == 0)
        lams.push_back(lam);
  parallel_for(lams.size(), g.threads, [&](std::size_t i) {
    for (const auto &wp : Permutation::all(static_cast<int>(lams[i].size()))) {
      if (!cs_check(lams[i], wp))
        col.fail("cs_check fails at lambda=(" + weight_to_string(lams[i]) + ") w'=" + wp.to_string());
      col.count();
    }
  });
  return rep;
}

/**
 * At every entry where the coloring branches, the contribution of the units branch plus the
 * maximal-ideal branch equals the uncolored integral over the ring of integers: 1 when the
 * effective s is >= 0, 0 when it is -1 (the D-case evaluates with s replaced by 0).
 */
inline Report verify_cancellation(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  auto tasks = detail::grid_tasks(g);
  const GaussCoeff one(1);
  parallel_for(tasks.size(), g.threads, [&](std::size_t ti) {
    const auto &t = tasks[ti];
    std::size_t k = 0;
    for (const auto &pat : enumerate_gt(t.mu))
      for (const auto &c : color_gt(pat, t.wprime)) {
        auto buf = detail::gt_buffer(c);
        const auto &rows = c.pattern.rows;
        int R = static_cast<int>(rows.size());
        for (int kk = 1; kk < R; ++kk)
          for (int p = 0; p < R - kk; ++p) {
            int a = c.colors[kk - 1][p];
            if (rows[kk][p] != rows[kk - 1][p] || a < buf[kk][p])
              continue;
            int L = R - kk, B = rows[kk - 1][p + 1];
            bool dcase = p + 1 < L && rows[kk][p + 1] == B && c.colors[kk][p + 1] == c.colors[kk - 1][p + 1];
            int s = rows[kk][p] - B - 1;
            detail::LusztigWindow units{false, dcase, false, false, s, 0};
            detail::LusztigWindow ideal{false, dcase, false, true, s, 0};
            GaussCoeff sum = detail::window_value(units, t.n) + detail::window_value(ideal, t.n);
            GaussCoeff expect = (dcase || s >= 0) ? one : GaussCoeff{};
            GaussCoeff actual = detail::gt_entry_value(c, buf, kk, p, t.n, 1);
            GaussCoeff own = detail::window_value(c.colors[kk][p] == a ? ideal : units, t.n);
            if (sum != expect || actual != own)
              col.fail("branch sum " + sum.to_string() + " at " + to_string(c));
            ++k;
          }
      }
    col.count(k);
  });
  return rep;
}

/// Generic colorings of the delta word reproduce the Procedure, with matching domain classes.
inline Report verify_colorings(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  std::vector<detail::Task> tasks;
  for (int r = 0; r <= g.max_rank; ++r)
    for (const auto &mu : decreasing_rows(r + 1, g.max_part))
      for (const auto &wp : Permutation::all(r + 1))
        tasks.push_back({mu, wp, 1});
  parallel_for(tasks.size(), g.threads, [&](std::size_t ti) {
    const auto &t = tasks[ti];
    Weight lambda = minus_rho(t.mu);
    int r = static_cast<int>(t.mu.size()) - 1;
    ReducedWord word = delta_word(r);
    for (const auto &m : enumerate_lusztig_data(lambda)) {
      VanishingPattern v(m.m.size());
      for (std::size_t k = 0; k < v.size(); ++k)
        v[k] = m.m[k] > 0;
      std::set<std::pair<Permutation, std::vector<int>>> proc, gen;
      std::map<std::pair<Permutation, std::vector<int>>, std::vector<DomainClass>> classes;
      for (const auto &c : color_datum(m, lambda, t.wprime))
        proc.insert({c.output(), c.colors});
      for (const auto &[w, seqs] : enumerate_colorings(word, v, t.wprime))
        for (const auto &s : seqs) {
          auto key = std::make_pair(w, entry_colors(word, s));
          gen.insert(key);
          classes[key] = domain_classes(word, s, v);
        }
      if (proc != gen) {
        col.fail("coloring sets differ for m at " + detail::boundary_name(t.mu, t.wprime, 1));
        continue;
      }
      // Units where the Procedure painted the buffer, maximal ideal where it painted a.
      for (const auto &c : color_datum(m, lambda, t.wprime)) {
        const auto &cls = classes[{c.output(), c.colors}];
        auto buf = replay_buffer(c);
        for (const auto &a : m.roots()) {
          int k = LusztigDatum::index(a.i, a.j);
          int up = c.upper_color(a.i, a.j);
          DomainClass expect = m.m[k] > 0 ? DomainClass::Units
                               : up < buf[k] ? DomainClass::RingOfIntegers
                               : c.colors[k] == up ? DomainClass::MaximalIdeal
                                                   : DomainClass::Units;
          if (cls[k] != expect)
            col.fail("domain class mismatch at " + to_string(c));
        }
      }
      col.count();
    }
  });
  return rep;
}

/**
 * Round trips and transport: Lusztig data <-> GT patterns (statistics, monomials, colorings,
 * contributions) and strict colored patterns <-> lattice states (per-state weights).
 */
inline Report verify_bijections(const Grid &g) {
  Report rep;
  detail::Collector col(rep);
  auto tasks = detail::grid_tasks(g);
  parallel_for(tasks.size(), g.threads, [&](std::size_t ti) {
    const auto &t = tasks[ti];
    Weight lambda = minus_rho(t.mu);
    std::string where = detail::boundary_name(t.mu, t.wprime, t.n);
    auto data = enumerate_lusztig_data(lambda);
    auto pats = enumerate_gt(t.mu);
    if (data.size() != pats.size())
      col.fail("|Lu| != |GT| at " + where);
    std::set<GTPattern> images;
    for (const auto &m : data) {
      GTPattern p = lusztig_to_gt(m, lambda);
      images.insert(p);
      auto [m2, l2] = gt_to_lusztig(p);
      if (m2 != m || l2 != lambda)
        col.fail("lusztig round trip at " + where);
      if (monomial_of(m, lambda) != gt_weight(p))
        col.fail("monomial transport at " + where);
      for (const auto &a : m.roots()) {
        int s_gt = p.a(a.i, a.j) - p.a(a.i + 1, a.j + 1) - 1;
        int r_gt = 0;
        for (int k = 1; k <= a.i; ++k)
          r_gt += p.a(k, a.j + 1) - p.a(k, a.j);
        if (s_stat(m, lambda, a) != s_gt || r_stat(m, a) != r_gt)
          col.fail("statistics transport at " + where);
      }
      auto cl = color_datum(m, lambda, t.wprime);
      auto cg = color_gt(p, t.wprime);
      std::set<ColoredGTPattern> moved, direct(cg.begin(), cg.end());
      for (const auto &c : cl) {
        auto cgt = colored_lusztig_to_gt(c);
        moved.insert(cgt);
        if (gt_to_colored_lusztig(cgt) != c)
          col.fail("colored round trip at " + where);
        if (c.output() != cgt.output())
          col.fail("output transport at " + where);
        for (const auto &a : m.roots())
          if (contribution(c, a, t.n) != gt_contribution(cgt, a, t.n))
            col.fail("contribution transport at " + where + " datum " + to_string(c));
        if (is_strict(c) != is_strict_gt(cgt) || is_superstrict(c, t.n) != is_superstrict_gt(cgt, t.n))
          col.fail("strictness transport at " + where);
        if (is_superstrict(c, t.n) != !contribution_product(c, t.n).is_zero())
          col.fail("superstrict does not match non-vanishing at " + where);
      }
      if (moved != direct)
        col.fail("coloring transport at " + where);
    }
    if (images != std::set<GTPattern>(pats.begin(), pats.end()))
      col.fail("Lu image != GT at " + where);

    // Lattice side: states are the images of the superstrict patterns, and the weight of a
    // state is the summed GT weight of the patterns sharing its vertical edges.
    std::map<LatticeState, LaurentPoly> gt_side;
    std::set<LatticeState> strict_images;
    for (const auto &p : pats)
      for (const auto &c : color_gt(p, t.wprime)) {
        LatticeState s = occupancy_of(c);
        GaussCoeff g = gt_contribution_product(c, t.n);
        gt_side.try_emplace(s, static_cast<int>(t.mu.size())).first->second += gt_weight(p).scaled(g);
        if (is_superstrict_gt(c, t.n))
          strict_images.insert(s);
      }
    for (auto it = gt_side.begin(); it != gt_side.end();)
      it = it->second.is_zero() ? gt_side.erase(it) : std::next(it);
    std::map<LatticeState, LaurentPoly> lat_side;
    std::set<LatticeState> states;
    visit_states(t.mu, t.wprime, nullptr, t.n, 1, [&](const LatticeState &s, const LaurentPoly &w) {
      lat_side.emplace(s, w);
      states.insert(s);
    });
    if (gt_side != lat_side)
      col.fail("per-state weight transport at " + where);
    if (states != strict_images)
      col.fail("states != superstrict images at " + where);
    for (const auto &s : states) {
      ColoredGTPattern c = state_to_gt(s);
      if (gt_to_state(c) != s)
        col.fail("lattice round trip at " + where);
      if (state_weight(s, t.n) != lat_side[s])
        col.fail("state_weight disagrees with enumeration at " + where);
    }
    col.count();
  });
  return rep;
}

} // namespace mwhit
