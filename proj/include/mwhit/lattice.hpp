#pragma once

#include "mwhit/coeffring.hpp"
#include "mwhit/gt.hpp"
#include "mwhit/typea.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mwhit {

/// Boundary data: top columns mu, exit order w, input colors w', cover degree n.
struct Boundary {
  Weight mu;
  Permutation w;
  Permutation wprime;
  int n = 1;
  int cover_scale = 1;
};

/**
 * State on the grid with columns mu_1..0 and rows r+1..1. levels[k] lists (column, color)
 * on the vertical edges below the k-th row from the top (levels[0] is the top boundary),
 * sorted by column descending then color. exits[k] is the color leaving in that row.
 * Horizontal edges follow from consecutive levels.
 */
struct LatticeState {
  Weight mu;
  Permutation wprime;
  std::vector<std::vector<std::pair<int, int>>> levels;
  std::vector<int> exits;

  int rank() const { return static_cast<int>(mu.size()); }
  Permutation w() const { return Permutation(exits); }

  auto operator<=>(const LatticeState &) const = default;
};

/**
 * Edges around one vertex. left is the horizontal edge towards higher columns, right the one
 * towards lower columns; 0 marks an empty edge. scolor_count is the number of empty horizontal
 * edges from this vertex to the left boundary of its row.
 */
struct VertexConfig {
  std::vector<int> top;
  std::vector<int> bottom;
  int left = 0;
  int right = 0;
  int row = 1;
  int column = 0;
  int rank = 1;
  int scolor_count = 0;
};

namespace detail {

inline bool has(const std::vector<int> &s, int c) { return std::find(s.begin(), s.end(), c) != s.end(); }
inline int count_if_in(const std::vector<int> &s, int lo, int hi) {
  // colors x with lo < x < hi
  int k = 0;
  for (int x : s)
    k += lo < x && x < hi;
  return k;
}
inline std::vector<int> sorted_set(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  return s;
}
inline GaussCoeff power(const GaussCoeff &x, int k) {
  GaussCoeff p(1);
  for (int i = 0; i < k; ++i)
    p *= x;
  return p;
}

enum class VertexKind { AllPass, PassThrough, TurnOut, Descent, Crossing, Inadmissible };

inline VertexKind classify(const VertexConfig &v) {
  auto top = sorted_set(v.top), bot = sorted_set(v.bottom);
  if (v.left == 0 && v.right == 0)
    return top == bot ? VertexKind::AllPass : VertexKind::Inadmissible;
  if (v.left != 0 && v.left == v.right)
    return !has(top, v.left) && top == bot ? VertexKind::PassThrough : VertexKind::Inadmissible;
  if (v.left != 0 && v.right == 0) {
    auto expect = top;
    expect.erase(std::remove(expect.begin(), expect.end(), v.left), expect.end());
    return has(top, v.left) && bot == expect ? VertexKind::TurnOut : VertexKind::Inadmissible;
  }
  if (v.left == 0) {
    auto expect = top;
    expect.push_back(v.right);
    return !has(top, v.right) && bot == sorted_set(expect) ? VertexKind::Descent : VertexKind::Inadmissible;
  }
  auto expect = top;
  expect.erase(std::remove(expect.begin(), expect.end(), v.left), expect.end());
  expect.push_back(v.right);
  if (!has(top, v.left) || has(top, v.right) || bot != sorted_set(expect))
    return VertexKind::Inadmissible;
  return v.left > v.right ? VertexKind::Crossing : VertexKind::Inadmissible;
}

inline LaurentPoly y_power(const VertexConfig &v, bool with_y) {
  std::vector<int> e(v.rank, 0);
  if (with_y)
    e[v.row - 1] = 1;
  return LaurentPoly::monomial(e);
}

} // namespace detail

/**
 * Boltzmann weight of a vertex as a monomial in y_1..y_{r+1} (stored in slots z_1..z_{r+1}).
 * Sigma is the color set on the top edge; k_hi counts Sigma above c.
 *   all-pass: y, or y g(r,-1) (-q^-1)^{|Sigma|-1} when Sigma is nonempty
 *   pass-through of c: (q^-1)^{k_hi}
 *   turn-out of c: (-q^-1)^{|Sigma below c|} (q^-1)^{k_hi}
 *   descent of c: y g(r,0) if k_hi = 0, else y (1-q^-1) g(r,-1) (-q^-1)^{k_hi-1}
 *   crossing c > d: (1-q^-1) (-q^-1)^{|Sigma in (d,c)|} (q^-1)^{k_hi}
 * A zero result marks a configuration excluded by the scolor congruence.
 * Throws on configurations outside the admissible list.
 */
inline LaurentPoly boltzmann_weight(const VertexConfig &v, int n, int cover_scale = 1) {
  using detail::power;
  const GaussCoeff mq = GaussCoeff::qinv(1, -1), q = GaussCoeff::qinv(1), omq = GaussCoeff(1) - q;
  int rmax = v.rank + 1;
  long long sc = static_cast<long long>(cover_scale) * v.scolor_count;
  const auto &top = v.top;
  switch (detail::classify(v)) {
  case detail::VertexKind::AllPass:
    if (top.empty())
      return detail::y_power(v, true);
    return detail::y_power(v, true).scaled(gauss_eval(sc, -1, n) * power(mq, static_cast<int>(top.size()) - 1));
  case detail::VertexKind::PassThrough:
    return detail::y_power(v, false).scaled(power(q, detail::count_if_in(top, v.left, rmax + 1)));
  case detail::VertexKind::TurnOut: {
    int lo = detail::count_if_in(top, 0, v.left), hi = detail::count_if_in(top, v.left, rmax + 1);
    return detail::y_power(v, false).scaled(power(mq, lo) * power(q, hi));
  }
  case detail::VertexKind::Descent: {
    int k = detail::count_if_in(top, v.right, rmax + 1);
    if (k == 0)
      return detail::y_power(v, true).scaled(gauss_eval(sc, 0, n));
    return detail::y_power(v, true).scaled(omq * gauss_eval(sc, -1, n) * power(mq, k - 1));
  }
  case detail::VertexKind::Crossing: {
    int mid = detail::count_if_in(top, v.right, v.left), hi = detail::count_if_in(top, v.left, rmax + 1);
    return detail::y_power(v, false).scaled(omq * power(mq, mid) * power(q, hi));
  }
  default:
    throw DomainError("boltzmann_weight: inadmissible vertex configuration");
  }
}

/**
 * Weights exactly as printed for n = 1, kept for reference:
 *   all-pass y (-q^-1)^{|Sigma|}; continue (q^-1)^{|Sigma in [1,c-1]|};
 *   exit (-q^-1)^{|Sigma in [c+1,r+1]|} (q^-1)^{|Sigma in [1,c-1]|};
 *   descend y (1-q^-1) (-q^-1)^{|Sigma in [1,c-1]|};
 *   cross (1-q^-1) (-q^-1)^{|Sigma in [d-1,c-1]|} (q^-1)^{|Sigma in [1,d-1]|}.
 */
inline LaurentPoly figure_weight(const VertexConfig &v) {
  using detail::power;
  const GaussCoeff mq = GaussCoeff::qinv(1, -1), q = GaussCoeff::qinv(1), omq = GaussCoeff(1) - q;
  int rmax = v.rank + 1;
  const auto &top = v.top;
  auto in = [&](int lo, int hi) { return detail::count_if_in(top, lo - 1, hi + 1); };
  switch (detail::classify(v)) {
  case detail::VertexKind::AllPass:
    return detail::y_power(v, true).scaled(power(mq, static_cast<int>(top.size())));
  case detail::VertexKind::PassThrough:
    return detail::y_power(v, false).scaled(power(q, in(1, v.left - 1)));
  case detail::VertexKind::TurnOut:
    return detail::y_power(v, false).scaled(power(mq, in(v.left + 1, rmax)) * power(q, in(1, v.left - 1)));
  case detail::VertexKind::Descent:
    return detail::y_power(v, true).scaled(omq * power(mq, in(1, v.right - 1)));
  case detail::VertexKind::Crossing:
    return detail::y_power(v, false).scaled(omq * power(mq, in(v.right - 1, v.left - 1)) *
                                            power(q, in(1, v.right - 1)));
  default:
    throw DomainError("figure_weight: inadmissible vertex configuration");
  }
}

/// Vertex configurations of every vertex in the state, top row first, columns mu_1..0.
inline std::vector<VertexConfig> vertex_configs(const LatticeState &s) {
  int R = s.rank();
  int M = R ? s.mu.front() : 0;
  std::vector<VertexConfig> out;
  for (int k = 1; k <= R; ++k) {
    const auto &up = s.levels[k - 1], &down = s.levels[k];
    std::vector<int> edge(M + 1, 0); // edge y joins columns y and y+1; edge M is the left boundary
    for (auto [x, c] : up) {
      int nx = M + 1;
      for (auto [y, d] : down)
        if (d == c)
          nx = y;
      for (int y = x; y < nx; ++y) {
        if (edge[y] != 0)
          throw DomainError("vertex_configs: two colors share a horizontal edge");
        edge[y] = c;
      }
    }
    int empty = 0;
    std::vector<int> empty_from(M + 2, 0);
    for (int y = M; y >= 0; --y) {
      empty += edge[y] == 0;
      empty_from[y] = empty;
    }
    for (int j = M; j >= 0; --j) {
      VertexConfig v;
      for (auto [x, c] : up)
        if (x == j)
          v.top.push_back(c);
      for (auto [x, c] : down)
        if (x == j)
          v.bottom.push_back(c);
      std::sort(v.top.begin(), v.top.end());
      std::sort(v.bottom.begin(), v.bottom.end());
      v.left = edge[j];
      v.right = j > 0 ? edge[j - 1] : 0;
      v.row = R + 1 - k;
      v.column = j;
      v.rank = R;
      v.scolor_count = empty_from[j];
      out.push_back(v);
    }
  }
  return out;
}

/// Product of Boltzmann weights; y_i is written in the slot of z_i.
inline LaurentPoly state_weight(const LatticeState &s, int n, int cover_scale = 1) {
  LaurentPoly w = LaurentPoly::constant(s.rank(), GaussCoeff(1));
  for (const auto &v : vertex_configs(s)) {
    w = w * boltzmann_weight(v, n, cover_scale);
    if (w.is_zero())
      break;
  }
  return w;
}

/// Columns of mu must carry colors in decreasing order where parts repeat.
inline bool boundary_admissible(const Weight &mu, const Permutation &wprime) {
  for (int i = 0; i + 1 < static_cast<int>(mu.size()); ++i) {
    if (mu[i] < mu[i + 1] || mu[i + 1] < 0)
      return false;
    if (mu[i] == mu[i + 1] && wprime(i + 1) < wprime(i + 2))
      return false;
  }
  return mu.empty() || mu.back() >= 0;
}

/**
 * Depth-first walk over all states with top boundary (mu, w'); when w is given the exit
 * order is fixed. The visitor receives each state with its non-zero weight.
 */
inline void visit_states(const Weight &mu, const Permutation &wprime, const Permutation *w, int n,
                         int cover_scale,
                         const std::function<void(const LatticeState &, const LaurentPoly &)> &visit) {
  int R = static_cast<int>(mu.size());
  if (wprime.size() != R || (w && w->size() != R))
    throw DomainError("visit_states: rank mismatch");
  if (!boundary_admissible(mu, wprime))
    return;
  int M = R ? mu.front() : 0;
  LatticeState s{mu, wprime, {}, {}};
  std::vector<std::pair<int, int>> top;
  for (int i = 0; i < R; ++i)
    top.push_back({mu[i], wprime(i + 1)});
  auto canon = [](std::vector<std::pair<int, int>> v) {
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    return v;
  };
  s.levels.push_back(canon(top));
  if (R == 0) {
    visit(s, LaurentPoly::constant(0, GaussCoeff(1)));
    return;
  }
  auto rec = [&](auto &&self, int k, const LaurentPoly &acc) -> void {
    if (k > R) {
      visit(s, acc);
      return;
    }
    std::vector<int> edge(M + 1, 0);
    const auto cur = s.levels[k - 1];
    for (std::size_t ei = 0; ei < cur.size(); ++ei) {
      int ex = cur[ei].second;
      if (w && (*w)(k) != ex)
        continue;
      std::vector<std::pair<int, int>> rest;
      for (std::size_t t = 0; t < cur.size(); ++t)
        if (t != ei)
          rest.push_back(cur[t]);
      std::fill(edge.begin(), edge.end(), 0);
      bool ok = true;
      for (int y = cur[ei].first; y <= M; ++y) {
        if (edge[y]) {
          ok = false;
          break;
        }
        edge[y] = ex;
      }
      if (!ok)
        continue;
      std::vector<int> newpos(rest.size());
      // choose new columns one color at a time, marking horizontal edges
      auto place = [&](auto &&pself, std::size_t t) -> void {
        if (t == rest.size()) {
          std::vector<std::pair<int, int>> next;
          for (std::size_t u = 0; u < rest.size(); ++u)
            next.push_back({newpos[u], rest[u].second});
          s.levels.push_back(canon(next));
          s.exits.push_back(ex);
          LaurentPoly wrow = LaurentPoly::constant(R, GaussCoeff(1));
          int empty = 0;
          for (int j = M; j >= 0 && !wrow.is_zero(); --j) {
            empty += edge[j] == 0;
            VertexConfig v;
            for (auto [x, c] : s.levels[k - 1])
              if (x == j)
                v.top.push_back(c);
            for (auto [x, c] : s.levels[k])
              if (x == j)
                v.bottom.push_back(c);
            std::sort(v.top.begin(), v.top.end());
            std::sort(v.bottom.begin(), v.bottom.end());
            v.left = edge[j];
            v.right = j > 0 ? edge[j - 1] : 0;
            v.row = R + 1 - k;
            v.column = j;
            v.rank = R;
            v.scolor_count = empty;
            if (detail::classify(v) == detail::VertexKind::Inadmissible) {
              wrow = LaurentPoly(R);
              break;
            }
            wrow = wrow * boltzmann_weight(v, n, cover_scale);
          }
          if (!wrow.is_zero())
            self(self, k + 1, acc * wrow);
          s.levels.pop_back();
          s.exits.pop_back();
          return;
        }
        int x = rest[t].first;
        for (int np = x; np <= M; ++np) {
          if (np > x) {
            if (edge[np - 1])
              break;
            edge[np - 1] = rest[t].second;
          }
          newpos[t] = np;
          pself(pself, t + 1);
        }
        for (int y = x; y <= M; ++y)
          if (edge[y] == rest[t].second)
            edge[y] = 0;
      };
      place(place, 0);
      std::fill(edge.begin(), edge.end(), 0);
    }
  };
  rec(rec, 1, LaurentPoly::constant(R, GaussCoeff(1)));
}

/// States with the given boundary and non-zero weight, in canonical order.
inline std::vector<LatticeState> enumerate_states(const Boundary &b) {
  std::vector<LatticeState> out;
  visit_states(b.mu, b.wprime, &b.w, b.n, b.cover_scale,
               [&](const LatticeState &s, const LaurentPoly &) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

/// States for every exit order w.
inline std::vector<LatticeState> enumerate_states_all(const Weight &mu, const Permutation &wprime, int n,
                                                      int cover_scale = 1) {
  std::vector<LatticeState> out;
  visit_states(mu, wprime, nullptr, n, cover_scale,
               [&](const LatticeState &s, const LaurentPoly &) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum of state weights, y_i written as z_i.
inline LaurentPoly partition_function(const Boundary &b) {
  LaurentPoly z(static_cast<int>(b.mu.size()));
  visit_states(b.mu, b.wprime, &b.w, b.n, b.cover_scale,
               [&](const LatticeState &, const LaurentPoly &w) { z += w; });
  return z;
}

/// Partition functions for every exit order at once.
inline std::map<Permutation, LaurentPoly> partition_functions(const Weight &mu, const Permutation &wprime, int n,
                                                              int cover_scale = 1) {
  std::map<Permutation, LaurentPoly> out;
  int R = static_cast<int>(mu.size());
  visit_states(mu, wprime, nullptr, n, cover_scale, [&](const LatticeState &s, const LaurentPoly &w) {
    auto it = out.try_emplace(s.w(), R).first;
    it->second += w;
  });
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Vertical-edge image of a colored pattern (row values are the path columns).
inline LatticeState occupancy_of(const ColoredGTPattern &c) {
  LatticeState s;
  s.mu = c.pattern.top();
  s.wprime = c.input();
  int R = static_cast<int>(c.pattern.rows.size());
  for (int k = 0; k < R; ++k) {
    std::vector<std::pair<int, int>> lv;
    for (std::size_t p = 0; p < c.pattern.rows[k].size(); ++p)
      lv.push_back({c.pattern.rows[k][p], c.colors[k][p]});
    std::sort(lv.begin(), lv.end(), [](auto a, auto b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
    s.levels.push_back(lv);
  }
  s.levels.push_back({});
  s.exits = c.output().one_line();
  return s;
}

/// State of a strict colored pattern; throws for non-strict input.
inline LatticeState gt_to_state(const ColoredGTPattern &c) {
  if (!is_strict_gt(c))
    throw DomainError("gt_to_state: pattern is not strict");
  return occupancy_of(c);
}

/// The unique strict colored pattern with the state's vertical edges.
inline ColoredGTPattern state_to_gt(const LatticeState &s) {
  int R = s.rank();
  GTPattern t;
  for (int k = 0; k < R; ++k) {
    std::vector<int> row;
    for (auto [x, c] : s.levels[k])
      row.push_back(x);
    std::sort(row.rbegin(), row.rend());
    t.rows.push_back(row);
  }
  if (!t.valid())
    throw DomainError("state_to_gt: vertical edges do not form a pattern");
  std::optional<ColoredGTPattern> found;
  for (const auto &c : color_gt(t, s.wprime)) {
    if (!is_strict_gt(c) || occupancy_of(c) != s)
      continue;
    if (found)
      throw DomainError("state_to_gt: several strict patterns share the state");
    found = c;
  }
  if (!found)
    throw DomainError("state_to_gt: no strict pattern has this state");
  return *found;
}

/// Text art: vertical edge color sets per level, then horizontal edges of each row.
inline std::string render_state(const LatticeState &s) {
  int R = s.rank();
  int M = R ? s.mu.front() : 0;
  auto cell = [](const std::vector<int> &cs) {
    std::string t;
    for (int c : cs)
      t += std::to_string(c);
    return t.empty() ? std::string(".") : t;
  };
  std::string out = "col:";
  for (int j = M; j >= 0; --j)
    out += "\t" + std::to_string(j);
  out += "\n";
  auto cfgs = vertex_configs(s);
  for (int k = 0; k <= R; ++k) {
    out += "    ";
    for (int j = M; j >= 0; --j) {
      std::vector<int> cs;
      for (auto [x, c] : s.levels[k])
        if (x == j)
          cs.push_back(c);
      std::sort(cs.begin(), cs.end());
      out += "\t" + cell(cs);
    }
    out += "\n";
    if (k == R)
      break;
    out += "r" + std::to_string(R - k) + ": " + (cfgs[k * (M + 1)].left ? std::to_string(cfgs[k * (M + 1)].left) : "-");
    for (int j = 0; j <= M; ++j) {
      const auto &v = cfgs[k * (M + 1) + j];
      out += "\t+" + (v.right ? std::to_string(v.right) : std::string("-"));
    }
    out += "\n";
  }
  return out;
}

} // namespace mwhit
