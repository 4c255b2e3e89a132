#pragma once

#include "mwhit/coeffring.hpp"
#include "mwhit/typea.hpp"

#include <map>
#include <string>
#include <vector>

namespace mwhit {

/**
 * Non-negative integers m_{i,j} indexed by positive roots of GL_{r+1}, stored in
 * delta order: (i,j) before (i',j') iff j < j', or j = j' and i < i'.
 */
struct LusztigDatum {
  int r = 0;
  std::vector<int> m;

  LusztigDatum() = default;
  explicit LusztigDatum(int rank) : r(rank), m(num_positive_roots(rank), 0) {}
  LusztigDatum(int rank, std::vector<int> values) : r(rank), m(std::move(values)) {
    if (static_cast<int>(m.size()) != num_positive_roots(r))
      throw DomainError("LusztigDatum: wrong number of entries");
  }

  static int index(int i, int j) { return (j - 1) * (j - 2) / 2 + (i - 1); }
  int at(int i, int j) const { return m[index(i, j)]; }
  int &at(int i, int j) { return m[index(i, j)]; }
  int at(const PositiveRoot &a) const { return at(a.i, a.j); }
  bool in_range(const PositiveRoot &a) const { return 1 <= a.i && a.i < a.j && a.j <= r + 1; }

  /// Roots in delta order.
  std::vector<PositiveRoot> roots() const {
    std::vector<PositiveRoot> out;
    for (int j = 2; j <= r + 1; ++j)
      for (int i = 1; i < j; ++i)
        out.push_back({i, j});
    return out;
  }

  auto operator<=>(const LusztigDatum &) const = default;
};

/// s_{i,j} = Lambda_i + sum_{k=j}^{r} m_{i+1,k+1} - sum_{k=j}^{r+1} m_{i,k}.
inline int s_stat(const LusztigDatum &m, const Weight &lambda, const PositiveRoot &a) {
  if (!m.in_range(a) || static_cast<int>(lambda.size()) != m.r + 1)
    throw DomainError("s_stat: root or weight out of range");
  int s = lambda[a.i - 1] - lambda[a.i];
  for (int k = a.j; k <= m.r; ++k)
    s += m.at(a.i + 1, k + 1);
  for (int k = a.j; k <= m.r + 1; ++k)
    s -= m.at(a.i, k);
  return s;
}

/// r_{i,j} = sum_{k <= i} m_{k,j}.
inline int r_stat(const LusztigDatum &m, const PositiveRoot &a) {
  if (!m.in_range(a))
    throw DomainError("r_stat: root out of range");
  int s = 0;
  for (int k = 1; k <= a.i; ++k)
    s += m.at(k, a.j);
  return s;
}

/// z^{lambda+rho} prod_{i<j} (z_j/z_i)^{m_{i,j}}.
inline LaurentPoly monomial_of(const LusztigDatum &m, const Weight &lambda) {
  if (static_cast<int>(lambda.size()) != m.r + 1)
    throw DomainError("monomial_of: rank mismatch");
  std::vector<int> e = plus_rho(lambda);
  for (int j = 2; j <= m.r + 1; ++j)
    for (int i = 1; i < j; ++i) {
      e[j - 1] += m.at(i, j);
      e[i - 1] -= m.at(i, j);
    }
  return LaurentPoly::monomial(e);
}

/**
 * All m with m >= 0 and s_{i,j} >= -1 everywhere. The search walks the triangle of
 * partial differences a_{i,j} = a_{i,j+1} - m_{i,j}, whose bounds make it finite.
 */
inline std::vector<LusztigDatum> enumerate_lusztig_data(const Weight &lambda) {
  int r = static_cast<int>(lambda.size()) - 1;
  if (r < 0)
    throw DomainError("enumerate_lusztig_data: empty weight");
  std::vector<LusztigDatum> out;
  Weight mu = plus_rho(lambda);
  for (int i = 0; i < r; ++i)
    if (mu[i] < mu[i + 1])
      return out;
  LusztigDatum d(r);
  // level[j] holds a_{1..j-1, j}; level[r+2] is mu.
  std::vector<std::vector<int>> level(r + 3);
  level[r + 2] = mu;
  auto rec = [&](auto &&self, int j, int i) -> void {
    if (j < 2) {
      out.push_back(d);
      return;
    }
    if (i == j) {
      self(self, j - 1, 1);
      return;
    }
    const auto &up = level[j + 1];
    if (i == 1)
      level[j].assign(j - 1, 0);
    // s_{i,j} >= -1 means a_{i,j} >= a_{i+1,j+1}; m_{i,j} >= 0 means a_{i,j} <= a_{i,j+1}.
    for (int m = 0; m <= up[i - 1] - up[i]; ++m) {
      d.at(i, j) = m;
      level[j][i - 1] = up[i - 1] - m;
      self(self, j, i + 1);
    }
    d.at(i, j) = 0;
  };
  rec(rec, r + 1, 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Lusztig datum with a color on every entry, the input w' coloring row zero.
struct ColoredLusztigDatum {
  LusztigDatum datum;
  Weight lambda;
  Permutation input;
  std::vector<int> colors; // delta order, like datum.m

  int color(int i, int j) const { return colors[LusztigDatum::index(i, j)]; }
  /// Color of the entry above (i,j): (i,j+1), or w'(i) on row zero.
  int upper_color(int i, int j) const { return j == datum.r + 1 ? input(i) : color(i, j + 1); }

  /// Colors leaving row by row from the top, then the last remaining color.
  Permutation output() const {
    int r = datum.r;
    std::vector<int> out;
    for (int j = r + 1; j >= 2; --j) {
      std::vector<bool> below(r + 2, false);
      for (int i = 1; i < j; ++i)
        below[color(i, j)] = true;
      for (int i = 1; i <= j; ++i)
        if (!below[upper_color(i, j)])
          out.push_back(upper_color(i, j));
    }
    out.push_back(r == 0 ? input(1) : color(1, 2));
    return Permutation(out);
  }

  auto operator<=>(const ColoredLusztigDatum &) const = default;
};

/**
 * Coloring Procedure: rows top to bottom, entries right to left, buffer e reset to the
 * top-right color of the row above. Positive entry: paint e, then e := a. Zero entry with
 * a < e: paint a. Zero entry with a > e: paint e and set e := a, or paint a.
 */
inline std::vector<ColoredLusztigDatum> color_datum(const LusztigDatum &m, const Weight &lambda,
                                                    const Permutation &wprime) {
  if (wprime.size() != m.r + 1 || static_cast<int>(lambda.size()) != m.r + 1)
    throw DomainError("color_datum: rank mismatch");
  std::vector<ColoredLusztigDatum> out;
  ColoredLusztigDatum c{m, lambda, wprime, std::vector<int>(m.m.size(), 0)};
  int r = m.r;
  auto rec = [&](auto &&self, int j, int i, int e) -> void {
    if (j < 2) {
      out.push_back(c);
      return;
    }
    if (i == 0) {
      int nj = j - 1;
      if (nj >= 2)
        self(self, nj, nj - 1, c.upper_color(nj, nj));
      else
        self(self, nj, 0, 0);
      return;
    }
    int a = c.upper_color(i, j);
    int &slot = c.colors[LusztigDatum::index(i, j)];
    if (m.at(i, j) > 0) {
      slot = e;
      self(self, j, i - 1, a);
    } else if (a < e) {
      slot = a;
      self(self, j, i - 1, e);
    } else {
      slot = e;
      self(self, j, i - 1, a);
      slot = a;
      self(self, j, i - 1, e);
    }
    slot = 0;
  };
  if (r == 0)
    out.push_back(c);
  else
    rec(rec, r + 1, r, c.upper_color(r + 1, r + 1));
  std::sort(out.begin(), out.end());
  return out;
}

/// Buffer color before each entry, replaying the Procedure; throws on colors it cannot produce.
inline std::vector<int> replay_buffer(const ColoredLusztigDatum &c) {
  const auto &m = c.datum;
  std::vector<int> buf(m.m.size(), 0);
  for (int j = m.r + 1; j >= 2; --j) {
    int e = c.upper_color(j, j);
    for (int i = j - 1; i >= 1; --i) {
      buf[LusztigDatum::index(i, j)] = e;
      int a = c.upper_color(i, j), col = c.color(i, j);
      if (m.at(i, j) > 0) {
        if (col != e)
          throw DomainError("contribution: positive entry not painted with the buffer color");
        e = a;
      } else if (a < e) {
        if (col != a)
          throw DomainError("contribution: forced entry not painted with the upper color");
      } else if (col == e && col != a) {
        e = a;
      } else if (col != a) {
        throw DomainError("contribution: entry color is neither buffer nor upper color");
      }
    }
  }
  return buf;
}

namespace detail {

/// Window data for one entry of a colored Lusztig datum.
struct LusztigWindow {
  bool positive;
  bool dcase;
  bool a_below_e;
  bool c_is_a;
  int s;
  int rr;
};

inline LusztigWindow lusztig_window(const ColoredLusztigDatum &c, const std::vector<int> &buf,
                                    const PositiveRoot &a, int cover_scale) {
  const auto &m = c.datum;
  int i = a.i, j = a.j;
  LusztigWindow w{};
  w.positive = m.at(i, j) > 0;
  // Right neighbour D = (i+1,j): the D-case is D = 0 with d = b; the rightmost entry has none.
  w.dcase = i + 1 < j && m.at(i + 1, j) == 0 && c.color(i + 1, j) == c.upper_color(i + 1, j);
  int up = c.upper_color(i, j);
  w.a_below_e = up < buf[LusztigDatum::index(i, j)];
  w.c_is_a = c.color(i, j) == up;
  w.s = s_stat(m, c.lambda, a);
  w.rr = cover_scale * r_stat(m, a);
  return w;
}

inline GaussCoeff window_value(const LusztigWindow &w, int n) {
  static const GaussCoeff one(1), qinv = GaussCoeff::qinv(1), mqinv = GaussCoeff::qinv(1, -1),
                          omq = GaussCoeff(1) - GaussCoeff::qinv(1);
  if (!w.dcase) {
    if (w.positive)
      return gauss_eval(w.rr, w.s, n);
    if (w.a_below_e)
      return w.s >= 0 ? one : GaussCoeff{};
    if (!w.c_is_a)
      return w.s >= 0 ? omq : mqinv;
    return qinv;
  }
  if (w.positive)
    return gauss_eval(w.rr, 0, n);
  if (w.a_below_e)
    return one;
  if (!w.c_is_a)
    return omq;
  return qinv;
}

} // namespace detail

/// Contribution of the entry at root a (comparisons against the buffer color).
inline GaussCoeff contribution(const ColoredLusztigDatum &c, const PositiveRoot &a, int n,
                               int cover_scale = 1) {
  if (!c.datum.in_range(a))
    throw DomainError("contribution: root out of range");
  auto buf = replay_buffer(c);
  return detail::window_value(detail::lusztig_window(c, buf, a, cover_scale), n);
}

inline GaussCoeff contribution(const ColoredLusztigDatum &c, const Weight &lambda, const PositiveRoot &a,
                               int n, int cover_scale = 1) {
  if (lambda != c.lambda)
    throw DomainError("contribution: weight differs from the datum's weight");
  return contribution(c, a, n, cover_scale);
}

/// Product of contributions over all roots.
inline GaussCoeff contribution_product(const ColoredLusztigDatum &c, int n, int cover_scale = 1) {
  auto buf = replay_buffer(c);
  GaussCoeff p(1);
  for (const auto &a : c.datum.roots()) {
    p *= detail::window_value(detail::lusztig_window(c, buf, a, cover_scale), n);
    if (p.is_zero())
      break;
  }
  return p;
}

/// No zero entry outside the D-case with s = -1 and a below the buffer color.
inline bool is_strict(const ColoredLusztigDatum &c) {
  auto buf = replay_buffer(c);
  for (const auto &a : c.datum.roots()) {
    auto w = detail::lusztig_window(c, buf, a, 1);
    if (!w.dcase && !w.positive && w.a_below_e && w.s == -1)
      return false;
  }
  return true;
}

/// Strict, and every Gauss sum g(r, b >= 0) consumed at a positive entry has r = 0 mod n.
inline bool is_superstrict(const ColoredLusztigDatum &c, int n, int cover_scale = 1) {
  if (!is_strict(c))
    return false;
  auto buf = replay_buffer(c);
  for (const auto &a : c.datum.roots()) {
    auto w = detail::lusztig_window(c, buf, a, cover_scale);
    if (w.positive && (w.dcase || w.s >= 0) && w.rr % n != 0)
      return false;
  }
  return true;
}

/// Table layout: rows j = r+1 down to 2, entries "_color value".
inline std::string to_string(const ColoredLusztigDatum &c) {
  std::string out = "{";
  for (int j = c.datum.r + 1; j >= 2; --j) {
    if (j != c.datum.r + 1)
      out += "; ";
    for (int i = 1; i < j; ++i)
      out += (i > 1 ? ", _" : "_") + std::to_string(c.color(i, j)) + " " + std::to_string(c.datum.at(i, j));
  }
  return out + "}";
}

} // namespace mwhit
