#pragma once

#include "mwhit/coeffring.hpp"
#include "mwhit/lusztig.hpp"
#include "mwhit/typea.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace mwhit {

/**
 * Gelfand-Tsetlin pattern stored by rows: rows[0] is the top row (r+1 entries),
 * rows[k] has r+1-k entries. Entry a_{i,j} lives at rows[r+2-j][i-1].
 */
struct GTPattern {
  std::vector<std::vector<int>> rows;

  int r() const { return static_cast<int>(rows.size()) - 1; }
  const std::vector<int> &top() const { return rows.front(); }
  int a(int i, int j) const { return rows[r() + 2 - j][i - 1]; }

  bool valid() const {
    int R = static_cast<int>(rows.size());
    for (int k = 0; k < R; ++k) {
      if (static_cast<int>(rows[k].size()) != R - k)
        return false;
      for (int x : rows[k])
        if (x < 0)
          return false;
      if (k > 0)
        for (int p = 0; p < R - k; ++p)
          if (rows[k][p] > rows[k - 1][p] || rows[k][p] < rows[k - 1][p + 1])
            return false;
    }
    return true;
  }

  auto operator<=>(const GTPattern &) const = default;
};

/// All patterns with the given top row, in row-major lexicographic order.
inline std::vector<GTPattern> enumerate_gt(const Weight &top) {
  std::vector<GTPattern> out;
  int R = static_cast<int>(top.size());
  if (R == 0)
    return out;
  for (int i = 0; i + 1 < R; ++i)
    if (top[i] < top[i + 1])
      return out;
  for (int x : top)
    if (x < 0)
      return out;
  GTPattern t;
  t.rows.resize(R);
  t.rows[0] = top;
  for (int k = 1; k < R; ++k)
    t.rows[k].assign(R - k, 0);
  auto rec = [&](auto &&self, int k, int p) -> void {
    if (k == R) {
      out.push_back(t);
      return;
    }
    if (p == R - k) {
      self(self, k + 1, 0);
      return;
    }
    for (int v = t.rows[k - 1][p + 1]; v <= t.rows[k - 1][p]; ++v) {
      t.rows[k][p] = v;
      self(self, k, p + 1);
    }
  };
  rec(rec, 1, 0);
  return out;
}

/// a_{i,j} = a_{i,j+1} - m_{i,j} with top row lambda + rho.
inline GTPattern lusztig_to_gt(const LusztigDatum &m, const Weight &lambda) {
  int r = m.r;
  if (static_cast<int>(lambda.size()) != r + 1)
    throw DomainError("lusztig_to_gt: rank mismatch");
  GTPattern t;
  t.rows.resize(r + 1);
  t.rows[0] = plus_rho(lambda);
  for (int k = 1; k <= r; ++k) {
    int j = r + 2 - k;
    t.rows[k].resize(r + 1 - k);
    for (int i = 1; i < j; ++i)
      t.rows[k][i - 1] = t.rows[k - 1][i - 1] - m.at(i, j);
  }
  if (!t.valid())
    throw DomainError("lusztig_to_gt: datum is not a Lusztig datum for lambda + rho");
  return t;
}

/// Inverse of lusztig_to_gt: m_{i,j} = a_{i,j+1} - a_{i,j}, lambda = top - rho.
inline std::pair<LusztigDatum, Weight> gt_to_lusztig(const GTPattern &t) {
  if (!t.valid())
    throw DomainError("gt_to_lusztig: invalid pattern");
  int r = t.r();
  LusztigDatum m(r);
  for (int j = 2; j <= r + 1; ++j)
    for (int i = 1; i < j; ++i)
      m.at(i, j) = t.a(i, j + 1) - t.a(i, j);
  Weight lambda = t.top();
  for (int i = 0; i <= r; ++i)
    lambda[i] -= r - i;
  return {m, lambda};
}

/// prod_k z_k^{e_k - e_{k-1}}, e_k the sum of the k-th row from the bottom.
inline LaurentPoly gt_weight(const GTPattern &t) {
  int R = static_cast<int>(t.rows.size());
  std::vector<int> e(R);
  int prev = 0;
  for (int k = 0; k < R; ++k) {
    const auto &row = t.rows[R - 1 - k];
    int s = 0;
    for (int x : row)
      s += x;
    e[k] = s - prev;
    prev = s;
  }
  return LaurentPoly::monomial(e);
}

/// GT pattern with colors on every entry; colors[0] is the input w'.
struct ColoredGTPattern {
  GTPattern pattern;
  std::vector<std::vector<int>> colors;

  Permutation input() const { return Permutation(colors.front()); }
  /// Colors leaving row by row from the top, then the last remaining color.
  Permutation output() const {
    int R = static_cast<int>(colors.size());
    std::vector<int> out;
    for (int k = 1; k < R; ++k)
      for (int x : colors[k - 1])
        if (std::find(colors[k].begin(), colors[k].end(), x) == colors[k].end())
          out.push_back(x);
    out.push_back(colors.back().front());
    return Permutation(out);
  }

  auto operator<=>(const ColoredGTPattern &) const = default;
};

/**
 * GT form of the coloring step, entry C below A (upper-left) and B (upper-right):
 * C < A paints the buffer e and sets e := a; C = A and a < e paints a;
 * C = A and a > e branches.
 */
inline std::vector<ColoredGTPattern> color_gt(const GTPattern &t, const Permutation &wprime) {
  int R = static_cast<int>(t.rows.size());
  if (wprime.size() != R)
    throw DomainError("color_gt: rank mismatch");
  std::vector<ColoredGTPattern> out;
  ColoredGTPattern c{t, {}};
  c.colors.resize(R);
  c.colors[0] = wprime.one_line();
  for (int k = 1; k < R; ++k)
    c.colors[k].assign(R - k, 0);
  auto rec = [&](auto &&self, int k, int p, int e) -> void {
    if (k == R) {
      out.push_back(c);
      return;
    }
    if (p < 0) {
      if (k + 1 < R)
        self(self, k + 1, R - k - 2, c.colors[k].back());
      else
        self(self, k + 1, 0, 0);
      return;
    }
    int a = c.colors[k - 1][p];
    int &slot = c.colors[k][p];
    if (t.rows[k][p] < t.rows[k - 1][p]) {
      slot = e;
      self(self, k, p - 1, a);
    } else if (a < e) {
      slot = a;
      self(self, k, p - 1, e);
    } else {
      slot = e;
      self(self, k, p - 1, a);
      slot = a;
      self(self, k, p - 1, e);
    }
    slot = 0;
  };
  if (R == 1)
    out.push_back(c);
  else
    rec(rec, 1, R - 2, c.colors[0].back());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

/// Buffer color before every entry of a colored pattern; throws if the colors cannot be replayed.
inline std::vector<std::vector<int>> gt_buffer(const ColoredGTPattern &c) {
  const auto &rows = c.pattern.rows;
  int R = static_cast<int>(rows.size());
  if (static_cast<int>(c.colors.size()) != R)
    throw DomainError("gt_contribution: color array shape mismatch");
  std::vector<std::vector<int>> buf(R);
  for (int k = 1; k < R; ++k) {
    int L = R - k;
    buf[k].assign(L, 0);
    int e = c.colors[k - 1].back();
    for (int p = L - 1; p >= 0; --p) {
      buf[k][p] = e;
      int a = c.colors[k - 1][p], col = c.colors[k][p];
      if (rows[k][p] < rows[k - 1][p]) {
        if (col != e)
          throw DomainError("gt_contribution: entry below a drop not painted with the buffer");
        e = a;
      } else if (a < e) {
        if (col != a)
          throw DomainError("gt_contribution: forced entry not painted with the upper color");
      } else if (col == e && col != a) {
        e = a;
      } else if (col != a) {
        throw DomainError("gt_contribution: entry color is neither buffer nor upper color");
      }
    }
  }
  return buf;
}

/// Contribution at row k, position p, given the replayed buffer.
inline GaussCoeff gt_entry_value(const ColoredGTPattern &c, const std::vector<std::vector<int>> &buf, int k,
                                 int p, int n, int cover_scale) {
  const auto &rows = c.pattern.rows;
  int L = static_cast<int>(rows[k].size());
  int A = rows[k - 1][p], B = rows[k - 1][p + 1], C = rows[k][p];
  int a = c.colors[k - 1][p], b = c.colors[k - 1][p + 1], col = c.colors[k][p];
  int s = C - B - 1;
  int rr = 0;
  for (int q = 0; q <= p; ++q)
    rr += rows[k - 1][q] - rows[k][q];
  rr *= cover_scale;
  bool dcase = p + 1 < L && rows[k][p + 1] == B && c.colors[k][p + 1] == b;
  LusztigWindow w{C < A, dcase, a < buf[k][p], col == a, s, rr};
  return window_value(w, n);
}

} // namespace detail

/// Contribution at root (i,j), the entry a_{i,j}.
inline GaussCoeff gt_contribution(const ColoredGTPattern &c, const PositiveRoot &alpha, int n,
                                  int cover_scale = 1) {
  int r = c.pattern.r();
  if (alpha.i < 1 || alpha.i >= alpha.j || alpha.j > r + 1)
    throw DomainError("gt_contribution: root out of range");
  auto buf = detail::gt_buffer(c);
  return detail::gt_entry_value(c, buf, r + 2 - alpha.j, alpha.i - 1, n, cover_scale);
}

/// Product of contributions over all entries below the top row.
inline GaussCoeff gt_contribution_product(const ColoredGTPattern &c, int n, int cover_scale = 1) {
  auto buf = detail::gt_buffer(c);
  GaussCoeff prod(1);
  int R = static_cast<int>(c.pattern.rows.size());
  for (int k = 1; k < R; ++k)
    for (int p = 0; p < R - k; ++p) {
      prod *= detail::gt_entry_value(c, buf, k, p, n, cover_scale);
      if (prod.is_zero())
        return prod;
    }
  return prod;
}

/// No left- and right-leaning entry (C = A, C = B) outside the D-case with a below the buffer.
inline bool is_strict_gt(const ColoredGTPattern &c) {
  auto buf = detail::gt_buffer(c);
  const auto &rows = c.pattern.rows;
  int R = static_cast<int>(rows.size());
  for (int k = 1; k < R; ++k)
    for (int p = 0; p < R - k; ++p) {
      int L = R - k;
      int A = rows[k - 1][p], B = rows[k - 1][p + 1], C = rows[k][p];
      bool dcase = p + 1 < L && rows[k][p + 1] == B && c.colors[k][p + 1] == c.colors[k - 1][p + 1];
      if (C == A && C == B && !dcase && c.colors[k - 1][p] < buf[k][p])
        return false;
    }
  return true;
}

/// Strict, and every g(r, b >= 0) consumed below a drop has r = 0 mod n.
inline bool is_superstrict_gt(const ColoredGTPattern &c, int n, int cover_scale = 1) {
  if (!is_strict_gt(c))
    return false;
  const auto &rows = c.pattern.rows;
  int R = static_cast<int>(rows.size());
  for (int k = 1; k < R; ++k) {
    int L = R - k, rr = 0;
    for (int p = 0; p < L; ++p) {
      int A = rows[k - 1][p], B = rows[k - 1][p + 1], C = rows[k][p];
      rr += (A - C) * cover_scale;
      bool dcase = p + 1 < L && rows[k][p + 1] == B && c.colors[k][p + 1] == c.colors[k - 1][p + 1];
      if (C < A && (dcase || C - B - 1 >= 0) && rr % n != 0)
        return false;
    }
  }
  return true;
}

/// Colored Lusztig datum carrying the same colors entrywise.
inline ColoredLusztigDatum gt_to_colored_lusztig(const ColoredGTPattern &c) {
  auto [m, lambda] = gt_to_lusztig(c.pattern);
  ColoredLusztigDatum d{m, lambda, c.input(), std::vector<int>(m.m.size(), 0)};
  int r = m.r;
  for (int j = 2; j <= r + 1; ++j)
    for (int i = 1; i < j; ++i)
      d.colors[LusztigDatum::index(i, j)] = c.colors[r + 2 - j][i - 1];
  return d;
}

inline ColoredGTPattern colored_lusztig_to_gt(const ColoredLusztigDatum &d) {
  ColoredGTPattern c{lusztig_to_gt(d.datum, d.lambda), {}};
  int r = d.datum.r;
  c.colors.resize(r + 1);
  c.colors[0] = d.input.one_line();
  for (int k = 1; k <= r; ++k) {
    int j = r + 2 - k;
    c.colors[k].resize(j - 1);
    for (int i = 1; i < j; ++i)
      c.colors[k][i - 1] = d.color(i, j);
  }
  return c;
}

/// Brace layout with color subscripts, e.g. "{_1 1, _2 0; _2 0}".
inline std::string to_string(const ColoredGTPattern &c) {
  std::string out = "{";
  for (std::size_t k = 0; k < c.pattern.rows.size(); ++k) {
    if (k)
      out += "; ";
    for (std::size_t p = 0; p < c.pattern.rows[k].size(); ++p)
      out += (p ? ", _" : "_") + std::to_string(c.colors[k][p]) + " " + std::to_string(c.pattern.rows[k][p]);
  }
  return out + "}";
}

inline std::string to_string(const GTPattern &t) {
  std::string out = "{";
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    if (k)
      out += "; ";
    for (std::size_t p = 0; p < t.rows[k].size(); ++p)
      out += (p ? ", " : "") + std::to_string(t.rows[k][p]);
  }
  return out + "}";
}

} // namespace mwhit
