#pragma once

#include "mwhit/coeffring.hpp"

#include <cctype>
#include <compare>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace mwhit {

using Weight = std::vector<int>;
using ReducedWord = std::vector<int>;

/// Positive root e_i - e_j, 1 <= i < j.
struct PositiveRoot {
  int i = 1;
  int j = 2;
  auto operator<=>(const PositiveRoot &) const = default;
};

/// Root e_i - e_j with i != j; positive when i < j.
struct SignedRoot {
  int i = 1;
  int j = 2;
  bool positive() const { return i < j; }
  bool operator==(const SignedRoot &) const = default;
};

/// Number of positive roots of GL_{r+1}.
inline int num_positive_roots(int r) { return r * (r + 1) / 2; }

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
    std::vector<bool> seen(v_.size() + 1, false);
    for (int x : v_) {
      if (x < 1 || x > static_cast<int>(v_.size()) || seen[x])
        throw DomainError("Permutation: not a bijection of 1..n");
      seen[x] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(v);
  }
  static Permutation longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = n - i;
    return Permutation(v);
  }
  /// Word s_{i1} s_{i2} ...: the value swaps i1, i2, ... applied in reading order to the identity.
  static Permutation from_word(int n, const std::vector<int> &word) {
    Permutation p = identity(n);
    for (int i : word)
      p = p.swap_values(i);
    return p;
  }

  /**
   * Parse "e", a word "s2 s1 s2" or one-line "2,3,1". Commas select one-line notation.
   * n is the expected size; n <= 0 infers it from one-line input.
   */
  static Permutation parse(const std::string &text, int n) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch)) || (!s.empty() && s.back() != ' '))
        s += std::isspace(static_cast<unsigned char>(ch)) ? ' ' : ch;
    while (!s.empty() && s.back() == ' ')
      s.pop_back();
    if (s.empty())
      throw DomainError("Permutation: empty text");
    if (s == "e" || s == "1") {
      if (n <= 0)
        throw DomainError("Permutation: size unknown for identity");
      return identity(n);
    }
    if (s.find(',') != std::string::npos || (s.front() == '(' && s.back() == ')')) {
      std::string body = s;
      if (body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
      std::vector<int> v;
      for (const auto &tok : split(body, ','))
        v.push_back(parse_int(tok));
      Permutation p(v);
      if (n > 0 && p.size() != n)
        throw DomainError("Permutation: expected " + std::to_string(n) + " entries");
      return p;
    }
    if (n <= 0)
      throw DomainError("Permutation: size unknown for word input");
    std::vector<int> word;
    for (const auto &tok0 : split(s, ' ')) {
      std::string tok = tok0;
      if (tok.empty())
        continue;
      if (tok[0] != 's')
        throw DomainError("Permutation: bad word letter '" + tok + "'");
      int i = parse_int(tok.substr(1));
      if (i < 1 || i >= n)
        throw DomainError("Permutation: s" + std::to_string(i) + " out of range");
      word.push_back(i);
    }
    return from_word(n, word);
  }

  int size() const { return static_cast<int>(v_.size()); }
  /// Value at 1-based position i.
  int operator()(int i) const { return v_[i - 1]; }
  const std::vector<int> &one_line() const { return v_; }

  /// Composition, (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    if (a.size() != b.size())
      throw DomainError("Permutation: size mismatch");
    std::vector<int> v(b.v_.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = a.v_[b.v_[i] - 1];
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> w(v_.size());
    for (int i = 0; i < size(); ++i)
      w[v_[i] - 1] = i + 1;
    return Permutation(w);
  }
  /// Exchange the values i and i+1 (left multiplication by s_i).
  Permutation swap_values(int i) const {
    std::vector<int> w = v_;
    for (int &x : w)
      x = x == i ? i + 1 : x == i + 1 ? i : x;
    return Permutation(w);
  }
  /// Exchange positions i and i+1 (right multiplication by s_i).
  Permutation swap_positions(int i) const {
    std::vector<int> w = v_;
    std::swap(w[i - 1], w[i]);
    return Permutation(w);
  }
  int length() const {
    int l = 0;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        l += v_[a] > v_[b];
    return l;
  }
  /// A word whose from_word value is this permutation ("e" for the identity).
  std::string to_word() const {
    std::vector<int> word;
    Permutation p = *this;
    // Peel value swaps from the end: p = s_{i_k} p', choose i with p^-1(i) > p^-1(i+1).
    while (p.length() > 0) {
      Permutation inv = p.inverse();
      for (int i = 1; i < size(); ++i)
        if (inv(i) > inv(i + 1)) {
          word.push_back(i);
          p = p.swap_values(i);
          break;
        }
    }
    if (word.empty())
      return "e";
    std::string out;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      out += (out.empty() ? "s" : " s") + std::to_string(*it);
    return out;
  }
  std::string to_string() const {
    std::string out = "(";
    for (int i = 0; i < size(); ++i)
      out += (i ? "," : "") + std::to_string(v_[i]);
    return out + ")";
  }

  auto operator<=>(const Permutation &) const = default;

  /// All permutations of {1..n} in lexicographic order.
  static std::vector<Permutation> all(int n) {
    std::vector<Permutation> out;
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do
      out.emplace_back(v);
    while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

private:
  static std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
      if (ch == sep) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    out.push_back(cur);
    return out;
  }
  static int parse_int(std::string tok) {
    while (!tok.empty() && tok.front() == ' ')
      tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ')
      tok.pop_back();
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception &) {
      throw DomainError("bad integer '" + tok + "'");
    }
    if (pos != tok.size())
      throw DomainError("bad integer '" + tok + "'");
    return v;
  }

  std::vector<int> v_;
};

/// Parse "1,0,0" into a weight.
inline Weight parse_weight(const std::string &text) {
  Weight w;
  std::string cur;
  auto flush = [&] {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &pos);
    } catch (const std::exception &) {
      throw DomainError("bad weight entry '" + cur + "'");
    }
    while (pos < cur.size() && cur[pos] == ' ')
      ++pos;
    if (pos != cur.size())
      throw DomainError("bad weight entry '" + cur + "'");
    w.push_back(v);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else if (ch != '(' && ch != ')')
      cur += ch;
  }
  flush();
  return w;
}

inline std::string weight_to_string(const Weight &w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i)
    out += (i ? "," : "") + std::to_string(w[i]);
  return out;
}

/// rho = (r, r-1, ..., 0).
inline Weight rho(int r) {
  Weight w(r + 1);
  for (int i = 0; i <= r; ++i)
    w[i] = r - i;
  return w;
}

inline Weight plus_rho(const Weight &lambda) {
  Weight mu = lambda;
  int r = static_cast<int>(lambda.size()) - 1;
  for (int i = 0; i <= r; ++i)
    mu[i] += r - i;
  return mu;
}

/// Delta word (r, r-1, r, ..., 1, 2, ..., r); entry (i,j) carries letter i+r+1-j.
inline ReducedWord delta_word(int r) {
  ReducedWord w;
  for (int j = 2; j <= r + 1; ++j)
    for (int i = 1; i < j; ++i)
      w.push_back(i + r + 1 - j);
  return w;
}

/// Root gamma_k = s_{i_N} ... s_{i_{k+1}} alpha_{i_k} for each position k.
inline std::vector<PositiveRoot> roots_in_word_order(const ReducedWord &word, int r = -1) {
  if (r < 0)
    for (int i : word)
      r = std::max(r, i);
  r = std::max(r, 0);
  std::vector<PositiveRoot> out;
  std::set<PositiveRoot> seen;
  int N = static_cast<int>(word.size());
  for (int k = 0; k < N; ++k) {
    int a = word[k], b = word[k] + 1;
    if (word[k] < 1 || word[k] > r)
      throw DomainError("roots_in_word_order: letter out of range");
    for (int l = k + 1; l < N; ++l) {
      int s = word[l];
      auto sw = [s](int x) { return x == s ? s + 1 : x == s + 1 ? s : x; };
      a = sw(a);
      b = sw(b);
    }
    if (a > b || !seen.insert({a, b}).second)
      throw DomainError("roots_in_word_order: word is not reduced");
    out.push_back({a, b});
  }
  if (N != num_positive_roots(r))
    throw DomainError("roots_in_word_order: word is not a reduced word of w0");
  return out;
}

/// w(e_i - e_j) = e_{w(i)} - e_{w(j)}.
inline SignedRoot apply_to_root(const Permutation &w, const SignedRoot &alpha) {
  return {w(alpha.i), w(alpha.j)};
}

inline bool is_positive_after(const Permutation &w, int i) { return w(i) < w(i + 1); }

/**
 * lambda is w'-almost dominant iff lambda_i - lambda_{i+1} >= 0 where w'(i) < w'(i+1)
 * and >= -1 where w'(i) > w'(i+1), for every simple index i.
 */
inline bool almost_dominant(const Weight &lambda, const Permutation &wprime) {
  if (static_cast<int>(lambda.size()) != wprime.size())
    throw DomainError("almost_dominant: rank mismatch");
  for (int i = 1; i < wprime.size(); ++i) {
    int d = lambda[i - 1] - lambda[i];
    if (d < (is_positive_after(wprime, i) ? 0 : -1))
      return false;
  }
  return true;
}

/// Shift lambda by a multiple of (1,...,1) so that the last entry is 0.
inline Weight shift_to_last_zero(const Weight &lambda) {
  Weight w = lambda;
  if (!w.empty()) {
    int c = w.back();
    for (int &x : w)
      x -= c;
  }
  return w;
}

} // namespace mwhit
