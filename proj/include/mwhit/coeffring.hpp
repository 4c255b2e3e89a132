#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mwhit {

/// Raised when an operation receives arguments outside its domain.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Formal Gauss sum g(residue, -1) with residue not divisible by n.
struct GaussSymbol {
  int residue = 1;
  auto operator<=>(const GaussSymbol &) const = default;
};

/**
 * Element of Z[q^-1] extended by free commuting symbols g(a,-1).
 * Stored as a map (power of q^-1, sorted symbol residues) -> integer.
 */
class GaussCoeff {
public:
  struct Key {
    int qpow = 0;
    std::vector<int> symbols;
    auto operator<=>(const Key &) const = default;
  };
  using Terms = std::map<Key, std::int64_t>;

  GaussCoeff() = default;
  GaussCoeff(std::int64_t c) { add_term(0, {}, c); }

  /// c * q^-k
  static GaussCoeff qinv(int k, std::int64_t c = 1) {
    GaussCoeff r;
    r.add_term(k, {}, c);
    return r;
  }
  static GaussCoeff symbol(int residue) {
    GaussCoeff r;
    r.add_term(0, {residue}, 1);
    return r;
  }

  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_symbols() const {
    for (const auto &[k, c] : terms_)
      if (!k.symbols.empty())
        return true;
    return false;
  }

  void add_term(int qpow, std::vector<int> symbols, std::int64_t c) {
    if (c == 0)
      return;
    if (qpow < 0)
      throw DomainError("GaussCoeff: negative power of q^-1");
    std::sort(symbols.begin(), symbols.end());
    Key key{qpow, std::move(symbols)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), c);
    } else if ((it->second += c) == 0) {
      terms_.erase(it);
    }
  }

  GaussCoeff &operator+=(const GaussCoeff &o) {
    for (const auto &[k, c] : o.terms_)
      add_term(k.qpow, k.symbols, c);
    return *this;
  }
  GaussCoeff &operator-=(const GaussCoeff &o) {
    for (const auto &[k, c] : o.terms_)
      add_term(k.qpow, k.symbols, -c);
    return *this;
  }
  GaussCoeff operator-() const {
    GaussCoeff r;
    for (const auto &[k, c] : terms_)
      r.terms_.emplace(k, -c);
    return r;
  }
  friend GaussCoeff operator+(GaussCoeff a, const GaussCoeff &b) { return a += b; }
  friend GaussCoeff operator-(GaussCoeff a, const GaussCoeff &b) { return a -= b; }
  friend GaussCoeff operator*(const GaussCoeff &a, const GaussCoeff &b) {
    GaussCoeff r;
    for (const auto &[ka, ca] : a.terms_)
      for (const auto &[kb, cb] : b.terms_) {
        std::vector<int> s = ka.symbols;
        s.insert(s.end(), kb.symbols.begin(), kb.symbols.end());
        r.add_term(ka.qpow + kb.qpow, std::move(s), ca * cb);
      }
    return r;
  }
  GaussCoeff &operator*=(const GaussCoeff &o) { return *this = *this * o; }
  bool operator==(const GaussCoeff &) const = default;
  auto operator<=>(const GaussCoeff &o) const { return terms_ <=> o.terms_; }

  /// Text form: terms like "2*q^-1*g(1,-1)" joined by " + ", zero is "0".
  std::string to_string() const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &[k, c] : terms_) {
      if (!out.empty())
        out += " + ";
      std::vector<std::string> f;
      if (k.qpow == 1)
        f.push_back("q^-1");
      else if (k.qpow > 1)
        f.push_back("q^-" + std::to_string(k.qpow));
      for (int s : k.symbols)
        f.push_back("g(" + std::to_string(s) + ",-1)");
      std::string body;
      for (std::size_t i = 0; i < f.size(); ++i)
        body += (i ? "*" : "") + f[i];
      if (body.empty())
        out += std::to_string(c);
      else if (c == 1)
        out += body;
      else if (c == -1)
        out += "-" + body;
      else
        out += std::to_string(c) + "*" + body;
    }
    return out;
  }

  /**
   * Symbol-free coefficients rewritten in t = -q^-1, e.g. "1+t", "-t", "t^2".
   * Terms ordered by ascending power of t.
   */
  std::string to_t_string() const {
    if (has_symbols())
      throw DomainError("to_t_string: coefficient contains Gauss symbols");
    if (terms_.empty())
      return "0";
    std::string out;
    for (const auto &[k, c0] : terms_) {
      std::int64_t c = (k.qpow % 2) ? -c0 : c0;
      std::string mono = k.qpow == 0   ? ""
                         : k.qpow == 1 ? "t"
                                       : "t^" + std::to_string(k.qpow);
      std::string term;
      if (mono.empty())
        term = std::to_string(c);
      else if (c == 1)
        term = mono;
      else if (c == -1)
        term = "-" + mono;
      else
        term = std::to_string(c) + mono;
      if (!out.empty() && term[0] != '-')
        out += "+";
      out += term;
    }
    return out;
  }

private:
  Terms terms_;
};

inline GaussCoeff coeff_add(const GaussCoeff &x, const GaussCoeff &y) { return x + y; }
inline GaussCoeff coeff_mul(const GaussCoeff &x, const GaussCoeff &y) { return x * y; }

/// t = -q^-1, the usual shorthand in n = 1 tables.
inline GaussCoeff t_coeff() { return GaussCoeff::qinv(1, -1); }

/// Normalized Gauss sum g(a,b) for an n-fold cover.
inline GaussCoeff gauss_eval(long long a, long long b, int n) {
  if (n <= 0)
    throw DomainError("gauss_eval: n must be positive");
  long long res = ((a % n) + n) % n;
  if (b < -1)
    return {};
  if (b == -1)
    return res == 0 ? GaussCoeff::qinv(1, -1) : GaussCoeff::symbol(static_cast<int>(res));
  return res == 0 ? GaussCoeff(1) - GaussCoeff::qinv(1) : GaussCoeff{};
}

/// Finite Laurent polynomial in z_1..z_rank with GaussCoeff coefficients.
class LaurentPoly {
public:
  using Exponent = std::vector<int>;
  using Terms = std::map<Exponent, GaussCoeff>;

  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {
    if (rank < 0)
      throw DomainError("LaurentPoly: negative rank");
  }

  static LaurentPoly monomial(const Exponent &e, const GaussCoeff &c = GaussCoeff(1)) {
    LaurentPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }
  static LaurentPoly constant(int rank, const GaussCoeff &c) {
    return monomial(Exponent(rank, 0), c);
  }

  int rank() const { return rank_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussCoeff coeff(const Exponent &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussCoeff{} : it->second;
  }

  void add_term(const Exponent &e, const GaussCoeff &c) {
    if (static_cast<int>(e.size()) != rank_)
      throw DomainError("LaurentPoly: exponent length differs from rank");
    if (c.is_zero())
      return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  LaurentPoly &operator+=(const LaurentPoly &o) {
    check_rank(o);
    for (const auto &[e, c] : o.terms_)
      add_term(e, c);
    return *this;
  }
  LaurentPoly &operator-=(const LaurentPoly &o) {
    check_rank(o);
    for (const auto &[e, c] : o.terms_)
      add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    a.check_rank(b);
    LaurentPoly r(a.rank_);
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  LaurentPoly scaled(const GaussCoeff &c) const {
    LaurentPoly r(rank_);
    for (const auto &[e, x] : terms_)
      r.add_term(e, x * c);
    return r;
  }
  /// Apply a permutation of variables: z_i -> z_{perm[i]} (0-based).
  LaurentPoly relabeled(const std::vector<int> &perm) const {
    LaurentPoly r(rank_);
    for (const auto &[e, c] : terms_) {
      Exponent f(e.size());
      for (std::size_t i = 0; i < e.size(); ++i)
        f[perm[i]] = e[i];
      r.add_term(f, c);
    }
    return r;
  }
  bool operator==(const LaurentPoly &) const = default;

  /// Text form "z1^3*z2 + (1 + -q^-1)*z1^2", terms by descending exponent.
  std::string to_string() const { return render(false); }
  /// Same layout with symbol-free coefficients written in t = -q^-1.
  std::string to_t_string() const { return render(true); }

private:
  void check_rank(const LaurentPoly &o) const {
    if (o.rank_ != rank_)
      throw DomainError("LaurentPoly: rank mismatch");
  }

  std::string render(bool in_t) const {
    if (terms_.empty())
      return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto &[e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!mono.empty())
          mono += "*";
        mono += "z" + std::to_string(i + 1);
        if (e[i] != 1)
          mono += "^" + std::to_string(e[i]);
      }
      std::string cs = in_t ? c.to_t_string() : c.to_string();
      bool single = c.terms().size() == 1;
      std::string term;
      if (mono.empty())
        term = single ? cs : "(" + cs + ")";
      else if (cs == "1")
        term = mono;
      else if (cs == "-1")
        term = "-" + mono;
      else if (single)
        term = cs + "*" + mono;
      else
        term = "(" + cs + ")*" + mono;
      if (!out.empty())
        out += " + ";
      out += term;
    }
    return out;
  }

  int rank_ = 0;
  Terms terms_;
};

inline LaurentPoly poly_add(const LaurentPoly &p, const LaurentPoly &q) { return p + q; }
inline LaurentPoly poly_mul(const LaurentPoly &p, const LaurentPoly &q) { return p * q; }
inline LaurentPoly poly_scale(const LaurentPoly &p, const GaussCoeff &c) { return p.scaled(c); }
inline LaurentPoly monomial(const std::vector<int> &e, const GaussCoeff &c = GaussCoeff(1)) {
  return LaurentPoly::monomial(e, c);
}

} // namespace mwhit
