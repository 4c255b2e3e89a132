#pragma once

#include "mwhit/coeffring.hpp"
#include "mwhit/gt.hpp"
#include "mwhit/lattice.hpp"
#include "mwhit/lusztig.hpp"
#include "mwhit/typea.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace mwhit {

enum class Model { Lusztig, GT, Lattice };

inline Model parse_model(const std::string &s) {
  if (s == "lusztig")
    return Model::Lusztig;
  if (s == "gt")
    return Model::GT;
  if (s == "lattice")
    return Model::Lattice;
  throw DomainError("unknown model '" + s + "'");
}

inline std::string to_string(Model m) {
  switch (m) {
  case Model::Lusztig:
    return "lusztig";
  case Model::GT:
    return "gt";
  case Model::Lattice:
    return "lattice";
  }
  return "?";
}

struct PhiQuery {
  Weight lambda;
  Permutation w;
  Permutation wprime;
  int n = 1;
  int cover_scale = 1;
  Model model = Model::GT;
};

/// Thread count from MWHIT_THREADS, else the hardware concurrency.
inline int default_threads() {
  if (const char *env = std::getenv("MWHIT_THREADS")) {
    int v = std::atoi(env);
    if (v > 0)
      return v;
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

/// Run body(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> &body) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::atomic<bool> failed{false};
  int nt = static_cast<int>(std::min<std::size_t>(count, threads));
  for (int t = 0; t < nt; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        if (failed)
          return;
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true))
            err = std::current_exception();
        }
      }
    });
  for (auto &th : pool)
    th.join();
  if (err)
    std::rethrow_exception(err);
}

namespace detail {

inline void check_lambda(const Weight &lambda, int n, int cover_scale) {
  if (lambda.empty())
    throw DomainError("lambda must have at least one entry");
  if (n < 1)
    throw DomainError("n must be positive");
  if (cover_scale < 1)
    throw DomainError("cover_scale must be positive");
  for (int x : plus_rho(lambda))
    if (x < 0)
      throw DomainError("lambda + rho must be non-negative");
}

} // namespace detail

/// phi_w(lambda, w') for every w with a non-zero value.
inline std::map<Permutation, LaurentPoly> phi_all(const Weight &lambda, const Permutation &wprime, int n,
                                                  int cover_scale = 1, Model model = Model::GT) {
  detail::check_lambda(lambda, n, cover_scale);
  int R = static_cast<int>(lambda.size());
  if (wprime.size() != R)
    throw DomainError("w' has the wrong size");
  std::map<Permutation, LaurentPoly> out;
  if (!almost_dominant(lambda, wprime))
    return out;
  auto add = [&](const Permutation &w, const LaurentPoly &p) {
    out.try_emplace(w, R).first->second += p;
  };
  Weight mu = plus_rho(lambda);
  switch (model) {
  case Model::GT:
    for (const auto &t : enumerate_gt(mu)) {
      LaurentPoly mono = gt_weight(t);
      for (const auto &c : color_gt(t, wprime)) {
        GaussCoeff g = gt_contribution_product(c, n, cover_scale);
        if (!g.is_zero())
          add(c.output(), mono.scaled(g));
      }
    }
    break;
  case Model::Lusztig:
    for (const auto &m : enumerate_lusztig_data(lambda)) {
      LaurentPoly mono = monomial_of(m, lambda);
      for (const auto &c : color_datum(m, lambda, wprime)) {
        GaussCoeff g = contribution_product(c, n, cover_scale);
        if (!g.is_zero())
          add(c.output(), mono.scaled(g));
      }
    }
    break;
  case Model::Lattice:
    out = partition_functions(mu, wprime, n, cover_scale);
    break;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// One row of the colored-data table.
struct TableRow {
  ColoredGTPattern gt;
  ColoredLusztigDatum lusztig;
  Permutation output;
  LaurentPoly monomial;
  std::vector<GaussCoeff> weights; // per root, Lusztig layout order
  GaussCoeff product;
};

namespace detail {

inline std::string coeff_text(const GaussCoeff &c) { return c.has_symbols() ? c.to_string() : c.to_t_string(); }

} // namespace detail

/// Weights in the Lusztig layout, e.g. "{1+t, 1; -t}".
inline std::string weights_text(const TableRow &row) {
  int r = row.lusztig.datum.r;
  std::string out = "{";
  for (int j = r + 1; j >= 2; --j) {
    if (j != r + 1)
      out += "; ";
    for (int i = 1; i < j; ++i)
      out += (i > 1 ? ", " : "") + detail::coeff_text(row.weights[LusztigDatum::index(i, j)]);
  }
  return out + "}";
}

inline std::string monomial_text(const TableRow &row) {
  bool constant = row.monomial.size() == 1 && row.monomial.terms().begin()->first == std::vector<int>(row.monomial.rank(), 0);
  return constant ? "1" : row.monomial.to_string();
}

/**
 * Every colored datum with a non-zero contribution, ordered by monomial exponent (descending
 * lexicographic), then output, then colors. All three models give the same rows.
 */
inline std::vector<TableRow> table_rows(const Weight &lambda, const Permutation &wprime, int n, int cover_scale = 1,
                                        Model model = Model::GT) {
  detail::check_lambda(lambda, n, cover_scale);
  int R = static_cast<int>(lambda.size());
  if (wprime.size() != R)
    throw DomainError("w' has the wrong size");
  Weight mu = plus_rho(lambda);
  std::vector<ColoredGTPattern> pats;
  switch (model) {
  case Model::GT:
    for (const auto &t : enumerate_gt(mu))
      for (const auto &c : color_gt(t, wprime))
        pats.push_back(c);
    break;
  case Model::Lusztig:
    for (const auto &m : enumerate_lusztig_data(lambda))
      for (const auto &c : color_datum(m, lambda, wprime))
        pats.push_back(colored_lusztig_to_gt(c));
    break;
  case Model::Lattice:
    for (const auto &s : enumerate_states_all(mu, wprime, n, cover_scale))
      pats.push_back(state_to_gt(s));
    break;
  }
  std::vector<TableRow> rows;
  for (const auto &c : pats) {
    GaussCoeff prod = gt_contribution_product(c, n, cover_scale);
    if (prod.is_zero())
      continue;
    TableRow row{c, gt_to_colored_lusztig(c), c.output(), gt_weight(c.pattern), {}, prod};
    for (const auto &a : row.lusztig.datum.roots())
      row.weights.push_back(gt_contribution(c, a, n, cover_scale));
    rows.push_back(std::move(row));
  }
  auto key = [](const TableRow &x) {
    return std::make_tuple(x.monomial.terms().begin()->first, x.output.one_line(), x.gt.colors);
  };
  std::sort(rows.begin(), rows.end(), [&](const TableRow &a, const TableRow &b) {
    auto ka = key(a), kb = key(b);
    if (std::get<0>(ka) != std::get<0>(kb))
      return std::get<0>(ka) > std::get<0>(kb);
    return std::tie(std::get<1>(ka), std::get<2>(ka)) < std::tie(std::get<1>(kb), std::get<2>(kb));
  });
  return rows;
}

/// phi_w(lambda, w'; z); zero unless lambda is w'-almost dominant.
inline LaurentPoly phi(const PhiQuery &q) {
  int R = static_cast<int>(q.lambda.size());
  if (q.w.size() != R || q.wprime.size() != R)
    throw DomainError("w and w' must have size r+1");
  auto all = phi_all(q.lambda, q.wprime, q.n, q.cover_scale, q.model);
  auto it = all.find(q.w);
  return it == all.end() ? LaurentPoly(R) : it->second;
}

/// Sum of phi_w over all w.
inline LaurentPoly spherical(const Weight &lambda, const Permutation &wprime, int n, int cover_scale = 1,
                             Model model = Model::GT) {
  LaurentPoly s(static_cast<int>(lambda.size()));
  for (const auto &[w, p] : phi_all(lambda, wprime, n, cover_scale, model))
    s += p;
  return s;
}

/// Schur polynomial s_lambda as a sum of GT weights.
inline LaurentPoly schur(const Weight &lambda) {
  LaurentPoly s(static_cast<int>(lambda.size()));
  for (const auto &t : enumerate_gt(lambda))
    s += gt_weight(t);
  return s;
}

inline bool is_dominant(const Weight &lambda) {
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      return false;
  return true;
}

/**
 * Casselman-Shalika check at n = 1: spherical(lambda) = spherical(0) * s_lambda, so the
 * quotient by the Schur polynomial is the same for every lambda. For r = 1 the quotient is
 * z_1 + t z_2. Non-dominant lambda must give zero.
 */
inline bool cs_check(const Weight &lambda, const Permutation &wprime) {
  int R = static_cast<int>(lambda.size());
  LaurentPoly sph = spherical(lambda, wprime, 1);
  if (!is_dominant(lambda))
    return sph.is_zero();
  LaurentPoly base = spherical(Weight(R, 0), Permutation::identity(R), 1);
  if (R == 2) {
    LaurentPoly gl2 = LaurentPoly::monomial({1, 0}) + LaurentPoly::monomial({0, 1}, t_coeff());
    if (base != gl2)
      return false;
  }
  return sph == base * schur(lambda);
}

inline bool cs_check(const Weight &lambda) {
  return cs_check(lambda, Permutation::identity(static_cast<int>(lambda.size())));
}

} // namespace mwhit
