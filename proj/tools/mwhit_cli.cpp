// Command-line front end: phi values, colored-data tables, verification suites, enumeration.
#include "mwhit/coloring.hpp"
#include "mwhit/verify.hpp"
#include "mwhit/whittaker.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <boost/rational.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace mwhit;
using nlohmann::json;

namespace {

enum class Format { Pretty, Json, Tsv };

/// Argument error naming the offending flag; exit code 2.
struct ArgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F> auto parse_flag(const std::string &flag, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const DomainError &e) {
    throw ArgError(flag + ": " + e.what());
  }
}

Weight weight_flag(const std::string &flag, const std::string &text) {
  return parse_flag(flag, [&] { return parse_weight(text); });
}

Permutation perm_flag(const std::string &flag, const std::string &text, int n) {
  return parse_flag(flag, [&] { return Permutation::parse(text, n); });
}

Model model_flag(const std::string &text) {
  return parse_flag("--model", [&] { return parse_model(text); });
}

std::vector<int> int_list(const std::string &flag, const std::string &text) {
  return parse_flag(flag, [&] { return parse_weight(text); });
}

json coeff_json(const GaussCoeff &c) {
  json terms = json::array();
  for (const auto &[k, v] : c.terms()) {
    json g = json::array();
    for (int s : k.symbols)
      g.push_back({s, -1});
    terms.push_back({{"int", v}, {"qpow", k.qpow}, {"gauss", g}});
  }
  return {{"terms", terms}};
}

/// Terms in descending exponent order, matching the text rendering.
json poly_json(const LaurentPoly &p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"z", it->first}, {"coeff", coeff_json(it->second)}});
  return {{"terms", terms}};
}

std::string tsv_poly(const LaurentPoly &p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out += weight_to_string(it->first) + "\t" + it->second.to_string() + "\n";
  return out;
}

/// Run-report envelope for json output of table, verify and enumerate.
json run_report(const std::string &command, json params, json result, json counts) {
  return {{"command", command}, {"parameters", std::move(params)}, {"result", std::move(result)},
          {"counts", std::move(counts)}};
}

struct Common {
  std::string format = "pretty";
  int threads = 0;
  bool timing = false;

  Format fmt() const {
    if (format == "pretty")
      return Format::Pretty;
    if (format == "json")
      return Format::Json;
    if (format == "tsv")
      return Format::Tsv;
    throw ArgError("--format: expected pretty, json or tsv, got '" + format + "'");
  }
};

void add_common(CLI::App *sub, Common &c) {
  sub->add_option("--format", c.format, "Output format: pretty, json or tsv");
  sub->add_option("--threads", c.threads, "Worker threads (default: MWHIT_THREADS or all cores)");
  sub->add_flag("--timing", c.timing, "Print wall time to stderr");
}

int threads_of(const Common &c) {
  if (c.threads < 0)
    throw ArgError("--threads: must be non-negative");
  return c.threads ? c.threads : default_threads();
}

// phi

struct PhiArgs {
  Common common;
  int rank = -1;
  std::string lambda, w, wprime = "e", model = "gt";
  int n = 1, cover_scale = 1;
};

Weight lambda_for_rank(const std::string &text, int rank) {
  if (rank < 0)
    throw ArgError("--rank: must be non-negative");
  Weight lam = weight_flag("--lambda", text);
  if (static_cast<int>(lam.size()) != rank + 1)
    throw ArgError("--lambda: expected " + std::to_string(rank + 1) + " entries for rank " + std::to_string(rank));
  return lam;
}

void check_n(int n, int cover_scale) {
  if (n < 1)
    throw ArgError("--n: must be positive");
  if (cover_scale < 1)
    throw ArgError("--cover-scale: must be positive");
}

int run_phi(const PhiArgs &a) {
  Format f = a.common.fmt();
  Weight lam = lambda_for_rank(a.lambda, a.rank);
  check_n(a.n, a.cover_scale);
  int R = a.rank + 1;
  PhiQuery q{lam, perm_flag("--w", a.w, R), perm_flag("--wprime", a.wprime, R), a.n, a.cover_scale,
             model_flag(a.model)};
  LaurentPoly p = parse_flag("--lambda", [&] { return phi(q); });
  if (f == Format::Json)
    std::cout << poly_json(p).dump() << "\n";
  else if (f == Format::Tsv)
    std::cout << tsv_poly(p);
  else
    std::cout << p.to_string() << "\n";
  return 0;
}

// table

struct TableArgs {
  Common common;
  int rank = -1;
  std::string lambda, wprime = "e", model = "gt";
  int n = 1, cover_scale = 1;
};

int run_table(const TableArgs &a) {
  Format f = a.common.fmt();
  Weight lam = lambda_for_rank(a.lambda, a.rank);
  check_n(a.n, a.cover_scale);
  Permutation wp = perm_flag("--wprime", a.wprime, a.rank + 1);
  Model model = model_flag(a.model);
  auto rows = parse_flag("--lambda", [&] { return table_rows(lam, wp, a.n, a.cover_scale, model); });
  if (f == Format::Json) {
    json out = json::array();
    for (const auto &r : rows) {
      json weights = json::array();
      for (const auto &w : r.weights)
        weights.push_back(coeff_json(w));
      out.push_back({{"gt", to_string(r.gt)},
                     {"lusztig", to_string(r.lusztig)},
                     {"output", r.output.one_line()},
                     {"monomial", poly_json(r.monomial)},
                     {"weights", weights},
                     {"contribution", coeff_json(r.product)}});
    }
    json params = {{"rank", a.rank}, {"lambda", lam}, {"wprime", wp.one_line()}, {"n", a.n},
                   {"cover_scale", a.cover_scale}, {"model", to_string(model)}};
    std::cout << run_report("table", params, out, {{"rows", rows.size()}}).dump(2) << "\n";
    return 0;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"gt", "lusztig", "output", "monomial", "weights"});
  for (const auto &r : rows)
    cells.push_back({to_string(r.gt), to_string(r.lusztig), r.output.to_string(), monomial_text(r), weights_text(r)});
  if (f == Format::Tsv) {
    for (const auto &row : cells)
      std::cout << row[0] << "\t" << row[1] << "\t" << row[2] << "\t" << row[3] << "\t" << row[4] << "\n";
    return 0;
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto &row : cells)
    for (std::size_t i = 0; i < 5; ++i)
      width[i] = std::max(width[i], row[i].size());
  for (const auto &row : cells) {
    std::string line;
    for (std::size_t i = 0; i < 5; ++i) {
      line += row[i];
      if (i + 1 < 5)
        line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    std::cout << line << "\n";
  }
  std::cout << rows.size() << " rows\n";
  return 0;
}

// verify

struct VerifyArgs {
  Common common;
  std::string suite;
  int max_rank = 3, max_part = 4, max_n = 3;
  std::string q_value;
};

using Rational = boost::rational<long long>;

Rational parse_q(const std::string &text) {
  auto slash = text.find('/');
  try {
    long long p = std::stoll(text.substr(0, slash));
    long long q = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
    if (p == 0 || q == 0)
      throw ArgError("--q-value: q must be a non-zero rational");
    return Rational(p, q);
  } catch (const std::logic_error &) {
    throw ArgError("--q-value: expected p/q, got '" + text + "'");
  }
}

/// Coefficient at a numeric q; Gauss symbols have no numeric value and are rejected.
Rational evaluate(const GaussCoeff &c, Rational q) {
  Rational out(0), qinv = Rational(1) / q;
  for (const auto &[k, v] : c.terms()) {
    if (!k.symbols.empty())
      throw DomainError("evaluate: formal Gauss sum has no numeric value");
    Rational x(v);
    for (int i = 0; i < k.qpow; ++i)
      x *= qinv;
    out += x;
  }
  return out;
}

std::map<std::vector<int>, Rational> evaluate(const LaurentPoly &p, Rational q) {
  std::map<std::vector<int>, Rational> out;
  for (const auto &[e, c] : p.terms()) {
    Rational v = evaluate(c, q);
    if (v.numerator() != 0)
      out[e] = v;
  }
  return out;
}

/// At n = 1 the three models and every w' give the same numeric spherical sum.
Report numeric_spot_check(const Grid &g, Rational q) {
  Report rep;
  for (int r = 0; r <= g.max_rank; ++r)
    for (const auto &mu : decreasing_rows(r + 1, g.max_part)) {
      Weight lam = minus_rho(mu);
      bool have = false;
      std::map<std::vector<int>, Rational> ref;
      for (const auto &wp : Permutation::all(r + 1))
        for (Model m : {Model::GT, Model::Lusztig, Model::Lattice}) {
          auto v = evaluate(spherical(lam, wp, 1, 1, m), q);
          ++rep.cases;
          if (!have) {
            ref = v;
            have = true;
          } else if (v != ref && rep.ok) {
            rep.ok = false;
            rep.first_failure = "numeric spherical sum differs at " + detail::boundary_name(mu, wp, 1) + " model " +
                                to_string(m);
          }
        }
    }
  return rep;
}

int run_verify(const VerifyArgs &a) {
  Format f = a.common.fmt();
  if (a.max_rank < 0 || a.max_rank > 4)
    throw ArgError("--max-rank: expected 0..4");
  if (a.max_part < 0 || a.max_part > 6)
    throw ArgError("--max-part: expected 0..6");
  if (a.max_n < 1 || a.max_n > 6)
    throw ArgError("--max-n: expected 1..6");
  Grid g;
  g.max_rank = a.max_rank;
  g.max_part = a.max_part;
  g.max_n = a.max_n;
  g.threads = threads_of(a.common);
  std::optional<Rational> q;
  if (!a.q_value.empty())
    q = parse_q(a.q_value);
  Report rep;
  if (a.suite == "equivalence")
    rep = verify_equivalence(g);
  else if (a.suite == "spherical")
    rep = verify_spherical(g);
  else if (a.suite == "cs")
    rep = verify_cs(g);
  else if (a.suite == "cancellation")
    rep = verify_cancellation(g);
  else if (a.suite == "bijections")
    rep = verify_bijections(g);
  else if (a.suite == "colorings")
    rep = verify_colorings(g);
  else
    throw ArgError("suite: unknown suite '" + a.suite + "'");
  std::optional<Report> numeric;
  if (q)
    numeric = numeric_spot_check(g, *q);
  bool ok = rep.ok && (!numeric || numeric->ok);
  if (f == Format::Json) {
    json params = {{"suite", a.suite}, {"max_rank", g.max_rank}, {"max_part", g.max_part}, {"max_n", g.max_n}};
    json result = {{"ok", rep.ok}, {"first_failure", rep.first_failure}};
    json counts = {{"cases", rep.cases}};
    if (numeric) {
      params["q_value"] = a.q_value;
      result["numeric_ok"] = numeric->ok;
      result["numeric_first_failure"] = numeric->first_failure;
      counts["numeric_cases"] = numeric->cases;
    }
    std::cout << run_report("verify", params, result, counts).dump(2) << "\n";
  } else {
    const char *sep = f == Format::Tsv ? "\t" : " ";
    std::cout << (rep.ok ? "PASS" : "FAIL") << sep << a.suite << sep << rep.cases << " cases";
    if (!rep.ok)
      std::cout << sep << rep.first_failure;
    std::cout << "\n";
    if (numeric) {
      std::cout << (numeric->ok ? "PASS" : "FAIL") << sep << "numeric q=" << a.q_value << sep << numeric->cases
                << " cases";
      if (!numeric->ok)
        std::cout << sep << numeric->first_failure;
      std::cout << "\n";
    }
  }
  return ok ? 0 : 1;
}

// enumerate

struct EnumArgs {
  Common common;
  std::string model;
  std::string word, vanishing, wprime = "e", mu, w, top;
  int n = 1, cover_scale = 1;
};

std::string sigma_text(const ColoringSequence &s) {
  std::string out;
  for (std::size_t k = 0; k < s.sigma.size(); ++k)
    out += (k ? " " : "") + s.sigma[k].to_string();
  return out;
}

int run_enumerate(const EnumArgs &a) {
  Format f = a.common.fmt();
  json items = json::array();
  std::vector<std::string> lines;
  std::string noun;
  if (a.model == "colorings") {
    if (a.word.empty())
      throw ArgError("--word: required for colorings");
    ReducedWord word = int_list("--word", a.word);
    std::vector<int> v = int_list("--vanishing", a.vanishing.empty() ? std::string() : a.vanishing);
    if (a.vanishing.empty())
      v.assign(word.size(), 0);
    if (v.size() != word.size())
      throw ArgError("--vanishing: expected " + std::to_string(word.size()) + " entries");
    int R = 1;
    for (int l : word)
      R = std::max(R, l + 1);
    if (!a.wprime.empty() && a.wprime.find(',') != std::string::npos)
      R = std::max<int>(R, static_cast<int>(int_list("--wprime", a.wprime).size()));
    Permutation wp = perm_flag("--wprime", a.wprime, R);
    VanishingPattern pat;
    for (int x : v) {
      if (x != 0 && x != 1)
        throw ArgError("--vanishing: entries must be 0 or 1");
      pat.push_back(x == 1);
    }
    auto all = parse_flag("--word", [&] { return enumerate_colorings(word, pat, wp); });
    noun = "sequences";
    for (const auto &[out, seqs] : all)
      for (const auto &s : seqs) {
        auto cls = domain_classes(word, s, pat);
        std::vector<std::string> names;
        std::string cls_text;
        for (auto c : cls) {
          names.push_back(to_string(c));
          cls_text += (cls_text.empty() ? "" : " ") + to_string(c);
        }
        std::vector<std::vector<int>> sig;
        for (const auto &p : s.sigma)
          sig.push_back(p.one_line());
        items.push_back({{"output", out.one_line()}, {"sigma", sig}, {"domains", names}});
        lines.push_back(out.to_string() + "\t" + sigma_text(s) + "\t" + cls_text);
      }
  } else if (a.model == "states") {
    Weight mu = weight_flag("--mu", a.mu);
    if (mu.empty())
      throw ArgError("--mu: required for states");
    check_n(a.n, a.cover_scale);
    int R = static_cast<int>(mu.size());
    Permutation wp = perm_flag("--wprime", a.wprime, R);
    std::vector<LatticeState> states;
    if (a.w.empty())
      states = parse_flag("--mu", [&] { return enumerate_states_all(mu, wp, a.n, a.cover_scale); });
    else
      states = parse_flag("--mu", [&] {
        return enumerate_states({mu, perm_flag("--w", a.w, R), wp, a.n, a.cover_scale});
      });
    noun = "states";
    for (const auto &s : states) {
      LaurentPoly wt = state_weight(s, a.n, a.cover_scale);
      json levels = json::array();
      for (const auto &lv : s.levels) {
        json l = json::array();
        for (auto [x, c] : lv)
          l.push_back({x, c});
        levels.push_back(l);
      }
      items.push_back({{"exits", s.exits}, {"levels", levels}, {"weight", poly_json(wt)}});
      lines.push_back("w=" + s.w().to_string() + " weight=" + wt.to_string() + "\n" + render_state(s));
    }
  } else if (a.model == "gt") {
    Weight top = weight_flag("--top", a.top);
    if (top.empty())
      throw ArgError("--top: required for gt");
    for (std::size_t i = 0; i + 1 < top.size(); ++i)
      if (top[i] < top[i + 1])
        throw ArgError("--top: entries must be weakly decreasing");
    noun = "patterns";
    for (const auto &p : enumerate_gt(top)) {
      items.push_back({{"rows", p.rows}, {"weight", poly_json(gt_weight(p))}});
      lines.push_back(to_string(p) + "\t" + gt_weight(p).to_string());
    }
  } else {
    throw ArgError("--model: expected colorings, states or gt, got '" + a.model + "'");
  }
  if (f == Format::Json) {
    json params = {{"model", a.model}};
    std::cout << run_report("enumerate", params, items, {{noun, items.size()}}).dump(2) << "\n";
    return 0;
  }
  for (const auto &l : lines)
    std::cout << l << "\n";
  if (f == Format::Pretty)
    std::cout << lines.size() << " " << noun << "\n";
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Iwahori Whittaker function values on metaplectic covers of GL(r+1)"};
  app.require_subcommand(1);

  PhiArgs phi_args;
  auto *phi_cmd = app.add_subcommand("phi", "Evaluate phi_w(lambda, w')");
  phi_cmd->add_option("--rank", phi_args.rank, "Rank r of GL(r+1)")->required();
  phi_cmd->add_option("--lambda", phi_args.lambda, "Weight, comma separated")->required();
  phi_cmd->add_option("--w", phi_args.w, "Output permutation")->required();
  phi_cmd->add_option("--wprime", phi_args.wprime, "Input permutation");
  phi_cmd->add_option("--n", phi_args.n, "Cover degree");
  phi_cmd->add_option("--cover-scale", phi_args.cover_scale, "Scale of Gauss-sum residues");
  phi_cmd->add_option("--model", phi_args.model, "gt, lusztig or lattice");
  add_common(phi_cmd, phi_args.common);

  TableArgs table_args;
  auto *table_cmd = app.add_subcommand("table", "List every contributing colored datum");
  table_cmd->add_option("--rank", table_args.rank, "Rank r of GL(r+1)")->required();
  table_cmd->add_option("--lambda", table_args.lambda, "Weight, comma separated")->required();
  table_cmd->add_option("--wprime", table_args.wprime, "Input permutation");
  table_cmd->add_option("--n", table_args.n, "Cover degree");
  table_cmd->add_option("--cover-scale", table_args.cover_scale, "Scale of Gauss-sum residues");
  table_cmd->add_option("--model", table_args.model, "gt, lusztig or lattice");
  add_common(table_cmd, table_args.common);

  VerifyArgs verify_args;
  auto *verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify_cmd->add_option("suite", verify_args.suite, "equivalence, spherical, cs, cancellation, bijections, colorings")
      ->required();
  verify_cmd->add_option("--max-rank", verify_args.max_rank, "Largest rank r");
  verify_cmd->add_option("--max-part", verify_args.max_part, "Largest part of lambda + rho");
  verify_cmd->add_option("--max-n", verify_args.max_n, "Largest cover degree");
  verify_cmd->add_option("--q-value", verify_args.q_value, "Numeric spot check at q = p/q");
  add_common(verify_cmd, verify_args.common);

  EnumArgs enum_args;
  auto *enum_cmd = app.add_subcommand("enumerate", "Dump colorings, lattice states or GT patterns");
  enum_cmd->add_option("--model", enum_args.model, "colorings, states or gt")->required();
  enum_cmd->add_option("--word", enum_args.word, "Reduced word, comma separated");
  enum_cmd->add_option("--vanishing", enum_args.vanishing, "0/1 per letter, 1 = positive entry");
  enum_cmd->add_option("--wprime", enum_args.wprime, "Input permutation");
  enum_cmd->add_option("--mu", enum_args.mu, "Top boundary lambda + rho");
  enum_cmd->add_option("--w", enum_args.w, "Exit order (default: all)");
  enum_cmd->add_option("--top", enum_args.top, "Top row of the GT patterns");
  enum_cmd->add_option("--n", enum_args.n, "Cover degree");
  enum_cmd->add_option("--cover-scale", enum_args.cover_scale, "Scale of Gauss-sum residues");
  add_common(enum_cmd, enum_args.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  bool timing = false;
  int code = 0;
  try {
    if (phi_cmd->parsed()) {
      timing = phi_args.common.timing;
      code = run_phi(phi_args);
    } else if (table_cmd->parsed()) {
      timing = table_args.common.timing;
      code = run_table(table_args);
    } else if (verify_cmd->parsed()) {
      timing = verify_args.common.timing;
      code = run_verify(verify_args);
    } else if (enum_cmd->parsed()) {
      timing = enum_args.common.timing;
      code = run_enumerate(enum_args);
    }
  } catch (const ArgError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (timing)
    std::cerr << "wall time: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
              << " s\n";
  return code;
}
