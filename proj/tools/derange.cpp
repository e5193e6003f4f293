// Command-line front end: statistics of a single word, family enumeration,
// identity verification, the minima table, moment expansion, series presets,
// the orthogonality report, and the bijection checkers.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad usage or bad input.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "derange/bijections.hpp"
#include "derange/families.hpp"
#include "derange/identities.hpp"
#include "derange/multipoly.hpp"
#include "derange/numbers.hpp"
#include "derange/orthopoly.hpp"
#include "derange/permutation.hpp"
#include "derange/series.hpp"
#include "derange/signed_permutation.hpp"

namespace {

using njson = nlohmann::ordered_json;
using namespace derange;

struct Output {
  std::string format = "text";  // text | csv | json
  bool deterministic = false;
};

void add_output_opts(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_flag("--deterministic", out.deterministic,
                "omit timing so output is byte-stable");
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const njson& report) { std::cout << report.dump(2) << "\n"; }

njson int_list(const std::vector<int>& v) { return njson(v); }

// ---------------------------------------------------------------------------

// compact digit form of a signed window, one digit per entry ("-2-413")
std::string expand_compact(const std::string& word) {
  std::string out;
  bool neg = false;
  for (char c : word) {
    if (c == '-') {
      neg = true;
      continue;
    }
    if (c < '1' || c > '9') throw std::invalid_argument("bad window: " + word);
    if (!out.empty()) out += ',';
    if (neg) out += '-';
    out += c;
    neg = false;
  }
  if (neg || out.empty()) throw std::invalid_argument("bad window: " + word);
  return out;
}

int run_stats(const std::string& word, bool force_signed, const Output& out) {
  const bool signed_word = force_signed || word.find('-') != std::string::npos;
  njson rep;
  rep["command"] = "stats";
  if (signed_word) {
    const SignedPermutation s = SignedPermutation::parse(
        word.find(',') != std::string::npos ? word : expand_compact(word));
    const TypeBStats st = type_b_statistics(s);
    rep["window"] = s.str();
    rep["type"] = "B";
    rep["cycles"] = cycles_of(s).str();
    rep["exc_b"] = int_list(st.exc_b);
    rep["anexc_b"] = int_list(st.anexc_b);
    rep["rlm_b"] = int_list(st.rlm_b);
    rep["neg"] = st.neg;
    rep["nsum"] = st.nsum;
    rep["cyc"] = st.cyc;
  } else {
    const Permutation p = Permutation::parse(word);
    const StatProfile st = statistics(p);
    rep["word"] = p.str();
    rep["type"] = "A";
    rep["cycles"] = cycles_of(p).str();
    rep["exc_i"] = int_list(st.exc_i);
    rep["exc_v"] = int_list(st.exc_v);
    rep["rlm_i"] = int_list(st.rlm_i);
    rep["rlm_v"] = int_list(st.rlm_v);
    rep["fix"] = int_list(st.fix);
    rep["cyc"] = st.cyc;
    rep["inv"] = st.inv;
    rep["derangement"] = is_derangement(p);
  }
  if (out.format == "json") {
    emit(rep);
    return 0;
  }
  const std::string sep = out.format == "csv" ? "," : ": ";
  for (const auto& [key, val] : rep.items()) {
    if (key == "command") continue;
    if (val.is_array()) {
      std::string flat;
      for (const auto& e : val) {
        if (!flat.empty()) flat += out.format == "csv" ? ";" : " ";
        flat += e.dump();
      }
      std::cout << key << sep << flat << "\n";
    } else if (val.is_string()) {
      std::cout << key << sep << val.get<std::string>() << "\n";
    } else {
      std::cout << key << sep << val.dump() << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_enumerate(const std::string& family, int n, int j, const std::string& weight,
                  bool sum_only, const Output& out) {
  const auto kind = family_from_name(family);
  if (!kind) throw std::invalid_argument("unknown family: " + family);
  const FamilySpec spec{*kind, n, j};
  std::optional<WeightSpec> w;
  if (!weight.empty()) {
    w = weight_from_name(weight);
    if (!w) throw std::invalid_argument("unknown weight: " + weight);
  }

  std::vector<std::pair<std::string, std::string>> rows;  // word, weight string
  Poly total;
  const auto visit_a = [&](const Permutation& p) {
    total += w ? weight_of(p, *w) : Poly(1);
    if (!sum_only) rows.emplace_back(p.str(), w ? weight_of(p, *w).str() : "");
  };
  const auto visit_b = [&](const SignedPermutation& p) {
    total += w ? weight_of(p, *w) : Poly(1);
    if (!sum_only) rows.emplace_back(p.str(), w ? weight_of(p, *w).str() : "");
  };
  if (is_type_b(*kind))
    for_each_signed(spec, visit_b);
  else
    for_each(spec, visit_a);

  if (out.format == "json") {
    njson rep;
    rep["command"] = "enumerate";
    rep["params"] = {{"family", family}, {"n", n}};
    if (is_sliced(*kind)) rep["params"]["j"] = j;
    if (w) rep["params"]["weight"] = weight;
    if (!sum_only) {
      njson elems = njson::array();
      for (const auto& [word, wt] : rows) {
        njson e;
        e["word"] = word;
        if (w) e["weight"] = wt;
        elems.push_back(std::move(e));
      }
      rep["elements"] = std::move(elems);
    }
    rep[w ? "sum" : "count"] = total.str();
    emit(rep);
    return 0;
  }
  if (!sum_only)
    for (const auto& [word, wt] : rows) {
      std::cout << word;
      if (w) std::cout << (out.format == "csv" ? "," : "  ") << wt;
      std::cout << "\n";
    }
  std::cout << (w ? "sum" : "count") << (out.format == "csv" ? "," : ": ") << total.str()
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

njson case_json(const IdentityCase& c) {
  njson e;
  e["id"] = c.id;
  e["n"] = c.n;
  e["j"] = c.j ? njson(*c.j) : njson(nullptr);
  e["pass"] = c.pass;
  e["lhs"] = c.lhs.str();
  e["rhs"] = c.rhs.str();
  return e;
}

int report_cases(const std::string& command, const njson& params,
                 const std::vector<IdentityCase>& cases, const Stopwatch& timer,
                 const Output& out) {
  bool all = true;
  for (const auto& c : cases) all = all && c.pass;
  if (out.format == "json") {
    njson rep;
    rep["command"] = command;
    rep["params"] = params;
    njson list = njson::array();
    for (const auto& c : cases) list.push_back(case_json(c));
    rep["cases"] = std::move(list);
    rep["all_pass"] = all;
    if (!out.deterministic) rep["wall_ms"] = timer.ms();
    emit(rep);
  } else if (out.format == "csv") {
    std::cout << "id,n,j,pass\n";
    for (const auto& c : cases)
      std::cout << c.id << "," << c.n << "," << (c.j ? std::to_string(*c.j) : "") << ","
                << (c.pass ? "1" : "0") << "\n";
  } else {
    for (const auto& c : cases) {
      std::cout << c.id << " n=" << c.n;
      if (c.j) std::cout << " j=" << *c.j;
      std::cout << (c.pass ? "  PASS" : "  FAIL");
      if (!c.pass) std::cout << "  lhs=" << c.lhs.str() << "  rhs=" << c.rhs.str();
      std::cout << "\n";
    }
    std::cout << (all ? "all cases pass" : "FAILURES above") << "\n";
  }
  return all ? 0 : 1;
}

int run_verify(bool all, const std::string& id, std::optional<int> n, std::optional<int> j,
               int max_n, int max_nb, const Output& out) {
  Stopwatch timer;
  std::vector<IdentityCase> cases;
  njson params;
  if (all) {
    cases = verify_all_identities(max_n, max_nb);
    params = {{"all", true}, {"max_n", max_n}, {"max_nb", max_nb}};
  } else if (!id.empty()) {
    if (n) {
      cases.push_back(verify_identity(id, *n, j));
      params = {{"id", normalize_identity_id(id)}, {"n", *n}};
      if (j) params["j"] = *j;
    } else {
      const IdentitySpec& spec = identity_spec(id);
      const int cap = spec.type_b ? max_nb : max_n;
      cases = verify_identity_range(spec.id, cap);
      params = {{"id", spec.id}, {"max_n", cap}};
    }
  } else {
    throw std::invalid_argument("verify needs --all or --id");
  }
  return report_cases("verify", params, cases, timer, out);
}

// ---------------------------------------------------------------------------

int run_table(int max_n, const Output& out) {
  bool routes_agree = true;
  std::vector<std::vector<Int>> rows;
  for (int n = 2; n <= max_n; ++n) {
    auto row = rlm_row_enum(n);
    routes_agree = routes_agree && row == rlm_row_cf(n);
    rows.push_back(std::move(row));
  }
  if (out.format == "json") {
    njson rep;
    rep["command"] = "table";
    rep["params"] = {{"max_n", max_n}};
    njson list = njson::array();
    for (int n = 2; n <= max_n; ++n) {
      njson r;
      r["n"] = n;
      njson counts = njson::array();
      for (const Int& v : rows[static_cast<std::size_t>(n) - 2])
        counts.push_back(v.str());
      r["counts"] = std::move(counts);
      list.push_back(std::move(r));
    }
    rep["rows"] = std::move(list);
    rep["routes_agree"] = routes_agree;
    emit(rep);
  } else if (out.format == "csv") {
    for (int n = 2; n <= max_n; ++n) {
      std::cout << n;
      for (const Int& v : rows[static_cast<std::size_t>(n) - 2]) std::cout << "," << v;
      std::cout << "\n";
    }
  } else {
    for (int n = 2; n <= max_n; ++n) {
      std::cout << "n=" << n << ":";
      for (const Int& v : rows[static_cast<std::size_t>(n) - 2]) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << (routes_agree ? "enumeration and fraction agree"
                               : "ROUTE MISMATCH")
              << "\n";
  }
  return routes_agree ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_jfraction(const std::string& preset, int order, const std::string& var,
                  const Output& out) {
  JFractionSpec spec;
  if (preset == "full") {
    spec = jf_full();
  } else if (preset == "dnx") {
    spec = jf_dnx(var == "a" ? Var::a() : Var::x());
  } else if (preset == "dn1") {
    spec = jf_dn1();
  } else {
    throw std::invalid_argument("unknown preset: " + preset);
  }
  const auto mu = jf_moments(spec, order);
  if (out.format == "json") {
    njson rep;
    rep["command"] = "jfraction";
    rep["params"] = {{"preset", preset}, {"order", order}};
    njson list = njson::array();
    for (const Poly& m : mu) list.push_back(m.str());
    rep["moments"] = std::move(list);
    emit(rep);
  } else {
    for (std::size_t k = 0; k < mu.size(); ++k)
      std::cout << "mu_" << k << (out.format == "csv" ? "," : " = ") << mu[k].str()
                << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_series(const std::string& name, int order, const Output& out) {
  std::optional<PowerSeries> s;
  if (name == "derangements") s = egf_derangements(order);
  else if (name == "dn1") s = egf_dn1(order);
  else if (name == "dsub2") s = ogf_dsub2(order);
  else if (name == "lambda-minus1") s = ogf_lambda_minus1(order);
  else throw std::invalid_argument("unknown series: " + name);

  const bool egf = s->flavor() == Flavor::egf;
  if (out.format == "json") {
    njson rep;
    rep["command"] = "series";
    rep["params"] = {{"name", name}, {"order", order}};
    rep["flavor"] = egf ? "egf" : "ogf";
    njson list = njson::array();
    for (int n = 0; n <= order; ++n) {
      njson e;
      e["n"] = n;
      e["term"] = s->term(n).str();
      if (egf) e["count"] = s->count(n).str();
      list.push_back(std::move(e));
    }
    rep["terms"] = std::move(list);
    emit(rep);
  } else {
    for (int n = 0; n <= order; ++n) {
      if (out.format == "csv") {
        std::cout << n << "," << s->term(n).str();
        if (egf) std::cout << "," << s->count(n).str();
      } else {
        std::cout << "n=" << n << "  term=" << s->term(n).str();
        if (egf) std::cout << "  count=" << s->count(n).str();
      }
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_ortho(int n_max, const Output& out) {
  const OrthogonalityReport r = orthogonality_check(n_max);
  const auto p = corecursive_P(n_max);
  if (out.format == "json") {
    njson rep;
    rep["command"] = "ortho";
    rep["params"] = {{"n_max", n_max}};
    njson polys = njson::array();
    for (const Poly& q : p) polys.push_back(q.str());
    rep["polynomials"] = std::move(polys);
    rep["moments_agree"] = r.moments_agree;
    rep["zeros_ok"] = r.zeros_ok;
    rep["norms_ok"] = r.norms_ok;
    rep["all_pass"] = r.pass();
    emit(rep);
  } else {
    for (std::size_t k = 0; k < p.size(); ++k)
      std::cout << "P_" << k << " = " << p[k].str() << "\n";
    std::cout << "moments agree: " << (r.moments_agree ? "yes" : "NO") << "\n";
    std::cout << "annihilation below the diagonal: " << (r.zeros_ok ? "yes" : "NO") << "\n";
    std::cout << "norms match the product formula: " << (r.norms_ok ? "yes" : "NO") << "\n";
  }
  return r.pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_bijections(int max_n, int max_nb, const Output& out) {
  Stopwatch timer;
  struct Line {
    std::string label;
    bool pass;
  };
  std::vector<Line> lines;
  for (int n = 2; n <= max_n; ++n)
    for (int j = 1; j <= n - 1; ++j) {
      const SliceReport r = check_slice_bijections(n, j);
      lines.push_back({"slice n=" + std::to_string(n) + " j=" + std::to_string(j),
                       r.pass()});
    }
  for (int n = 2; n <= max_nb; ++n)
    lines.push_back({"matching n=" + std::to_string(n), typeb_matching(n).pass()});
  for (int n = 2; n <= max_nb; ++n)
    lines.push_back({"recursion n=" + std::to_string(n), check_typeb_recursion(n).pass()});

  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (out.format == "json") {
    njson rep;
    rep["command"] = "bijections";
    rep["params"] = {{"max_n", max_n}, {"max_nb", max_nb}};
    njson list = njson::array();
    for (const auto& l : lines) list.push_back({{"check", l.label}, {"pass", l.pass}});
    rep["checks"] = std::move(list);
    rep["all_pass"] = all;
    if (!out.deterministic) rep["wall_ms"] = timer.ms();
    emit(rep);
  } else {
    for (const auto& l : lines)
      std::cout << l.label << (l.pass ? "  PASS" : "  FAIL") << "\n";
    std::cout << (all ? "all checks pass" : "FAILURES above") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact statistics, identities and bijections for signed derangements"};
  app.require_subcommand(1);
  int rc = 0;

  // stats
  auto* stats = app.add_subcommand("stats", "statistics of one word or window");
  std::string stats_word;
  bool stats_signed = false;
  Output stats_out;
  stats->add_option("word", stats_word, "one-line word (4153627) or window (-2,1)")
      ->required();
  stats->add_flag("--signed", stats_signed, "treat an all-positive window as type B");
  add_output_opts(stats, stats_out);
  stats->callback([&] { rc = run_stats(stats_word, stats_signed, stats_out); });

  // enumerate
  auto* enu = app.add_subcommand("enumerate", "list a family, optionally weighted");
  std::string enu_family, enu_weight;
  int enu_n = 0, enu_j = 0;
  bool enu_sum = false;
  Output enu_out;
  enu->add_option("--family", enu_family, "Sn Dn Dnj Dnj_tilde Dnj_bar Unj Enj Bn "
                                          "Bn_plus Bn_minus Bn_mixed Bn_prime "
                                          "Bn_dprime Cnk Bn_E")
      ->required();
  enu->add_option("--n", enu_n, "size")->required();
  enu->add_option("--j", enu_j, "slice index (or k for Cnk)");
  enu->add_option("--weight", enu_weight, "weight name, see README");
  enu->add_flag("--sum", enu_sum, "print only the weighted sum");
  add_output_opts(enu, enu_out);
  enu->callback(
      [&] { rc = run_enumerate(enu_family, enu_n, enu_j, enu_weight, enu_sum, enu_out); });

  // verify
  auto* ver = app.add_subcommand("verify", "check identities against enumeration");
  bool ver_all = false;
  std::string ver_id;
  std::optional<int> ver_n, ver_j;
  int ver_max_n = 7, ver_max_nb = 5;
  Output ver_out;
  ver->add_flag("--all", ver_all, "the whole catalog");
  ver->add_option("--id", ver_id, "one identity by name");
  ver->add_option("--n", ver_n, "single size");
  ver->add_option("--j", ver_j, "single slice index");
  ver->add_option("--max-n", ver_max_n, "largest unsigned size (default 7)");
  ver->add_option("--max-nb", ver_max_nb, "largest signed size (default 5)");
  add_output_opts(ver, ver_out);
  ver->callback([&] {
    if (!ver->get_subcommands().empty()) return;  // nested form already ran
    rc = run_verify(ver_all, ver_id, ver_n, ver_j, ver_max_n, ver_max_nb, ver_out);
  });

  // verify bijections (nested) and top-level alias
  int bij_max_n = 7, bij_max_nb = 5;
  Output bij_out;
  const auto add_bij_opts = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", bij_max_n, "largest unsigned size (default 7)");
    cmd->add_option("--max-nb", bij_max_nb, "largest signed size (default 5)");
    add_output_opts(cmd, bij_out);
    cmd->callback([&] { rc = run_bijections(bij_max_n, bij_max_nb, bij_out); });
  };
  add_bij_opts(ver->add_subcommand("bijections", "replay the constructive maps"));
  add_bij_opts(app.add_subcommand("bijections", "replay the constructive maps"));

  // table
  auto* tab = app.add_subcommand("table", "minima histogram rows, both routes");
  int tab_max_n = 8;
  Output tab_out;
  tab->add_option("--max-n", tab_max_n, "largest size (default 8)");
  add_output_opts(tab, tab_out);
  tab->callback([&] { rc = run_table(tab_max_n, tab_out); });

  // jfraction
  auto* jf = app.add_subcommand("jfraction", "moment expansion of a fraction preset");
  std::string jf_preset = "full", jf_var = "x";
  int jf_order = 6;
  Output jf_out;
  jf->add_option("--preset", jf_preset, "full, dnx or dn1")
      ->check(CLI::IsMember({"full", "dnx", "dn1"}));
  jf->add_option("--order", jf_order, "number of moments (default 6)");
  jf->add_option("--var", jf_var, "marker variable for dnx: x or a")
      ->check(CLI::IsMember({"x", "a"}));
  add_output_opts(jf, jf_out);
  jf->callback([&] { rc = run_jfraction(jf_preset, jf_order, jf_var, jf_out); });

  // series
  auto* ser = app.add_subcommand("series", "closed-form generating function presets");
  std::string ser_name = "derangements";
  int ser_order = 8;
  Output ser_out;
  ser->add_option("--name", ser_name, "derangements, dn1, dsub2 or lambda-minus1")
      ->check(CLI::IsMember({"derangements", "dn1", "dsub2", "lambda-minus1"}));
  ser->add_option("--order", ser_order, "truncation order (default 8)");
  add_output_opts(ser, ser_out);
  ser->callback([&] { rc = run_series(ser_name, ser_order, ser_out); });

  // ortho
  auto* ort = app.add_subcommand("ortho", "orthogonality report for the displayed family");
  int ort_n_max = 6;
  Output ort_out;
  ort->add_option("--n-max", ort_n_max, "largest polynomial degree (default 6)");
  add_output_opts(ort, ort_out);
  ort->callback([&] { rc = run_ortho(ort_n_max, ort_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
