#pragma once

// Command-line front end. run() is the whole program minus process setup so
// tests can drive it in-process.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "causal_implicits.hpp"

namespace causal_implicits::cli {

enum ExitCode { kOk = 0, kViolation = 1, kInputError = 2, kBudget = 3 };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CausalGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Budget precedence: command-line flags, then CAUSAL_IMPLICITS_BUDGET
/// ("PAIRS" or "PAIRS:DEGREE"), then the defaults.
inline GroebnerOptions budget(std::optional<std::size_t> pairs, std::optional<unsigned> degree,
                              double seconds, unsigned threads, const char* env) {
  GroebnerOptions o;
  if (env && *env) {
    std::string s(env);
    std::size_t colon = s.find(':');
    try {
      std::size_t used = 0;
      o.max_pairs = std::stoull(s.substr(0, colon), &used);
      if (used != s.substr(0, colon).size()) throw std::invalid_argument(s);
      if (colon != std::string::npos) {
        std::string d = s.substr(colon + 1);
        o.max_degree = static_cast<unsigned>(std::stoul(d, &used));
        if (used != d.size()) throw std::invalid_argument(s);
      }
    } catch (const std::logic_error&) {
      throw InputError("CAUSAL_IMPLICITS_BUDGET must be PAIRS or PAIRS:DEGREE, got '" + s + "'");
    }
  }
  if (pairs) o.max_pairs = *pairs;
  if (degree) o.max_degree = *degree;
  o.max_seconds = seconds;
  o.threads = threads == 0 ? 1 : threads;
  return o;
}

inline std::vector<DistributionRequest> requests_from(const CausalGraph& g,
                                                      const std::vector<std::string>& specs,
                                                      bool all, bool default_observational) {
  if (all) {
    if (!specs.empty()) throw InputError("--intervene and --all-interventions are exclusive");
    return all_interventions(g);
  }
  std::vector<DistributionRequest> out;
  for (const auto& s : specs) out.push_back(parse_request(g, s));
  if (out.empty() && default_observational) out.push_back({});
  return normalize_requests(g, std::move(out));
}

inline bool is_all_interventions(const CausalGraph& g, const std::vector<DistributionRequest>& rs) {
  return rs == all_interventions(g);
}

/// The closed form whose preconditions `requests` meet, if any.
inline std::optional<Method> closed_form_for(const CausalGraph& g,
                                             const std::vector<DistributionRequest>& rs) {
  if (g.has_hidden()) return std::nullopt;
  if (rs.size() == 1) return Method::prop1;
  if (rs.size() == 2 && rs[0].t.empty()) {
    NameList rest = set_difference(g, g.observed(), rs[1].t.names());
    if (is_ancestral(g, rest)) return Method::prop2;
    try {
      antichain_split(g, rs[1].t.names());
      return Method::lemma1;
    } catch (const PreconditionError&) {
    }
  }
  if (is_all_interventions(g, rs)) return Method::eq19;
  return std::nullopt;
}

inline ConstraintSet derive_with(const CausalGraph& g, const std::vector<DistributionRequest>& rs,
                                 Method m, const GroebnerOptions& o) {
  auto two = [&](const char* what) -> const Assignment& {
    if (rs.size() != 2 || !rs[0].t.empty())
      throw PreconditionError(std::string(what) + " needs the observational request plus one intervention");
    return rs[1].t;
  };
  switch (m) {
    case Method::direct: return kernel_direct(g, rs, o);
    case Method::two_step: return kernel_two_step(g, rs, o);
    case Method::prop1:
      if (rs.size() != 1) throw PreconditionError("prop1 derives a single distribution");
      return kernel_prop1(g, rs[0].t, o);
    case Method::eq19:
      if (!is_all_interventions(g, rs)) throw PreconditionError("eq19 needs --all-interventions");
      return kernel_eq19(g);
    case Method::prop2: return kernel_prop2(g, two("prop2"), o);
    case Method::lemma1: return kernel_lemma1(g, two("lemma1"), o);
    case Method::reduced: return reduced_kernel(g, rs, o);
  }
  throw InputError("unknown method");
}

/// `auto`: reduce when relations exist and need no extra families, else a
/// closed form, else two-step for hidden variables, else direct.
inline ConstraintSet derive_auto(const CausalGraph& g, const std::vector<DistributionRequest>& rs,
                                 const GroebnerOptions& o) {
  std::vector<std::string> log;
  RelationLedger ledger = poly_relations(g, rs);
  Method m;
  if (!ledger.steps.empty() && ledger.added.empty()) {
    m = Method::reduced;
  } else {
    log.push_back(ledger.steps.empty() ? "auto: no product or sum relation applies"
                                       : "auto: relations need factor families outside the request");
    if (auto c = closed_form_for(g, rs)) {
      m = *c;
    } else if (g.has_hidden()) {
      log.push_back("auto: no closed form for graphs with hidden variables");
      m = Method::two_step;
    } else {
      log.push_back("auto: no closed form matches the request");
      m = Method::direct;
    }
  }
  ConstraintSet c = derive_with(g, rs, m, o);
  log.push_back("auto: chose " + to_string(m));
  c.notes.insert(c.notes.begin(), log.begin(), log.end());
  return c;
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

inline std::string components_text(const CausalGraph& g, const std::vector<DistributionRequest>& rs) {
  std::ostringstream os;
  os << "c-components:";
  for (const auto& c : c_components(g)) os << " " << family_name(c);
  os << "\n";
  std::string edge;
  if (components_edge_free(g, &edge)) {
    os << "decomposition: eligible\n";
    for (const auto& s : decompose_by_c_components(g))
      os << "  sub-problem " << family_name(s.component) << ": family P_"
         << family_name(set_difference(g, g.observed(), s.component)) << ", "
         << joint_space_params(g, s.family).size() << " joint parameters\n";
  } else {
    os << "decomposition: ineligible (edge " << edge << " inside a c-component)\n";
  }
  for (const auto& r : rs) {
    NameList rest = set_difference(g, g.observed(), r.t.names());
    os << "do(" << r.to_string() << "): V\\T = " << family_name(rest)
       << ", ancestral: " << (is_ancestral(g, rest) ? "yes" : "no") << ", c-components of G(V\\T):";
    for (const auto& c : c_components(induced_subgraph(g, rest))) os << " " << family_name(c);
    os << "\n";
  }
  return os.str();
}

inline Json components_json(const CausalGraph& g, const std::vector<DistributionRequest>& rs) {
  Json comps = Json::array();
  for (const auto& c : c_components(g)) comps.push_back(c);
  std::string edge;
  bool ok = components_edge_free(g, &edge);
  Json j{{"graph_digest", graph_digest(g)}, {"c_components", comps}, {"decomposable", ok}};
  if (!ok) j["offending_edge"] = edge;
  Json per = Json::array();
  for (const auto& r : rs) {
    NameList rest = set_difference(g, g.observed(), r.t.names());
    Json cc = Json::array();
    for (const auto& c : c_components(induced_subgraph(g, rest))) cc.push_back(c);
    per.push_back(Json{{"t", to_json(r.t)}, {"free", rest}, {"ancestral", is_ancestral(g, rest)}, {"c_components", cc}});
  }
  j["requests"] = std::move(per);
  return j;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial equality constraints of causal Bayesian networks", "causal-implicits"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string graph_path, method_name = "auto", out_path, format = "text", constraints_path;
  std::vector<std::string> intervene, table_paths;
  bool all = false;
  std::optional<std::size_t> max_pairs;
  std::optional<unsigned> max_degree;
  double max_seconds = 0, tol = kDefaultTolerance;
  unsigned threads = 1;
  std::uint64_t seed = 1;

  auto common = [&](CLI::App* sub, bool with_requests) {
    sub->add_option("--graph", graph_path, "graph file")->required();
    if (with_requests) {
      sub->add_option("--intervene", intervene, "intervention, e.g. V1=1 (empty: observational)")
          ->allow_extra_args(false)
          ->take_all();
      sub->add_flag("--all-interventions", all, "every proper-subset intervention");
    }
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto budgets = [&](CLI::App* sub) {
    sub->add_option("--max-pairs", max_pairs, "S-pair budget");
    sub->add_option("--max-degree", max_degree, "degree budget");
    sub->add_option("--max-seconds", max_seconds, "time budget per basis (0: none)");
    sub->add_option("--threads", threads, "concurrent S-pair reductions");
  };

  CLI::App* derive = app.add_subcommand("derive", "derive the constraint ideal");
  common(derive, true);
  budgets(derive);
  derive->add_option("--method", method_name,
                     "auto, direct, two-step, prop1, eq19, prop2, lemma1 or reduce");
  CLI::App* reduce = app.add_subcommand("reduce", "list product and sum relations");
  common(reduce, true);
  CLI::App* simulate = app.add_subcommand("simulate", "exact tables from a random model");
  common(simulate, true);
  simulate->add_option("--seed", seed, "random seed");
  CLI::App* checkc = app.add_subcommand("check", "evaluate constraints on tables");
  common(checkc, false);
  budgets(checkc);
  checkc->add_option("--constraints", constraints_path, "constraint file")->required();
  checkc->add_option("--tables", table_paths, "table file (JSON or CSV)")->required();
  checkc->add_option("--tol", tol, "absolute tolerance for empirical tables");
  CLI::App* components = app.add_subcommand("components", "c-components and ancestral sets");
  common(components, true);

  std::vector<std::string> argv_store{"causal-implicits"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    CausalGraph g = load_graph(graph_path);
    const bool json = format == "json";
    if (derive->parsed()) {
      GroebnerOptions o = budget(max_pairs, max_degree, max_seconds, threads,
                                 std::getenv("CAUSAL_IMPLICITS_BUDGET"));
      auto rs = requests_from(g, intervene, all, true);
      ConstraintSet c = method_name == "auto" ? derive_auto(g, rs, o)
                                              : derive_with(g, rs, parse_method(method_name), o);
      emit(json ? to_json(c).dump(2) + "\n" : to_text(c), out_path, out);
    } else if (reduce->parsed()) {
      RelationLedger l = poly_relations(g, requests_from(g, intervene, all, true));
      emit(json ? to_json(l).dump(2) + "\n" : to_text(g, l), out_path, out);
    } else if (simulate->parsed()) {
      auto rs = requests_from(g, intervene, all, true);
      auto tables = exact_distributions(g, random_model(g, seed), rs);
      emit(json ? to_json(g, tables).dump(2) + "\n" : tables_to_csv(g, tables), out_path, out);
    } else if (checkc->parsed()) {
      ConstraintSet c = parse_constraint_set(read_file(constraints_path));
      if (!c.graph_digest.empty() && c.graph_digest != graph_digest(g))
        throw InputError("constraints were derived for a different graph (digest " + c.graph_digest + ")");
      std::vector<DistributionTable> tables;
      for (const auto& p : table_paths) {
        std::vector<DistributionTable> ts;
        try {
          ts = parse_tables(g, read_file(p));
        } catch (const ParseError& e) {
          throw InputError(p + ": " + e.what());
        }
        for (auto& t : ts) {
          validate_table(g, t);
          tables.push_back(std::move(t));
        }
      }
      CheckReport r = check(c, tables, tol);
      emit(json ? to_json(r, c).dump(2) + "\n" : to_text(r, c), out_path, out);
      return r.all_pass ? kOk : kViolation;
    } else if (components->parsed()) {
      auto rs = requests_from(g, intervene, all, false);
      emit(json ? components_json(g, rs).dump(2) + "\n" : components_text(g, rs), out_path, out);
    }
    return kOk;
  } catch (const IntractableError& e) {
    err << "error: intractable: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace causal_implicits::cli
