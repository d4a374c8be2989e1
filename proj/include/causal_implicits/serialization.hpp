#pragma once

// JSON, CSV and text forms of the public data: parameters, polynomials,
// constraint sets, relation ledgers and distribution tables.

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "causal_implicits/reduce.hpp"
#include "causal_implicits/verify.hpp"

namespace causal_implicits {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Parameters and polynomials

inline Json to_json(const Assignment& a) {
  Json j = Json::object();
  for (const auto& [n, v] : a.entries()) j[n] = v;
  return j;
}

/// Graph-free: entries kept in the order written.
inline Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("assignment must be a JSON object");
  std::vector<Assignment::Entry> e;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) throw InputError("value of " + k + " must be an integer");
    e.emplace_back(k, v.get<int>());
  }
  return Assignment(std::move(e));
}

inline Assignment assignment_from_json(const CausalGraph& g, const Json& j) {
  return g.make_assignment(assignment_from_json(j).entries());
}

inline Json to_json(const ParamId& p) {
  switch (p.kind()) {
    case ParamId::Kind::joint:
      return Json{{"kind", "joint"}, {"t", to_json(p.as_joint().t)}, {"v", to_json(p.as_joint().free)}};
    case ParamId::Kind::model_q: {
      const auto& q = p.as_q();
      return Json{{"kind", "q"}, {"var", q.var}, {"value", q.value}, {"pa", to_json(q.pa)}, {"u", to_json(q.u)}};
    }
    case ParamId::Kind::model_r:
      return Json{{"kind", "r"}, {"var", p.as_r().var}, {"value", p.as_r().value}};
    case ParamId::Kind::aux:
      return Json{{"kind", "aux"}, {"tag", p.as_aux().tag}};
  }
  return {};
}

inline ParamId param_from_json(const Json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "joint")
      return ParamId::joint(assignment_from_json(j.at("t")), assignment_from_json(j.at("v")));
    if (kind == "q")
      return ParamId(ModelQId{j.at("var").get<std::string>(), j.at("value").get<int>(),
                              assignment_from_json(j.at("pa")), assignment_from_json(j.at("u"))});
    if (kind == "r") return ParamId(ModelRId{j.at("var").get<std::string>(), j.at("value").get<int>()});
    if (kind == "aux") return ParamId::aux(j.at("tag").get<std::string>());
    throw InputError("unknown parameter kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed parameter: ") + e.what());
  }
}

inline Json to_json(const Polynomial& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json factors = Json::array();
    for (const auto& [p, e] : t.mono.factors()) factors.push_back(Json{{"param", to_json(p)}, {"exp", e}});
    terms.push_back(Json{{"coef", t.coef.get_str()}, {"factors", std::move(factors)}});
  }
  return terms;
}

inline Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be a JSON array of terms");
  std::vector<Term> terms;
  try {
    for (const auto& t : j) {
      std::vector<Monomial::Factor> f;
      for (const auto& x : t.at("factors")) f.emplace_back(param_from_json(x.at("param")), x.at("exp").get<unsigned>());
      terms.push_back({parse_rational(t.at("coef").get<std::string>()), Monomial::from_factors(std::move(f))});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed polynomial: ") + e.what());
  }
  return Polynomial::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Constraint sets

inline Json requests_to_json(const std::vector<DistributionRequest>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(to_json(r.t));
  return out;
}

inline Json to_json(const ConstraintSet& c) {
  Json gens = Json::array();
  for (const auto& g : c.ideal.generators()) gens.push_back(to_json(g));
  Json j{{"method", to_string(c.method)}, {"graph_digest", c.graph_digest}, {"requests", requests_to_json(c.requests)}};
  if (!c.notes.empty()) j["notes"] = c.notes;
  j["generators"] = std::move(gens);
  return j;
}

inline ConstraintSet constraint_set_from_json(const Json& j) {
  ConstraintSet c;
  try {
    c.method = parse_method(j.at("method").get<std::string>());
    c.graph_digest = j.at("graph_digest").get<std::string>();
    for (const auto& r : j.at("requests")) c.requests.push_back({assignment_from_json(r)});
    if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(polynomial_from_json(g));
    c.ideal = Ideal(std::move(gens));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed constraint set: ") + e.what());
  }
  return c;
}

/// Header comments, then one generator per line in canonical text.
inline std::string to_text(const ConstraintSet& c) {
  std::ostringstream os;
  os << "# method: " << to_string(c.method) << "\n";
  os << "# graph: " << c.graph_digest << "\n";
  for (const auto& r : c.requests) os << "# request: do(" << r.to_string() << ")\n";
  for (const auto& n : c.notes) os << "# note: " << n << "\n";
  for (const auto& g : c.ideal.generators()) os << g.to_string() << "\n";
  return os.str();
}

inline ConstraintSet constraint_set_from_text(std::string_view text) {
  ConstraintSet c;
  std::vector<Polynomial> gens;
  std::istringstream is{std::string(text)};
  std::string line;
  auto after = [](const std::string& l, std::string_view key) { return l.substr(key.size()); };
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# method: ", 0) == 0) c.method = parse_method(after(line, "# method: "));
      else if (line.rfind("# graph: ", 0) == 0) c.graph_digest = after(line, "# graph: ");
      else if (line.rfind("# note: ", 0) == 0) c.notes.push_back(after(line, "# note: "));
      else if (line.rfind("# request: do(", 0) == 0 && line.back() == ')') {
        std::string spec = line.substr(14, line.size() - 15);
        if (spec.empty()) {
          c.requests.push_back({});
        } else {
          detail::TextCursor cur(spec);
          c.requests.push_back({detail::parse_entries(cur, "")});
        }
      }
      continue;
    }
    gens.push_back(parse_polynomial(line));
  }
  c.ideal = Ideal(std::move(gens));
  return c;
}

/// JSON when the text starts with '{', the line format otherwise.
inline ConstraintSet parse_constraint_set(std::string_view text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string_view::npos && text[k] == '{') {
    try {
      return constraint_set_from_json(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  return constraint_set_from_text(text);
}

// ---------------------------------------------------------------------------
// Relation ledgers

inline Json to_json(const RelationStep& s) {
  return Json{{"family", to_json(s.family.t)}, {"rule", to_string(s.rule)}, {"witness", requests_to_json(s.witnesses)}};
}

inline RelationStep relation_step_from_json(const Json& j) {
  RelationStep s;
  s.family = {assignment_from_json(j.at("family"))};
  std::string rule = j.at("rule").get<std::string>();
  if (rule == "c-component-product") s.rule = RelationRule::c_component_product;
  else if (rule == "ancestral-sum") s.rule = RelationRule::ancestral_sum;
  else throw InputError("unknown relation rule '" + rule + "'");
  for (const auto& w : j.at("witness")) s.witnesses.push_back({assignment_from_json(w)});
  return s;
}

inline Json to_json(const RelationLedger& l) {
  Json rel = Json::array();
  for (const auto& g : l.relations.generators()) rel.push_back(to_json(g));
  Json steps = Json::array();
  for (const auto& s : l.steps) steps.push_back(to_json(s));
  return Json{{"joint_parameters", l.joint_parameter_count},
              {"residual", requests_to_json(l.residual)},
              {"residual_after_products", requests_to_json(l.residual_after_products)},
              {"added", requests_to_json(l.added)},
              {"relations", std::move(rel)},
              {"steps", std::move(steps)}};
}

inline std::string family_name(const NameList& f) {
  if (f.empty()) return "{}";
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + f[k];
  return s + "}";
}

inline std::string to_text(const CausalGraph& g, const RelationLedger& l) {
  std::ostringstream os;
  os << "joint parameters: " << l.joint_parameter_count << "\n";
  auto fams = [&](const char* label, const std::vector<DistributionRequest>& rs) {
    os << label << ":";
    for (const auto& f : families_of(g, rs)) os << " " << family_name(f);
    os << "\n";
  };
  fams("families after products", l.residual_after_products);
  fams("residual families", l.residual);
  fams("added families", l.added);
  os << "residual parameters: " << (l.residual.empty() ? 0 : joint_space_params(g, l.residual).size()) << "\n";
  os << "steps:\n";
  for (const auto& s : l.steps) {
    os << "  do(" << s.family.to_string() << ") " << to_string(s.rule) << ":";
    for (const auto& w : s.witnesses) os << " do(" << w.to_string() << ")";
    os << "\n";
  }
  os << "relations:\n";
  for (const auto& g2 : l.relations.generators()) os << "  " << g2.to_string() << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Distribution tables

inline Json to_json(const CausalGraph& g, const DistributionTable& t) {
  Json entries = Json::array();
  for (const auto& v : all_assignments(g, set_difference(g, g.observed(), t.request.t.names()))) {
    auto it = t.entries.find(v);
    if (it == t.entries.end()) continue;
    Json p;
    if (t.mode == DistributionTable::Mode::exact)
      p = it->second.get_str();
    else
      p = it->second.get_d();
    entries.push_back(Json{{"v", to_json(v)}, {"p", std::move(p)}});
  }
  return Json{{"t", to_json(t.request.t)}, {"entries", std::move(entries)}};
}

inline Json to_json(const CausalGraph& g, const std::vector<DistributionTable>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(to_json(g, t));
  return out;
}

namespace detail {

/// "num/den" and integers are exact; decimals make a table empirical.
inline Rational parse_probability(const Json& p, bool& empirical) {
  if (p.is_string()) {
    std::string s = p.get<std::string>();
    if (s.find_first_of(".eE") != std::string::npos) empirical = true;
    return parse_rational(s);
  }
  if (p.is_number_integer()) return Rational(p.get<long>());
  if (p.is_number()) {
    empirical = true;
    return parse_rational(p.dump());
  }
  throw InputError("probability must be a number or a string");
}

/// The free part of `v`; values given for intervened variables must match t.
inline Assignment free_part(const CausalGraph& g, const Assignment& t, const Assignment& v) {
  for (const auto& [n, x] : t.entries()) {
    auto have = v.get(n);
    if (have && *have != x)
      throw InputError("entry " + v.to_string() + " disagrees with intervention " + t.to_string());
  }
  return g.make_assignment(v.without(t.names()).entries());
}

}  // namespace detail

inline DistributionTable table_from_json(const CausalGraph& g, const Json& j) {
  DistributionTable t;
  bool empirical = false;
  try {
    t.request = {assignment_from_json(g, j.at("t"))};
    for (const auto& e : j.at("entries")) {
      Assignment v = detail::free_part(g, t.request.t, assignment_from_json(e.at("v")));
      if (!t.entries.emplace(v, detail::parse_probability(e.at("p"), empirical)).second)
        throw InputError("duplicate entry " + v.to_string());
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed table: ") + e.what());
  }
  t.mode = empirical ? DistributionTable::Mode::empirical : DistributionTable::Mode::exact;
  return t;
}

/// A single table object or an array of them.
inline std::vector<DistributionTable> tables_from_json(const CausalGraph& g, const Json& j) {
  std::vector<DistributionTable> out;
  if (j.is_array())
    for (const auto& x : j) out.push_back(table_from_json(g, x));
  else
    out.push_back(table_from_json(g, j));
  return out;
}

/// Columns: `do` (intervention, e.g. V1=1; empty for observational), one per
/// observed variable, then `p`.
inline std::string tables_to_csv(const CausalGraph& g, const std::vector<DistributionTable>& ts) {
  std::ostringstream os;
  NameList obs = g.observed();
  os << "do";
  for (const auto& n : obs) os << "," << n;
  os << ",p\n";
  for (const auto& t : ts)
    for (const auto& v : all_assignments(g, set_difference(g, obs, t.request.t.names()))) {
      auto it = t.entries.find(v);
      if (it == t.entries.end()) continue;
      Assignment full = merge(g, t.request.t, v);
      std::string spec = t.request.to_string();
      os << (spec.find(',') != std::string::npos ? "\"" + spec + "\"" : spec);
      for (const auto& n : obs) os << "," << *full.get(n);
      os << ",";
      if (t.mode == DistributionTable::Mode::exact)
        os << it->second.get_str();
      else
        os << Json(it->second.get_d()).dump();
      os << "\n";
    }
  return os.str();
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') cur += c;
  }
  out.push_back(cur);
  for (auto& s : out) {
    std::size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
  }
  return out;
}

}  // namespace detail

inline std::vector<DistributionTable> tables_from_csv(const CausalGraph& g, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    header = detail::split_csv_line(line);
  }
  if (header.empty()) throw InputError("empty CSV table");
  int do_col = -1, p_col = -1;
  std::vector<std::pair<int, std::string>> var_cols;
  for (int k = 0; k < static_cast<int>(header.size()); ++k) {
    if (header[k] == "do") do_col = k;
    else if (header[k] == "p") p_col = k;
    else if (g.contains(header[k]) && g.is_observed(header[k])) var_cols.emplace_back(k, header[k]);
    else throw ParseError(lineno, "unknown column '" + header[k] + "'");
  }
  if (p_col < 0) throw ParseError(lineno, "missing column 'p'");
  std::map<Assignment, DistributionTable> tables;
  std::map<Assignment, bool> empirical;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
    auto cells = detail::split_csv_line(line);
    if (cells.size() != header.size()) throw ParseError(lineno, "expected " + std::to_string(header.size()) + " cells");
    try {
      Assignment t = do_col >= 0 ? parse_request(g, cells[do_col]).t : Assignment{};
      std::vector<Assignment::Entry> e;
      for (const auto& [k, n] : var_cols)
        if (!cells[k].empty()) e.emplace_back(n, std::stoi(cells[k]));
      Assignment v = detail::free_part(g, t, Assignment(std::move(e)));
      auto& table = tables[t];
      table.request = {t};
      bool emp = cells[p_col].find_first_of(".eE") != std::string::npos;
      empirical[t] = empirical[t] || emp;
      if (!table.entries.emplace(v, parse_rational(cells[p_col])).second)
        throw InputError("duplicate entry " + v.to_string());
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(lineno, e.what());
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "malformed value");
    }
  }
  std::vector<DistributionTable> out;
  for (auto& [t, table] : tables) {
    table.mode = empirical[t] ? DistributionTable::Mode::empirical : DistributionTable::Mode::exact;
    out.push_back(std::move(table));
  }
  return out;
}

/// JSON when the text starts with '{' or '[', CSV otherwise.
inline std::vector<DistributionTable> parse_tables(const CausalGraph& g, std::string_view text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string_view::npos && (text[k] == '{' || text[k] == '[')) {
    try {
      return tables_from_json(g, Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  return tables_from_csv(g, text);
}

// ---------------------------------------------------------------------------
// Check reports

inline Json to_json(const CheckReport& r, const ConstraintSet& c) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json e{{"index", x.index}, {"generator", c.ideal.generators()[x.index].to_string()}};
    if (r.exact) e["value"] = x.value.get_str();
    else e["value"] = x.value.get_d();
    e["pass"] = x.pass;
    results.push_back(std::move(e));
  }
  return Json{{"verdict", r.all_pass ? "pass" : "fail"},
              {"exact", r.exact},
              {"tolerance", r.tolerance},
              {"no_constraints", r.vacuous},
              {"generators", results.size()},
              {"failures", std::count_if(r.results.begin(), r.results.end(), [](const auto& x) { return !x.pass; })},
              {"results", std::move(results)}};
}

inline std::string to_text(const CheckReport& r, const ConstraintSet& c) {
  std::ostringstream os;
  std::size_t fails = 0;
  for (const auto& x : r.results) {
    if (x.pass) continue;
    ++fails;
    os << "FAIL #" << x.index << " value " << (r.exact ? x.value.get_str() : Json(x.value.get_d()).dump())
       << ": " << c.ideal.generators()[x.index].to_string() << "\n";
  }
  if (r.vacuous) os << "no constraints\n";
  os << (r.exact ? "exact" : "empirical") << " check, tolerance " << Json(r.tolerance).dump() << ": "
     << r.results.size() - fails << "/" << r.results.size() << " generators pass\n";
  os << "verdict: " << (r.all_pass ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace causal_implicits
