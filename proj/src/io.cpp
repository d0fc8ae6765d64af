#include "jlog/io.hpp"

#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace jlog {

using json = nlohmann::json;

namespace {

constexpr int kVersion = 1;

json parse_json(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

void expect_header(const json &j, const char *format) {
  if (!j.is_object() || j.value("format", "") != format)
    throw FormatError(std::string("not a ") + format + " file");
  if (j.value("version", 0) != kVersion)
    throw FormatError(std::string("unsupported ") + format + " version");
}

template <typename T> T field(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    throw FormatError(std::string("field '") + key + "' has the wrong type");
  }
}

json cs_to_json(const ConstantSpec &cs) {
  json out = json::object();
  for (const auto &[c, ids] : cs.assignment)
    out[c] = std::vector<std::string>(ids.begin(), ids.end());
  return out;
}

ConstantSpec cs_from_json(const json &j) {
  if (!j.is_object())
    throw FormatError("'cs' must be an object");
  ConstantSpec cs;
  for (const auto &[c, ids] : j.items()) {
    if (!ids.is_array())
      throw FormatError("scheme list of " + c + " must be an array");
    for (const auto &id : ids)
      cs.assignment[c].insert(id.get<std::string>());
  }
  // Round-trip through the text format to reuse its validation.
  return parse_constant_spec(print_constant_spec(cs));
}

const char *side_name(Side s) {
  return s == Side::Antecedent ? "ant" : "succ";
}

Side side_from(const json &j) {
  std::string s = j.get<std::string>();
  if (s == "ant")
    return Side::Antecedent;
  if (s == "succ")
    return Side::Succedent;
  throw FormatError("unknown side '" + s + "'");
}

json node_to_json(const ProofNode &n) {
  json out;
  out["sequent"] = print_sequent(n.sequent);
  out["rule"] = rule_name(n.rule);
  json principal = json::array();
  for (const auto &p : n.principal)
    principal.push_back({{"side", side_name(p.side)}, {"index", p.index}});
  out["principal"] = principal;
  json links = json::array();
  for (const auto &l : n.links) {
    json link;
    for (Side s : {Side::Antecedent, Side::Succedent}) {
      json targets = json::array();
      for (const auto &t : l.side(s))
        targets.push_back({{"side", side_name(t.side)},
                           {"index", t.index},
                           {"path", t.path}});
      link[s == Side::Antecedent ? "antecedent" : "succedent"] = targets;
    }
    links.push_back(link);
  }
  out["links"] = links;
  json premises = json::array();
  for (const auto &q : n.premises)
    premises.push_back(node_to_json(*q));
  out["premises"] = premises;
  return out;
}

SequentProof node_from_json(const json &j) {
  auto node = std::make_shared<ProofNode>();
  node->sequent =
      parse_sequent(field<std::string>(j, "sequent"), Dialect::Modal);
  node->rule = rule_from_string(field<std::string>(j, "rule"));
  for (const auto &p : field<json>(j, "principal"))
    node->principal.push_back(
        {side_from(p.at("side")), p.at("index").get<std::size_t>()});
  for (const auto &q : field<json>(j, "premises"))
    node->premises.push_back(node_from_json(q));
  if (!j.contains("links")) {
    // make_node validates and links by formula matching.
    return make_node(node->rule, node->sequent, node->principal,
                     node->premises);
  }
  for (const auto &l : field<json>(j, "links")) {
    Link link;
    for (Side s : {Side::Antecedent, Side::Succedent})
      for (const auto &t :
           field<json>(l, s == Side::Antecedent ? "antecedent" : "succedent"))
        link.side(s).push_back({side_from(t.at("side")),
                                t.at("index").get<std::size_t>(),
                                t.at("path").get<OccurrencePath>()});
    node->links.push_back(std::move(link));
  }
  return node;
}

std::vector<std::size_t> worlds_of(WorldSet s) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < 64; ++w)
    if (s >> w & 1)
      out.push_back(w);
  return out;
}

WorldSet set_from(const json &j, std::size_t worlds) {
  WorldSet s = 0;
  for (const auto &w : j) {
    auto i = w.get<std::size_t>();
    if (i >= worlds)
      throw FormatError("world index " + std::to_string(i) + " out of range");
    s |= WorldSet{1} << i;
  }
  return s;
}

json neighborhoods_to_json(const std::vector<std::set<WorldSet>> &n) {
  json out = json::array();
  for (const auto &fam : n) {
    json sets = json::array();
    for (WorldSet s : fam)
      sets.push_back(worlds_of(s));
    out.push_back(sets);
  }
  return out;
}

std::vector<std::set<WorldSet>> neighborhoods_from(const json &j,
                                                   std::size_t worlds) {
  if (!j.is_array() || j.size() != worlds)
    throw FormatError("one neighborhood list per world expected");
  std::vector<std::set<WorldSet>> out(worlds);
  for (std::size_t w = 0; w < worlds; ++w)
    for (const auto &s : j[w])
      out[w].insert(set_from(s, worlds));
  return out;
}

std::size_t world_count(const json &j) {
  auto n = field<std::size_t>(j, "worlds");
  if (n == 0 || n > 64)
    throw FormatError("a model has between 1 and 64 worlds");
  return n;
}

} // namespace

std::string write_derivation(const Derivation &d) {
  json out;
  out["format"] = "jlog-derivation";
  out["version"] = kVersion;
  out["dialect"] = dialect_name(d.dialect);
  if (d.cs)
    out["cs"] = cs_to_json(*d.cs);
  json steps = json::array();
  for (const auto &s : d.steps) {
    json step;
    step["kind"] = step_kind_name(s.kind);
    step["formula"] = print_formula(s.formula);
    if (s.kind == Step::Kind::Axiom)
      step["scheme"] = s.scheme;
    if (s.kind == Step::Kind::MP) {
      step["major"] = s.major;
      step["minor"] = s.minor;
    }
    steps.push_back(step);
  }
  out["steps"] = steps;
  out["conclusion"] = d.conclusion;
  return out.dump(2) + "\n";
}

Derivation read_derivation(const std::string &text) {
  json j = parse_json(text);
  expect_header(j, "jlog-derivation");
  Derivation d;
  d.dialect = dialect_from_string(field<std::string>(j, "dialect"));
  if (d.dialect == Dialect::Modal)
    throw FormatError("derivations are in JE or JEM");
  d.cs = std::make_shared<const ConstantSpec>(
      j.contains("cs") ? cs_from_json(j["cs"]) : ConstantSpec::total());
  for (const auto &s : field<json>(j, "steps")) {
    Step step;
    std::string kind = field<std::string>(s, "kind");
    if (kind == "hyp")
      step.kind = Step::Kind::Hyp;
    else if (kind == "axiom")
      step.kind = Step::Kind::Axiom;
    else if (kind == "an")
      step.kind = Step::Kind::AN;
    else if (kind == "mp")
      step.kind = Step::Kind::MP;
    else
      throw FormatError("unknown step kind '" + kind + "'");
    step.formula = parse_formula(field<std::string>(s, "formula"), d.dialect);
    if (step.kind == Step::Kind::Axiom)
      step.scheme = field<std::string>(s, "scheme");
    if (step.kind == Step::Kind::MP) {
      step.major = field<std::size_t>(s, "major");
      step.minor = field<std::size_t>(s, "minor");
    }
    d.steps.push_back(std::move(step));
  }
  if (d.steps.empty())
    throw FormatError("a derivation needs at least one step");
  d.conclusion = j.contains("conclusion") ? field<std::size_t>(j, "conclusion")
                                          : d.steps.size() - 1;
  if (d.conclusion >= d.steps.size())
    throw FormatError("conclusion index out of range");
  return d;
}

std::string print_derivation(const Derivation &d) {
  std::ostringstream out;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step &s = d.steps[i];
    out << i << ". " << print_formula(s.formula) << "    ";
    switch (s.kind) {
    case Step::Kind::Hyp:
      out << "hyp";
      break;
    case Step::Kind::Axiom:
      out << "axiom " << s.scheme;
      break;
    case Step::Kind::AN:
      out << "AN";
      break;
    case Step::Kind::MP:
      out << "MP " << s.major << ", " << s.minor;
      break;
    }
    out << '\n';
  }
  return out.str();
}

std::string write_sequent_proof(const SequentProof &p, Calculus calculus) {
  json out;
  out["format"] = "jlog-sequent-proof";
  out["version"] = kVersion;
  out["calculus"] = calculus_name(calculus);
  out["root"] = node_to_json(*p);
  return out.dump(2) + "\n";
}

ProofFile read_sequent_proof(const std::string &text) {
  json j = parse_json(text);
  expect_header(j, "jlog-sequent-proof");
  ProofFile f;
  f.calculus = calculus_from_string(field<std::string>(j, "calculus"));
  try {
    f.proof = node_from_json(field<json>(j, "root"));
  } catch (const json::exception &e) {
    throw FormatError(std::string("malformed proof node: ") + e.what());
  }
  return f;
}

std::string write_quasi_model(const QuasiModel &m, Dialect dialect) {
  json out;
  out["format"] = "jlog-model";
  out["version"] = kVersion;
  out["kind"] = "quasi";
  out["dialect"] = dialect_name(dialect);
  out["worlds"] = m.worlds;
  out["neighborhoods"] = neighborhoods_to_json(m.neighborhoods);
  json valuation = json::array(), tables = json::array();
  for (const auto &e : m.evaluations) {
    valuation.push_back(e.true_atoms);
    json table = json::object();
    for (const auto &[t, fs] : e.table) {
      json list = json::array();
      for (const auto &f : fs)
        list.push_back(print_formula(f));
      table[print_term(t)] = list;
    }
    tables.push_back(table);
  }
  out["valuation"] = valuation;
  out["tables"] = tables;
  return out.dump(2) + "\n";
}

QuasiModel read_quasi_model(const std::string &text, Dialect *dialect) {
  json j = parse_json(text);
  expect_header(j, "jlog-model");
  if (j.value("kind", "") != "quasi")
    throw FormatError("expected a quasi-model");
  Dialect d = dialect_from_string(field<std::string>(j, "dialect"));
  if (d == Dialect::Modal)
    throw FormatError("quasi-models are for JE or JEM");
  if (dialect)
    *dialect = d;
  QuasiModel m;
  m.worlds = world_count(j);
  m.neighborhoods = neighborhoods_from(field<json>(j, "neighborhoods"), m.worlds);
  json valuation = field<json>(j, "valuation"), tables = field<json>(j, "tables");
  if (valuation.size() != m.worlds || tables.size() != m.worlds)
    throw FormatError("one valuation and one table per world expected");
  for (std::size_t w = 0; w < m.worlds; ++w) {
    FiniteBasicEvaluation e;
    e.dialect = d;
    for (const auto &a : valuation[w])
      e.true_atoms.insert(a.get<std::string>());
    for (const auto &[key, list] : tables[w].items()) {
      Sort sort = key.starts_with("e(") || key.starts_with("m(") ||
                          key.starts_with("x") || key.starts_with("v")
                      ? Sort::Justification
                      : Sort::Proof;
      Term t;
      try {
        t = parse_term(key, sort, d);
      } catch (const SyntaxError &) {
        Sort other =
            sort == Sort::Proof ? Sort::Justification : Sort::Proof;
        t = parse_term(key, other, d);
      }
      FormulaSet &fs = e.table[t];
      for (const auto &f : list)
        fs.insert(parse_formula(f.get<std::string>(), d));
    }
    m.evaluations.push_back(std::move(e));
  }
  return m;
}

std::string write_neighborhood_model(const NeighborhoodModel &m) {
  json out;
  out["format"] = "jlog-model";
  out["version"] = kVersion;
  out["kind"] = "neighborhood";
  out["worlds"] = m.worlds;
  out["neighborhoods"] = neighborhoods_to_json(m.neighborhoods);
  out["valuation"] = m.valuation;
  return out.dump(2) + "\n";
}

NeighborhoodModel read_neighborhood_model(const std::string &text) {
  json j = parse_json(text);
  expect_header(j, "jlog-model");
  if (j.value("kind", "") != "neighborhood")
    throw FormatError("expected a neighborhood model");
  NeighborhoodModel m;
  m.worlds = world_count(j);
  m.neighborhoods = neighborhoods_from(field<json>(j, "neighborhoods"), m.worlds);
  json valuation = field<json>(j, "valuation");
  if (valuation.size() != m.worlds)
    throw FormatError("one valuation per world expected");
  for (const auto &v : valuation)
    m.valuation.push_back(v.get<std::set<std::string>>());
  return m;
}

std::string write_realization(const RealizationResult &r,
                              const Formula &source) {
  json out;
  out["format"] = "jlog-realization";
  out["version"] = kVersion;
  out["calculus"] = calculus_name(r.calculus);
  out["mode"] = r.simplified ? "simplify" : "strict";
  out["source"] = print_formula(source);
  out["realized"] = print_formula(r.realized);
  json log = json::array();
  for (const auto &s : r.log) {
    json entry;
    entry["node"] = s.node;
    entry["rule"] = rule_name(s.rule);
    entry["provisional"] = print_term(s.provisional);
    entry["replacement"] = print_term(s.replacement);
    json terms = json::array();
    for (std::size_t i = 0; i < s.terms.size(); ++i)
      terms.push_back({{"term", print_term(s.terms[i])},
                       {"proves", print_formula(s.proves[i])}});
    entry["internalized"] = terms;
    log.push_back(entry);
  }
  out["log"] = log;
  out["derivation"] = json::parse(write_derivation(r.derivation));
  return out.dump(2) + "\n";
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw FormatError("cannot write " + path);
  out << text;
}

} // namespace jlog
