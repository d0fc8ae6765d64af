#include "cli.hpp"

#include "jlog/countermodel.hpp"
#include "jlog/errors.hpp"
#include "jlog/fuzz.hpp"
#include "jlog/hilbert.hpp"
#include "jlog/io.hpp"
#include "jlog/occurrence.hpp"
#include "jlog/syntax.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <optional>
#include <ostream>

namespace jlog::cli {

namespace {

using json = nlohmann::json;

enum Exit { Ok = 0, Failure = 1, InputError = 2 };

struct Options {
  bool json_out = false;
  std::string dialect;
  std::string calculus = "GE";
  std::string cs_file;
  std::size_t depth = 10;
  bool strict = false;
  bool simplify = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::string output;
  std::string log;
  std::string input;
  std::string proof_file;
  std::string discharge;
  std::vector<std::string> atom_subst;
  std::vector<std::string> var_subst;
  std::vector<std::string> formulas;
  std::size_t world = 0;
  bool explanatory = false;
  bool skip_independent = false;
  std::size_t max_worlds = 3;
};

/// Collects the report; printed either as text or as one JSON record.
class Report {
public:
  explicit Report(std::string command) { record_["command"] = command; }

  template <typename T> void set(const std::string &key, const T &value) {
    record_[key] = value;
  }
  void line(const std::string &s) { text_ += s + "\n"; }
  json &record() { return record_; }

  int finish(std::ostream &out, bool as_json, int code) {
    record_["status"] = code == Ok ? "ok" : code == Failure ? "fail" : "error";
    record_["exit"] = code;
    if (as_json)
      out << record_.dump(2) << "\n";
    else
      out << text_;
    return code;
  }

private:
  json record_;
  std::string text_;
};

Dialect derivation_dialect(const std::string &s) {
  Dialect d = dialect_from_string(s);
  if (d == Dialect::Modal)
    throw FormatError("expected JE or JEM");
  return d;
}

Formula parse_in(const std::string &text, const std::string &dialect) {
  if (!dialect.empty())
    return parse_formula(text, dialect_from_string(dialect));
  // The first dialect that accepts the formula.
  for (Dialect d : {Dialect::Modal, Dialect::JE}) {
    try {
      return parse_formula(text, d);
    } catch (const DialectError &) {
    }
  }
  return parse_formula(text, Dialect::JEM);
}

ConstantSpec load_cs(const std::string &file) {
  return file.empty() ? ConstantSpec::total()
                      : parse_constant_spec(read_file(file));
}

Calculus calculus_of(const Options &o) {
  return calculus_from_string(o.calculus);
}

std::pair<std::string, std::string> split_binding(const std::string &s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0)
    throw FormatError("expected NAME=VALUE, got '" + s + "'");
  return {s.substr(0, eq), s.substr(eq + 1)};
}

Formula as_formula(const Sequent &s) {
  Formula ant;
  for (auto it = s.antecedent.rbegin(); it != s.antecedent.rend(); ++it)
    ant = ant.valid() ? Formula::conj(*it, ant) : *it;
  Formula succ = big_or(s.succedent);
  return ant.valid() ? Formula::implies(ant, succ) : succ;
}

json worlds_json(WorldSet s, std::size_t n) {
  json out = json::array();
  for (std::size_t w = 0; w < n; ++w)
    if (s >> w & 1)
      out.push_back(w);
  return out;
}

void save(const std::string &path, const std::string &text, Report &r,
          const char *what) {
  if (path.empty())
    return;
  write_file(path, text);
  r.set(what, path);
  r.line(std::string(what) + " written to " + path);
}

int cmd_parse(const Options &o, Report &r) {
  Formula f = parse_in(o.input, o.dialect);
  Dialect d = o.dialect.empty() ? infer_dialect(f) : dialect_from_string(o.dialect);
  r.set("formula", print_formula(f));
  r.set("dialect", dialect_name(d));
  r.line(print_formula(f));
  r.line("dialect: " + std::string(dialect_name(d)));
  if (d != Dialect::Modal) {
    try {
      Formula m = forgetful(f);
      r.set("forgetful", print_formula(m));
      r.line("forgetful: " + print_formula(m));
    } catch (const ProofOfPresent &) {
    }
  }
  return Ok;
}

int cmd_check(const Options &o, Report &r) {
  Derivation d = read_derivation(read_file(o.input));
  try {
    Judgment j = check_derivation(d);
    json hyps = json::array();
    std::string line;
    for (const auto &h : j.hypotheses) {
      hyps.push_back(print_formula(h));
      line += (line.empty() ? "" : ", ") + print_formula(h);
    }
    r.set("hypotheses", hyps);
    r.set("conclusion", print_formula(j.conclusion));
    r.set("steps", d.steps.size());
    r.line("ok: " + line + (line.empty() ? "" : " ") + "|- " +
           print_formula(j.conclusion));
    return Ok;
  } catch (const DerivationError &e) {
    r.set("error", e.what());
    r.set("step", e.step());
    r.line(std::string("invalid: ") + e.what());
    return Failure;
  }
}

int cmd_deduce(const Options &o, Report &r) {
  Derivation d = read_derivation(read_file(o.input));
  Formula a = parse_formula(o.discharge, d.dialect);
  try {
    Derivation out = deduction_transform(d, a, {o.skip_independent});
    r.set("conclusion", print_formula(out.conclusion_formula()));
    r.set("steps", out.steps.size());
    r.line("|- " + print_formula(out.conclusion_formula()) + "  (" +
           std::to_string(out.steps.size()) + " steps)");
    save(o.output, write_derivation(out), r, "derivation");
    if (o.output.empty()) {
      r.record()["derivation"] = json::parse(write_derivation(out));
      r.line(print_derivation(out));
    }
    return Ok;
  } catch (const NotDerivable &e) {
    r.set("error", e.what());
    r.line(std::string("failed: ") + e.what());
    return Failure;
  }
}

int cmd_internalize(const Options &o, Report &r) {
  Derivation d = read_derivation(read_file(o.input));
  try {
    Internalized in = internalize(d);
    r.set("term", print_term(in.term));
    r.set("conclusion", print_formula(in.derivation.conclusion_formula()));
    r.line(print_formula(in.derivation.conclusion_formula()));
    save(o.output, write_derivation(in.derivation), r, "derivation");
    return Ok;
  } catch (const HasHypotheses &e) {
    r.set("error", e.what());
    r.line(std::string("failed: ") + e.what());
    return Failure;
  }
}

int cmd_subst(const Options &o, Report &r) {
  Derivation d = read_derivation(read_file(o.input));
  Substitution s;
  for (const auto &b : o.atom_subst) {
    auto [name, value] = split_binding(b);
    s.atoms[name] = parse_formula(value, d.dialect);
  }
  for (const auto &b : o.var_subst) {
    auto [name, value] = split_binding(b);
    Term v;
    try {
      v = parse_term(name, Sort::Proof, d.dialect);
    } catch (const Error &) {
      v = parse_term(name, Sort::Justification, d.dialect);
    }
    if (v.kind() != Term::Kind::ProofVar && v.kind() != Term::Kind::JustVar)
      throw FormatError("'" + name + "' is not a variable");
    s.vars[v] = parse_term(value, v.sort(), d.dialect);
  }
  Derivation out = substitute_derivation(d, s);
  Judgment j = check_derivation(out);
  r.set("conclusion", print_formula(j.conclusion));
  r.line("|- " + print_formula(j.conclusion));
  save(o.output, write_derivation(out), r, "derivation");
  return Ok;
}

int cmd_seq_check(const Options &o, Report &r) {
  ProofFile f = read_sequent_proof(read_file(o.input));
  r.set("calculus", calculus_name(f.calculus));
  r.set("conclusion", print_sequent(f.proof->sequent));
  try {
    check_sequent_proof(f.proof, f.calculus);
    r.set("size", proof_size(f.proof));
    r.set("height", proof_height(f.proof));
    r.line("ok: " + print_sequent(f.proof->sequent) + " in " +
           calculus_name(f.calculus));
    return Ok;
  } catch (const SequentProofError &e) {
    r.set("error", e.what());
    r.set("node", e.node());
    r.line(std::string("invalid: ") + e.what());
    return Failure;
  }
}

int cmd_prove(const Options &o, Report &r) {
  Calculus c = calculus_of(o);
  Sequent s = parse_sequent(o.input, Dialect::Modal);
  r.set("calculus", calculus_name(c));
  r.set("sequent", print_sequent(s));
  r.set("depth", o.depth);
  auto p = prove_bounded(s, c, o.depth);
  if (p) {
    r.set("proved", true);
    r.set("size", proof_size(*p));
    r.line("proved in " + std::string(calculus_name(c)) + ": " +
           print_sequent(s));
    save(o.output, write_sequent_proof(*p, c), r, "proof");
    if (o.output.empty()) {
      r.record()["proof"] = json::parse(write_sequent_proof(*p, c));
      r.line(print_proof(*p));
    }
    return Ok;
  }
  r.set("proved", false);
  r.line("no proof within depth " + std::to_string(o.depth));
  if (auto cm = find_countermodel(as_formula(s), c, o.max_worlds)) {
    r.record()["countermodel"] = json::parse(write_neighborhood_model(cm->model));
    r.set("countermodel_world", cm->world);
    r.line("countermodel with " + std::to_string(cm->model.worlds) +
           " world(s), falsified at world " + std::to_string(cm->world));
  }
  return Failure;
}

int cmd_realize(const Options &o, Report &r) {
  if (o.strict && o.simplify)
    throw FormatError("--strict and --simplify exclude each other");
  ConstantSpec cs = load_cs(o.cs_file);
  Calculus c = calculus_of(o);
  std::optional<RealizationResult> result;
  Formula source;
  if (!o.proof_file.empty()) {
    ProofFile f = read_sequent_proof(read_file(o.proof_file));
    c = f.calculus;
    const Sequent &s = f.proof->sequent;
    if (!s.antecedent.empty() || s.succedent.size() != 1)
      throw FormatError("the proof must end in a sequent => A");
    source = s.succedent[0];
    result = realize(f.proof, c, cs);
  } else {
    if (o.input.empty())
      throw FormatError("give a formula or --proof");
    source = parse_formula(o.input, Dialect::Modal);
    result = realize_formula(source, c, cs, o.depth);
  }
  r.set("calculus", calculus_name(c));
  r.set("source", print_formula(source));
  if (!result) {
    r.set("proved", false);
    r.line("no proof of " + print_formula(source) + " within depth " +
           std::to_string(o.depth));
    return Failure;
  }
  if (o.simplify)
    result = simplify(*result, cs);
  try {
    verify_realization(*result, source, c, cs);
  } catch (const RealizationError &e) {
    r.set("error", e.what());
    r.line(std::string("verification failed: ") + e.what());
    return Failure;
  }
  r.set("mode", result->simplified ? "simplify" : "strict");
  r.set("realized", print_formula(result->realized));
  r.set("steps", result->derivation.steps.size());
  r.line(print_formula(result->realized));
  save(o.output, write_derivation(result->derivation), r, "derivation");
  save(o.log, write_realization(*result, source), r, "log");
  if (o.output.empty())
    r.record()["derivation"] = json::parse(write_derivation(result->derivation));
  return Ok;
}

int check_neighborhood(const Options &o, const std::string &text, Report &r) {
  NeighborhoodModel m = read_neighborhood_model(text);
  r.set("kind", "neighborhood");
  r.set("worlds", m.worlds);
  r.set("monotone", is_monotone(m));
  r.line(std::to_string(m.worlds) + " world(s), " +
         (is_monotone(m) ? "monotone" : "not monotone"));
  bool all = true;
  json results = json::array();
  for (const auto &text : o.formulas) {
    Formula f = parse_formula(text, Dialect::Modal);
    if (o.world >= m.worlds)
      throw UnknownWorld("world " + std::to_string(o.world) + " out of range");
    bool holds = modal_truth(m, o.world, f);
    all = all && holds;
    results.push_back({{"formula", print_formula(f)},
                       {"holds", holds},
                       {"truth_set", worlds_json(modal_truth_set(m, f), m.worlds)}});
    r.line(print_formula(f) + (holds ? " holds" : " fails") + " at world " +
           std::to_string(o.world));
  }
  r.set("formulas", results);
  return all ? Ok : Failure;
}

int cmd_model_check(const Options &o, Report &r) {
  std::string text = read_file(o.input);
  json header;
  try {
    header = json::parse(text);
  } catch (const json::parse_error &e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  if (header.is_object() && header.value("kind", "") == "neighborhood")
    return check_neighborhood(o, text, r);

  Dialect d = Dialect::JE;
  QuasiModel m = read_quasi_model(text, &d);
  ConstantSpec cs = load_cs(o.cs_file);
  r.set("kind", "quasi");
  r.set("dialect", dialect_name(d));
  r.set("worlds", m.worlds);
  int code = Ok;

  auto violations = check_modular(m, d, cs);
  json vs = json::array();
  for (const auto &v : violations) {
    vs.push_back({{"condition", v.condition}, {"detail", v.detail}});
    r.line("violation (" + v.condition + "): " + v.detail);
  }
  r.set("violations", vs);
  if (violations.empty())
    r.line("modular model: ok");
  else
    code = Failure;

  std::vector<Formula> formulas;
  for (const auto &t : o.formulas)
    formulas.push_back(parse_formula(t, d));
  json results = json::array();
  for (const auto &f : formulas) {
    bool holds = model_truth(m, o.world, f);
    results.push_back({{"formula", print_formula(f)},
                       {"holds", holds},
                       {"truth_set", worlds_json(truth_set(m, f), m.worlds)}});
    r.line(print_formula(f) + (holds ? " holds" : " fails") + " at world " +
           std::to_string(o.world));
    if (!holds)
      code = Failure;
  }
  r.set("formulas", results);

  if (o.explanatory) {
    auto missing = check_fully_explanatory(m, formulas);
    json ms = json::array();
    for (const auto &w : missing) {
      ms.push_back({{"world", w.world}, {"formula", print_formula(w.formula)}});
      r.line("not explained at world " + std::to_string(w.world) + ": " +
             print_formula(w.formula));
    }
    r.set("unexplained", ms);
    if (!missing.empty())
      code = Failure;
  }
  return code;
}

int cmd_fuzz(const Options &o, Report &r) {
  Dialect d = derivation_dialect(o.dialect.empty() ? "JE" : o.dialect);
  auto start = std::chrono::steady_clock::now();
  FuzzReport f = soundness_fuzz(d, o.trials, o.seed);
  double seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  r.set("dialect", dialect_name(d));
  r.set("seed", o.seed);
  r.set("trials", f.trials);
  r.set("redrawn", f.redrawn);
  r.set("instances", f.instances);
  r.set("per_scheme", f.per_scheme);
  r.set("seconds", seconds);
  json fs = json::array();
  for (const auto &x : f.failures)
    fs.push_back({{"trial", x.trial},
                  {"scheme", x.scheme},
                  {"instance", print_formula(x.instance)}});
  r.set("failures", fs);
  r.line(std::string(dialect_name(d)) + ": " + std::to_string(f.trials) +
         " trials, " + std::to_string(f.instances) + " instances, " +
         std::to_string(f.failures.size()) + " false");
  for (const auto &x : f.failures)
    r.line("  trial " + std::to_string(x.trial) + " " + x.scheme + ": " +
           print_formula(x.instance));
  return f.failures.empty() ? Ok : Failure;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Options o;
  CLI::App app{"Justification logic toolkit for JE and JEM", "jlog"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json_out, "Print the report as one JSON record");

  auto dialect = [&](CLI::App *c) {
    c->add_option("--dialect", o.dialect, "JE, JEM or Modal");
  };
  auto calculus = [&](CLI::App *c) {
    c->add_option("--calculus", o.calculus, "GE or GM")
        ->check(CLI::IsMember({"GE", "GM"}));
  };
  auto output = [&](CLI::App *c) {
    c->add_option("-o,--output", o.output, "Write the result to this file");
  };

  auto *parse = app.add_subcommand("parse", "Parse and print a formula");
  parse->add_option("formula", o.input)->required();
  dialect(parse);

  auto *check = app.add_subcommand("check", "Check a derivation file");
  check->add_option("file", o.input)->required();

  auto *deduce = app.add_subcommand("deduce", "Discharge a hypothesis");
  deduce->add_option("file", o.input)->required();
  deduce->add_option("--discharge", o.discharge)->required();
  deduce->add_flag("--skip-independent", o.skip_independent);
  output(deduce);

  auto *intern = app.add_subcommand("internalize", "Internalize a theorem");
  intern->add_option("file", o.input)->required();
  output(intern);

  auto *subst = app.add_subcommand("subst", "Substitute into a derivation");
  subst->add_option("file", o.input)->required();
  subst->add_option("--atom", o.atom_subst, "A=F");
  subst->add_option("--var", o.var_subst, "p0=t or x0=t");
  output(subst);

  auto *seq = app.add_subcommand("seq-check", "Check a sequent proof file");
  seq->add_option("file", o.input)->required();

  auto *prove = app.add_subcommand("prove", "Bounded proof search");
  prove->add_option("sequent", o.input)->required();
  calculus(prove);
  prove->add_option("--depth", o.depth);
  prove->add_option("--max-worlds", o.max_worlds,
                    "Countermodel size bound when no proof is found");
  output(prove);

  auto *real = app.add_subcommand("realize", "Realize a modal theorem");
  real->add_option("formula", o.input);
  real->add_option("--proof", o.proof_file, "Sequent proof file to realize");
  calculus(real);
  real->add_option("--cs", o.cs_file, "Constant specification file");
  real->add_option("--depth", o.depth);
  real->add_flag("--strict", o.strict);
  real->add_flag("--simplify", o.simplify);
  real->add_option("--log", o.log, "Write the realization log to this file");
  output(real);

  auto *model = app.add_subcommand("model-check", "Check a model file");
  model->add_option("file", o.input)->required();
  model->add_option("--formula", o.formulas, "Evaluate at --world");
  model->add_option("--world", o.world);
  model->add_option("--cs", o.cs_file);
  model->add_flag("--explanatory", o.explanatory,
                  "Check that the --formula entries are explained");

  auto *fuzz = app.add_subcommand("fuzz", "Soundness fuzzing");
  dialect(fuzz);
  fuzz->add_option("--trials", o.trials);
  fuzz->add_option("--seed", o.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputError;
  }

  CLI::App *cmd = app.get_subcommands().front();
  Report report(cmd->get_name());
  try {
    int code;
    if (cmd == parse)
      code = cmd_parse(o, report);
    else if (cmd == check)
      code = cmd_check(o, report);
    else if (cmd == deduce)
      code = cmd_deduce(o, report);
    else if (cmd == intern)
      code = cmd_internalize(o, report);
    else if (cmd == subst)
      code = cmd_subst(o, report);
    else if (cmd == seq)
      code = cmd_seq_check(o, report);
    else if (cmd == prove)
      code = cmd_prove(o, report);
    else if (cmd == real)
      code = cmd_realize(o, report);
    else if (cmd == model)
      code = cmd_model_check(o, report);
    else
      code = cmd_fuzz(o, report);
    return report.finish(out, o.json_out, code);
  } catch (const NotAppropriate &e) {
    std::string missing;
    for (const auto &m : e.missing())
      missing += " " + m;
    err << "error: " << e.what() << " (missing:" << missing << ")\n";
    report.set("error", e.what());
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    report.set("error", e.what());
  }
  return report.finish(out, o.json_out, InputError);
}

} // namespace jlog::cli
