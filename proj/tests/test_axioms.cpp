#include "support.hpp"

#include "jlog/axioms.hpp"
#include "jlog/constant_spec.hpp"
#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

#include <doctest.h>

using namespace jlog;

namespace {

Formula je(const char *s) { return parse_formula(s, Dialect::JE); }
Formula jem(const char *s) { return parse_formula(s, Dialect::JEM); }

std::set<std::string> ids_of(const std::vector<AxiomMatch> &ms) {
  std::set<std::string> out;
  for (const auto &m : ms)
    out.insert(m.scheme->id);
  return out;
}

} // namespace

TEST_CASE("match: axiom j") {
  auto ms = match_axiom(je("p0:(A->B) -> (p1:A -> (p0*p1):B)"), Dialect::JE);
  REQUIRE(ids_of(ms) == std::set<std::string>{"j"});
  const Binding &b = ms[0].binding;
  CHECK(b.formulas.at("F") == Formula::atom("A"));
  CHECK(b.formulas.at("G") == Formula::atom("B"));
  CHECK(b.terms.at("L") == Term::proof_var(0));
  CHECK(b.terms.at("K") == Term::proof_var(1));
}

TEST_CASE("match: axiom je") {
  auto ms = match_axiom(je("(p0:(A->B) & p0:(B->A)) -> ([e(p0)]A -> [e(p0)]B)"),
                        Dialect::JE);
  CHECK(ids_of(ms) == std::set<std::string>{"je"});
}

TEST_CASE("match: A -> A is no axiom of the basis") {
  CHECK(match_axiom(je("A -> A"), Dialect::JE).empty());
  CHECK(match_axiom(jem("A -> A"), Dialect::JEM).empty());
}

TEST_CASE("match: JEM schemes") {
  CHECK(ids_of(match_axiom(jem("c0:(A -> B) -> ([x0]A -> [m(c0, x0)]B)"),
                           Dialect::JEM)) == std::set<std::string>{"jm"});
  CHECK(ids_of(match_axiom(jem("[x0]A | [x1]A -> [x0 + x1]A"), Dialect::JEM)) ==
        std::set<std::string>{"jplus2"});
  // j+1 is a JE scheme only.
  CHECK_THROWS_AS(jem("p0:A | p1:A -> (p0 + p1):A"), DialectError);
}

TEST_CASE("match: several schemes at once") {
  // An instance of K whose consequent happens to be an instance of jt.
  auto ms = match_axiom(je("p0:A -> (B -> p0:A)"), Dialect::JE);
  CHECK(ids_of(ms).count("K"));
}

TEST_CASE("cs_contains") {
  ConstantSpec cs;
  cs.assignment["c0"] = {"jt"};
  CHECK(cs_contains(cs, "c0", je("p0:A -> A")));
  CHECK_FALSE(cs_contains(cs, "c0", je("p0:A -> p0:A")));
  CHECK_FALSE(cs_contains(cs, "c1", je("p0:A -> A")));
}

TEST_CASE("axiomatic appropriateness") {
  CHECK(check_axiomatically_appropriate(ConstantSpec::total(), Dialect::JE).empty());
  CHECK(check_axiomatically_appropriate(ConstantSpec::total(), Dialect::JEM).empty());

  ConstantSpec cs = ConstantSpec::total();
  cs.assignment.erase("c_je");
  CHECK(check_axiomatically_appropriate(cs, Dialect::JE) ==
        std::set<std::string>{"je"});
  CHECK(check_axiomatically_appropriate(cs, Dialect::JEM).empty());

  auto all = scheme_ids(Dialect::JE);
  CHECK(check_axiomatically_appropriate({}, Dialect::JE) ==
        std::set<std::string>(all.begin(), all.end()));
}

TEST_CASE("catalogue shape") {
  auto je_ids = scheme_ids(Dialect::JE);
  auto jem_ids = scheme_ids(Dialect::JEM);
  for (const char *id : {"j", "jplus1", "jt", "j4", "je", "jeplus", "K", "S", "DNE"})
    CHECK(std::find(je_ids.begin(), je_ids.end(), id) != je_ids.end());
  for (const char *id : {"j", "jt", "j4", "jm", "jplus2", "K", "S", "DNE"})
    CHECK(std::find(jem_ids.begin(), jem_ids.end(), id) != jem_ids.end());
  for (const char *id : {"je", "jeplus", "jplus1"})
    CHECK(std::find(jem_ids.begin(), jem_ids.end(), id) == jem_ids.end());
  CHECK(find_scheme("nope") == nullptr);
}

TEST_CASE("the propositional basis is classically sound") {
  support::Gen g(21);
  for (const auto &s : axiom_catalogue()) {
    if (!s.propositional)
      continue;
    for (int i = 0; i < 50; ++i) {
      Formula f = axiom_instance(s.id, {g.prop(2, {"A", "B"}), g.prop(2, {"A", "B"}),
                                        g.prop(2, {"A", "B"})});
      INFO(s.id << ": " << print_formula(f));
      CHECK(support::tautology(f));
    }
  }
}

TEST_CASE("constant specification text format") {
  ConstantSpec cs;
  cs.assignment["c0"] = {"jt", "K"};
  cs.assignment["c_mine"] = {"je"};
  std::string text = print_constant_spec(cs);
  CHECK(parse_constant_spec(text) == cs);
  CHECK(parse_constant_spec(print_constant_spec(ConstantSpec::total())) ==
        ConstantSpec::total());
  CHECK_THROWS_AS(parse_constant_spec("c0 : jt\n"), FormatError);
  CHECK_THROWS_AS(parse_constant_spec(std::string(text) + "c1 : nope\n"), FormatError);
  CHECK_THROWS_AS(parse_constant_spec(std::string(text) + "p0 : jt\n"), FormatError);
}

TEST_CASE("constant choice is the least constant") {
  ConstantSpec cs;
  cs.assignment["c_b"] = {"K"};
  cs.assignment["c_a"] = {"K"};
  CHECK(constant_for(cs, "K") == std::optional<std::string>("c_a"));
  CHECK_FALSE(constant_for(cs, "S").has_value());
}

TEST_CASE("property: matching is sound and complete on instances") {
  support::Gen g(22);
  for (Dialect d : {Dialect::JE, Dialect::JEM}) {
    for (const auto &id : scheme_ids(d)) {
      const AxiomScheme *s = find_scheme(id);
      for (int i = 0; i < 40; ++i) {
        Binding b;
        for (const char *f : {"F", "G", "H"})
          b.formulas[f] = g.formula(d, 2);
        for (const char *t : {"L", "K"})
          b.terms[t] = g.proof_term(d, 3);
        for (const char *t : {"T", "S"})
          b.terms[t] = g.just_term(d, 3);
        Formula f = instantiate(s->pattern, b);
        auto ms = match_axiom(f, d);
        INFO(id << ": " << print_formula(f));
        CHECK(ids_of(ms).count(id));
        for (const auto &m : ms)
          CHECK(instantiate(m.scheme->pattern, m.binding) == f);
      }
    }
  }
}

TEST_CASE("property: cs_contains agrees with match_axiom") {
  support::Gen g(23);
  ConstantSpec cs;
  cs.assignment["c0"] = {"j", "K", "jt"};
  cs.assignment["c1"] = {"je", "S"};
  auto ids = scheme_ids(Dialect::JE);
  for (int i = 0; i < 500; ++i) {
    Binding b;
    for (const char *f : {"F", "G", "H"})
      b.formulas[f] = g.formula(Dialect::JE, 1);
    for (const char *t : {"L", "K"})
      b.terms[t] = g.proof_term(Dialect::JE, 2);
    Formula f = instantiate(find_scheme(ids[g.pick(ids.size())])->pattern, b);
    for (const auto &[c, assigned] : cs.assignment) {
      bool expected = false;
      for (const auto &m : match_axiom(f, Dialect::JE))
        expected = expected || assigned.count(m.scheme->id);
      CHECK(cs_contains(cs, c, f) == expected);
    }
  }
}
