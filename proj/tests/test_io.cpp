#include "support.hpp"

#include "jlog/errors.hpp"
#include "jlog/io.hpp"
#include "jlog/syntax.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>

using namespace jlog;
using json = nlohmann::json;

namespace {

Formula mod(const char *s) { return parse_formula(s, Dialect::Modal); }
Formula je(const char *s) { return parse_formula(s, Dialect::JE); }

// Structural equality of proof trees, links included.
bool same_tree(const SequentProof &a, const SequentProof &b) {
  if (a->sequent != b->sequent || a->rule != b->rule ||
      a->premises.size() != b->premises.size() || a->links.size() != b->links.size())
    return false;
  for (std::size_t i = 0; i < a->principal.size(); ++i)
    if (a->principal[i].side != b->principal[i].side ||
        a->principal[i].index != b->principal[i].index)
      return false;
  for (std::size_t i = 0; i < a->links.size(); ++i)
    for (Side s : {Side::Antecedent, Side::Succedent}) {
      const auto &x = a->links[i].side(s), &y = b->links[i].side(s);
      if (x.size() != y.size())
        return false;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k].side != y[k].side || x[k].index != y[k].index || x[k].path != y[k].path)
          return false;
    }
  for (std::size_t i = 0; i < a->premises.size(); ++i)
    if (!same_tree(a->premises[i], b->premises[i]))
      return false;
  return true;
}

json strip_links(json node) {
  node.erase("links");
  for (auto &p : node["premises"])
    p = strip_links(p);
  return node;
}

} // namespace

TEST_CASE("derivation files") {
  DerivationBuilder b(Dialect::JE, std::make_shared<const ConstantSpec>(ConstantSpec::total()));
  std::size_t ax = b.axiom("K", {je("A"), je("B")});
  std::size_t h = b.hyp(je("A"));
  Derivation d = b.finish(b.mp(ax, h));
  std::string text = write_derivation(d);
  json j = json::parse(text);
  CHECK(j["format"] == "jlog-derivation");
  CHECK(j["version"] == 1);
  CHECK(read_derivation(text) == d);
  CHECK(check_derivation(read_derivation(text)).conclusion == je("B -> A"));

  std::string printed = print_derivation(d);
  CHECK(printed.find("axiom K") != std::string::npos);
  CHECK(printed.find("hyp") != std::string::npos);
  CHECK(printed.find("MP 0, 1") != std::string::npos);
}

TEST_CASE("derivation files: a missing cs means the total one") {
  json j = {{"format", "jlog-derivation"},
            {"version", 1},
            {"dialect", "JE"},
            {"steps", {{{"kind", "axiom"}, {"formula", "A -> B -> A"}, {"scheme", "K"}},
                       {{"kind", "an"}, {"formula", "c_K:(A -> B -> A)"}}}}};
  Derivation d = read_derivation(j.dump());
  CHECK(*d.cs == ConstantSpec::total());
  CHECK(d.conclusion == 1);
  CHECK(check_derivation(d).conclusion == je("c_K:(A -> B -> A)"));
}

TEST_CASE("derivation files: errors") {
  CHECK_THROWS_AS(read_derivation("{"), FormatError);
  CHECK_THROWS_AS(read_derivation(R"({"format":"jlog-model","version":1})"), FormatError);
  CHECK_THROWS_AS(read_derivation(R"({"format":"jlog-derivation","version":2})"), FormatError);
  CHECK_THROWS_AS(read_derivation(R"({"format":"jlog-derivation","version":1,"dialect":"JE","steps":[]})"),
                  FormatError);
  CHECK_THROWS_AS(read_derivation(R"({"format":"jlog-derivation","version":1,"dialect":"Modal","steps":[]})"),
                  FormatError);
  CHECK_THROWS_AS(
      read_derivation(R"({"format":"jlog-derivation","version":1,"dialect":"JE","steps":[{"kind":"cut","formula":"A"}]})"),
      FormatError);
  CHECK_THROWS_AS(
      read_derivation(R"({"format":"jlog-derivation","version":1,"dialect":"JE","steps":[{"kind":"hyp","formula":"A ->"}]})"),
      SyntaxError);
  CHECK_THROWS_AS(
      read_derivation(R"({"format":"jlog-derivation","version":1,"dialect":"JE","steps":[{"kind":"hyp","formula":"A"}],"conclusion":3})"),
      FormatError);
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), FormatError);
}

TEST_CASE("sequent proof files") {
  auto p = prove_bounded({{}, {mod("[]A -> []B -> []A")}}, Calculus::GE, 8);
  REQUIRE(p);
  std::string text = write_sequent_proof(*p, Calculus::GE);
  ProofFile f = read_sequent_proof(text);
  CHECK(f.calculus == Calculus::GE);
  CHECK(same_tree(f.proof, *p));
  CHECK_NOTHROW(check_sequent_proof(f.proof, Calculus::GE));

  // Without links the reader recomputes them.
  json j = json::parse(text);
  j["root"] = strip_links(j["root"]);
  ProofFile g = read_sequent_proof(j.dump());
  CHECK_NOTHROW(check_sequent_proof(g.proof, Calculus::GE));
  CHECK(g.proof->sequent == (*p)->sequent);

  CHECK_THROWS_AS(read_sequent_proof(R"({"format":"jlog-sequent-proof","version":1,"calculus":"GX","root":{}})"),
                  Error);
  CHECK_THROWS_AS(read_sequent_proof(R"({"format":"jlog-sequent-proof","version":1,"calculus":"GE"})"),
                  FormatError);
}

TEST_CASE("model files") {
  QuasiModel m;
  m.worlds = 2;
  m.neighborhoods = {{1, 3}, {}};
  m.evaluations.resize(2);
  m.evaluations[0].true_atoms = {"A"};
  m.evaluations[0].table[Term::e(Term::proof_var(0))] = {je("A")};
  m.evaluations[0].table[Term::proof_var(1)] = {je("A -> A")};
  m.evaluations[0].table[Term::constant("c_K")] = {je("A -> A -> A")};
  Dialect d = Dialect::JEM;
  QuasiModel back = read_quasi_model(write_quasi_model(m, Dialect::JE), &d);
  CHECK(d == Dialect::JE);
  CHECK(back.worlds == 2);
  CHECK(back.neighborhoods == m.neighborhoods);
  REQUIRE(back.evaluations.size() == 2);
  CHECK(back.evaluations[0] == m.evaluations[0]);
  CHECK(back.evaluations[1] == m.evaluations[1]);

  QuasiModel jm;
  jm.worlds = 1;
  jm.neighborhoods = {{1}};
  jm.evaluations.resize(1);
  jm.evaluations[0].dialect = Dialect::JEM;
  jm.evaluations[0].table[Term::m(Term::proof_var(0), Term::just_var(2))] = {
      parse_formula("B", Dialect::JEM)};
  jm.evaluations[0].table[Term::just_var(1)] = {parse_formula("[x0]B", Dialect::JEM)};
  QuasiModel jback = read_quasi_model(write_quasi_model(jm, Dialect::JEM), &d);
  CHECK(d == Dialect::JEM);
  CHECK(jback.evaluations[0] == jm.evaluations[0]);

  NeighborhoodModel n;
  n.worlds = 3;
  n.valuation = {{"A"}, {}, {"A", "B"}};
  n.neighborhoods = {{5}, {}, {0, 7}};
  NeighborhoodModel nb = read_neighborhood_model(write_neighborhood_model(n));
  CHECK(nb.worlds == 3);
  CHECK(nb.valuation == n.valuation);
  CHECK(nb.neighborhoods == n.neighborhoods);

  CHECK_THROWS_AS(read_neighborhood_model(write_quasi_model(m, Dialect::JE)), FormatError);
  CHECK_THROWS_AS(read_quasi_model(write_neighborhood_model(n)), FormatError);
  json bad = json::parse(write_neighborhood_model(n));
  bad["neighborhoods"][0] = {{0, 5}};
  CHECK_THROWS_AS(read_neighborhood_model(bad.dump()), FormatError);
  bad = json::parse(write_neighborhood_model(n));
  bad["valuation"] = {{"A"}};
  CHECK_THROWS_AS(read_neighborhood_model(bad.dump()), FormatError);
}

TEST_CASE("realization files") {
  auto r = realize_formula(mod("[]A -> []B -> []A"), Calculus::GE, ConstantSpec::total(), 8);
  REQUIRE(r);
  json j = json::parse(write_realization(*r, mod("[]A -> []B -> []A")));
  CHECK(j["format"] == "jlog-realization");
  CHECK(j["mode"] == "strict");
  CHECK(j["source"] == "[]A -> []B -> []A");
  CHECK(j["realized"] == print_formula(r->realized));
  CHECK(j["log"].size() == r->log.size());
  Derivation d = read_derivation(j["derivation"].dump());
  CHECK(check_derivation(d).conclusion == r->realized);
}

TEST_CASE("write_file and read_file") {
  auto path = std::filesystem::temp_directory_path() / "jlog_io_test.txt";
  write_file(path.string(), "hello\n");
  CHECK(read_file(path.string()) == "hello\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_file("/nonexistent/dir/x", "y"), FormatError);
}

TEST_CASE("property: derivation files roundtrip") {
  for (unsigned i = 0; i < 60; ++i) {
    Dialect d = i % 2 ? Dialect::JEM : Dialect::JE;
    Derivation der = support::random_theorem(d, 300 + i, 8);
    Derivation back = read_derivation(write_derivation(der));
    CHECK(back == der);
    CHECK(check_derivation(back) == check_derivation(der));
  }
}

TEST_CASE("property: sequent proof files roundtrip") {
  for (Calculus c : {Calculus::GE, Calculus::GM}) {
    support::ForwardGen g(c, 17);
    for (int i = 0; i < 60; ++i) {
      SequentProof p = g.proof(5);
      ProofFile f = read_sequent_proof(write_sequent_proof(p, c));
      CHECK(f.calculus == c);
      CHECK(same_tree(f.proof, p));
      CHECK(print_proof(f.proof) == print_proof(p));
    }
  }
}
