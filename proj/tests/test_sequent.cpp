#include "support.hpp"

#include "jlog/errors.hpp"
#include "jlog/families.hpp"
#include "jlog/occurrence.hpp"
#include "jlog/syntax.hpp"

#include <doctest.h>

using namespace jlog;

namespace {

Sequent seq(const char *s) { return parse_sequent(s, Dialect::Modal); }
Formula mod(const char *s) { return parse_formula(s, Dialect::Modal); }

constexpr Side A = Side::Antecedent;
constexpr Side S = Side::Succedent;

std::map<Rule, int> rule_counts(const SequentProof &p) {
  std::map<Rule, int> out;
  for (const auto *n : flatten(p).nodes)
    ++out[n->rule];
  return out;
}

SequentProof ex2_proof() {
  support::ForwardGen g(Calculus::GE, 0);
  auto id = g.identity(mod("[][]A"));
  return make_node(Rule::ImpR, seq("=> [][]A -> [][]A"), {{S, 0}}, {id});
}

SequentProofError::Kind error_kind(const SequentProof &p, Calculus c) {
  try {
    check_sequent_proof(p, c);
  } catch (const SequentProofError &e) {
    return e.kind();
  }
  FAIL("accepted");
  return SequentProofError::Kind::UncheckedProof;
}

} // namespace

TEST_CASE("check: axioms and RE") {
  auto leaf = make_node(Rule::AxP, seq("P => P"), {{A, 0}, {S, 0}}, {});
  CHECK_NOTHROW(check_sequent_proof(leaf, Calculus::GE));

  auto ab = weaken_to(make_node(Rule::AxP, seq("A => A"), {{A, 0}, {S, 0}}, {}),
                      seq("A => A"));
  auto re = make_node(Rule::RE, seq("[]A => []A"), {{A, 0}, {S, 0}}, {ab, ab});
  CHECK_NOTHROW(check_sequent_proof(re, Calculus::GE));
  CHECK(error_kind(re, Calculus::GM) == SequentProofError::Kind::WrongCalculus);

  auto rm = make_node(Rule::RM, seq("[]A => []A"), {{A, 0}, {S, 0}}, {ab});
  CHECK_NOTHROW(check_sequent_proof(rm, Calculus::GM));
  CHECK(error_kind(rm, Calculus::GE) == SequentProofError::Kind::WrongCalculus);
}

TEST_CASE("check: RE with non-equivalent premises") {
  // B => A is not a premise pair for []A => []B.
  auto a = make_node(Rule::AxP, seq("A => A"), {{A, 0}, {S, 0}}, {});
  auto node = std::make_shared<ProofNode>();
  node->sequent = seq("[]A => []B");
  node->rule = Rule::RE;
  node->principal = {{A, 0}, {S, 0}};
  node->premises = {a, a};
  node->links = {Link{{Target{A, 0, {0}}}, {Target{S, 0, {0}}}},
                 Link{{Target{S, 0, {0}}}, {Target{A, 0, {0}}}}};
  CHECK_THROWS_AS(check_sequent_proof(node, Calculus::GE), SequentProofError);
}

TEST_CASE("check: broken correspondence") {
  auto leaf = make_node(Rule::AxP, seq("A => A"), {{A, 0}, {S, 0}}, {});
  auto w = make_node(Rule::WL, seq("A, B => A"), {{A, 1}}, {leaf});
  auto copy = std::make_shared<ProofNode>(*w);
  copy->links[0].antecedent[0] = Target{A, 1, {}};
  CHECK(error_kind(copy, Calculus::GE) ==
        SequentProofError::Kind::BadCorrespondence);
  CHECK_THROWS_AS(make_node(Rule::WL, seq("A, B => C"), {{A, 1}}, {leaf}),
                  SequentProofError);
}

TEST_CASE("search: Appendix D example 1") {
  auto p = prove_bounded(seq("=> []A -> []B -> []A"), Calculus::GE, 8);
  REQUIRE(p);
  CHECK_NOTHROW(check_sequent_proof(*p, Calculus::GE));
  auto counts = rule_counts(*p);
  CHECK(counts[Rule::RE] == 1);
  CHECK(counts[Rule::ImpR] == 2);
  CHECK(counts[Rule::WL] == 1);
  CHECK(counts[Rule::AxP] == 2);
}

TEST_CASE("search: two RM instances for the disjunction") {
  auto p = prove_bounded(seq("[]A | []B => [](A | B)"), Calculus::GM, 8);
  REQUIRE(p);
  CHECK_NOTHROW(check_sequent_proof(*p, Calculus::GM));
  CHECK(rule_counts(*p)[Rule::RM] == 2);
  CHECK_FALSE(prove_bounded(seq("[]A | []B => [](A | B)"), Calculus::GE, 10));
}

TEST_CASE("search: E does not prove monotonicity") {
  Formula f = mod("[]A -> [](A | B)");
  CHECK_FALSE(prove_bounded({{}, {f}}, Calculus::GE, 12));
  auto cm = find_countermodel(f, Calculus::GE);
  REQUIRE(cm);
  CHECK_FALSE(support::nbhd_truth(cm->model, cm->world, f));
  CHECK(prove_bounded({{}, {f}}, Calculus::GM, 12));
}

TEST_CASE("search: duplicates in the goal are restored") {
  auto p = prove_bounded(seq("A, A => A"), Calculus::GE, 4);
  REQUIRE(p);
  CHECK((*p)->sequent == seq("A, A => A"));
  CHECK_NOTHROW(check_sequent_proof(*p, Calculus::GE));
}

TEST_CASE("families: example 1") {
  auto p = prove_bounded(seq("=> []A -> []B -> []A"), Calculus::GE, 8);
  REQUIRE(p);
  FamilyAnalysis fa = compute_families(*p, Calculus::GE);
  // RE relates its two principal boxes by equivalence, not by family.
  REQUIRE(fa.families.size() == 3);
  int essential = 0;
  for (const auto &f : fa.families) {
    const auto &box = fa.boxes[f.members[0]];
    Formula under = subformula_at(fa.flat.nodes[box.node]->sequent, box.position).body();
    if (f.essential) {
      ++essential;
      CHECK(under == mod("A"));
      CHECK(f.introduced_by.size() == 1);
    } else {
      CHECK(under == mod("B"));
    }
  }
  CHECK(essential == 2);
  REQUIRE(fa.classes.size() == 1);
  CHECK(fa.classes[0].families.size() == 2);
  CHECK(fa.classes[0].instances.size() == 1);
}

TEST_CASE("families: example 2") {
  SequentProof p = ex2_proof();
  FamilyAnalysis fa = compute_families(p, Calculus::GE);
  REQUIRE(fa.families.size() == 4);
  REQUIRE(fa.classes.size() == 2);
  std::vector<std::size_t> sizes;
  for (const auto &c : fa.classes)
    sizes.push_back(c.instances.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2});
  for (const auto &f : fa.families)
    CHECK(f.essential);
}

TEST_CASE("families: propositional proofs have none") {
  auto p = prove_bounded(seq("=> A -> B -> A"), Calculus::GE, 6);
  REQUIRE(p);
  FamilyAnalysis fa = compute_families(*p, Calculus::GE);
  CHECK(fa.families.empty());
  CHECK(fa.boxes.empty());
}

TEST_CASE("families: unchecked proofs are refused") {
  auto leaf = make_node(Rule::AxP, seq("A => A"), {{A, 0}, {S, 0}}, {});
  auto w = make_node(Rule::WL, seq("A, []B => A"), {{A, 1}}, {leaf});
  auto copy = std::make_shared<ProofNode>(*w);
  copy->rule = Rule::WR;
  try {
    compute_families(copy, Calculus::GE);
    FAIL("accepted");
  } catch (const SequentProofError &e) {
    CHECK(e.kind() == SequentProofError::Kind::UncheckedProof);
  }
}

TEST_CASE("property: forward-built sequents are found again by search") {
  int found = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Calculus c = seed % 2 ? Calculus::GM : Calculus::GE;
    support::ForwardGen g(c, seed);
    SequentProof built = g.proof(3);
    REQUIRE_NOTHROW(check_sequent_proof(built, c));
    INFO(print_sequent(built->sequent));
    auto p = prove_bounded(built->sequent, c, 12);
    REQUIRE(p);
    CHECK((*p)->sequent == built->sequent);
    CHECK_NOTHROW(check_sequent_proof(*p, c));
    ++found;
  }
  CHECK(found == 200);
}

TEST_CASE("property: families partition the box occurrences") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Calculus c = seed % 2 ? Calculus::GM : Calculus::GE;
    SequentProof p = support::ForwardGen(c, seed).theorem(4);
    FamilyAnalysis fa = compute_families(p, c);
    std::size_t expected = 0;
    for (const auto *n : fa.flat.nodes)
      for (Side s : {A, S})
        for (const auto &f : n->sequent.side(s))
          expected += box_occurrences(f).size();
    CHECK(fa.boxes.size() == expected);
    std::vector<int> seen(fa.boxes.size(), 0);
    for (std::size_t k = 0; k < fa.families.size(); ++k)
      for (auto b : fa.families[k].members) {
        ++seen[b];
        CHECK(fa.family_of[b] == k);
      }
    for (int s : seen)
      CHECK(s == 1);
  }
}

TEST_CASE("property: GM families keep one polarity") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SequentProof p = support::ForwardGen(Calculus::GM, seed).theorem(4);
    FamilyAnalysis fa = compute_families(p, Calculus::GM);
    for (const auto &f : fa.families) {
      std::set<Polarity> seen;
      for (auto b : f.members) {
        const auto &box = fa.boxes[b];
        seen.insert(polarity_at(fa.flat.nodes[box.node]->sequent, box.position));
      }
      CHECK(seen.size() == 1);
      CHECK(f.polarity_consistent);
    }
  }
}

TEST_CASE("property: search never proves a countermodeled formula") {
  for (Calculus c : {Calculus::GE, Calculus::GM})
    for (const auto &f : support::all_imp_box(2, {"A", "B"})) {
      bool proved = prove_bounded({{}, {f}}, c, 10).has_value();
      auto cm = find_countermodel(f, c);
      INFO(print_formula(f));
      CHECK_FALSE((proved && cm));
      if (cm)
        CHECK_FALSE(support::nbhd_truth(cm->model, cm->world, f));
    }
}
