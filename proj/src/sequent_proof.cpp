#include "jlog/sequent_proof.hpp"

#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"
#include "rule_schema.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace jlog {

namespace detail {

const RuleSchema &rule_schema(Rule r) {
  using FK = Formula::Kind;
  constexpr Side A = Side::Antecedent;
  constexpr Side S = Side::Succedent;
  static const std::vector<RuleSchema> table = [] {
    std::vector<RuleSchema> t(16);
    auto at = [&](Rule r) -> RuleSchema & {
      return t[static_cast<std::size_t>(r)];
    };
    at(Rule::AxP) = {{{A, FK::Atom}, {S, FK::Atom}}, {}, true};
    at(Rule::AxBot) = {{{A, FK::Bottom}}, {}, true};
    at(Rule::ImpL) = {{{A, FK::Implies}}, {{{S, 0, {0}}}, {{A, 0, {1}}}}};
    at(Rule::ImpR) = {{{S, FK::Implies}}, {{{A, 0, {0}}, {S, 0, {1}}}}};
    at(Rule::AndL) = {{{A, FK::And}}, {{{A, 0, {0}}, {A, 0, {1}}}}};
    at(Rule::AndR) = {{{S, FK::And}}, {{{S, 0, {0}}}, {{S, 0, {1}}}}};
    at(Rule::OrL) = {{{A, FK::Or}}, {{{A, 0, {0}}}, {{A, 0, {1}}}}};
    at(Rule::OrR) = {{{S, FK::Or}}, {{{S, 0, {0}}, {S, 0, {1}}}}};
    at(Rule::NotL) = {{{A, FK::Not}}, {{{S, 0, {0}}}}};
    at(Rule::NotR) = {{{S, FK::Not}}, {{{A, 0, {0}}}}};
    at(Rule::WL) = {{{A, std::nullopt}}, {{}}};
    at(Rule::WR) = {{{S, std::nullopt}}, {{}}};
    at(Rule::CL) = {{{A, std::nullopt}}, {{{A, 0, {}}, {A, 0, {}}}}};
    at(Rule::CR) = {{{S, std::nullopt}}, {{{S, 0, {}}, {S, 0, {}}}}};
    at(Rule::RE) = {{{A, FK::Box}, {S, FK::Box}},
                    {{{A, 0, {0}}, {S, 1, {0}}}, {{A, 1, {0}}, {S, 0, {0}}}},
                    true};
    at(Rule::RM) = {{{A, FK::Box}, {S, FK::Box}},
                    {{{A, 0, {0}}, {S, 1, {0}}}},
                    true};
    return t;
  }();
  return table[static_cast<std::size_t>(r)];
}

} // namespace detail

namespace {

constexpr const char *kRuleNames[] = {"AxP", "AxBot", "ImpL", "ImpR",
                                      "AndL", "AndR", "OrL", "OrR",
                                      "NotL", "NotR", "WL", "WR",
                                      "CL", "CR", "RE", "RM"};

[[noreturn]] void bad(SequentProofError::Kind k, const std::string &what) {
  throw SequentProofError(k, 0, what);
}

} // namespace

const char *calculus_name(Calculus c) { return c == Calculus::GE ? "GE" : "GM"; }

Calculus calculus_from_string(const std::string &s) {
  if (s == "GE")
    return Calculus::GE;
  if (s == "GM")
    return Calculus::GM;
  throw FormatError("unknown calculus '" + s + "'");
}

const char *rule_name(Rule r) { return kRuleNames[static_cast<std::size_t>(r)]; }

Rule rule_from_string(const std::string &s) {
  for (std::size_t i = 0; i < 16; ++i)
    if (s == kRuleNames[i])
      return static_cast<Rule>(i);
  throw FormatError("unknown rule '" + s + "'");
}

std::size_t rule_arity(Rule r) { return detail::rule_schema(r).actives.size(); }

SequentProof make_node(Rule rule, Sequent conclusion,
                       std::vector<Principal> principal,
                       std::vector<SequentProof> premises) {
  using E = SequentProofError::Kind;
  const auto &schema = detail::rule_schema(rule);
  if (premises.size() != schema.actives.size())
    bad(E::BadRule, std::string(rule_name(rule)) + " takes " +
                        std::to_string(schema.actives.size()) + " premises");
  if (principal.size() != schema.principals.size())
    bad(E::BadRule, std::string(rule_name(rule)) + ": wrong principal count");
  for (const auto &p : principal)
    if (p.index >= conclusion.side(p.side).size())
      bad(E::BadRule, "principal index out of range");

  auto is_principal = [&](Side s, std::size_t i) {
    return std::find(principal.begin(), principal.end(), Principal{s, i}) !=
           principal.end();
  };

  auto node = std::make_shared<ProofNode>();
  node->rule = rule;
  node->principal = principal;
  for (std::size_t k = 0; k < premises.size(); ++k) {
    const Sequent &prem = premises[k]->sequent;
    Link link;
    link.antecedent.resize(prem.antecedent.size());
    link.succedent.resize(prem.succedent.size());
    std::vector<char> used_a(prem.antecedent.size(), 0);
    std::vector<char> used_s(prem.succedent.size(), 0);
    auto used = [&](Side s) -> std::vector<char> & {
      return s == Side::Antecedent ? used_a : used_s;
    };
    for (const auto &act : schema.actives[k]) {
      const Principal &p = principal[act.principal];
      const Formula &want =
          subformula_at(conclusion.side(p.side)[p.index], act.path);
      const auto &fs = prem.side(act.premise_side);
      auto &u = used(act.premise_side);
      std::optional<std::size_t> pick;
      if (act.premise_side == Side::Antecedent) {
        for (std::size_t i = 0; i < fs.size() && !pick; ++i)
          if (!u[i] && fs[i] == want)
            pick = i;
      } else {
        for (std::size_t i = fs.size(); i-- > 0 && !pick;)
          if (!u[i] && fs[i] == want)
            pick = i;
      }
      if (!pick)
        bad(E::BadCorrespondence, std::string(rule_name(rule)) + ": premise " +
                                      std::to_string(k) + " lacks " +
                                      print_formula(want));
      u[*pick] = 1;
      link.side(act.premise_side)[*pick] = Target{p.side, p.index, act.path};
    }
    for (Side s : {Side::Antecedent, Side::Succedent}) {
      const auto &fs = prem.side(s);
      const auto &cs = conclusion.side(s);
      std::vector<char> taken(cs.size(), 0);
      auto &u = used(s);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (u[i])
          continue;
        std::optional<std::size_t> hit;
        for (std::size_t j = 0; j < cs.size() && !hit; ++j)
          if (!taken[j] && !is_principal(s, j) && cs[j] == fs[i])
            hit = j;
        if (!hit)
          bad(E::BadCorrespondence,
              std::string(rule_name(rule)) + ": premise formula " +
                  print_formula(fs[i]) + " has no place in the conclusion");
        taken[*hit] = 1;
        link.side(s)[i] = Target{s, *hit, {}};
      }
      for (std::size_t j = 0; j < cs.size(); ++j)
        if (!taken[j] && !is_principal(s, j))
          bad(E::BadCorrespondence, std::string(rule_name(rule)) +
                                        ": conclusion formula " +
                                        print_formula(cs[j]) +
                                        " is missing from premise " +
                                        std::to_string(k));
    }
    node->links.push_back(std::move(link));
  }
  node->sequent = std::move(conclusion);
  node->premises = std::move(premises);
  return node;
}

namespace {

// Removes one copy of f from v; returns false if absent.
bool remove_one(std::vector<Formula> &v, const Formula &f) {
  auto it = std::find(v.begin(), v.end(), f);
  if (it == v.end())
    return false;
  v.erase(it);
  return true;
}

std::size_t index_of(const std::vector<Formula> &v, const Formula &f) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), f) -
                                  v.begin());
}

} // namespace

SequentProof weaken_to(SequentProof p, const Sequent &target) {
  // Contract surplus copies first, then weaken in what is missing.
  for (Side s : {Side::Antecedent, Side::Succedent}) {
    Rule c_rule = s == Side::Antecedent ? Rule::CL : Rule::CR;
    for (;;) {
      const auto &have = p->sequent.side(s);
      std::optional<Formula> extra;
      for (const auto &f : have) {
        auto n_have = std::count(have.begin(), have.end(), f);
        auto n_want = std::count(target.side(s).begin(), target.side(s).end(), f);
        if (n_have > std::max<long>(n_want, 1)) {
          extra = f;
          break;
        }
      }
      if (!extra)
        break;
      Sequent next = p->sequent;
      remove_one(next.side(s), *extra);
      std::size_t at = index_of(next.side(s), *extra);
      p = make_node(c_rule, std::move(next), {{s, at}}, {p});
    }
  }
  for (Side s : {Side::Antecedent, Side::Succedent}) {
    Rule w_rule = s == Side::Antecedent ? Rule::WL : Rule::WR;
    std::vector<Formula> missing = target.side(s);
    std::vector<Formula> have = p->sequent.side(s);
    for (const auto &f : have)
      if (!remove_one(missing, f)) {
        // Present more often than wanted even after contraction: the
        // target only has zero copies.
        throw SequentProofError(SequentProofError::Kind::BadCorrespondence, 0,
                                "weaken_to: " + print_formula(f) +
                                    " is not in the target sequent");
      }
    for (const auto &f : missing) {
      Sequent next = p->sequent;
      auto &side = next.side(s);
      std::size_t at;
      if (s == Side::Antecedent) {
        side.insert(side.begin(), f);
        at = 0;
      } else {
        side.push_back(f);
        at = side.size() - 1;
      }
      p = make_node(w_rule, std::move(next), {{s, at}}, {p});
    }
  }
  if (p->sequent == target)
    return p;
  if (!same_multiset(p->sequent, target))
    throw SequentProofError(SequentProofError::Kind::BadCorrespondence, 0,
                            "weaken_to: conclusion does not fit the target");
  // Same multiset, different order: rebuild the last node in target order.
  std::vector<Principal> principal;
  std::vector<std::vector<char>> taken = {
      std::vector<char>(target.antecedent.size(), 0),
      std::vector<char>(target.succedent.size(), 0)};
  for (const auto &pr : p->principal) {
    const Formula &f = p->sequent.side(pr.side)[pr.index];
    const auto &side = target.side(pr.side);
    auto &t = taken[pr.side == Side::Antecedent ? 0 : 1];
    for (std::size_t j = 0; j < side.size(); ++j)
      if (!t[j] && side[j] == f) {
        t[j] = 1;
        principal.push_back({pr.side, j});
        break;
      }
  }
  return make_node(p->rule, target, std::move(principal), p->premises);
}

std::size_t proof_size(const SequentProof &p) {
  std::size_t n = 1;
  for (const auto &q : p->premises)
    n += proof_size(q);
  return n;
}

std::size_t proof_height(const SequentProof &p) {
  std::size_t h = 0;
  for (const auto &q : p->premises)
    h = std::max(h, proof_height(q));
  bool structural = p->rule == Rule::WL || p->rule == Rule::WR ||
                    p->rule == Rule::CL || p->rule == Rule::CR;
  return h + (structural ? 0 : 1);
}

std::string print_proof(const SequentProof &p) {
  std::string out;
  std::function<void(const SequentProof &, std::size_t)> walk =
      [&](const SequentProof &n, std::size_t indent) {
        out += std::string(indent * 2, ' ');
        out += print_sequent(n->sequent);
        out += "   (";
        out += rule_name(n->rule);
        out += ")\n";
        for (const auto &q : n->premises)
          walk(q, indent + 1);
      };
  walk(p, 0);
  return out;
}

} // namespace jlog
