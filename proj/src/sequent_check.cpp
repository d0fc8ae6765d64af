#include "jlog/errors.hpp"
#include "jlog/sequent_proof.hpp"
#include "jlog/syntax.hpp"
#include "rule_schema.hpp"

#include <algorithm>

namespace jlog {

namespace {

using E = SequentProofError::Kind;

class Checker {
public:
  explicit Checker(Calculus c) : calculus_(c) {}

  void node(const SequentProof &p) {
    std::size_t id = next_++;
    if (!p)
      fail(E::BadRule, id, "missing node");
    check_local(*p, id);
    for (const auto &q : p->premises)
      node(q);
  }

private:
  [[noreturn]] void fail(E kind, std::size_t id, const std::string &what) {
    throw SequentProofError(kind, id, what);
  }

  void check_local(const ProofNode &n, std::size_t id) {
    const auto &schema = detail::rule_schema(n.rule);
    const std::string rn = rule_name(n.rule);
    if ((n.rule == Rule::RE && calculus_ != Calculus::GE) ||
        (n.rule == Rule::RM && calculus_ != Calculus::GM))
      fail(E::WrongCalculus, id,
           rn + " is not a rule of " + calculus_name(calculus_));
    const Sequent &c = n.sequent;
    for (Side s : {Side::Antecedent, Side::Succedent})
      for (const auto &f : c.side(s))
        if (!f.valid() || !conforms(f, Dialect::Modal))
          fail(E::BadRule, id, "sequents must consist of modal formulas");
    if (n.premises.size() != schema.actives.size() ||
        n.links.size() != n.premises.size())
      fail(E::BadRule, id, rn + ": wrong number of premises or links");
    if (n.principal.size() != schema.principals.size())
      fail(E::BadRule, id, rn + ": wrong number of principal formulas");
    for (std::size_t i = 0; i < n.principal.size(); ++i) {
      const auto &p = n.principal[i];
      const auto &spec = schema.principals[i];
      if (p.side != spec.side || p.index >= c.side(p.side).size())
        fail(E::BadRule, id, rn + ": principal formula out of place");
      if (spec.kind && c.side(p.side)[p.index].kind() != *spec.kind)
        fail(E::BadRule, id,
             rn + ": principal formula " +
                 print_formula(c.side(p.side)[p.index]) + " has wrong shape");
      for (std::size_t j = 0; j < i; ++j)
        if (n.principal[j] == p)
          fail(E::BadRule, id, rn + ": repeated principal formula");
    }
    if (schema.no_context && c.size() != n.principal.size())
      fail(E::BadRule, id, rn + " admits no side formulas");
    if (n.rule == Rule::AxP && c.antecedent[0] != c.succedent[0])
      fail(E::BadRule, id, "AxP needs the same atom on both sides");

    auto principal_no = [&](Side s, std::size_t i) -> std::optional<std::size_t> {
      for (std::size_t k = 0; k < n.principal.size(); ++k)
        if (n.principal[k].side == s && n.principal[k].index == i)
          return k;
      return std::nullopt;
    };

    for (std::size_t k = 0; k < n.premises.size(); ++k) {
      if (!n.premises[k])
        fail(E::BadRule, id, "missing premise");
      const Sequent &prem = n.premises[k]->sequent;
      const Link &link = n.links[k];
      std::vector<detail::ActiveSpec> actives;
      std::vector<std::size_t> hits_a(c.antecedent.size(), 0);
      std::vector<std::size_t> hits_s(c.succedent.size(), 0);
      for (Side s : {Side::Antecedent, Side::Succedent}) {
        if (link.side(s).size() != prem.side(s).size())
          fail(E::BadCorrespondence, id,
               "premise " + std::to_string(k) +
                   ": correspondence does not cover every occurrence");
        for (std::size_t i = 0; i < prem.side(s).size(); ++i) {
          const Target &t = link.side(s)[i];
          if (t.index >= c.side(t.side).size())
            fail(E::BadCorrespondence, id, "target out of range");
          const Formula *there = nullptr;
          try {
            there = &subformula_at(c.side(t.side)[t.index], t.path);
          } catch (const BadPath &) {
            fail(E::BadCorrespondence, id, "target path does not resolve");
          }
          if (*there != prem.side(s)[i])
            fail(E::BadCorrespondence, id,
                 "premise formula " + print_formula(prem.side(s)[i]) +
                     " does not match " + print_formula(*there));
          if (auto pn = principal_no(t.side, t.index)) {
            actives.push_back({s, *pn, t.path});
          } else {
            if (!t.path.empty() || t.side != s)
              fail(E::BadCorrespondence, id,
                   "side formula mapped to a different position");
            (t.side == Side::Antecedent ? hits_a : hits_s)[t.index]++;
          }
        }
      }
      auto expected = schema.actives[k];
      std::sort(actives.begin(), actives.end());
      std::sort(expected.begin(), expected.end());
      if (actives != expected)
        fail(E::BadRule, id,
             rn + ": premise " + std::to_string(k) +
                 " does not have the active formulas of the rule");
      for (Side s : {Side::Antecedent, Side::Succedent}) {
        const auto &hits = s == Side::Antecedent ? hits_a : hits_s;
        for (std::size_t i = 0; i < hits.size(); ++i) {
          if (principal_no(s, i))
            continue;
          if (hits[i] != 1)
            fail(E::BadCorrespondence, id,
                 "side formula " + print_formula(c.side(s)[i]) +
                     " must come from exactly one premise occurrence");
        }
      }
    }
  }

  Calculus calculus_;
  std::size_t next_ = 0;
};

} // namespace

void check_sequent_proof(const SequentProof &p, Calculus calculus) {
  Checker(calculus).node(p);
}

} // namespace jlog
