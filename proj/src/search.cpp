#include "jlog/sequent_proof.hpp"

#include <algorithm>
#include <map>

namespace jlog {

namespace {

Sequent normalize(Sequent s) {
  for (auto *v : {&s.antecedent, &s.succedent}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return s;
}

bool is_axiom_ready(const Formula &f) {
  return f.kind() == Formula::Kind::Atom || f.kind() == Formula::Kind::Box;
}

struct Entry {
  SequentProof proof;
  std::size_t height = 0;
  /// Largest budget known to fail.
  std::size_t failed = 0;
};

class Searcher {
public:
  explicit Searcher(Calculus c) : calculus_(c) {}

  std::optional<SequentProof> prove_list(const Sequent &s, std::size_t budget) {
    auto p = prove_set(normalize(s), budget);
    if (!p)
      return std::nullopt;
    return weaken_to(*p, s);
  }

private:
  std::optional<SequentProof> prove_set(const Sequent &s, std::size_t budget) {
    if (budget == 0)
      return std::nullopt;
    auto &e = cache_[s];
    if (e.proof && e.height <= budget)
      return e.proof;
    if (e.failed >= budget)
      return std::nullopt;
    auto p = search(s, budget);
    auto &slot = cache_[s];
    if (p) {
      slot.proof = *p;
      slot.height = proof_height(*p);
    } else {
      slot.failed = std::max(slot.failed, budget);
    }
    return p;
  }

  std::optional<SequentProof> search(const Sequent &s, std::size_t budget) {
    constexpr Side A = Side::Antecedent;
    constexpr Side S = Side::Succedent;
    const Formula bottom = Formula::bottom();
    if (std::find(s.antecedent.begin(), s.antecedent.end(), bottom) !=
        s.antecedent.end()) {
      auto leaf = make_node(Rule::AxBot, Sequent{{bottom}, {}}, {{A, 0}}, {});
      return weaken_to(leaf, s);
    }
    for (const auto &f : s.antecedent) {
      if (f.kind() != Formula::Kind::Atom)
        continue;
      if (std::find(s.succedent.begin(), s.succedent.end(), f) !=
          s.succedent.end()) {
        auto leaf =
            make_node(Rule::AxP, Sequent{{f}, {f}}, {{A, 0}, {S, 0}}, {});
        return weaken_to(leaf, s);
      }
    }

    for (Side side : {A, S}) {
      const auto &fs = s.side(side);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (is_axiom_ready(fs[i]) || fs[i].kind() == Formula::Kind::Bottom)
          continue;
        return decompose(s, side, i, budget);
      }
    }

    for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
      if (s.antecedent[i].kind() != Formula::Kind::Box)
        continue;
      for (std::size_t j = 0; j < s.succedent.size(); ++j) {
        if (s.succedent[j].kind() != Formula::Kind::Box)
          continue;
        const Formula &a = s.antecedent[i].body();
        const Formula &b = s.succedent[j].body();
        Sequent concl{{s.antecedent[i]}, {s.succedent[j]}};
        auto p1 = prove_list(Sequent{{a}, {b}}, budget - 1);
        if (!p1)
          continue;
        SequentProof node;
        if (calculus_ == Calculus::GE) {
          auto p2 = prove_list(Sequent{{b}, {a}}, budget - 1);
          if (!p2)
            continue;
          node = make_node(Rule::RE, concl, {{A, 0}, {S, 0}}, {*p1, *p2});
        } else {
          node = make_node(Rule::RM, concl, {{A, 0}, {S, 0}}, {*p1});
        }
        return weaken_to(node, s);
      }
    }
    return std::nullopt;
  }

  // Invertible propositional rule on the principal formula at (side, i).
  std::optional<SequentProof> decompose(const Sequent &s, Side side,
                                        std::size_t i, std::size_t budget) {
    const Formula f = s.side(side)[i];
    Sequent rest = s;
    rest.side(side).erase(rest.side(side).begin() + i);
    auto with = [&](std::vector<Formula> ant, std::vector<Formula> succ) {
      Sequent out = rest;
      out.antecedent.insert(out.antecedent.begin(), ant.begin(), ant.end());
      out.succedent.insert(out.succedent.end(), succ.begin(), succ.end());
      return out;
    };
    std::vector<Sequent> premises;
    Rule rule;
    const bool left = side == Side::Antecedent;
    switch (f.kind()) {
    case Formula::Kind::Implies:
      if (left) {
        rule = Rule::ImpL;
        premises = {with({}, {f.left()}), with({f.right()}, {})};
      } else {
        rule = Rule::ImpR;
        premises = {with({f.left()}, {f.right()})};
      }
      break;
    case Formula::Kind::And:
      if (left) {
        rule = Rule::AndL;
        premises = {with({f.left(), f.right()}, {})};
      } else {
        rule = Rule::AndR;
        premises = {with({}, {f.left()}), with({}, {f.right()})};
      }
      break;
    case Formula::Kind::Or:
      if (left) {
        rule = Rule::OrL;
        premises = {with({f.left()}, {}), with({f.right()}, {})};
      } else {
        rule = Rule::OrR;
        premises = {with({}, {f.left(), f.right()})};
      }
      break;
    case Formula::Kind::Not:
      if (left) {
        rule = Rule::NotL;
        premises = {with({}, {f.body()})};
      } else {
        rule = Rule::NotR;
        premises = {with({f.body()}, {})};
      }
      break;
    default:
      return std::nullopt;
    }
    std::vector<SequentProof> proofs;
    for (const auto &p : premises) {
      auto q = prove_list(p, budget - 1);
      if (!q)
        return std::nullopt;
      proofs.push_back(*q);
    }
    return make_node(rule, s, {{side, i}}, std::move(proofs));
  }

  Calculus calculus_;
  std::map<Sequent, Entry> cache_;
};

} // namespace

std::optional<SequentProof> prove_bounded(const Sequent &s, Calculus calculus,
                                          std::size_t depth) {
  for (Side side : {Side::Antecedent, Side::Succedent})
    for (const auto &f : s.side(side))
      if (!conforms(f, Dialect::Modal))
        return std::nullopt;
  Searcher searcher(calculus);
  return searcher.prove_list(s, depth);
}

} // namespace jlog
