#include "jlog/families.hpp"

#include "jlog/errors.hpp"

#include <algorithm>
#include <numeric>

namespace jlog {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

void flatten_into(const SequentProof &p, std::size_t parent, FlatProof &out) {
  std::size_t id = out.nodes.size();
  out.nodes.push_back(p.get());
  out.children.emplace_back();
  out.parent.push_back(parent);
  if (parent != static_cast<std::size_t>(-1))
    out.children[parent].push_back(id);
  for (const auto &q : p->premises)
    flatten_into(q, id, out);
  out.postorder.push_back(id);
}

} // namespace

FlatProof flatten(const SequentProof &p) {
  FlatProof out;
  flatten_into(p, static_cast<std::size_t>(-1), out);
  return out;
}

std::size_t FamilyAnalysis::box_id(std::size_t node,
                                   const SequentPosition &pos) const {
  auto it = index.find({node, pos});
  if (it == index.end())
    throw BadPath("no box at the given position");
  return it->second;
}

FamilyAnalysis compute_families(const SequentProof &p, Calculus calculus) {
  try {
    check_sequent_proof(p, calculus);
  } catch (const SequentProofError &e) {
    throw SequentProofError(SequentProofError::Kind::UncheckedProof, e.node(),
                            e.what());
  }
  FamilyAnalysis fa;
  fa.calculus = calculus;
  fa.flat = flatten(p);
  const auto &flat = fa.flat;
  std::vector<std::size_t> rank(flat.nodes.size());
  for (std::size_t i = 0; i < flat.postorder.size(); ++i)
    rank[flat.postorder[i]] = i;

  for (std::size_t n : flat.postorder) {
    const Sequent &s = flat.nodes[n]->sequent;
    for (Side side : {Side::Antecedent, Side::Succedent})
      for (std::size_t i = 0; i < s.side(side).size(); ++i)
        for (auto &path : box_occurrences(s.side(side)[i])) {
          SequentPosition pos{side, i, std::move(path)};
          fa.index.emplace(std::make_pair(n, pos), fa.boxes.size());
          fa.boxes.push_back({n, std::move(pos)});
        }
  }

  UnionFind uf(fa.boxes.size());
  for (std::size_t n = 0; n < flat.nodes.size(); ++n) {
    const ProofNode &node = *flat.nodes[n];
    for (std::size_t k = 0; k < node.premises.size(); ++k) {
      std::size_t c = flat.children[n][k];
      const Sequent &prem = flat.nodes[c]->sequent;
      for (Side side : {Side::Antecedent, Side::Succedent})
        for (std::size_t i = 0; i < prem.side(side).size(); ++i) {
          const Target &t = node.links[k].side(side)[i];
          for (const auto &q : box_occurrences(prem.side(side)[i])) {
            OccurrencePath there = t.path;
            there.insert(there.end(), q.begin(), q.end());
            uf.unite(fa.box_id(c, {side, i, q}),
                     fa.box_id(n, {t.side, t.index, there}));
          }
        }
    }
  }

  // Families numbered by their smallest box id.
  fa.family_of.resize(fa.boxes.size());
  std::map<std::size_t, std::size_t> root_to_family;
  for (std::size_t b = 0; b < fa.boxes.size(); ++b) {
    std::size_t r = uf.find(b);
    auto [it, inserted] = root_to_family.emplace(r, fa.families.size());
    if (inserted)
      fa.families.emplace_back();
    fa.family_of[b] = it->second;
    Family &f = fa.families[it->second];
    Polarity pol = polarity_at(flat.nodes[fa.boxes[b].node]->sequent,
                               fa.boxes[b].position);
    if (f.members.empty())
      f.polarity = pol;
    else if (f.polarity != pol)
      f.polarity_consistent = false;
    f.members.push_back(b);
  }

  std::vector<std::size_t> modal_nodes;
  for (std::size_t n : flat.postorder)
    if (flat.nodes[n]->rule == Rule::RE || flat.nodes[n]->rule == Rule::RM)
      modal_nodes.push_back(n);

  auto principal_box = [&](std::size_t n, std::size_t which) {
    const Principal &pr = flat.nodes[n]->principal[which];
    return fa.box_id(n, {pr.side, pr.index, {}});
  };

  if (calculus == Calculus::GE) {
    UnionFind classes(fa.families.size());
    for (std::size_t n : modal_nodes) {
      std::size_t fa0 = fa.family_of[principal_box(n, 0)];
      std::size_t fa1 = fa.family_of[principal_box(n, 1)];
      for (std::size_t f : {fa0, fa1}) {
        auto &intro = fa.families[f].introduced_by;
        if (intro.empty() || intro.back() != n)
          intro.push_back(n);
        fa.families[f].essential = true;
      }
      classes.unite(fa0, fa1);
    }
    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t f = 0; f < fa.families.size(); ++f) {
      if (!fa.families[f].essential)
        continue;
      std::size_t r = classes.find(f);
      auto [it, inserted] = root_to_class.emplace(r, fa.classes.size());
      if (inserted)
        fa.classes.emplace_back();
      fa.families[f].cls = it->second;
      fa.classes[it->second].families.push_back(f);
    }
    for (auto &c : fa.classes) {
      for (std::size_t f : c.families)
        for (std::size_t n : fa.families[f].introduced_by)
          c.instances.push_back(n);
      std::sort(c.instances.begin(), c.instances.end(),
                [&](std::size_t a, std::size_t b) { return rank[a] < rank[b]; });
      c.instances.erase(std::unique(c.instances.begin(), c.instances.end()),
                        c.instances.end());
    }
  } else {
    for (std::size_t n : modal_nodes) {
      std::size_t f = fa.family_of[principal_box(n, 1)];
      fa.families[f].introduced_by.push_back(n);
      fa.families[f].essential = true;
    }
  }
  return fa;
}

} // namespace jlog
