#include "jlog/countermodel.hpp"

#include "jlog/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace jlog {

namespace {

bool is_subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

// Boxed subformulas, inner ones first.
void collect_boxes(const Formula &f, std::vector<Formula> &out) {
  for (std::size_t i = 0; i < f.child_count(); ++i)
    collect_boxes(f.child(i), out);
  if (f.kind() == Formula::Kind::Box &&
      std::find(out.begin(), out.end(), f) == out.end())
    out.push_back(f);
}

class Search {
public:
  Search(const Formula &f, bool monotone, std::size_t worlds)
      : f_(f), monotone_(monotone), n_(worlds),
        all_(worlds == 64 ? ~WorldSet{0} : (WorldSet{1} << worlds) - 1) {
    collect_boxes(f, boxes_);
    auto atoms = atoms_of(f);
    atoms_.assign(atoms.begin(), atoms.end());
    bits_.assign(boxes_.size(), 0);
    sets_.assign(boxes_.size(), 0);
  }

  std::optional<Countermodel> run() {
    std::size_t combos = std::size_t{1} << (atoms_.size() * n_);
    for (std::size_t v = 0; v < combos; ++v) {
      valuation_.assign(atoms_.size(), 0);
      for (std::size_t a = 0; a < atoms_.size(); ++a)
        valuation_[a] = (v >> (a * n_)) & all_;
      if (place(0))
        return build();
    }
    return std::nullopt;
  }

private:
  // Truth set given the valuation and the box bits chosen so far.
  WorldSet eval(const Formula &g) const {
    using K = Formula::Kind;
    switch (g.kind()) {
    case K::Bottom:
      return 0;
    case K::Atom:
      return valuation_[std::find(atoms_.begin(), atoms_.end(), g.name()) -
                        atoms_.begin()];
    case K::Implies:
      return (~eval(g.left()) | eval(g.right())) & all_;
    case K::And:
      return eval(g.left()) & eval(g.right());
    case K::Or:
      return eval(g.left()) | eval(g.right());
    case K::Not:
      return ~eval(g.body()) & all_;
    case K::Box:
      return bits_[std::find(boxes_.begin(), boxes_.end(), g) - boxes_.begin()];
    default:
      throw DialectError("countermodel search handles modal formulas only");
    }
  }

  // bits_[i]: worlds where boxes_[i] holds.
  bool place(std::size_t i) {
    if (i == boxes_.size())
      return eval(f_) != all_;
    sets_[i] = eval(boxes_[i].body());
    for (WorldSet b = 0;; ++b) {
      if (consistent(i, b)) {
        bits_[i] = b;
        if (place(i + 1))
          return true;
      }
      if (b == all_)
        break;
    }
    return false;
  }

  bool consistent(std::size_t i, WorldSet b) const {
    for (std::size_t j = 0; j < i; ++j) {
      WorldSet x = sets_[i], y = sets_[j];
      if (x == y && bits_[j] != b)
        return false;
      if (!monotone_)
        continue;
      // |A_j| ⊆ |A_i|: wherever □A_j holds so must □A_i, and conversely.
      if (is_subset(y, x) && !is_subset(bits_[j], b))
        return false;
      if (is_subset(x, y) && !is_subset(b, bits_[j]))
        return false;
    }
    return true;
  }

  std::optional<Countermodel> build() const {
    Countermodel c;
    NeighborhoodModel &m = c.model;
    m.worlds = n_;
    m.valuation.resize(n_);
    m.neighborhoods.resize(n_);
    for (std::size_t w = 0; w < n_; ++w) {
      for (std::size_t a = 0; a < atoms_.size(); ++a)
        if (valuation_[a] >> w & 1)
          m.valuation[w].insert(atoms_[a]);
      for (std::size_t i = 0; i < boxes_.size(); ++i)
        if (bits_[i] >> w & 1)
          m.neighborhoods[w].insert(sets_[i]);
    }
    if (monotone_)
      m.neighborhoods = monotone_closure(m.neighborhoods, n_);
    WorldSet truth = modal_truth_set(m, f_);
    if (truth == all_)
      throw Error("internal: countermodel does not falsify the formula");
    while (truth >> c.world & 1)
      ++c.world;
    return c;
  }

  Formula f_;
  bool monotone_;
  std::size_t n_;
  WorldSet all_;
  std::vector<Formula> boxes_;
  std::vector<std::string> atoms_;
  std::vector<WorldSet> valuation_;
  std::vector<WorldSet> bits_;
  std::vector<WorldSet> sets_;
};

} // namespace

bool modal_truth(const NeighborhoodModel &m, std::size_t w, const Formula &f) {
  if (w >= m.worlds)
    throw UnknownWorld("no world " + std::to_string(w));
  return modal_truth_set(m, f) >> w & 1;
}

WorldSet modal_truth_set(const NeighborhoodModel &m, const Formula &f) {
  const WorldSet all =
      m.worlds == 64 ? ~WorldSet{0} : (WorldSet{1} << m.worlds) - 1;
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Bottom:
    return 0;
  case K::Atom: {
    WorldSet s = 0;
    for (std::size_t w = 0; w < m.worlds; ++w)
      if (m.valuation.at(w).count(f.name()))
        s |= WorldSet{1} << w;
    return s;
  }
  case K::Implies:
    return (~modal_truth_set(m, f.left()) | modal_truth_set(m, f.right())) &
           all;
  case K::And:
    return modal_truth_set(m, f.left()) & modal_truth_set(m, f.right());
  case K::Or:
    return modal_truth_set(m, f.left()) | modal_truth_set(m, f.right());
  case K::Not:
    return ~modal_truth_set(m, f.body()) & all;
  case K::Box: {
    WorldSet body = modal_truth_set(m, f.body());
    WorldSet s = 0;
    for (std::size_t w = 0; w < m.worlds; ++w)
      if (m.neighborhoods.at(w).count(body))
        s |= WorldSet{1} << w;
    return s;
  }
  default:
    throw DialectError("neighborhood models interpret modal formulas only");
  }
}

bool is_monotone(const NeighborhoodModel &m) {
  return monotone_closure(m.neighborhoods, m.worlds) == m.neighborhoods;
}

std::optional<Countermodel> find_countermodel(const Formula &f,
                                              Calculus calculus,
                                              std::size_t max_worlds) {
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_worlds, 6); ++n)
    if (auto c = Search(f, calculus == Calculus::GM, n).run())
      return c;
  return std::nullopt;
}

} // namespace jlog
