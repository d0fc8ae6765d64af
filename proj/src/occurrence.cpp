#include "jlog/occurrence.hpp"

#include "jlog/errors.hpp"

namespace jlog {

const Formula &subformula_at(const Formula &host, const OccurrencePath &path) {
  const Formula *f = &host;
  for (auto step : path) {
    if (step >= f->child_count())
      throw BadPath("path leaves the formula");
    f = &f->child(step);
  }
  return *f;
}

const Formula &subformula_at(const Sequent &host, const SequentPosition &pos) {
  const auto &side = host.side(pos.side);
  if (pos.index >= side.size())
    throw BadPath("no formula at sequent index " + std::to_string(pos.index));
  return subformula_at(side[pos.index], pos.path);
}

Polarity polarity_at(const Formula &host, const OccurrencePath &path) {
  Polarity p = Polarity::Positive;
  const Formula *f = &host;
  for (auto step : path) {
    if (step >= f->child_count())
      throw BadPath("path leaves the formula");
    if ((f->kind() == Formula::Kind::Implies && step == 0) ||
        f->kind() == Formula::Kind::Not)
      p = flip(p);
    f = &f->child(step);
  }
  return p;
}

Polarity polarity_at(const Sequent &host, const SequentPosition &pos) {
  const auto &side = host.side(pos.side);
  if (pos.index >= side.size())
    throw BadPath("no formula at sequent index " + std::to_string(pos.index));
  Polarity p = polarity_at(side[pos.index], pos.path);
  return pos.side == Side::Antecedent ? flip(p) : p;
}

namespace {

void collect_boxes(const Formula &f, OccurrencePath &path,
                   std::vector<OccurrencePath> &out) {
  if (f.box_count() == 0)
    return;
  if (f.kind() == Formula::Kind::Box)
    out.push_back(path);
  for (std::size_t i = 0; i < f.child_count(); ++i) {
    path.push_back(static_cast<std::uint8_t>(i));
    collect_boxes(f.child(i), path, out);
    path.pop_back();
  }
}

} // namespace

std::vector<OccurrencePath> box_occurrences(const Formula &f) {
  std::vector<OccurrencePath> out;
  OccurrencePath path;
  collect_boxes(f, path, out);
  return out;
}

Formula forgetful(const Formula &f) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Atom:
  case K::Bottom:
  case K::Meta:
    return f;
  case K::Implies:
    return Formula::implies(forgetful(f.left()), forgetful(f.right()));
  case K::And:
    return Formula::conj(forgetful(f.left()), forgetful(f.right()));
  case K::Or:
    return Formula::disj(forgetful(f.left()), forgetful(f.right()));
  case K::Not:
    return Formula::neg(forgetful(f.body()));
  case K::Box:
  case K::JustOf:
    return Formula::box(forgetful(f.body()));
  case K::ProofOf:
    throw ProofOfPresent("forgetful translation meets a proof-term prefix");
  }
  return f;
}

} // namespace jlog
