#include "jlog/syntax.hpp"

#include <algorithm>

namespace jlog {

namespace {

int term_prec(const Term &t) {
  switch (t.kind()) {
  case Term::Kind::Sum:
  case Term::Kind::JustSum:
    return 1;
  case Term::Kind::App:
    return 2;
  default:
    return 3;
  }
}

void put_term(const Term &t, std::string &out);

void put_term_wrapped(const Term &t, bool wrap, std::string &out) {
  if (wrap)
    out += '(';
  put_term(t, out);
  if (wrap)
    out += ')';
}

void put_term(const Term &t, std::string &out) {
  using K = Term::Kind;
  switch (t.kind()) {
  case K::Constant:
    out += t.name();
    return;
  case K::ProofVar:
    out += t.provisional() ? 'z' : 'p';
    out += std::to_string(t.index());
    return;
  case K::JustVar:
    out += t.provisional() ? 'v' : 'x';
    out += std::to_string(t.index());
    return;
  case K::MetaProof:
  case K::MetaJust:
    out += '?';
    out += t.name();
    return;
  case K::App:
    put_term_wrapped(t.left(), term_prec(t.left()) < 2, out);
    out += " * ";
    put_term_wrapped(t.right(), term_prec(t.right()) <= 2, out);
    return;
  case K::Sum:
  case K::JustSum:
    put_term(t.left(), out);
    out += " + ";
    put_term_wrapped(t.right(), term_prec(t.right()) <= 1, out);
    return;
  case K::Bang:
    out += '!';
    put_term_wrapped(t.inner(), term_prec(t.inner()) < 3, out);
    return;
  case K::E:
    out += "e(";
    put_term(t.inner(), out);
    out += ')';
    return;
  case K::M:
    out += "m(";
    put_term(t.left(), out);
    out += ", ";
    put_term(t.right(), out);
    out += ')';
    return;
  }
}

int formula_prec(const Formula &f) {
  switch (f.kind()) {
  case Formula::Kind::Implies:
    return 1;
  case Formula::Kind::Or:
    return 2;
  case Formula::Kind::And:
    return 3;
  default:
    return 4;
  }
}

void put_formula(const Formula &f, std::string &out);

void put_formula_wrapped(const Formula &f, bool wrap, std::string &out) {
  if (wrap)
    out += '(';
  put_formula(f, out);
  if (wrap)
    out += ')';
}

void put_formula(const Formula &f, std::string &out) {
  using K = Formula::Kind;
  switch (f.kind()) {
  case K::Atom:
    out += f.name();
    return;
  case K::Bottom:
    out += "_|_";
    return;
  case K::Meta:
    out += '?';
    out += f.name();
    return;
  case K::Implies:
    put_formula_wrapped(f.left(), formula_prec(f.left()) <= 1, out);
    out += " -> ";
    put_formula(f.right(), out);
    return;
  case K::Or:
    put_formula_wrapped(f.left(), formula_prec(f.left()) < 2, out);
    out += " | ";
    put_formula_wrapped(f.right(), formula_prec(f.right()) <= 2, out);
    return;
  case K::And:
    put_formula_wrapped(f.left(), formula_prec(f.left()) < 3, out);
    out += " & ";
    put_formula_wrapped(f.right(), formula_prec(f.right()) <= 3, out);
    return;
  case K::Not:
    out += '~';
    break;
  case K::Box:
    out += "[]";
    break;
  case K::ProofOf:
    // Prefix position only admits simple terms.
    put_term_wrapped(f.term(), term_prec(f.term()) < 3, out);
    out += ':';
    break;
  case K::JustOf:
    out += '[';
    put_term(f.term(), out);
    out += ']';
    break;
  }
  put_formula_wrapped(f.body(), formula_prec(f.body()) < 4, out);
}

void put_list(const std::vector<Formula> &fs, std::string &out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i)
      out += ", ";
    put_formula(fs[i], out);
  }
}

void scan_dialect(const Term &t, bool &je, bool &jem) {
  using K = Term::Kind;
  switch (t.kind()) {
  case K::Sum:
  case K::E:
    je = true;
    break;
  case K::JustVar:
  case K::JustSum:
  case K::M:
  case K::MetaJust:
    jem = true;
    break;
  default:
    break;
  }
  if (t.left().valid())
    scan_dialect(t.left(), je, jem);
  if (t.right().valid())
    scan_dialect(t.right(), je, jem);
}

void scan_dialect(const Formula &f, bool &je, bool &jem, bool &box,
                  bool &terms) {
  if (f.kind() == Formula::Kind::Box)
    box = true;
  if (f.kind() == Formula::Kind::ProofOf || f.kind() == Formula::Kind::JustOf) {
    terms = true;
    scan_dialect(f.term(), je, jem);
  }
  for (std::size_t i = 0; i < f.child_count(); ++i)
    scan_dialect(f.child(i), je, jem, box, terms);
}

} // namespace

std::string print_term(const Term &t) {
  std::string out;
  put_term(t, out);
  return out;
}

std::string print_formula(const Formula &f) {
  std::string out;
  put_formula(f, out);
  return out;
}

std::string print_sequent(const Sequent &s) {
  std::string out;
  put_list(s.antecedent, out);
  out += s.antecedent.empty() ? "=>" : " =>";
  if (!s.succedent.empty()) {
    out += ' ';
    put_list(s.succedent, out);
  }
  return out;
}

Dialect infer_dialect(const Formula &f) {
  bool je = false, jem = false, box = false, terms = false;
  scan_dialect(f, je, jem, box, terms);
  if (jem)
    return Dialect::JEM;
  if (je || terms)
    return Dialect::JE;
  if (box)
    return Dialect::Modal;
  return Dialect::JE;
}

bool same_multiset(const Sequent &a, const Sequent &b) {
  auto sorted = [](std::vector<Formula> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(a.antecedent) == sorted(b.antecedent) &&
         sorted(a.succedent) == sorted(b.succedent);
}

} // namespace jlog
