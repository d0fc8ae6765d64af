#include "jlog/errors.hpp"
#include "jlog/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace jlog {

namespace {

enum class Tok {
  Atom,
  Constant,
  ProofVar,
  JustVar,
  KwE,
  KwM,
  Bottom,
  Arrow,
  Iff,
  And,
  Or,
  Not,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Colon,
  Star,
  Plus,
  Bang,
  Comma,
  Turnstile,
  Meta,
  End,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
  unsigned index = 0;
  bool provisional = false;
};

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

unsigned to_index(std::string_view digits, std::size_t pos) {
  if (digits.size() > 9)
    throw SyntaxError(pos, "variable index too large");
  return static_cast<unsigned>(std::stoul(std::string(digits)));
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(std::string_view s, bool allow_meta) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i;
    auto single = [&](Tok k, std::size_t len) {
      out.push_back({k, pos, std::string(s.substr(i, len))});
      i += len;
    };
    if (starts("_|_")) {
      single(Tok::Bottom, 3);
    } else if (starts("<->")) {
      single(Tok::Iff, 3);
    } else if (starts("->")) {
      single(Tok::Arrow, 2);
    } else if (starts("=>")) {
      single(Tok::Turnstile, 2);
    } else if (c == '&') {
      single(Tok::And, 1);
    } else if (c == '|') {
      single(Tok::Or, 1);
    } else if (c == '~') {
      single(Tok::Not, 1);
    } else if (c == '[') {
      single(Tok::LBrack, 1);
    } else if (c == ']') {
      single(Tok::RBrack, 1);
    } else if (c == '(') {
      single(Tok::LParen, 1);
    } else if (c == ')') {
      single(Tok::RParen, 1);
    } else if (c == ':') {
      single(Tok::Colon, 1);
    } else if (c == '*') {
      single(Tok::Star, 1);
    } else if (c == '+') {
      single(Tok::Plus, 1);
    } else if (c == '!') {
      single(Tok::Bang, 1);
    } else if (c == ',') {
      single(Tok::Comma, 1);
    } else if (c == '?') {
      if (!allow_meta)
        throw SyntaxError(pos, "metavariables are not allowed here");
      std::size_t j = i + 1;
      while (j < s.size() && ident_char(s[j]))
        ++j;
      if (j == i + 1)
        throw SyntaxError(pos, "empty metavariable name");
      out.push_back({Tok::Meta, pos, std::string(s.substr(i + 1, j - i - 1))});
      i = j;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j]))
        ++j;
      std::string_view id = s.substr(i, j - i);
      Token t{Tok::Atom, pos, std::string(id)};
      if (std::isupper(static_cast<unsigned char>(id[0]))) {
        t.kind = Tok::Atom;
      } else if (id == "e") {
        t.kind = Tok::KwE;
      } else if (id == "m") {
        t.kind = Tok::KwM;
      } else if (id[0] == 'c' && (all_digits(id.substr(1)) ||
                                  (id.size() > 2 && id[1] == '_'))) {
        t.kind = Tok::Constant;
      } else if ((id[0] == 'p' || id[0] == 'z') && all_digits(id.substr(1))) {
        t.kind = Tok::ProofVar;
        t.index = to_index(id.substr(1), pos);
        t.provisional = id[0] == 'z';
      } else if ((id[0] == 'x' || id[0] == 'v') && all_digits(id.substr(1))) {
        t.kind = Tok::JustVar;
        t.index = to_index(id.substr(1), pos);
        t.provisional = id[0] == 'v';
      } else {
        throw SyntaxError(pos, "unknown identifier '" + std::string(id) + "'");
      }
      out.push_back(std::move(t));
      i = j;
    } else {
      throw SyntaxError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, std::optional<Dialect> dialect = {})
      : toks_(std::move(toks)), dialect_(dialect) {}

  const Token &peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  const Token &advance() { return toks_[pos_++]; }
  void expect(Tok k, const char *what) {
    if (!at(k))
      fail(std::string("expected ") + what);
    ++pos_;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw SyntaxError(peek().pos, what);
  }
  bool done() const { return at(Tok::End); }

  Formula formula() {
    Formula a = implication();
    if (at(Tok::Iff)) {
      advance();
      Formula b = implication();
      return iff(a, b);
    }
    return a;
  }

  Formula implication() {
    Formula a = disjunction();
    if (at(Tok::Arrow)) {
      advance();
      return Formula::implies(a, implication());
    }
    return a;
  }

  Formula disjunction() {
    Formula a = conjunction();
    while (at(Tok::Or)) {
      advance();
      a = Formula::disj(a, conjunction());
    }
    return a;
  }

  Formula conjunction() {
    Formula a = unary();
    while (at(Tok::And)) {
      advance();
      a = Formula::conj(a, unary());
    }
    return a;
  }

  Formula unary() {
    const Token &t = peek();
    switch (t.kind) {
    case Tok::Not:
      advance();
      return Formula::neg(unary());
    case Tok::Atom:
      advance();
      return Formula::atom(t.text);
    case Tok::Bottom:
      advance();
      return Formula::bottom();
    case Tok::LBrack: {
      advance();
      if (at(Tok::RBrack)) {
        advance();
        return Formula::box(unary());
      }
      Term j = just_sum();
      expect(Tok::RBrack, "']'");
      return Formula::just_of(j, unary());
    }
    case Tok::Meta:
      if (peek(1).kind == Tok::Colon)
        return proof_prefix();
      advance();
      return Formula::meta(t.text);
    case Tok::Constant:
    case Tok::ProofVar:
    case Tok::Bang:
      return proof_prefix();
    case Tok::LParen: {
      std::size_t save = pos_;
      try {
        return proof_prefix();
      } catch (const SyntaxError &) {
        pos_ = save;
      }
      advance();
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    case Tok::KwE:
    case Tok::KwM:
    case Tok::JustVar: {
      // A bare justification term: report the dialect first if it is wrong.
      std::size_t start = pos_;
      Term j = just_sum();
      if (dialect_)
        validate(j, *dialect_);
      pos_ = start;
      fail("justification terms go in brackets");
    }
    default:
      fail("expected a formula");
    }
  }

  Formula proof_prefix() {
    Term p = proof_unary();
    expect(Tok::Colon, "':' after proof term");
    return Formula::proof_of(p, unary());
  }

  Term proof_sum() {
    Term a = proof_product();
    while (at(Tok::Plus)) {
      advance();
      a = Term::sum(a, proof_product());
    }
    return a;
  }

  Term proof_product() {
    Term a = proof_unary();
    while (at(Tok::Star)) {
      advance();
      a = Term::app(a, proof_unary());
    }
    return a;
  }

  Term proof_unary() {
    const Token &t = peek();
    switch (t.kind) {
    case Tok::Bang:
      advance();
      return Term::bang(proof_unary());
    case Tok::Constant:
      advance();
      return Term::constant(t.text);
    case Tok::ProofVar:
      advance();
      return Term::proof_var(t.index, t.provisional);
    case Tok::Meta:
      advance();
      return Term::meta(Sort::Proof, t.text);
    case Tok::LParen: {
      advance();
      Term p = proof_sum();
      expect(Tok::RParen, "')'");
      return p;
    }
    default:
      fail("expected a proof term");
    }
  }

  Term just_sum() {
    Term a = just_atom();
    while (at(Tok::Plus)) {
      advance();
      a = Term::just_sum(a, just_atom());
    }
    return a;
  }

  Term just_atom() {
    const Token &t = peek();
    switch (t.kind) {
    case Tok::JustVar:
      advance();
      return Term::just_var(t.index, t.provisional);
    case Tok::Meta:
      advance();
      return Term::meta(Sort::Justification, t.text);
    case Tok::KwE: {
      advance();
      expect(Tok::LParen, "'(' after e");
      Term p = proof_sum();
      expect(Tok::RParen, "')'");
      return Term::e(p);
    }
    case Tok::KwM: {
      advance();
      expect(Tok::LParen, "'(' after m");
      Term p = proof_sum();
      expect(Tok::Comma, "','");
      Term j = just_sum();
      expect(Tok::RParen, "')'");
      return Term::m(p, j);
    }
    case Tok::LParen: {
      advance();
      Term j = just_sum();
      expect(Tok::RParen, "')'");
      return j;
    }
    default:
      fail("expected a justification term");
    }
  }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out;
    if (at(Tok::Turnstile) || at(Tok::End))
      return out;
    out.push_back(formula());
    while (at(Tok::Comma)) {
      advance();
      out.push_back(formula());
    }
    return out;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Dialect> dialect_;
};

} // namespace

Formula parse_formula(std::string_view text, Dialect dialect,
                      ParseOptions options) {
  Parser p(lex(text, options.allow_meta), dialect);
  Formula f = p.formula();
  if (!p.done())
    p.fail("unexpected trailing input");
  validate(f, dialect);
  return f;
}

Term parse_term(std::string_view text, Sort sort, Dialect dialect,
                ParseOptions options) {
  Parser p(lex(text, options.allow_meta));
  Term t = sort == Sort::Proof ? p.proof_sum() : p.just_sum();
  if (!p.done())
    p.fail("unexpected trailing input");
  validate(t, dialect);
  return t;
}

Sequent parse_sequent(std::string_view text, Dialect dialect) {
  Parser p(lex(text, false), dialect);
  Sequent s;
  s.antecedent = p.formula_list();
  p.expect(Tok::Turnstile, "'=>'");
  s.succedent = p.formula_list();
  if (!p.done())
    p.fail("unexpected trailing input");
  for (const auto &f : s.antecedent)
    validate(f, dialect);
  for (const auto &f : s.succedent)
    validate(f, dialect);
  return s;
}

} // namespace jlog
