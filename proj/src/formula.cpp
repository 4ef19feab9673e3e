#include "gel/formula.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gel {

FormulaPtr Formula::atom(std::string name) {
  return std::make_shared<Formula>(Formula{Conn::Atom, std::move(name), nullptr, nullptr});
}
FormulaPtr Formula::neg(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{Conn::Neg, {}, std::move(a), nullptr});
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Conn::Or, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::box(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{Conn::Box, {}, std::move(a), nullptr});
}
FormulaPtr Formula::arrow(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Conn::Arrow, {}, std::move(a), std::move(b)});
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return neg(disj(neg(std::move(a)), neg(std::move(b))));
}
FormulaPtr Formula::impl(FormulaPtr a, FormulaPtr b) {
  return disj(neg(std::move(a)), std::move(b));
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return conj(impl(a, b), impl(b, a));
}
FormulaPtr Formula::prec(FormulaPtr a, FormulaPtr b) {
  return arrow(std::move(b), taut_of(std::move(a)));
}
FormulaPtr Formula::taut_of(FormulaPtr a) {
  return disj(a, neg(a));
}

bool equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Conn::Atom: return a.name == b.name;
    case Conn::Neg:
    case Conn::Box: return equal(*a.lhs, *b.lhs);
    case Conn::Or:
    case Conn::Arrow: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
  }
  return false;
}

// --------------------------------------------------------------------------
// Tokenizer / parser

namespace {

enum class Tok {
  Ident, LParen, RParen, Neg, Box, Or, And, Arrow, Impl, Iff, Prec, End
};

struct Token {
  Tok kind;
  std::string text;  // Ident only
  size_t pos;
};

struct Lexer {
  std::string_view src;
  size_t at = 0;

  bool eat(std::string_view lit) {
    if (src.substr(at, lit.size()) == lit) {
      at += lit.size();
      return true;
    }
    return false;
  }

  Token next() {
    while (at < src.size() && std::isspace(static_cast<unsigned char>(src[at]))) ++at;
    size_t start = at;
    if (at >= src.size()) return {Tok::End, {}, start};
    if (eat("(")) return {Tok::LParen, {}, start};
    if (eat(")")) return {Tok::RParen, {}, start};
    if (eat("~") || eat("¬")) return {Tok::Neg, {}, start};
    if (eat("[]") || eat("□")) return {Tok::Box, {}, start};
    if (eat("\\/") || eat("∨")) return {Tok::Or, {}, start};
    if (eat("/\\") || eat("∧")) return {Tok::And, {}, start};
    if (eat("->") || eat("→")) return {Tok::Arrow, {}, start};
    if (eat("=>") || eat("⊃")) return {Tok::Impl, {}, start};
    if (eat("<->") || eat("≡")) return {Tok::Iff, {}, start};
    if (eat("<") || eat("≺")) return {Tok::Prec, {}, start};
    char c = src[at];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t end = at;
      auto word = [&](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '\'';
      };
      while (end < src.size() && word(src[end])) ++end;
      std::string text(src.substr(at, end - at));
      at = end;
      return {Tok::Ident, std::move(text), start};
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", at);
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t at = 0;
  LanguageMode mode;

  const Token& peek() const { return toks[at]; }
  Token take() { return toks[at++]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, peek().pos);
  }

  // formula := imp (('<->'|'<') formula)?
  FormulaPtr formula() {
    FormulaPtr left = imp();
    if (peek().kind == Tok::Iff) {
      take();
      return Formula::iff(left, formula());
    }
    if (peek().kind == Tok::Prec) {
      take();
      return Formula::prec(left, formula());
    }
    return left;
  }

  FormulaPtr imp() {
    FormulaPtr left = disjunct();
    if (peek().kind == Tok::Arrow) {
      take();
      return Formula::arrow(left, imp());
    }
    if (peek().kind == Tok::Impl) {
      take();
      return Formula::impl(left, imp());
    }
    return left;
  }

  FormulaPtr disjunct() {
    FormulaPtr left = conjunct();
    if (peek().kind == Tok::Or) {
      take();
      return Formula::disj(left, disjunct());
    }
    return left;
  }

  FormulaPtr conjunct() {
    FormulaPtr left = unary();
    if (peek().kind == Tok::And) {
      take();
      return Formula::conj(left, conjunct());
    }
    return left;
  }

  FormulaPtr unary() {
    if (peek().kind == Tok::Neg) {
      take();
      return Formula::neg(unary());
    }
    if (peek().kind == Tok::Box) {
      size_t pos = peek().pos;
      take();
      if (mode == LanguageMode::Demodalized)
        throw ParseError("box operator not allowed in demodalized language", pos);
      return Formula::box(unary());
    }
    return primary();
  }

  FormulaPtr primary() {
    if (peek().kind == Tok::Ident) return Formula::atom(take().text);
    if (peek().kind == Tok::LParen) {
      take();
      FormulaPtr inner = formula();
      if (peek().kind != Tok::RParen) fail("expected ')'");
      take();
      return inner;
    }
    fail("expected a formula");
  }
};

}  // namespace

FormulaPtr parse(std::string_view text, LanguageMode mode) {
  Lexer lex{text};
  Parser p;
  p.mode = mode;
  for (;;) {
    Token t = lex.next();
    bool end = t.kind == Tok::End;
    p.toks.push_back(std::move(t));
    if (end) break;
  }
  FormulaPtr f = p.formula();
  if (p.peek().kind != Tok::End) p.fail("trailing input");
  return f;
}

std::string print(const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: return f.name;
    case Conn::Neg: return "~" + print(*f.lhs);
    case Conn::Box: return "[]" + print(*f.lhs);
    case Conn::Or: return "(" + print(*f.lhs) + " \\/ " + print(*f.rhs) + ")";
    case Conn::Arrow: return "(" + print(*f.lhs) + " -> " + print(*f.rhs) + ")";
  }
  return {};
}

namespace {
void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind) {
    case Conn::Atom: out.insert(f.name); return;
    case Conn::Neg:
    case Conn::Box: collect_vars(*f.lhs, out); return;
    case Conn::Or:
    case Conn::Arrow:
      collect_vars(*f.lhs, out);
      collect_vars(*f.rhs, out);
      return;
  }
}
}  // namespace

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect_vars(f, out);
  return out;
}

bool contains_box(const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: return false;
    case Conn::Box: return true;
    case Conn::Neg: return contains_box(*f.lhs);
    case Conn::Or:
    case Conn::Arrow: return contains_box(*f.lhs) || contains_box(*f.rhs);
  }
  return false;
}

bool is_metavariable(const std::string& name) {
  return !name.empty() && std::isupper(static_cast<unsigned char>(name[0]));
}

bool has_metavariables(const Formula& f) {
  switch (f.kind) {
    case Conn::Atom: return is_metavariable(f.name);
    case Conn::Neg:
    case Conn::Box: return has_metavariables(*f.lhs);
    case Conn::Or:
    case Conn::Arrow: return has_metavariables(*f.lhs) || has_metavariables(*f.rhs);
  }
  return false;
}

FormulaPtr substitute(const FormulaPtr& schema, const Binding& binding) {
  switch (schema->kind) {
    case Conn::Atom: {
      if (!is_metavariable(schema->name)) return schema;
      auto it = binding.find(schema->name);
      if (it == binding.end())
        throw SubstitutionError("unbound metavariable " + schema->name);
      return it->second;
    }
    case Conn::Neg: return Formula::neg(substitute(schema->lhs, binding));
    case Conn::Box: return Formula::box(substitute(schema->lhs, binding));
    case Conn::Or:
      return Formula::disj(substitute(schema->lhs, binding),
                           substitute(schema->rhs, binding));
    case Conn::Arrow:
      return Formula::arrow(substitute(schema->lhs, binding),
                            substitute(schema->rhs, binding));
  }
  return schema;
}

// --------------------------------------------------------------------------
// Content terms

ContentTermPtr ContentTerm::tatom(std::string name) {
  return std::make_shared<ContentTerm>(ContentTerm{ContentConn::TAtom, std::move(name), nullptr, nullptr});
}
ContentTermPtr ContentTerm::join(ContentTermPtr a, ContentTermPtr b) {
  return std::make_shared<ContentTerm>(ContentTerm{ContentConn::Join, {}, std::move(a), std::move(b)});
}
ContentTermPtr ContentTerm::gru(ContentTermPtr a, ContentTermPtr b) {
  return std::make_shared<ContentTerm>(ContentTerm{ContentConn::Gru, {}, std::move(a), std::move(b)});
}

ContentTermPtr translate(const Formula& f, TranslationMode mode) {
  switch (f.kind) {
    case Conn::Atom: return ContentTerm::tatom(f.name);
    case Conn::Neg:
    case Conn::Box: return translate(*f.lhs, mode);
    case Conn::Or:
      return ContentTerm::join(translate(*f.lhs, mode), translate(*f.rhs, mode));
    case Conn::Arrow: {
      auto l = translate(*f.lhs, mode);
      auto r = translate(*f.rhs, mode);
      return mode == TranslationMode::Agnostic ? ContentTerm::gru(std::move(l), std::move(r))
                                               : ContentTerm::join(std::move(l), std::move(r));
    }
  }
  return nullptr;
}

namespace {
void collect_tatoms(const ContentTerm& t, std::set<std::string>& out) {
  if (t.kind == ContentConn::TAtom) {
    out.insert(t.name);
    return;
  }
  collect_tatoms(*t.lhs, out);
  collect_tatoms(*t.rhs, out);
}
}  // namespace

std::set<std::string> term_atoms(const ContentTerm& t) {
  std::set<std::string> out;
  collect_tatoms(t, out);
  return out;
}

bool contains_gru(const ContentTerm& t) {
  if (t.kind == ContentConn::TAtom) return false;
  if (t.kind == ContentConn::Gru) return true;
  return contains_gru(*t.lhs) || contains_gru(*t.rhs);
}

std::string print(const ContentTerm& t) {
  switch (t.kind) {
    case ContentConn::TAtom: return t.name;
    case ContentConn::Join: return "(" + print(*t.lhs) + " + " + print(*t.rhs) + ")";
    case ContentConn::Gru: return "(" + print(*t.lhs) + " * " + print(*t.rhs) + ")";
  }
  return {};
}

}  // namespace gel
