#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gel {

// Object language is <~, \/, [], ->>; every other connective is expanded
// away by the parser or the factory helpers below.
enum class Conn { Atom, Neg, Or, Box, Arrow };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  Conn kind;
  std::string name;     // Atom only
  FormulaPtr lhs, rhs;  // Neg/Box use lhs; Or/Arrow use both

  static FormulaPtr atom(std::string name);
  static FormulaPtr neg(FormulaPtr a);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr box(FormulaPtr a);
  static FormulaPtr arrow(FormulaPtr a, FormulaPtr b);

  // Derived connectives, expanded at construction time.
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);   // ~(~a \/ ~b)
  static FormulaPtr impl(FormulaPtr a, FormulaPtr b);   // ~a \/ b
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);    // (a => b) /\ (b => a)
  static FormulaPtr prec(FormulaPtr a, FormulaPtr b);   // b -> (a \/ ~a)
  static FormulaPtr taut_of(FormulaPtr a);              // a \/ ~a
};

bool equal(const Formula& a, const Formula& b);
inline bool equal(const FormulaPtr& a, const FormulaPtr& b) { return equal(*a, *b); }

enum class LanguageMode { Modal, Demodalized };

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Accepts the ASCII grammar (~ \/ /\ [] -> => <-> <) and the usual UTF-8
// glyphs. Precedence: ~,[] > /\ > \/ > ->,=> > <->,<; binaries associate
// to the right. Derived connectives are expanded into primitives.
FormulaPtr parse(std::string_view text, LanguageMode mode = LanguageMode::Modal);

// Canonical form: atoms bare, unaries prefix, binaries fully parenthesized.
// parse(print(f)) reproduces f exactly.
std::string print(const Formula& f);
inline std::string print(const FormulaPtr& f) { return print(*f); }

std::set<std::string> variables(const Formula& f);
bool contains_box(const Formula& f);

// Metavariables in schemata are atoms whose name starts with an uppercase
// letter; object atoms are lowercase.
bool is_metavariable(const std::string& name);
bool has_metavariables(const Formula& f);

struct SubstitutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Binding = std::map<std::string, FormulaPtr>;

// Simultaneous substitution for the metavariables of a schema.
// Throws SubstitutionError on a metavariable missing from the binding.
FormulaPtr substitute(const FormulaPtr& schema, const Binding& binding);

// ---------------------------------------------------------------------------
// Content terms: the target language of the translation map.

enum class ContentConn { TAtom, Join, Gru };

struct ContentTerm;
using ContentTermPtr = std::shared_ptr<const ContentTerm>;

struct ContentTerm {
  ContentConn kind;
  std::string name;  // TAtom only
  ContentTermPtr lhs, rhs;

  static ContentTermPtr tatom(std::string name);
  static ContentTermPtr join(ContentTermPtr a, ContentTermPtr b);
  static ContentTermPtr gru(ContentTermPtr a, ContentTermPtr b);
};

enum class TranslationMode { Agnostic, Fused };

// N(x)=x, N(~a)=N([]a)=N(a), N(a\/b)=N(a)+N(b); arrows translate to the
// unconstrained product in agnostic mode and to join in fused mode.
ContentTermPtr translate(const Formula& f, TranslationMode mode);
std::set<std::string> term_atoms(const ContentTerm& t);
bool contains_gru(const ContentTerm& t);
std::string print(const ContentTerm& t);

}  // namespace gel
