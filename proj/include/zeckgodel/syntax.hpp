#ifndef ZECKGODEL_SYNTAX_HPP_
#define ZECKGODEL_SYNTAX_HPP_

// First-order arithmetic syntax: symbol numeration, Polish-notation ASTs and
// their sequence codes.
//
// The language has the connectives ¬ → ∧ ∨, the quantifiers ∀ ∃, equality,
// the constant 0, successor S, + and ·, a unary function symbol `diagfn`, a
// unary predicate `Prov`, and variables v_0, v_1, ...  Strings are in prefix
// order with no parentheses; a quantifier is followed by its variable and
// then its body.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "zeckgodel/numeric.hpp"
#include "zeckgodel/seqcode.hpp"

namespace zg {

enum class SymbolKind : std::uint8_t {
  kNot, kImp, kAnd, kOr, kForall, kExists, kEq,
  kZero, kSucc, kPlus, kTimes, kDiag, kProv,
  kVar,
};

inline constexpr std::size_t kBaseSymbolCount = 13;

struct Symbol {
  SymbolKind kind = SymbolKind::kZero;
  std::uint64_t var = 0;  // meaningful for kVar only

  static Symbol of(SymbolKind kind) { return Symbol{kind, 0}; }
  static Symbol variable(std::uint64_t index) { return Symbol{SymbolKind::kVar, index}; }

  bool operator==(const Symbol&) const = default;
};

// "¬", "→", "∧", "∨", "∀", "∃", "=", "0", "S", "+", "·", "diagfn", "Prov".
std::string_view canonical_name(SymbolKind kind);
std::optional<SymbolKind> base_symbol_from_name(std::string_view name);

// Symbol numeration: base symbols get distinct codes in [1, k); variable
// v_i gets i + k.
class Alphabet {
 public:
  // Indexed by SymbolKind (kNot .. kProv). Throws Error(kConfig) unless the
  // codes are distinct, positive, below `offset`, and offset > 13.
  Alphabet(const std::array<std::uint64_t, kBaseSymbolCount>& base_codes, std::uint64_t offset);

  // {"symbols": {"¬": 1, ...}, "offset": 16}
  static Alphabet from_json(std::string_view text);
  static Alphabet load(const std::filesystem::path& path);
  std::string to_json() const;

  std::uint64_t offset() const { return offset_; }
  std::uint64_t base_code(SymbolKind kind) const;
  Nat code(const Symbol& symbol) const;
  // nullopt for codes that are neither a base code nor >= offset (or whose
  // variable index does not fit in 64 bits).
  std::optional<Symbol> symbol(const Nat& code) const;

 private:
  std::array<std::uint64_t, kBaseSymbolCount> codes_;
  std::uint64_t offset_;
  std::unordered_map<std::uint64_t, SymbolKind> by_code_;
};

// ¬→1 →→2 ∧→3 ∨→4 ∀→5 ∃→6 =→7 0→8 S→9 +→10 ·→11 diagfn→12 Prov→13, k = 16.
const Alphabet& default_alphabet();

enum class TermKind : std::uint8_t { kZero, kSucc, kPlus, kTimes, kDiag, kVar };

// Immutable term tree with shared subterms; copies are cheap.
class Term {
 public:
  static Term zero();
  static Term var(std::uint64_t index);
  static Term succ(Term t);
  static Term plus(Term a, Term b);
  static Term times(Term a, Term b);
  static Term diag(Term t);

  TermKind kind() const;
  std::uint64_t var_index() const;  // kVar only
  std::size_t arity() const;
  const Term& arg(std::size_t i) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind : std::uint8_t { kEq, kProv, kNot, kImp, kAnd, kOr, kForall, kExists };

class Formula {
 public:
  static Formula eq(Term a, Term b);
  static Formula prov(Term t);
  static Formula neg(Formula f);
  static Formula imp(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula forall(std::uint64_t var, Formula body);
  static Formula exists(std::uint64_t var, Formula body);

  FormulaKind kind() const;
  bool is_atomic() const { return kind() == FormulaKind::kEq || kind() == FormulaKind::kProv; }
  bool is_quantifier() const { return kind() == FormulaKind::kForall || kind() == FormulaKind::kExists; }
  // Terms of an atomic formula (2 for =, 1 for Prov).
  std::size_t term_count() const;
  const Term& term(std::size_t i) const;
  // Immediate subformulas (1 for ¬ and quantifiers, 2 for binary connectives).
  std::size_t sub_count() const;
  const Formula& sub(std::size_t i) const;
  std::uint64_t bound_var() const;  // quantifiers only
  const Formula& body() const { return sub(0); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Category { kTerm, kFormula };

using Syntax = std::variant<Term, Formula>;

inline Category category_of(const Syntax& s) {
  return std::holds_alternative<Term>(s) ? Category::kTerm : Category::kFormula;
}

std::vector<Symbol> flatten(const Term& t);
std::vector<Symbol> flatten(const Formula& f);
std::vector<Symbol> flatten(const Syntax& s);

struct ParseFailure {
  std::size_t position;
  std::string message;
};

// Single left-to-right pass; nullopt when `symbols` is a well-formed string
// of the given category.
std::optional<ParseFailure> validate(std::span<const Symbol> symbols, Category category);

// Inverse of flatten. The category is taken from the first symbol. Throws
// Error(kParse) tagged with the symbol position ("unexpected symbol",
// "truncated input", "trailing symbols").
Syntax parse(std::span<const Symbol> symbols);
Term parse_term(std::span<const Symbol> symbols);
Formula parse_formula(std::span<const Symbol> symbols);

std::vector<Nat> to_codes(std::span<const Symbol> symbols, const Alphabet& alphabet);
// Throws Error(kInvalidSymbol) tagged with the offending position.
std::vector<Symbol> from_codes(std::span<const Nat> codes, const Alphabet& alphabet);

SeqCode encode_syntax(const Syntax& s, const Alphabet& alphabet = default_alphabet());
SeqCode encode_syntax(const Term& t, const Alphabet& alphabet = default_alphabet());
SeqCode encode_syntax(const Formula& f, const Alphabet& alphabet = default_alphabet());

// Decode, validate symbol numbers, parse. Throws kNotASequenceCode,
// kInvalidSymbol or kParse.
Syntax decode_syntax(const SeqCode& code, const Alphabet& alphabet = default_alphabet());
// As decode_syntax, plus kNotWff / kNotTerm when the category is wrong.
Formula decode_formula(const SeqCode& code, const Alphabet& alphabet = default_alphabet());
Term decode_term(const SeqCode& code, const Alphabet& alphabet = default_alphabet());

bool is_wff_code(const SeqCode& code, const Alphabet& alphabet = default_alphabet());
bool is_term_code(const SeqCode& code, const Alphabet& alphabet = default_alphabet());

// Binary-doubling numeral: 0, S0, and for j >= 1
//   2j   -> ·(SS0, numeral(j))
//   2j+1 -> S(·(SS0, numeral(j)))
Term numeral(const Nat& n);
// The same string built straight from the bits of n, without an AST.
std::vector<Symbol> numeral_symbols(const Nat& n);

// Proofs are sequences of formula codes. Every formula code must be
// materialisable under `options`.
SeqCode encode_proof(std::span<const Formula> formulas, const Alphabet& alphabet = default_alphabet(),
                     const CodecOptions& options = {});
// Throws Error(kNotWff) naming the first element that is not a wff code.
std::vector<Formula> decode_proof(const SeqCode& code, const Alphabet& alphabet = default_alphabet(),
                                  const CodecOptions& options = {});

// AST helpers shared by substitution and the proof calculus.
bool occurs(const Term& t, std::uint64_t var);
bool occurs_free(const Formula& f, std::uint64_t var);
std::vector<std::uint64_t> variables(const Term& t);
Term substitute(const Term& t, std::uint64_t var, const Term& replacement);
// Replaces free occurrences only; binders of `var` stop the descent.
Formula substitute_free(const Formula& f, std::uint64_t var, const Term& replacement);

}  // namespace zg

#endif  // ZECKGODEL_SYNTAX_HPP_
