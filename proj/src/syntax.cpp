#include "zeckgodel/syntax.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zeckgodel/error.hpp"

namespace zg {

// ---------------------------------------------------------------------------
// Symbols and alphabet

namespace {

constexpr std::array<std::string_view, kBaseSymbolCount> kNames = {
    "¬", "→", "∧", "∨", "∀", "∃", "=", "0", "S", "+", "·", "diagfn", "Prov"};

int arity_of(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kZero:
    case SymbolKind::kVar: return 0;
    case SymbolKind::kSucc:
    case SymbolKind::kDiag:
    case SymbolKind::kProv:
    case SymbolKind::kNot: return 1;
    default: return 2;
  }
}

bool is_term_symbol(SymbolKind kind) {
  switch (kind) {
    case SymbolKind::kZero:
    case SymbolKind::kSucc:
    case SymbolKind::kPlus:
    case SymbolKind::kTimes:
    case SymbolKind::kDiag:
    case SymbolKind::kVar: return true;
    default: return false;
  }
}

}  // namespace

std::string_view canonical_name(SymbolKind kind) {
  if (kind == SymbolKind::kVar) return "v";
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<SymbolKind> base_symbol_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<SymbolKind>(i);
  }
  return std::nullopt;
}

Alphabet::Alphabet(const std::array<std::uint64_t, kBaseSymbolCount>& base_codes,
                   std::uint64_t offset)
    : codes_(base_codes), offset_(offset) {
  if (offset_ <= kBaseSymbolCount) {
    throw Error(ErrorKind::kConfig, "alphabet offset must exceed the number of base symbols (13)");
  }
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    const std::uint64_t c = codes_[i];
    if (c < 1 || c >= offset_) {
      throw Error(ErrorKind::kConfig, "code of '" + std::string(kNames[i]) +
                                          "' must lie in [1, offset)");
    }
    if (!by_code_.emplace(c, static_cast<SymbolKind>(i)).second) {
      throw Error(ErrorKind::kConfig, "duplicate symbol code " + std::to_string(c));
    }
  }
}

Alphabet Alphabet::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("alphabet: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("symbols") || !doc["symbols"].is_object() ||
      !doc.contains("offset") || !doc["offset"].is_number_unsigned()) {
    throw Error(ErrorKind::kConfig,
                "alphabet: expected {\"symbols\": {...}, \"offset\": <positive integer>}");
  }
  std::array<std::uint64_t, kBaseSymbolCount> codes{};
  std::array<bool, kBaseSymbolCount> seen{};
  for (const auto& [name, value] : doc["symbols"].items()) {
    auto kind = base_symbol_from_name(name);
    if (!kind) throw Error(ErrorKind::kConfig, "alphabet: unknown symbol '" + name + "'");
    if (!value.is_number_unsigned()) {
      throw Error(ErrorKind::kConfig, "alphabet: code of '" + name + "' must be a positive integer");
    }
    codes[static_cast<std::size_t>(*kind)] = value.get<std::uint64_t>();
    seen[static_cast<std::size_t>(*kind)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw Error(ErrorKind::kConfig, "alphabet: missing symbol '" + std::string(kNames[i]) + "'");
  }
  return Alphabet(codes, doc["offset"].get<std::uint64_t>());
}

Alphabet Alphabet::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot read alphabet file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string Alphabet::to_json() const {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json symbols = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kNames.size(); ++i) symbols[std::string(kNames[i])] = codes_[i];
  doc["symbols"] = symbols;
  doc["offset"] = offset_;
  return doc.dump();
}

std::uint64_t Alphabet::base_code(SymbolKind kind) const {
  return codes_[static_cast<std::size_t>(kind)];
}

Nat Alphabet::code(const Symbol& symbol) const {
  if (symbol.kind == SymbolKind::kVar) {
    return Nat(static_cast<unsigned long>(symbol.var)) + static_cast<unsigned long>(offset_);
  }
  return Nat(static_cast<unsigned long>(base_code(symbol.kind)));
}

std::optional<Symbol> Alphabet::symbol(const Nat& code) const {
  const Nat k(static_cast<unsigned long>(offset_));
  if (code >= k) {
    auto index = to_u64(code - k);
    if (!index) return std::nullopt;
    return Symbol::variable(*index);
  }
  auto value = to_u64(code);
  if (!value) return std::nullopt;
  auto it = by_code_.find(*value);
  if (it == by_code_.end()) return std::nullopt;
  return Symbol::of(it->second);
}

const Alphabet& default_alphabet() {
  static const Alphabet alphabet({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, 16);
  return alphabet;
}

// ---------------------------------------------------------------------------
// Trees

struct Term::Node {
  TermKind kind;
  std::uint64_t var = 0;
  std::vector<Term> args;
};

struct Formula::Node {
  FormulaKind kind;
  std::uint64_t var = 0;
  std::vector<Term> terms;
  std::vector<Formula> subs;
};

Term Term::zero() { return Term(std::make_shared<const Node>(Node{TermKind::kZero, 0, {}})); }
Term Term::var(std::uint64_t index) {
  return Term(std::make_shared<const Node>(Node{TermKind::kVar, index, {}}));
}
Term Term::succ(Term t) {
  return Term(std::make_shared<const Node>(Node{TermKind::kSucc, 0, {std::move(t)}}));
}
Term Term::plus(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::kPlus, 0, {std::move(a), std::move(b)}}));
}
Term Term::times(Term a, Term b) {
  return Term(std::make_shared<const Node>(Node{TermKind::kTimes, 0, {std::move(a), std::move(b)}}));
}
Term Term::diag(Term t) {
  return Term(std::make_shared<const Node>(Node{TermKind::kDiag, 0, {std::move(t)}}));
}

TermKind Term::kind() const { return node_->kind; }
std::uint64_t Term::var_index() const { return node_->var; }
std::size_t Term::arity() const { return node_->args.size(); }
const Term& Term::arg(std::size_t i) const { return node_->args.at(i); }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->var != b.node_->var) return false;
  return a.node_->args == b.node_->args;
}

Formula Formula::eq(Term a, Term b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kEq, 0, {std::move(a), std::move(b)}, {}}));
}
Formula Formula::prov(Term t) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kProv, 0, {std::move(t)}, {}}));
}
Formula Formula::neg(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kNot, 0, {}, {std::move(f)}}));
}
Formula Formula::imp(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kImp, 0, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::conj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kAnd, 0, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::disj(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kOr, 0, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::forall(std::uint64_t var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kForall, var, {}, {std::move(body)}}));
}
Formula Formula::exists(std::uint64_t var, Formula body) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::kExists, var, {}, {std::move(body)}}));
}

FormulaKind Formula::kind() const { return node_->kind; }
std::size_t Formula::term_count() const { return node_->terms.size(); }
const Term& Formula::term(std::size_t i) const { return node_->terms.at(i); }
std::size_t Formula::sub_count() const { return node_->subs.size(); }
const Formula& Formula::sub(std::size_t i) const { return node_->subs.at(i); }
std::uint64_t Formula::bound_var() const { return node_->var; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.var == y.var && x.terms == y.terms && x.subs == y.subs;
}

// ---------------------------------------------------------------------------
// Flatten / parse

namespace {

SymbolKind symbol_kind(TermKind k) {
  switch (k) {
    case TermKind::kZero: return SymbolKind::kZero;
    case TermKind::kSucc: return SymbolKind::kSucc;
    case TermKind::kPlus: return SymbolKind::kPlus;
    case TermKind::kTimes: return SymbolKind::kTimes;
    case TermKind::kDiag: return SymbolKind::kDiag;
    case TermKind::kVar: return SymbolKind::kVar;
  }
  return SymbolKind::kZero;
}

SymbolKind symbol_kind(FormulaKind k) {
  switch (k) {
    case FormulaKind::kEq: return SymbolKind::kEq;
    case FormulaKind::kProv: return SymbolKind::kProv;
    case FormulaKind::kNot: return SymbolKind::kNot;
    case FormulaKind::kImp: return SymbolKind::kImp;
    case FormulaKind::kAnd: return SymbolKind::kAnd;
    case FormulaKind::kOr: return SymbolKind::kOr;
    case FormulaKind::kForall: return SymbolKind::kForall;
    case FormulaKind::kExists: return SymbolKind::kExists;
  }
  return SymbolKind::kEq;
}

using NodeRef = std::variant<const Term*, const Formula*>;

void flatten_into(NodeRef root, std::vector<Symbol>& out) {
  std::vector<NodeRef> stack{root};
  while (!stack.empty()) {
    NodeRef ref = stack.back();
    stack.pop_back();
    if (auto* tp = std::get_if<const Term*>(&ref)) {
      const Term& t = **tp;
      out.push_back(Symbol{symbol_kind(t.kind()), t.kind() == TermKind::kVar ? t.var_index() : 0});
      for (std::size_t i = t.arity(); i-- > 0;) stack.push_back(&t.arg(i));
      continue;
    }
    const Formula& f = *std::get<const Formula*>(ref);
    out.push_back(Symbol::of(symbol_kind(f.kind())));
    if (f.is_quantifier()) out.push_back(Symbol::variable(f.bound_var()));
    for (std::size_t i = f.sub_count(); i-- > 0;) stack.push_back(&f.sub(i));
    for (std::size_t i = f.term_count(); i-- > 0;) stack.push_back(&f.term(i));
  }
}

enum class Expect : std::uint8_t { kTerm, kFormula, kBinderVar };

std::string describe(const Symbol& s) {
  if (s.kind == SymbolKind::kVar) return "v" + std::to_string(s.var);
  return std::string(canonical_name(s.kind));
}

}  // namespace

std::vector<Symbol> flatten(const Term& t) {
  std::vector<Symbol> out;
  flatten_into(&t, out);
  return out;
}

std::vector<Symbol> flatten(const Formula& f) {
  std::vector<Symbol> out;
  flatten_into(&f, out);
  return out;
}

std::vector<Symbol> flatten(const Syntax& s) {
  return std::visit([](const auto& x) { return flatten(x); }, s);
}

std::optional<ParseFailure> validate(std::span<const Symbol> symbols, Category category) {
  std::vector<Expect> stack{category == Category::kTerm ? Expect::kTerm : Expect::kFormula};
  for (std::size_t p = 0; p < symbols.size(); ++p) {
    if (stack.empty()) return ParseFailure{p, "trailing symbols"};
    const Expect want = stack.back();
    stack.pop_back();
    const Symbol& s = symbols[p];
    switch (want) {
      case Expect::kBinderVar:
        if (s.kind != SymbolKind::kVar) {
          return ParseFailure{p, "unexpected symbol " + describe(s) + ": expected a bound variable"};
        }
        break;
      case Expect::kTerm:
        if (!is_term_symbol(s.kind)) {
          return ParseFailure{p, "unexpected symbol " + describe(s) + ": expected a term"};
        }
        for (int i = 0; i < arity_of(s.kind); ++i) stack.push_back(Expect::kTerm);
        break;
      case Expect::kFormula:
        if (is_term_symbol(s.kind)) {
          return ParseFailure{p, "unexpected symbol " + describe(s) + ": expected a formula"};
        }
        switch (s.kind) {
          case SymbolKind::kEq:
            stack.push_back(Expect::kTerm);
            stack.push_back(Expect::kTerm);
            break;
          case SymbolKind::kProv: stack.push_back(Expect::kTerm); break;
          case SymbolKind::kNot: stack.push_back(Expect::kFormula); break;
          case SymbolKind::kForall:
          case SymbolKind::kExists:
            stack.push_back(Expect::kFormula);
            stack.push_back(Expect::kBinderVar);
            break;
          default:
            stack.push_back(Expect::kFormula);
            stack.push_back(Expect::kFormula);
            break;
        }
        break;
    }
  }
  if (!stack.empty()) return ParseFailure{symbols.size(), "truncated input"};
  return std::nullopt;
}

namespace {

Syntax build(std::span<const Symbol> symbols) {
  // Right-to-left over a validated prefix string: operands are on the stack.
  std::vector<Syntax> stack;
  auto pop_term = [&] {
    Term t = std::get<Term>(std::move(stack.back()));
    stack.pop_back();
    return t;
  };
  auto pop_formula = [&] {
    Formula f = std::get<Formula>(std::move(stack.back()));
    stack.pop_back();
    return f;
  };
  for (std::size_t p = symbols.size(); p-- > 0;) {
    const Symbol& s = symbols[p];
    switch (s.kind) {
      case SymbolKind::kZero: stack.emplace_back(Term::zero()); break;
      case SymbolKind::kVar: stack.emplace_back(Term::var(s.var)); break;
      case SymbolKind::kSucc: stack.emplace_back(Term::succ(pop_term())); break;
      case SymbolKind::kDiag: stack.emplace_back(Term::diag(pop_term())); break;
      case SymbolKind::kPlus: {
        Term a = pop_term();
        stack.emplace_back(Term::plus(std::move(a), pop_term()));
        break;
      }
      case SymbolKind::kTimes: {
        Term a = pop_term();
        stack.emplace_back(Term::times(std::move(a), pop_term()));
        break;
      }
      case SymbolKind::kEq: {
        Term a = pop_term();
        stack.emplace_back(Formula::eq(std::move(a), pop_term()));
        break;
      }
      case SymbolKind::kProv: stack.emplace_back(Formula::prov(pop_term())); break;
      case SymbolKind::kNot: stack.emplace_back(Formula::neg(pop_formula())); break;
      case SymbolKind::kImp:
      case SymbolKind::kAnd:
      case SymbolKind::kOr: {
        Formula a = pop_formula();
        Formula b = pop_formula();
        if (s.kind == SymbolKind::kImp) stack.emplace_back(Formula::imp(std::move(a), std::move(b)));
        else if (s.kind == SymbolKind::kAnd) stack.emplace_back(Formula::conj(std::move(a), std::move(b)));
        else stack.emplace_back(Formula::disj(std::move(a), std::move(b)));
        break;
      }
      case SymbolKind::kForall:
      case SymbolKind::kExists: {
        const std::uint64_t v = pop_term().var_index();
        Formula body = pop_formula();
        stack.emplace_back(s.kind == SymbolKind::kForall ? Formula::forall(v, std::move(body))
                                                         : Formula::exists(v, std::move(body)));
        break;
      }
    }
  }
  return std::move(stack.back());
}

Syntax parse_as(std::span<const Symbol> symbols, Category category) {
  if (auto failure = validate(symbols, category)) {
    throw Error(ErrorKind::kParse, "parse error at symbol " + std::to_string(failure->position) +
                                       ": " + failure->message,
                failure->position);
  }
  return build(symbols);
}

}  // namespace

Syntax parse(std::span<const Symbol> symbols) {
  const Category category = !symbols.empty() && is_term_symbol(symbols.front().kind)
                                ? Category::kTerm
                                : Category::kFormula;
  return parse_as(symbols, category);
}

Term parse_term(std::span<const Symbol> symbols) {
  return std::get<Term>(parse_as(symbols, Category::kTerm));
}

Formula parse_formula(std::span<const Symbol> symbols) {
  return std::get<Formula>(parse_as(symbols, Category::kFormula));
}

// ---------------------------------------------------------------------------
// Codes

std::vector<Nat> to_codes(std::span<const Symbol> symbols, const Alphabet& alphabet) {
  std::vector<Nat> out;
  out.reserve(symbols.size());
  for (const Symbol& s : symbols) out.push_back(alphabet.code(s));
  return out;
}

std::vector<Symbol> from_codes(std::span<const Nat> codes, const Alphabet& alphabet) {
  std::vector<Symbol> out;
  out.reserve(codes.size());
  for (std::size_t p = 0; p < codes.size(); ++p) {
    auto s = alphabet.symbol(codes[p]);
    if (!s) {
      throw Error(ErrorKind::kInvalidSymbol,
                  "invalid symbol number " + codes[p].get_str() + " at position " + std::to_string(p), p);
    }
    out.push_back(*s);
  }
  return out;
}

SeqCode encode_syntax(const Syntax& s, const Alphabet& alphabet) {
  return seq_encode(to_codes(flatten(s), alphabet));
}

SeqCode encode_syntax(const Term& t, const Alphabet& alphabet) {
  return seq_encode(to_codes(flatten(t), alphabet));
}

SeqCode encode_syntax(const Formula& f, const Alphabet& alphabet) {
  return seq_encode(to_codes(flatten(f), alphabet));
}

Syntax decode_syntax(const SeqCode& code, const Alphabet& alphabet) {
  const Sequence items = seq_decode(code);
  return parse(from_codes(items, alphabet));
}

Formula decode_formula(const SeqCode& code, const Alphabet& alphabet) {
  Syntax s = decode_syntax(code, alphabet);
  if (auto* f = std::get_if<Formula>(&s)) return std::move(*f);
  throw Error(ErrorKind::kNotWff, "code denotes a term, not a formula");
}

Term decode_term(const SeqCode& code, const Alphabet& alphabet) {
  Syntax s = decode_syntax(code, alphabet);
  if (auto* t = std::get_if<Term>(&s)) return std::move(*t);
  throw Error(ErrorKind::kNotTerm, "code denotes a formula, not a term");
}

namespace {

bool is_category_code(const SeqCode& code, const Alphabet& alphabet, Category category) {
  auto items = try_seq_decode(code);
  if (!items) return false;
  std::vector<Symbol> symbols;
  symbols.reserve(items->size());
  for (const Nat& c : *items) {
    auto s = alphabet.symbol(c);
    if (!s) return false;
    symbols.push_back(*s);
  }
  return !validate(symbols, category).has_value();
}

}  // namespace

bool is_wff_code(const SeqCode& code, const Alphabet& alphabet) {
  return is_category_code(code, alphabet, Category::kFormula);
}

bool is_term_code(const SeqCode& code, const Alphabet& alphabet) {
  return is_category_code(code, alphabet, Category::kTerm);
}

// ---------------------------------------------------------------------------
// Numerals

Term numeral(const Nat& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::kInvalidArgument, "numeral: negative value");
  if (n == 0) return Term::zero();
  const Term two = Term::succ(Term::succ(Term::zero()));
  Term t = Term::succ(Term::zero());
  for (std::size_t bit = bit_length(n) - 1; bit-- > 0;) {
    t = Term::times(two, std::move(t));
    if (mpz_tstbit(n.get_mpz_t(), bit)) t = Term::succ(std::move(t));
  }
  return t;
}

std::vector<Symbol> numeral_symbols(const Nat& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::kInvalidArgument, "numeral: negative value");
  const Symbol zero = Symbol::of(SymbolKind::kZero);
  const Symbol succ = Symbol::of(SymbolKind::kSucc);
  const Symbol times = Symbol::of(SymbolKind::kTimes);
  if (n == 0) return {zero};
  std::vector<Symbol> out;
  const std::size_t bits = bit_length(n);
  out.reserve(5 * bits + 2);
  // Outermost layer is the least significant bit.
  for (std::size_t bit = 0; bit + 1 < bits; ++bit) {
    if (mpz_tstbit(n.get_mpz_t(), bit)) out.push_back(succ);
    out.insert(out.end(), {times, succ, succ, zero});
  }
  out.insert(out.end(), {succ, zero});
  return out;
}

// ---------------------------------------------------------------------------
// Proofs

SeqCode encode_proof(std::span<const Formula> formulas, const Alphabet& alphabet,
                     const CodecOptions& options) {
  Sequence items;
  items.reserve(formulas.size());
  for (const Formula& f : formulas) items.push_back(to_number(encode_syntax(f, alphabet), options));
  return seq_encode(items);
}

std::vector<Formula> decode_proof(const SeqCode& code, const Alphabet& alphabet,
                                  const CodecOptions& /*options*/) {
  const Sequence items = seq_decode(code);
  std::vector<Formula> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const SeqCode element = SeqCode::from_number(items[i]);
    if (!is_wff_code(element, alphabet)) {
      throw Error(ErrorKind::kNotWff, "element " + std::to_string(i + 1) + " is not a wff code");
    }
    out.push_back(decode_formula(element, alphabet));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variables and substitution on trees

bool occurs(const Term& t, std::uint64_t var) {
  if (t.kind() == TermKind::kVar) return t.var_index() == var;
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (occurs(t.arg(i), var)) return true;
  }
  return false;
}

bool occurs_free(const Formula& f, std::uint64_t var) {
  if (f.is_quantifier() && f.bound_var() == var) return false;
  for (std::size_t i = 0; i < f.term_count(); ++i) {
    if (occurs(f.term(i), var)) return true;
  }
  for (std::size_t i = 0; i < f.sub_count(); ++i) {
    if (occurs_free(f.sub(i), var)) return true;
  }
  return false;
}

std::vector<std::uint64_t> variables(const Term& t) {
  std::set<std::uint64_t> seen;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (cur->kind() == TermKind::kVar) seen.insert(cur->var_index());
    for (std::size_t i = 0; i < cur->arity(); ++i) stack.push_back(&cur->arg(i));
  }
  return {seen.begin(), seen.end()};
}

Term substitute(const Term& t, std::uint64_t var, const Term& replacement) {
  switch (t.kind()) {
    case TermKind::kVar: return t.var_index() == var ? replacement : t;
    case TermKind::kZero: return t;
    case TermKind::kSucc: return Term::succ(substitute(t.arg(0), var, replacement));
    case TermKind::kDiag: return Term::diag(substitute(t.arg(0), var, replacement));
    case TermKind::kPlus:
      return Term::plus(substitute(t.arg(0), var, replacement), substitute(t.arg(1), var, replacement));
    case TermKind::kTimes:
      return Term::times(substitute(t.arg(0), var, replacement), substitute(t.arg(1), var, replacement));
  }
  return t;
}

Formula substitute_free(const Formula& f, std::uint64_t var, const Term& replacement) {
  auto sub = [&](std::size_t i) { return substitute_free(f.sub(i), var, replacement); };
  auto term = [&](std::size_t i) { return substitute(f.term(i), var, replacement); };
  switch (f.kind()) {
    case FormulaKind::kEq: return Formula::eq(term(0), term(1));
    case FormulaKind::kProv: return Formula::prov(term(0));
    case FormulaKind::kNot: return Formula::neg(sub(0));
    case FormulaKind::kImp: return Formula::imp(sub(0), sub(1));
    case FormulaKind::kAnd: return Formula::conj(sub(0), sub(1));
    case FormulaKind::kOr: return Formula::disj(sub(0), sub(1));
    case FormulaKind::kForall:
      return f.bound_var() == var ? f : Formula::forall(f.bound_var(), sub(0));
    case FormulaKind::kExists:
      return f.bound_var() == var ? f : Formula::exists(f.bound_var(), sub(0));
  }
  return f;
}

}  // namespace zg
