#include "zeckgodel/text_format.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "zeckgodel/error.hpp"

namespace zg {
namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({text.substr(i, 1), i});
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != '(' && text[i] != ')' && text[i] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      out.push_back({text.substr(start, i - start), start});
    }
  }
  return out;
}

std::optional<SymbolKind> operator_kind(std::string_view t) {
  struct Alias { std::string_view name; SymbolKind kind; };
  static constexpr Alias kAliases[] = {
      {"not", SymbolKind::kNot},       {"¬", SymbolKind::kNot},
      {"->", SymbolKind::kImp},        {"→", SymbolKind::kImp},
      {"and", SymbolKind::kAnd},       {"∧", SymbolKind::kAnd},
      {"or", SymbolKind::kOr},         {"∨", SymbolKind::kOr},
      {"forall", SymbolKind::kForall}, {"∀", SymbolKind::kForall},
      {"exists", SymbolKind::kExists}, {"∃", SymbolKind::kExists},
      {"=", SymbolKind::kEq},          {"S", SymbolKind::kSucc},
      {"+", SymbolKind::kPlus},        {"*", SymbolKind::kTimes},
      {"·", SymbolKind::kTimes},       {"diagfn", SymbolKind::kDiag},
      {"Prov", SymbolKind::kProv},
  };
  for (const auto& a : kAliases) {
    if (a.name == t) return a.kind;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> variable_index(std::string_view t) {
  if (t.size() < 2 || t[0] != 'v') return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return value;
}

int operand_count(SymbolKind k) {
  switch (k) {
    case SymbolKind::kNot:
    case SymbolKind::kSucc:
    case SymbolKind::kDiag:
    case SymbolKind::kProv: return 1;
    default: return 2;  // quantifiers: variable then body
  }
}

class Reader {
 public:
  Reader(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  void read_all() {
    if (tokens_.empty()) fail(0, "empty input");
    read_expr();
    if (pos_ != tokens_.size()) fail(tokens_[pos_].offset, "trailing input");
  }

  std::vector<Symbol> symbols;
  std::vector<std::size_t> offsets;

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) {
    throw Error(ErrorKind::kParse, "parse error at offset " + std::to_string(offset) + ": " + message,
                offset);
  }

  const Token& next() {
    if (pos_ >= tokens_.size()) fail(text_.size(), "truncated input");
    return tokens_[pos_++];
  }

  void emit(Symbol s, std::size_t offset) {
    symbols.push_back(s);
    offsets.push_back(offset);
  }

  void read_expr() {
    const Token& tok = next();
    if (tok.text == "(") {
      const Token& head = next();
      auto kind = operator_kind(head.text);
      if (!kind) fail(head.offset, "expected an operator after '(', got '" + std::string(head.text) + "'");
      read_operands(*kind, head.offset);
      const Token& close = next();
      if (close.text != ")") fail(close.offset, "expected ')'");
      return;
    }
    if (tok.text == ")") fail(tok.offset, "unexpected ')'");
    if (tok.text == "0") {
      emit(Symbol::of(SymbolKind::kZero), tok.offset);
      return;
    }
    if (auto v = variable_index(tok.text)) {
      emit(Symbol::variable(*v), tok.offset);
      return;
    }
    if (auto kind = operator_kind(tok.text)) {
      read_operands(*kind, tok.offset);
      return;
    }
    fail(tok.offset, "unknown token '" + std::string(tok.text) + "'");
  }

  void read_operands(SymbolKind kind, std::size_t offset) {
    emit(Symbol::of(kind), offset);
    for (int i = 0; i < operand_count(kind); ++i) read_expr();
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

Syntax read_as(std::string_view text, std::optional<Category> category) {
  Reader reader(text);
  reader.read_all();
  const Category want = category.value_or(
      !reader.symbols.empty() && (reader.symbols[0].kind == SymbolKind::kZero ||
                                  reader.symbols[0].kind == SymbolKind::kVar ||
                                  reader.symbols[0].kind == SymbolKind::kSucc ||
                                  reader.symbols[0].kind == SymbolKind::kPlus ||
                                  reader.symbols[0].kind == SymbolKind::kTimes ||
                                  reader.symbols[0].kind == SymbolKind::kDiag)
          ? Category::kTerm
          : Category::kFormula);
  if (auto failure = validate(reader.symbols, want)) {
    const std::size_t offset =
        failure->position < reader.offsets.size() ? reader.offsets[failure->position] : text.size();
    throw Error(ErrorKind::kParse, "parse error at offset " + std::to_string(offset) + ": " + failure->message,
                offset);
  }
  if (want == Category::kTerm) return parse_term(reader.symbols);
  return parse_formula(reader.symbols);
}

const char* ascii_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::kNot: return "not";
    case SymbolKind::kImp: return "->";
    case SymbolKind::kAnd: return "and";
    case SymbolKind::kOr: return "or";
    case SymbolKind::kForall: return "forall";
    case SymbolKind::kExists: return "exists";
    case SymbolKind::kEq: return "=";
    case SymbolKind::kZero: return "0";
    case SymbolKind::kSucc: return "S";
    case SymbolKind::kPlus: return "+";
    case SymbolKind::kTimes: return "*";
    case SymbolKind::kDiag: return "diagfn";
    case SymbolKind::kProv: return "Prov";
    case SymbolKind::kVar: return "v";
  }
  return "?";
}

// Bracket a flat prefix string by replaying arities; avoids recursing over
// deep numerals.
std::string bracket(const std::vector<Symbol>& symbols) {
  std::string out;
  std::vector<int> pending;  // operands still owed by each open group
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const Symbol& s = symbols[i];
    if (!out.empty() && out.back() != '(') out += ' ';
    if (s.kind == SymbolKind::kVar) {
      out += 'v';
      out += std::to_string(s.var);
    } else if (s.kind == SymbolKind::kZero) {
      out += '0';
    } else {
      out += '(';
      out += ascii_name(s.kind);
      pending.push_back(operand_count(s.kind));
      continue;
    }
    while (!pending.empty() && --pending.back() == 0) {
      pending.pop_back();
      out += ')';
    }
  }
  return out;
}

}  // namespace

std::vector<Symbol> read_symbols(std::string_view text) {
  Reader reader(text);
  reader.read_all();
  return reader.symbols;
}

Syntax read_syntax(std::string_view text) { return read_as(text, std::nullopt); }
Formula read_formula(std::string_view text) { return std::get<Formula>(read_as(text, Category::kFormula)); }
Term read_term(std::string_view text) { return std::get<Term>(read_as(text, Category::kTerm)); }

std::string to_text(const Term& t) { return bracket(flatten(t)); }
std::string to_text(const Formula& f) { return bracket(flatten(f)); }
std::string to_text(const Syntax& s) { return bracket(flatten(s)); }

}  // namespace zg
