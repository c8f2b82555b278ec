#ifndef ZECKGODEL_TEXT_FORMAT_HPP_
#define ZECKGODEL_TEXT_FORMAT_HPP_

// Parenthesised prefix text for terms and formulas:
//
//   (= 0 0)   (forall v0 (= v0 v0))   (-> (Prov v1) (not (= (S 0) 0)))
//
// Operators accept ASCII or Unicode spellings: not/¬, ->/→, and/∧, or/∨,
// forall/∀, exists/∃, S, +, */·, diagfn, Prov. Parentheses are optional
// since the notation is prefix, but when present they must close exactly one
// expression. The printer always emits the ASCII spelling, fully bracketed.

#include <string>
#include <string_view>
#include <vector>

#include "zeckgodel/syntax.hpp"

namespace zg {

// Throws Error(kParse) with the character offset of the problem.
std::vector<Symbol> read_symbols(std::string_view text);
Syntax read_syntax(std::string_view text);
Formula read_formula(std::string_view text);
Term read_term(std::string_view text);

std::string to_text(const Term& t);
std::string to_text(const Formula& f);
std::string to_text(const Syntax& s);

}  // namespace zg

#endif  // ZECKGODEL_TEXT_FORMAT_HPP_
