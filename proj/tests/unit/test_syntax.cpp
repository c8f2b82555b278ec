#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "zeckgodel/error.hpp"
#include "zeckgodel/primecode.hpp"
#include "zeckgodel/syntax.hpp"
#include "zeckgodel/text_format.hpp"

namespace zg {
namespace {

Symbol sym(SymbolKind k) { return Symbol::of(k); }

Sequence nats(std::initializer_list<unsigned long> xs) {
  Sequence s;
  for (auto x : xs) s.emplace_back(x);
  return s;
}

// Standard semantics of closed terms.
Nat evaluate(const Term& t) {
  switch (t.kind()) {
    case TermKind::kZero: return 0;
    case TermKind::kSucc: return evaluate(t.arg(0)) + 1;
    case TermKind::kPlus: return evaluate(t.arg(0)) + evaluate(t.arg(1));
    case TermKind::kTimes: return evaluate(t.arg(0)) * evaluate(t.arg(1));
    default: throw std::logic_error("not a closed arithmetic term");
  }
}

TEST(Alphabet, DefaultTable) {
  const Alphabet& a = default_alphabet();
  EXPECT_EQ(a.code(sym(SymbolKind::kNot)), 1);
  EXPECT_EQ(a.code(sym(SymbolKind::kProv)), 13);
  EXPECT_EQ(a.code(Symbol::variable(0)), 16);
  EXPECT_EQ(a.code(Symbol::variable(3)), 19);
  EXPECT_EQ(a.offset(), 16u);
  EXPECT_FALSE(a.symbol(14).has_value());
  EXPECT_FALSE(a.symbol(15).has_value());
  EXPECT_FALSE(a.symbol(0).has_value());
  EXPECT_EQ(a.symbol(19), Symbol::variable(3));
  EXPECT_FALSE(a.symbol(Nat(1) << 80).has_value());
  for (unsigned c = 1; c <= 13; ++c) EXPECT_LT(c, a.code(Symbol::variable(0)));
}

TEST(Alphabet, JsonRoundtripAndValidation) {
  const Alphabet a = Alphabet::from_json(default_alphabet().to_json());
  for (unsigned c = 1; c < 40; ++c) EXPECT_EQ(a.symbol(c), default_alphabet().symbol(c)) << c;
  const std::string custom =
      R"({"symbols":{"¬":13,"→":12,"∧":11,"∨":10,"∀":9,"∃":8,"=":7,"0":6,"S":5,"+":4,"·":3,"diagfn":2,"Prov":1},"offset":20})";
  const Alphabet b = Alphabet::from_json(custom);
  EXPECT_EQ(b.code(sym(SymbolKind::kNot)), 13);
  EXPECT_EQ(b.code(Symbol::variable(1)), 21);
  EXPECT_THROW(Alphabet::from_json(R"({"symbols":{"¬":1},"offset":16})"), Error);
  EXPECT_THROW(Alphabet({1, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, 16), Error);
  EXPECT_THROW(Alphabet({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 16}, 16), Error);
  EXPECT_THROW(Alphabet({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}, 13), Error);
  EXPECT_THROW(Alphabet::from_json("not json"), Error);
}

TEST(Flatten, Examples) {
  const Formula f = Formula::eq(Term::zero(), Term::zero());
  EXPECT_EQ(flatten(f), (std::vector<Symbol>{sym(SymbolKind::kEq), sym(SymbolKind::kZero), sym(SymbolKind::kZero)}));
  const Formula g = Formula::forall(0, Formula::eq(Term::var(0), Term::var(0)));
  EXPECT_EQ(flatten(g), (std::vector<Symbol>{sym(SymbolKind::kForall), Symbol::variable(0), sym(SymbolKind::kEq),
                                             Symbol::variable(0), Symbol::variable(0)}));
  EXPECT_EQ(parse_formula(flatten(g)), g);
}

TEST(Parse, Errors) {
  const std::vector<Symbol> truncated{sym(SymbolKind::kEq), sym(SymbolKind::kZero)};
  auto failure = validate(truncated, Category::kFormula);
  ASSERT_TRUE(failure);
  EXPECT_EQ(failure->message, "truncated input");
  EXPECT_EQ(failure->position, 2u);
  try {
    parse(truncated);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
    EXPECT_EQ(e.position(), 2u);
  }
  const std::vector<Symbol> trailing{sym(SymbolKind::kEq), sym(SymbolKind::kZero), sym(SymbolKind::kZero),
                                     sym(SymbolKind::kZero)};
  EXPECT_EQ(validate(trailing, Category::kFormula)->message, "trailing symbols");
  const std::vector<Symbol> bad_binder{sym(SymbolKind::kForall), sym(SymbolKind::kZero), sym(SymbolKind::kEq)};
  auto b = validate(bad_binder, Category::kFormula);
  ASSERT_TRUE(b);
  EXPECT_EQ(b->position, 1u);
  EXPECT_NE(b->message.find("unexpected symbol"), std::string::npos);
}

TEST(Parse, GrammarTotalityUpToLength5) {
  // Every string over the base symbols plus two variables either parses to
  // something that flattens back, or fails with a position inside it.
  std::vector<Symbol> alphabet;
  for (std::size_t k = 0; k < kBaseSymbolCount; ++k) alphabet.push_back(sym(static_cast<SymbolKind>(k)));
  alphabet.push_back(Symbol::variable(0));
  alphabet.push_back(Symbol::variable(1));
  std::vector<Symbol> s;
  std::size_t parsed = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (!s.empty()) {
      try {
        const Syntax x = parse(s);
        ASSERT_EQ(flatten(x), s);
        ++parsed;
      } catch (const Error& e) {
        ASSERT_EQ(e.kind(), ErrorKind::kParse);
        ASSERT_TRUE(e.position().has_value());
        ASSERT_LE(*e.position(), s.size());
      }
    }
    if (depth == 5) return;
    for (const Symbol& a : alphabet) {
      s.push_back(a);
      walk(depth + 1);
      s.pop_back();
    }
  };
  walk(0);
  EXPECT_GT(parsed, 0u);
}

// All terms and formulas with at most `n` symbols over {0, v0, v1} and the
// full operator set.
std::vector<Syntax> enumerate_syntax(std::size_t n) {
  std::vector<std::vector<Term>> terms(n + 1);
  std::vector<std::vector<Formula>> formulas(n + 1);
  terms[1] = {Term::zero(), Term::var(0), Term::var(1)};
  for (std::size_t len = 2; len <= n; ++len) {
    for (const Term& t : terms[len - 1]) {
      terms[len].push_back(Term::succ(t));
      terms[len].push_back(Term::diag(t));
      formulas[len].push_back(Formula::prov(t));
    }
    for (std::size_t a = 1; a + 1 < len; ++a) {
      for (const Term& l : terms[a]) {
        for (const Term& r : terms[len - 1 - a]) {
          terms[len].push_back(Term::plus(l, r));
          terms[len].push_back(Term::times(l, r));
          formulas[len].push_back(Formula::eq(l, r));
        }
      }
    }
    for (const Formula& f : formulas[len - 1]) formulas[len].push_back(Formula::neg(f));
    if (len >= 3) {
      for (const Formula& f : formulas[len - 2]) {
        for (std::uint64_t v : {0, 1}) {
          formulas[len].push_back(Formula::forall(v, f));
          formulas[len].push_back(Formula::exists(v, f));
        }
      }
    }
    for (std::size_t a = 1; a + 1 < len; ++a) {
      for (const Formula& l : formulas[a]) {
        for (const Formula& r : formulas[len - 1 - a]) {
          formulas[len].push_back(Formula::imp(l, r));
          formulas[len].push_back(Formula::conj(l, r));
          formulas[len].push_back(Formula::disj(l, r));
        }
      }
    }
  }
  std::vector<Syntax> out;
  for (auto& ts : terms) out.insert(out.end(), ts.begin(), ts.end());
  for (auto& fs : formulas) out.insert(out.end(), fs.begin(), fs.end());
  return out;
}

TEST(EncodeSyntax, InjectiveUpTo5Symbols) {
  const auto all = enumerate_syntax(5);
  std::set<std::string> codes;
  for (const Syntax& x : all) {
    const SeqCode c = encode_syntax(x);
    ASSERT_TRUE(codes.insert(to_number(c).get_str()).second) << to_text(x);
    ASSERT_EQ(flatten(decode_syntax(c)), flatten(x));
  }
  EXPECT_GT(codes.size(), 1000u);
}

TEST(EncodeSyntax, Examples) {
  EXPECT_EQ(encode_syntax(Formula::eq(Term::zero(), Term::zero())), seq_encode(nats({7, 8, 8})));
  EXPECT_EQ(to_number(seq_encode(to_codes(std::vector<Symbol>{}, default_alphabet()))), 0);
}

TEST(DecodeSyntax, Errors) {
  try {
    decode_syntax(seq_encode(nats({7, 14, 8})));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidSymbol);
    EXPECT_EQ(e.position(), 1u);
  }
  try {
    decode_syntax(SeqCode::from_number(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
  try {
    decode_syntax(SeqCode::from_number(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotASequenceCode);
  }
  EXPECT_THROW(decode_formula(encode_syntax(Term::succ(Term::zero()))), Error);
  EXPECT_THROW(decode_term(encode_syntax(Formula::eq(Term::zero(), Term::zero()))), Error);
}

TEST(DecodeSyntax, RandomRoundtrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Formula f = random_formula(3 + seed % 20, seed);
    ASSERT_EQ(decode_formula(encode_syntax(f)), f);
  }
}

TEST(Predicates, WffAndTerm) {
  const SeqCode eq00 = encode_syntax(Formula::eq(Term::zero(), Term::zero()));
  const SeqCode s0 = encode_syntax(Term::succ(Term::zero()));
  EXPECT_TRUE(is_wff_code(eq00));
  EXPECT_FALSE(is_term_code(eq00));
  EXPECT_TRUE(is_term_code(s0));
  EXPECT_FALSE(is_wff_code(s0));
  EXPECT_FALSE(is_wff_code(SeqCode::from_number(1)));
  EXPECT_FALSE(is_term_code(SeqCode::from_number(0)));
}

TEST(Numeral, Examples) {
  EXPECT_EQ(numeral(0), Term::zero());
  EXPECT_EQ(numeral(1), Term::succ(Term::zero()));
  const Term two = Term::succ(Term::succ(Term::zero()));
  EXPECT_EQ(numeral(6), Term::times(two, Term::succ(Term::times(two, Term::succ(Term::zero())))));
}

TEST(Numeral, EvaluatesToItsValue) {
  for (unsigned n = 0; n <= 10000; ++n) {
    const Term t = numeral(n);
    ASSERT_EQ(evaluate(t), n);
    ASSERT_EQ(flatten(t), numeral_symbols(n)) << n;
  }
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(2);
  const Nat big = rng.get_z_bits(500);
  EXPECT_EQ(evaluate(numeral(big)), big);
  EXPECT_EQ(flatten(numeral(big)), numeral_symbols(big));
  EXPECT_LE(numeral_symbols(big).size(), 5 * bit_length(big) + 2);
}

TEST(Proofs, EncodeDecode) {
  EXPECT_EQ(to_number(encode_proof({})), 0);
  const Formula a = Formula::eq(Term::zero(), Term::zero());
  const std::vector<Formula> one{a};
  EXPECT_EQ(encode_proof(one), seq_encode({to_number(encode_syntax(a))}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::vector<Formula> steps{random_formula(4, seed), random_formula(6, seed + 100),
                                     random_formula(3, seed + 200)};
    ASSERT_EQ(decode_proof(encode_proof(steps)), steps);
  }
  // Element 2 is a term code.
  const SeqCode bad = seq_encode({to_number(encode_syntax(a)), to_number(encode_syntax(Term::zero()))});
  try {
    decode_proof(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotWff);
    EXPECT_NE(std::string(e.what()).find("element 2"), std::string::npos);
  }
}

TEST(Substitute, FreeOccurrencesOnly) {
  const Formula f = Formula::imp(Formula::eq(Term::var(0), Term::zero()),
                                 Formula::forall(0, Formula::eq(Term::var(0), Term::var(0))));
  const Term s0 = Term::succ(Term::zero());
  const Formula want = Formula::imp(Formula::eq(s0, Term::zero()),
                                    Formula::forall(0, Formula::eq(Term::var(0), Term::var(0))));
  EXPECT_EQ(substitute_free(f, 0, s0), want);
  EXPECT_TRUE(occurs_free(f, 0));
  EXPECT_FALSE(occurs_free(f.sub(1), 0));
  EXPECT_EQ(variables(Term::plus(Term::var(3), Term::times(Term::var(1), Term::var(3)))),
            (std::vector<std::uint64_t>{1, 3}));
}

}  // namespace
}  // namespace zg
