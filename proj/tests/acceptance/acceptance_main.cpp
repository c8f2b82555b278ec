// Acceptance run: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "zeckgodel/cli.hpp"
#include "zeckgodel/error.hpp"
#include "zeckgodel/logic.hpp"
#include "zeckgodel/numeric.hpp"
#include "zeckgodel/oracle.hpp"
#include "zeckgodel/primecode.hpp"
#include "zeckgodel/seqcode.hpp"
#include "zeckgodel/substitution.hpp"
#include "zeckgodel/syntax.hpp"
#include "zeckgodel/text_format.hpp"
#include "zeckgodel/zeckendorf.hpp"

using namespace zg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = "failed: " + what + (detail.empty() ? "" : " (" + detail + ")");
    }
  }
  void note(const std::string& s) {
    if (pass) detail += (detail.empty() ? "" : "; ") + s;
  }
};

using u64 = std::uint64_t;

std::vector<u64> fib_u64(u64 limit) {
  std::vector<u64> f{0, 1, 2};  // f[e] = F_e
  while (f.back() <= limit) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

Sequence to_seq(const std::vector<u64>& xs) {
  Sequence s;
  for (u64 x : xs) s.emplace_back(static_cast<unsigned long>(x));
  return s;
}

std::string num(double x, int precision = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

Outcome zeckendorf_correctness() {
  Outcome o;
  std::ostringstream out, err;
  const int rc = run_cli({"zeck", "decode", "32"}, out, err);
  o.require(rc == 0 && out.str() == "Z[7,5,3]\n", "zeck decode 32 printed '" + out.str() + "'");

  for (u64 n = 0; n <= 100000 && o.pass; ++n) {
    const ZeckSupport s = z_decode(n);
    o.require(is_valid_support(s.indices()) && z_encode(s) == n, "roundtrip at " + std::to_string(n));
  }
  o.note("roundtrip n <= 100000");

  // Every gap-valid subset of {1..16} (F_17 > 2000), bucketed by sum.
  const auto f = fib_u64(2000);
  std::map<u64, std::vector<unsigned>> subsets;
  for (unsigned mask = 0; mask < (1u << 16); ++mask) {
    if (mask & (mask >> 1)) continue;
    u64 sum = 0;
    for (unsigned i = 0; i < 16; ++i) {
      if (mask & (1u << i)) sum += f[i + 1];
    }
    subsets[sum].push_back(mask);
  }
  for (u64 n = 0; n <= 2000 && o.pass; ++n) {
    const auto& found = subsets[n];
    o.require(found.size() == 1, std::to_string(found.size()) + " supports for " + std::to_string(n));
    if (!o.pass) break;
    std::vector<Nat> indices;
    for (int i = 15; i >= 0; --i) {
      if (found[0] & (1u << i)) indices.emplace_back(static_cast<unsigned long>(i + 1));
    }
    o.require(z_decode(n).indices() == indices, "z_decode disagrees with the unique support at " + std::to_string(n));
  }
  o.note("unique support n <= 2000");
  return o;
}

Outcome sequence_coding() {
  Outcome o;
  o.require(cantor_pair(0, 1) == 1 && cantor_pair(0, 2) == 3, "<0,1> = 1, <0,2> = 3");
  const SeqCode c00 = seq_encode(to_seq({0, 0}));
  o.require(c00.support().indices() == std::vector<Nat>{7, 3}, "[0,0] -> {7,3}");

  std::set<std::string> values;
  std::vector<std::vector<u64>> frontier{{}};
  std::size_t count = 0;
  for (int length = 0; length <= 4; ++length) {
    std::vector<std::vector<u64>> next;
    for (const auto& s : frontier) {
      values.insert(to_number(seq_encode(to_seq(s))).get_str());
      ++count;
      for (u64 a = 0; a <= 2; ++a) {
        next.push_back(s);
        next.back().push_back(a);
      }
    }
    frontier = std::move(next);
  }
  o.require(count == 121 && values.size() == 121,
            std::to_string(values.size()) + " distinct codes over " + std::to_string(count) + " sequences");
  o.note("121 sequences injective");

  std::mt19937_64 rng(20260101);
  std::size_t via_number = 0;
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    std::vector<u64> raw(rng() % 31);
    for (u64& a : raw) a = rng() % 10001;
    const Sequence s = to_seq(raw);
    const SeqCode c = seq_encode(s);
    o.require(seq_decode(c) == s, "support roundtrip, trial " + std::to_string(trial));
    if (c.support().empty() || c.support().max_index() <= 200000) {
      o.require(seq_decode(SeqCode::from_number(to_number(c))) == s, "number roundtrip, trial " + std::to_string(trial));
      ++via_number;
    }
  }
  o.note("1000 random roundtrips (" + std::to_string(via_number) + " also through the number)");
  return o;
}

// Decode attempt: greedy support, every subscript odd, unpaired by search,
// positions exactly 1..m. Returns the sequence or nothing.
std::optional<std::vector<u64>> decode_attempt(u64 n, const std::vector<u64>& f) {
  std::vector<u64> support;
  for (std::size_t e = f.size() - 1; e >= 1 && n > 0; --e) {
    if (f[e] <= n) {
      support.push_back(e);
      n -= f[e];
    }
  }
  std::map<u64, u64> by_position;
  for (u64 c : support) {
    if (c % 2 == 0) return std::nullopt;
    const u64 p = (c - 1) / 2;
    bool found = false;
    for (u64 a = 0; a <= p && !found; ++a) {
      for (u64 i = 0; a + i <= p + 1 && !found; ++i) {
        if ((a + i) * (a + i + 1) / 2 + a == p) {
          if (i == 0 || !by_position.emplace(i, a).second) return std::nullopt;
          found = true;
        }
      }
    }
  }
  std::vector<u64> seq;
  for (const auto& [i, a] : by_position) {
    if (i != seq.size() + 1) return std::nullopt;
    seq.push_back(a);
  }
  return seq;
}

Outcome predicate_suite() {
  Outcome o;
  const auto f = fib_u64(100000);
  for (u64 n = 0; n <= 100000 && o.pass; ++n) {
    const SeqCode c = SeqCode::from_number(n);
    const auto want = decode_attempt(n, f);
    o.require(is_code(c) == want.has_value(), "is_code at " + std::to_string(n));
    const std::size_t m = want ? want->size() : 0;
    o.require(len(c) == m, "len at " + std::to_string(n));
    for (u64 i = 0; i <= m + 1; ++i) {
      const u64 expect = want && i >= 1 && i <= m ? (*want)[i - 1] : 0;
      o.require(symbol_at(c, i) == expect, "symbol_at(" + std::to_string(n) + ", " + std::to_string(i) + ")");
    }
  }
  o.note("is_code/len/symbol_at agree for n <= 100000");

  std::mt19937_64 rng(99);
  const SeqCode empty;
  for (int trial = 0; trial < 500 && o.pass; ++trial) {
    std::vector<u64> a(rng() % 15), b(rng() % 15);
    for (u64& x : a) x = rng() % 100;
    for (u64& x : b) x = rng() % 100;
    const SeqCode ca = seq_encode(to_seq(a));
    const SeqCode cb = seq_encode(to_seq(b));
    o.require(concat(empty, ca) == ca && concat(ca, empty) == ca, "concat with 0, trial " + std::to_string(trial));
    o.require(len(concat(ca, cb)) == a.size() + b.size(), "length additivity, trial " + std::to_string(trial));
  }
  o.note("concat on 500 random pairs");
  return o;
}

Term random_term(std::mt19937_64& rng, int depth) {
  const u64 pick = depth <= 0 ? rng() % 2 : rng() % 6;
  switch (pick) {
    case 0: return Term::zero();
    case 1: return Term::var(rng() % 4);
    case 2: return Term::succ(random_term(rng, depth - 1));
    case 3: return Term::diag(random_term(rng, depth - 1));
    case 4: return Term::plus(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default: return Term::times(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

Outcome substitution_validity() {
  Outcome o;
  std::mt19937_64 rng(4242);
  const Alphabet& alphabet = default_alphabet();
  const u64 target = alphabet.code(Symbol::variable(0)).get_ui();
  std::size_t changed = 0;
  for (u64 k = 0; k < 500 && o.pass; ++k) {
    // Quantifiers bind v1.. only, so v0 is never in a binder slot.
    const Formula phi = random_formula(3 + k % 60, k, 3, 1);
    const Term t = random_term(rng, 3);
    const SeqCode out = sub_z({encode_syntax(phi, alphabet), encode_syntax(t, alphabet), 0}, alphabet);
    o.require(is_code(out) && is_wff_code(out, alphabet), "output not a wff code for " + to_text(phi));

    Sequence expected;
    const Sequence t_codes = to_codes(flatten(t), alphabet);
    for (const Nat& a : to_codes(flatten(phi), alphabet)) {
      if (a == target) expected.insert(expected.end(), t_codes.begin(), t_codes.end());
      else expected.push_back(a);
    }
    o.require(seq_decode(out) == expected, "splice mismatch for " + to_text(phi));
    if (!(out == encode_syntax(phi, alphabet))) ++changed;
  }
  o.note("500 substitutions (" + std::to_string(changed) + " changed the formula)");
  return o;
}

Outcome fixed_point_identity() {
  Outcome o;
  for (const char* text : {"(= v0 v0)", "(not (Prov v0))"}) {
    const Formula phi = read_formula(text);
    const FixedPoint fp = fixed_point(encode_syntax(phi));
    const SeqCode d = diag(fp.m);
    const auto& a = fp.psi.support().indices();
    const auto& b = d.support().indices();
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i] == b[i];
    o.require(same, std::string("support(psi) != support(diag(m)) for ") + text);
    const Formula expected = substitute_free(phi, 0, Term::diag(numeral(to_number(fp.m))));
    o.require(decode_formula(fp.psi) == expected, std::string("psi is not phi(diagfn(numeral m)) for ") + text);
    o.note(std::string(text) + ": " + std::to_string(a.size()) + " indices, max " + a.front().get_str());
  }
  return o;
}

TheoryConfig mp_theory() {
  TheoryConfig t;
  t.extra_axioms = {read_formula("(= 0 (S 0))"), read_formula("(-> (= 0 (S 0)) (= (S (S 0)) (S (S (S 0)))))")};
  return t;
}

Outcome proof_checking() {
  Outcome o;
  const TheoryConfig theory = mp_theory();
  const Formula b = read_formula("(= (S (S 0)) (S (S (S 0))))");
  const std::vector<Formula> steps{theory.extra_axioms[0], theory.extra_axioms[1], b};
  o.require(check_proof(encode_proof(steps), theory), "hand-built proof rejected");

  // Each mutation changes one symbol of one step to a different value in 1..19.
  std::vector<Sequence> symbols;
  for (const Formula& f : steps) symbols.push_back(to_codes(flatten(f), default_alphabet()));
  std::mt19937_64 rng(2024);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Sequence> mutated = symbols;
    Sequence& row = mutated[rng() % mutated.size()];
    Nat& cell = row[rng() % row.size()];
    Nat replacement;
    do {
      replacement = static_cast<unsigned long>(1 + rng() % 19);
    } while (replacement == cell);
    cell = replacement;
    Sequence outer;
    for (const Sequence& s : mutated) outer.push_back(to_number(seq_encode(s)));
    if (!check_proof(seq_encode(outer), theory)) ++rejected;
  }
  o.require(rejected == 100, std::to_string(100 - rejected) + " mutated proofs accepted");
  o.note("100/100 mutations rejected");

  const auto none = prov_bounded(encode_syntax(b), 2, theory);
  const auto found = prov_bounded(encode_syntax(b), 3, theory);
  o.require(!none.has_value(), "a proof was found within 2 steps");
  o.require(found.has_value(), "no proof found within 3 steps");
  if (found) {
    o.require(check_proof(*found, theory), "witness does not re-validate");
    o.require(len(*found) == 3, "witness is not 3 steps");
  }
  o.note("prov_bounded finds the 3-step chain, witness re-validates");
  return o;
}

Outcome verification_oracle() {
  Outcome o;
  for (FibIndex n = 2; n <= 1000 && o.pass; ++n) {
    o.require(oracle_check({n - 1, n, n + 2}), "identity at n = " + std::to_string(n));
  }
  std::mt19937_64 rng(77);
  std::size_t solvable = 0;
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    const FibIndex n = 1 + rng() % 500;
    const FibIndex m = 1 + rng() % 500;
    const Nat target = fib(n) + 2 * fib(m);
    std::vector<FibIndex> hits;
    Nat a = 1, b = 2;
    for (FibIndex k = 1; a <= target; ++k) {
      if (a == target) hits.push_back(k);
      const Nat c = a + b;
      a = b;
      b = c;
    }
    const auto k = oracle_solve(n, m);
    o.require(hits.size() <= 1, "several solutions");
    o.require(k.has_value() == !hits.empty(), "solver existence disagrees at " + std::to_string(n) + "," +
                                                  std::to_string(m));
    if (k && !hits.empty()) o.require(*k == hits[0] && oracle_check({n, m, *k}), "solver value wrong");
    if (k) ++solvable;
  }
  o.note("identity n in 2..1000; solver on 1000 pairs (" + std::to_string(solvable) + " solvable)");
  return o;
}

Outcome size_comparison() {
  Outcome o;
  const Formula sentence = random_sentence(50, 1);
  const SizeReport r = compare_sizes(to_codes(flatten(sentence), default_alphabet()));
  o.require(r.zeck_bits < 15000, "zeck_bits = " + std::to_string(r.zeck_bits));
  o.note("50-symbol sentence: zeck " + std::to_string(r.zeck_bits) + " bits, prime " + std::to_string(r.prime_bits) +
         " bits (500-bit figure not asserted" + (r.prime_bits < 500 ? ", met" : ", not met") + ")");

  // Growth is asserted over sequences drawn from a fixed symbol range
  // (1..20); random sentences are reported alongside.
  const std::vector<std::size_t> lengths{10, 20, 40, 80};
  std::mt19937_64 rng(808);
  std::vector<double> mean;
  std::vector<double> sentence_mean;
  std::string growth;
  for (std::size_t m : lengths) {
    const int corpus = 1000;
    double total = 0;
    for (int k = 0; k < corpus; ++k) {
      Sequence s(m);
      for (Nat& a : s) a = static_cast<unsigned long>(1 + rng() % 20);
      total += static_cast<double>(bit_length(to_number(seq_encode(s))));
    }
    mean.push_back(total / corpus);
    double sentences = 0;
    for (int seed = 0; seed < 32; ++seed) {
      const Sequence s = to_codes(flatten(random_sentence(m, seed)), default_alphabet());
      sentences += static_cast<double>(bit_length(to_number(seq_encode(s))));
    }
    sentence_mean.push_back(sentences / 32);
    growth += (growth.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) + ": " + num(mean.back(), 0);
  }
  std::string ratios;
  std::string sentence_ratios;
  for (std::size_t i = 1; i < mean.size(); ++i) {
    const double ratio = mean[i] / mean[i - 1];
    ratios += (i > 1 ? ", " : "") + num(ratio);
    sentence_ratios += (i > 1 ? ", " : "") + num(sentence_mean[i] / sentence_mean[i - 1]);
    o.require(ratio >= 2.0 && ratio <= 8.0, "ratio " + num(ratio) + " outside [2, 8] (" + growth + ")");
  }
  o.note("mean zeck bits over values 1..20 " + growth + "; doubling ratios " + ratios +
         "; random-sentence ratios (reported) " + sentence_ratios);
  return o;
}

Outcome incompleteness_substitute(bool fixed_point_ok, bool proof_checking_ok) {
  Outcome o;
  o.require(fixed_point_ok, "fixed-point criterion");
  o.require(proof_checking_ok, "proof-checking criterion");
  const FixedPoint g = godel_sentence(TheoryConfig{});
  o.require(g.psi == diag(g.m), "psi != diag(m) for the Godel sentence");
  const Formula psi = decode_formula(g.psi);
  const Formula expected = read_formula("(not (Prov (diagfn v0)))");
  o.require(decode_formula(g.m) == expected, "theta is not not Prov(diagfn(v0))");
  o.require(psi == substitute_free(expected, 0, numeral(to_number(g.m))), "psi is not theta(numeral m)");
  o.note("Godel sentence built, " + std::to_string(g.psi.support().size()) + " symbols, identity holds");
  return o;
}

bool run(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && elapsed >= budget_s) {
    o.pass = false;
    o.detail = "over time budget; " + o.detail;
  }
  std::printf("criterion %d %s: %s (%s s of %s s) %s\n", id, o.pass ? "PASS" : "FAIL", name.c_str(),
              num(elapsed).c_str(), num(budget_s, 0).c_str(), o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main() {
  bool all = true;
  all &= run(1, "zeckendorf correctness", 10, zeckendorf_correctness);
  all &= run(2, "pairing and sequence coding", 10, sequence_coding);
  all &= run(3, "predicate suite", 30, predicate_suite);
  all &= run(4, "substitution validity", 30, substitution_validity);
  const bool c5 = run(5, "fixed point", 300, fixed_point_identity);
  const bool c6 = run(6, "proof checking", 10, proof_checking);
  all &= c5 && c6;
  all &= run(7, "verification oracle", 5, verification_oracle);
  all &= run(8, "size comparison", 30, size_comparison);
  all &= run(9, "incompleteness substitute", 300, [&] { return incompleteness_substitute(c5, c6); });
  std::printf("%s\n", all ? "ALL PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
