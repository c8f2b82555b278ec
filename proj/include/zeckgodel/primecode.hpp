#ifndef ZECKGODEL_PRIMECODE_HPP_
#define ZECKGODEL_PRIMECODE_HPP_

// Prime-exponent coding [a_1..a_m] -> prod p_i^{a_i} as a baseline, and a
// size/timing comparison against the Zeckendorf sequence code.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zeckgodel/numeric.hpp"
#include "zeckgodel/seqcode.hpp"
#include "zeckgodel/syntax.hpp"

namespace zg {

class PrimeTable {
 public:
  // The first `count` primes, by sieve.
  explicit PrimeTable(std::size_t count = 4096);

  std::size_t size() const { return primes_.size(); }
  // p_{i+1}: prime(0) = 2.
  std::uint64_t prime(std::size_t i) const { return primes_.at(i); }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

 private:
  std::vector<std::uint64_t> primes_;
};

const PrimeTable& default_prime_table();

// Throws kZeroSymbol for a 0 entry and kInvalidArgument when the sequence is
// longer than the table. The empty sequence codes to 1.
Nat code_p(const Sequence& seq, const PrimeTable& table = default_prime_table());

// Trial division over p_1, p_2, ... Throws kPrimeSupportGap when some p_i is
// skipped and kFactorExceedsTable when the support runs past the table.
Sequence decode_p(const Nat& n, const PrimeTable& table = default_prime_table());

// code_p of formula_seq with every `target` replaced by term_seq.
Nat sub_prime(const Sequence& formula_seq, const Sequence& term_seq, const Nat& target,
              const PrimeTable& table = default_prime_table());

struct SizeReport {
  std::size_t sequence_length = 0;
  std::size_t zeck_bits = 0;
  std::size_t prime_bits = 0;
  Nat zeck_max_index = 0;
  std::chrono::nanoseconds zeck_encode{0};
  std::chrono::nanoseconds prime_encode{0};
  std::chrono::nanoseconds zeck_substitute{0};
  std::chrono::nanoseconds prime_substitute{0};

  std::string to_json() const;
};

struct CompareOptions {
  std::size_t runs = 5;  // timings are medians over this many runs
  // The timed substitution replaces this symbol value by `probe_replacement`
  // (v0 := 0 under the default alphabet).
  Nat probe_target = 16;
  Sequence probe_replacement = {Nat(8)};
};

// Encodes under both schemes, records exact sizes and median timings. The
// Zeckendorf substitution runs number -> support -> sequence -> splice ->
// code -> number; the prime one runs decode_p -> splice -> code_p.
SizeReport compare_sizes(const Sequence& seq, const CompareOptions& options = {});

// A formula with exactly `symbols` symbols (>= 2) drawn at random from the
// whole grammar, using variables v0 .. v{var_count - 1}; quantifiers bind
// only v{min_bound_var} and above. Deterministic in `seed`.
Formula random_formula(std::size_t symbols, std::uint64_t seed, std::uint64_t var_count = 4,
                       std::uint64_t min_bound_var = 0);

// As random_formula, but every variable occurrence is bound: a sentence.
Formula random_sentence(std::size_t symbols, std::uint64_t seed, std::uint64_t var_count = 4);

}  // namespace zg

#endif  // ZECKGODEL_PRIMECODE_HPP_
