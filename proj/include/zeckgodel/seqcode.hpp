#ifndef ZECKGODEL_SEQCODE_HPP_
#define ZECKGODEL_SEQCODE_HPP_

// Sequence codes: [a_1, ..., a_m] is coded by the Zeckendorf support
// { 2 * <a_i, i> + 1 : i = 1..m }, i.e. the natural sum_i F_{2<a_i,i>+1}.
//
// A SeqCode always carries its support. The numeric value is optional: it is
// kept when the code was built from a number and otherwise computed on demand
// by to_number(), which refuses supports whose largest subscript exceeds the
// materialisation threshold.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zeckgodel/numeric.hpp"
#include "zeckgodel/zeckendorf.hpp"

namespace zg {

using Sequence = std::vector<Nat>;

struct CodecOptions {
  // Largest Fibonacci subscript to_number() will materialise (~23 Mbit).
  std::uint64_t materialize_max_index = std::uint64_t{1} << 25;
};

class SeqCode {
 public:
  SeqCode() = default;  // the empty sequence, 0

  static SeqCode from_support(ZeckSupport support) { return SeqCode(std::move(support), std::nullopt); }
  static SeqCode from_number(const Nat& n);

  const ZeckSupport& support() const { return support_; }
  const std::optional<Nat>& number() const { return number_; }

  // Codes are equal when they denote the same natural.
  bool operator==(const SeqCode& other) const { return support_ == other.support_; }

 private:
  SeqCode(ZeckSupport support, std::optional<Nat> number)
      : support_(std::move(support)), number_(std::move(number)) {}

  ZeckSupport support_;
  std::optional<Nat> number_;
};

SeqCode seq_encode(const Sequence& items);

// Throws Error(kNotASequenceCode) unless is_code(code).
Sequence seq_decode(const SeqCode& code);

// Non-throwing decode; nullopt exactly when !is_code(code).
std::optional<Sequence> try_seq_decode(const SeqCode& code);

// All subscripts odd and the unpaired positions exactly {1..m}.
bool is_code(const SeqCode& code);

// |support| for codes, 0 otherwise.
std::size_t len(const SeqCode& code);

// a_i for a code and 1 <= i <= len; 0 otherwise. Looks up by recovered
// position, not by rank in the support.
Nat symbol_at(const SeqCode& code, const Nat& i);

// Throws Error(kNotASequenceCode) if either side is not a code.
SeqCode concat(const SeqCode& left, const SeqCode& right);

// Throws Error(kCodeTooLarge) above the threshold, quoting bits_estimate().
Nat to_number(const SeqCode& code, const CodecOptions& options = {});

inline SeqCode from_number(const Nat& n) { return SeqCode::from_number(n); }

// True when to_number() would succeed under `options`.
bool is_materializable(const SeqCode& code, const CodecOptions& options = {});

// ceil(0.6943 * e_max) + 1, an upper estimate of the value's bit length;
// 0 for the empty code.
Nat bits_estimate(const SeqCode& code);

}  // namespace zg

#endif  // ZECKGODEL_SEQCODE_HPP_
