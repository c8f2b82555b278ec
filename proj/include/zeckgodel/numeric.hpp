#ifndef ZECKGODEL_NUMERIC_HPP_
#define ZECKGODEL_NUMERIC_HPP_

// Exact Fibonacci arithmetic and the Cantor pairing bijection.
//
// Fibonacci numbers use the shifted convention F_1 = 1, F_2 = 2,
// F_e = F_{e-1} + F_{e-2}, so 1, 2, 3, 5, 8, 13, 21, ... and 32 = F_7 + F_5 + F_3.
// Nothing in this header uses floating point.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace zg {

// Arbitrary-precision natural. Functions taking a Nat reject negative values.
using Nat = mpz_class;

// Fibonacci subscript, e >= 1.
using FibIndex = std::uint64_t;

// Largest subscript kept in the shared memo table; beyond it values are
// produced by fast doubling.
inline constexpr FibIndex kFibMemoLimit = FibIndex{1} << 14;

// F_e. Throws Error(kInvalidArgument) for e == 0.
Nat fib(FibIndex e);

// (F_e, F_{e+1}) by fast doubling, bypassing the memo table.
std::pair<Nat, Nat> fib_pair_doubling(FibIndex e);

// Unique e with F_e <= n < F_{e+1}. Throws for n == 0.
FibIndex max_fib_index_le(const Nat& n);

// (x + y)(x + y + 1) / 2 + x
Nat cantor_pair(const Nat& x, const Nat& y);

// Inverse of cantor_pair, via exact integer square root.
std::pair<Nat, Nat> cantor_unpair(const Nat& p);

// floor(sqrt(n)), exact.
Nat isqrt(const Nat& n);

// Upper bound on |Z(n)|: max_fib_index_le(n) for n >= 1, and 0 for n == 0.
Nat zeck_length_bound(const Nat& n);

// Number of significant bits; 0 for n == 0.
std::size_t bit_length(const Nat& n);

std::optional<std::uint64_t> to_u64(const Nat& n);

// Parses a decimal or 0x-prefixed hexadecimal natural.
// Throws Error(kInvalidArgument) on anything else.
Nat parse_nat(std::string_view text);

std::string to_decimal(const Nat& n);

}  // namespace zg

#endif  // ZECKGODEL_NUMERIC_HPP_
