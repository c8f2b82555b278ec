#ifndef ZECKGODEL_ORACLE_HPP_
#define ZECKGODEL_ORACLE_HPP_

// The Fibonacci identity F_n + 2 F_m = F_k as a checkable witness for an
// inference step. Kept apart from the proof checker.

#include <optional>

#include "zeckgodel/numeric.hpp"

namespace zg {

struct OracleTriple {
  FibIndex n = 1;
  FibIndex m = 1;
  FibIndex k = 1;

  bool operator==(const OracleTriple&) const = default;
};

// Exact F_n + 2 F_m == F_k. False when any index is 0.
bool oracle_check(const OracleTriple& t);

// The unique k with F_n + 2 F_m = F_k, if any.
std::optional<FibIndex> oracle_solve(FibIndex n, FibIndex m);

// (n - 1, n, n + 2), which always satisfies the identity. Throws
// Error(kInvalidArgument) for n < 2.
OracleTriple mp_witness(FibIndex n);

}  // namespace zg

#endif  // ZECKGODEL_ORACLE_HPP_
