#include "zeckgodel/oracle.hpp"

#include "zeckgodel/error.hpp"

namespace zg {

bool oracle_check(const OracleTriple& t) {
  if (t.n == 0 || t.m == 0 || t.k == 0) return false;
  return fib(t.n) + 2 * fib(t.m) == fib(t.k);
}

std::optional<FibIndex> oracle_solve(FibIndex n, FibIndex m) {
  if (n == 0 || m == 0) return std::nullopt;
  const Nat sum = fib(n) + 2 * fib(m);
  const FibIndex k = max_fib_index_le(sum);
  if (fib(k) == sum) return k;
  return std::nullopt;
}

OracleTriple mp_witness(FibIndex n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "mp witness needs n >= 2, got " + std::to_string(n));
  }
  return OracleTriple{n - 1, n, n + 2};
}

}  // namespace zg
