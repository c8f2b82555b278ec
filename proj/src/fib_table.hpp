#ifndef ZECKGODEL_SRC_FIB_TABLE_HPP_
#define ZECKGODEL_SRC_FIB_TABLE_HPP_

#include "zeckgodel/numeric.hpp"

namespace zg::detail {

// Reference into the shared memo table; requires 1 <= e <= kFibMemoLimit.
// The reference stays valid for the lifetime of the process.
const Nat& fib_memo(FibIndex e);

// Classical (G_k, G_{k+1}) with G_0 = 0, G_1 = 1, so that F_e = G_{e+1}.
std::pair<Nat, Nat> classic_fib_pair(std::uint64_t k);

}  // namespace zg::detail

#endif  // ZECKGODEL_SRC_FIB_TABLE_HPP_
