#ifndef ZECKGODEL_ZECKENDORF_HPP_
#define ZECKGODEL_ZECKENDORF_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "zeckgodel/numeric.hpp"

namespace zg {

// Z(n): Fibonacci subscripts of a Zeckendorf representation, stored strictly
// decreasing with pairwise gaps >= 2. Empty for n = 0.
//
// Subscripts are Nats rather than FibIndex because nested codes (proof codes)
// carry subscripts far beyond 64 bits even though their values are never
// materialised.
class ZeckSupport {
 public:
  ZeckSupport() = default;

  // Throws Error(kMalformedSupport) unless `indices` is a valid support.
  static ZeckSupport from_indices(std::vector<Nat> indices);

  const std::vector<Nat>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  // Requires !empty().
  const Nat& max_index() const { return indices_.front(); }

  bool operator==(const ZeckSupport& other) const { return indices_ == other.indices_; }

 private:
  explicit ZeckSupport(std::vector<Nat> indices) : indices_(std::move(indices)) {}

  std::vector<Nat> indices_;
};

// True iff indices are >= 1, strictly decreasing, with gaps >= 2.
bool is_valid_support(std::span<const Nat> indices);

// Sum of F_e over the support. Throws Error(kCodeTooLarge) if a subscript
// does not fit in 64 bits.
Nat z_encode(const ZeckSupport& support);

// Greedy decomposition; total on naturals.
ZeckSupport z_decode(const Nat& n);

// `Z[7,5,3]`
std::string to_support_literal(const ZeckSupport& support);

}  // namespace zg

#endif  // ZECKGODEL_ZECKENDORF_HPP_
