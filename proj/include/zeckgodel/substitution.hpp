#ifndef ZECKGODEL_SUBSTITUTION_HPP_
#define ZECKGODEL_SUBSTITUTION_HPP_

// Substitution on codes, the diagonal function and the fixed-point
// construction. Everything here works on supports; only the value of the
// diagonalised code itself is ever materialised (to build its numeral).

#include <cstdint>
#include <span>
#include <vector>

#include "zeckgodel/seqcode.hpp"
#include "zeckgodel/syntax.hpp"

namespace zg {

struct SubRequest {
  SeqCode formula_code;
  SeqCode replacement_code;
  std::uint64_t target_var = 0;
};

// Replaces every element equal to `target` by the elements of `replacement`.
std::vector<Nat> splice(std::span<const Nat> items, const Nat& target, std::span<const Nat> replacement);

// Symbol-level substitution: every occurrence of the target variable, bound
// or free, is replaced by the replacement term's symbols. Throws kNotWff /
// kNotTerm when the inputs are not a formula and a term code, and kNotWff
// when the variable is quantified and the replacement is not a variable
// (the splice would not be a formula).
SeqCode sub_z(const SubRequest& request, const Alphabet& alphabet = default_alphabet());

// Tree-level substitution of free occurrences only.
SeqCode sub_free(const SubRequest& request, const Alphabet& alphabet = default_alphabet());

struct DiagOptions {
  std::uint64_t target_var = 0;
  // Largest value (in bits) whose numeral diag() will build.
  std::uint64_t max_numeral_bits = std::uint64_t{1} << 21;
  CodecOptions codec;
};

// sub_z(n, numeral(N)) with N the value of n. The numeral's symbols are
// produced straight from N's bits. A formula without the target variable
// comes back unchanged. Throws kNotWff or kNumeralTooLarge.
SeqCode diag(const SeqCode& n, const Alphabet& alphabet = default_alphabet(),
             const DiagOptions& options = {});

struct FixedPoint {
  SeqCode psi;  // the fixed point; equals diag(m)
  SeqCode m;    // code of theta(x) = phi(diagfn(x))
};

// theta = phi[x := diagfn(x)] on the tree, m = code(theta),
// psi = sub_z(m, code(numeral(value of m))). Requires the target variable
// to occur free in phi (kInvalidArgument otherwise).
FixedPoint fixed_point(const SeqCode& phi_code, const Alphabet& alphabet = default_alphabet(),
                       const DiagOptions& options = {});

}  // namespace zg

#endif  // ZECKGODEL_SUBSTITUTION_HPP_
