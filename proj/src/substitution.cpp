#include "zeckgodel/substitution.hpp"

#include "zeckgodel/error.hpp"

namespace zg {
namespace {

void require_wff(const SeqCode& code, const Alphabet& alphabet) {
  if (!is_wff_code(code, alphabet)) {
    throw Error(ErrorKind::kNotWff, "not a wff code: " + to_support_literal(code.support()));
  }
}

void require_term(const SeqCode& code, const Alphabet& alphabet) {
  if (!is_term_code(code, alphabet)) {
    throw Error(ErrorKind::kNotTerm, "not a term code: " + to_support_literal(code.support()));
  }
}

Nat numeral_source(const SeqCode& n, const DiagOptions& options) {
  if (bits_estimate(n) > Nat(static_cast<unsigned long>(options.max_numeral_bits)) + 1) {
    throw Error(ErrorKind::kNumeralTooLarge,
                "numeral too large: code has ~" + bits_estimate(n).get_str() + " bits, limit " +
                    std::to_string(options.max_numeral_bits));
  }
  Nat value = to_number(n, options.codec);
  if (bit_length(value) > options.max_numeral_bits) {
    throw Error(ErrorKind::kNumeralTooLarge,
                "numeral too large: code has " + std::to_string(bit_length(value)) + " bits, limit " +
                    std::to_string(options.max_numeral_bits));
  }
  return value;
}

// A quantifier's variable slot can only take a variable.
void require_no_binder(const Sequence& formula, const Nat& target, std::span<const Nat> replacement,
                       const Alphabet& alphabet) {
  if (replacement.size() == 1 && replacement[0] >= Nat(static_cast<unsigned long>(alphabet.offset()))) return;
  const Nat forall = alphabet.code(Symbol::of(SymbolKind::kForall));
  const Nat exists = alphabet.code(Symbol::of(SymbolKind::kExists));
  for (std::size_t i = 0; i + 1 < formula.size(); ++i) {
    if ((formula[i] == forall || formula[i] == exists) && formula[i + 1] == target) {
      throw Error(ErrorKind::kNotWff,
                  "substitution would put a non-variable term in a quantifier's variable slot (symbol " +
                      std::to_string(i + 2) + ")");
    }
  }
}

}  // namespace

std::vector<Nat> splice(std::span<const Nat> items, const Nat& target, std::span<const Nat> replacement) {
  std::vector<Nat> out;
  out.reserve(items.size());
  for (const Nat& a : items) {
    if (a == target) out.insert(out.end(), replacement.begin(), replacement.end());
    else out.push_back(a);
  }
  return out;
}

SeqCode sub_z(const SubRequest& request, const Alphabet& alphabet) {
  require_wff(request.formula_code, alphabet);
  require_term(request.replacement_code, alphabet);
  const Sequence formula = seq_decode(request.formula_code);
  const Sequence term = seq_decode(request.replacement_code);
  const Nat target = alphabet.code(Symbol::variable(request.target_var));
  require_no_binder(formula, target, term, alphabet);
  return seq_encode(splice(formula, target, term));
}

SeqCode sub_free(const SubRequest& request, const Alphabet& alphabet) {
  require_wff(request.formula_code, alphabet);
  require_term(request.replacement_code, alphabet);
  const Formula f = decode_formula(request.formula_code, alphabet);
  const Term t = decode_term(request.replacement_code, alphabet);
  return encode_syntax(substitute_free(f, request.target_var, t), alphabet);
}

SeqCode diag(const SeqCode& n, const Alphabet& alphabet, const DiagOptions& options) {
  require_wff(n, alphabet);
  const Sequence formula = seq_decode(n);
  const Nat target = alphabet.code(Symbol::variable(options.target_var));
  bool present = false;
  for (const Nat& a : formula) {
    if (a == target) {
      present = true;
      break;
    }
  }
  if (!present) return n;
  require_no_binder(formula, target, {}, alphabet);
  const std::vector<Nat> numeral = to_codes(numeral_symbols(numeral_source(n, options)), alphabet);
  return seq_encode(splice(formula, target, numeral));
}

FixedPoint fixed_point(const SeqCode& phi_code, const Alphabet& alphabet, const DiagOptions& options) {
  require_wff(phi_code, alphabet);
  const Formula phi = decode_formula(phi_code, alphabet);
  const std::uint64_t x = options.target_var;
  if (!occurs_free(phi, x)) {
    throw Error(ErrorKind::kInvalidArgument,
                "fixed point: v" + std::to_string(x) + " does not occur free in the formula");
  }
  const Formula theta = substitute_free(phi, x, Term::diag(Term::var(x)));
  SeqCode m = encode_syntax(theta, alphabet);
  const SeqCode numeral_code = seq_encode(to_codes(numeral_symbols(numeral_source(m, options)), alphabet));
  SeqCode psi = sub_z(SubRequest{m, numeral_code, x}, alphabet);
  return FixedPoint{std::move(psi), std::move(m)};
}

}  // namespace zg
