#include "zeckgodel/seqcode.hpp"

#include <algorithm>
#include <functional>

#include "zeckgodel/error.hpp"

namespace zg {

SeqCode SeqCode::from_number(const Nat& n) { return SeqCode(z_decode(n), n); }

SeqCode seq_encode(const Sequence& items) {
  std::vector<Nat> indices;
  indices.reserve(items.size());
  Nat position = 0;
  for (const Nat& a : items) {
    ++position;
    indices.push_back(2 * cantor_pair(a, position) + 1);
  }
  std::sort(indices.begin(), indices.end(), std::greater<>());
  return SeqCode::from_support(ZeckSupport::from_indices(std::move(indices)));
}

std::optional<Sequence> try_seq_decode(const SeqCode& code) {
  const auto& indices = code.support().indices();
  const std::size_t m = indices.size();
  std::vector<std::optional<Nat>> slots(m);
  for (const Nat& e : indices) {
    if (mpz_even_p(e.get_mpz_t())) return std::nullopt;
    Nat p = e - 1;
    mpz_fdiv_q_2exp(p.get_mpz_t(), p.get_mpz_t(), 1);
    auto [a, i] = cantor_unpair(p);
    if (i < 1 || i > static_cast<unsigned long>(m)) return std::nullopt;
    auto& slot = slots[i.get_ui() - 1];
    if (slot) return std::nullopt;
    slot = std::move(a);
  }
  Sequence out;
  out.reserve(m);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

Sequence seq_decode(const SeqCode& code) {
  auto decoded = try_seq_decode(code);
  if (!decoded) {
    throw Error(ErrorKind::kNotASequenceCode,
                "not a sequence code: " + to_support_literal(code.support()));
  }
  return std::move(*decoded);
}

bool is_code(const SeqCode& code) { return try_seq_decode(code).has_value(); }

std::size_t len(const SeqCode& code) { return is_code(code) ? code.support().size() : 0; }

Nat symbol_at(const SeqCode& code, const Nat& i) {
  auto decoded = try_seq_decode(code);
  if (!decoded || i < 1 || i > static_cast<unsigned long>(decoded->size())) return 0;
  return (*decoded)[i.get_ui() - 1];
}

SeqCode concat(const SeqCode& left, const SeqCode& right) {
  Sequence items = seq_decode(left);
  Sequence tail = seq_decode(right);
  items.insert(items.end(), std::make_move_iterator(tail.begin()),
               std::make_move_iterator(tail.end()));
  return seq_encode(items);
}

bool is_materializable(const SeqCode& code, const CodecOptions& options) {
  if (code.number() || code.support().empty()) return true;
  return code.support().max_index() <= Nat(static_cast<unsigned long>(options.materialize_max_index));
}

Nat bits_estimate(const SeqCode& code) {
  if (code.support().empty()) return 0;
  Nat scaled = code.support().max_index() * 6943 + 9999;
  mpz_fdiv_q_ui(scaled.get_mpz_t(), scaled.get_mpz_t(), 10000);
  return scaled + 1;
}

Nat to_number(const SeqCode& code, const CodecOptions& options) {
  if (code.number()) return *code.number();
  if (!is_materializable(code, options)) {
    throw Error(ErrorKind::kCodeTooLarge,
                "code too large to materialize: largest index " +
                    code.support().max_index().get_str() + " exceeds threshold " +
                    std::to_string(options.materialize_max_index) + " (~" +
                    bits_estimate(code).get_str() + " bits)");
  }
  return z_encode(code.support());
}

}  // namespace zg
