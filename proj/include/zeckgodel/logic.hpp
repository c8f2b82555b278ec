#ifndef ZECKGODEL_LOGIC_HPP_
#define ZECKGODEL_LOGIC_HPP_

// Hilbert-style calculus over the arithmetic language, a proof-code checker,
// a bounded proof search, and the Gödel sentence for ¬Prov(x).
//
// Axiom schemas (A, B, C formulas; s, t terms; x a variable):
//   K               A → (B → A)
//   S               (A → (B → C)) → ((A → B) → (A → C))
//   contraposition  (¬B → ¬A) → (A → B)
//   eq_refl         t = t
//   eq_subst        s = t → (A → A')   A atomic, A' is A with some s replaced by t
//   quant_inst      ∀x A → A[x := t]   t free for x in A
//   quant_dist      ∀x (A → B) → (A → ∀x B)   x not free in A
// Rules: modus ponens (A, A → B ⊢ B) and generalisation (A ⊢ ∀x A).

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zeckgodel/seqcode.hpp"
#include "zeckgodel/substitution.hpp"
#include "zeckgodel/syntax.hpp"

namespace zg {

enum class Schema { kK, kS, kContraposition, kEqRefl, kEqSubst, kQuantInst, kQuantDist };

std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);
std::vector<Schema> all_schemas();

struct TheoryConfig {
  std::vector<Schema> schemas = all_schemas();
  std::vector<Formula> extra_axioms;
  bool modus_ponens = true;
  bool generalization = true;
  std::string prov_symbol = "Prov";

  // {"schemas": ["K", ...], "extra_axioms": ["(= 0 0)", ...],
  //  "rules": {"modus_ponens": true, "generalization": true},
  //  "prov_symbol": "Prov"}. Missing keys keep their defaults.
  static TheoryConfig from_json(std::string_view text);
  static TheoryConfig load(const std::filesystem::path& path);
  std::string to_json() const;
};

struct Justification {
  enum class Kind { kSchema, kExtraAxiom, kModusPonens, kGeneralization };
  Kind kind = Kind::kSchema;
  Schema schema = Schema::kK;  // kSchema
  std::size_t axiom = 0;       // kExtraAxiom: index into extra_axioms
  std::size_t minor = 0;       // kModusPonens: step holding A; kGeneralization: premise
  std::size_t major = 0;       // kModusPonens: step holding A → B
  std::uint64_t var = 0;       // kGeneralization
};

std::optional<Schema> matching_schema(const Formula& f, const TheoryConfig& theory);
bool is_axiom(const Formula& f, const TheoryConfig& theory);

// q = (p → r), structurally.
bool check_mp(const Formula& p, const Formula& q, const Formula& r);
// Same test on codes: decodes and compares trees; false if any code is not a wff.
bool check_mp(const SeqCode& p, const SeqCode& q, const SeqCode& r, const Alphabet& alphabet = default_alphabet());

// Justifies each step from strictly earlier ones (0-based indices); nullopt
// if some step has no justification.
std::optional<std::vector<Justification>> annotate(std::span<const Formula> steps, const TheoryConfig& theory);

// Total: false for anything that is not a code of a valid proof.
bool check_proof(std::span<const Formula> steps, const TheoryConfig& theory);
bool check_proof(const SeqCode& proof_code, const TheoryConfig& theory,
                 const Alphabet& alphabet = default_alphabet(), const CodecOptions& options = {});

// Forward-chaining witness search with at most `bound` steps. Candidate
// axioms are the extra axioms plus schema instances among the subformulas of
// the target and of the extra axioms. Among the proofs found, the one with
// fewest steps wins, ties broken lexicographically on step codes.
std::optional<std::vector<Formula>> search_proof(const Formula& target, std::size_t bound,
                                                 const TheoryConfig& theory,
                                                 const Alphabet& alphabet = default_alphabet());
// As search_proof on a code; returns the proof code. Throws kNotWff.
std::optional<SeqCode> prov_bounded(const SeqCode& target, std::size_t bound, const TheoryConfig& theory,
                                    const Alphabet& alphabet = default_alphabet());

// fixed_point applied to ¬Prov(v0).
FixedPoint godel_sentence(const TheoryConfig& theory, const Alphabet& alphabet = default_alphabet(),
                          const DiagOptions& options = {});

}  // namespace zg

#endif  // ZECKGODEL_LOGIC_HPP_
