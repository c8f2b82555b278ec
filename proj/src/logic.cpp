#include "zeckgodel/logic.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zeckgodel/error.hpp"
#include "zeckgodel/text_format.hpp"

namespace zg {

// ---------------------------------------------------------------------------
// Configuration

namespace {

struct SchemaName {
  Schema schema;
  std::string_view name;
};

constexpr SchemaName kSchemaNames[] = {
    {Schema::kK, "K"},
    {Schema::kS, "S"},
    {Schema::kContraposition, "contraposition"},
    {Schema::kEqRefl, "eq_refl"},
    {Schema::kEqSubst, "eq_subst"},
    {Schema::kQuantInst, "quant_inst"},
    {Schema::kQuantDist, "quant_dist"},
};

}  // namespace

std::string_view schema_name(Schema s) {
  for (const auto& n : kSchemaNames) {
    if (n.schema == s) return n.name;
  }
  return "?";
}

std::optional<Schema> schema_from_name(std::string_view name) {
  for (const auto& n : kSchemaNames) {
    if (n.name == name) return n.schema;
  }
  return std::nullopt;
}

std::vector<Schema> all_schemas() {
  std::vector<Schema> out;
  for (const auto& n : kSchemaNames) out.push_back(n.schema);
  return out;
}

TheoryConfig TheoryConfig::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("theory: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kConfig, "theory: expected a JSON object");
  TheoryConfig t;
  try {
    if (doc.contains("schemas")) {
      t.schemas.clear();
      for (const auto& name : doc.at("schemas")) {
        auto s = schema_from_name(name.get<std::string>());
        if (!s) throw Error(ErrorKind::kConfig, "theory: unknown schema '" + name.get<std::string>() + "'");
        t.schemas.push_back(*s);
      }
    }
    if (doc.contains("extra_axioms")) {
      for (const auto& text_form : doc.at("extra_axioms")) {
        t.extra_axioms.push_back(read_formula(text_form.get<std::string>()));
      }
    }
    if (doc.contains("rules")) {
      const auto& rules = doc.at("rules");
      t.modus_ponens = rules.value("modus_ponens", true);
      t.generalization = rules.value("generalization", true);
    }
    t.prov_symbol = doc.value("prov_symbol", std::string("Prov"));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("theory: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfig) throw;
    throw Error(ErrorKind::kConfig, std::string("theory: extra axiom: ") + e.what());
  }
  if (base_symbol_from_name(t.prov_symbol) != SymbolKind::kProv) {
    throw Error(ErrorKind::kConfig, "theory: prov_symbol must name the alphabet's Prov predicate");
  }
  return t;
}

TheoryConfig TheoryConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kConfig, "cannot read theory file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

std::string TheoryConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["schemas"] = nlohmann::ordered_json::array();
  for (Schema s : schemas) doc["schemas"].push_back(std::string(schema_name(s)));
  doc["extra_axioms"] = nlohmann::ordered_json::array();
  for (const Formula& f : extra_axioms) doc["extra_axioms"].push_back(to_text(f));
  doc["rules"] = {{"modus_ponens", modus_ponens}, {"generalization", generalization}};
  doc["prov_symbol"] = prov_symbol;
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Schema matching

namespace {

bool is_imp(const Formula& f) { return f.kind() == FormulaKind::kImp; }
bool is_neg(const Formula& f) { return f.kind() == FormulaKind::kNot; }

bool match_k(const Formula& f) {
  return is_imp(f) && is_imp(f.sub(1)) && f.sub(1).sub(1) == f.sub(0);
}

bool match_s(const Formula& f) {
  if (!is_imp(f)) return false;
  const Formula& l = f.sub(0);
  const Formula& r = f.sub(1);
  if (!is_imp(l) || !is_imp(l.sub(1)) || !is_imp(r) || !is_imp(r.sub(0)) || !is_imp(r.sub(1))) return false;
  const Formula& a = l.sub(0);
  const Formula& b = l.sub(1).sub(0);
  const Formula& c = l.sub(1).sub(1);
  return r.sub(0).sub(0) == a && r.sub(0).sub(1) == b && r.sub(1).sub(0) == a && r.sub(1).sub(1) == c;
}

bool match_contraposition(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.sub(0)) || !is_imp(f.sub(1))) return false;
  const Formula& l = f.sub(0);
  if (!is_neg(l.sub(0)) || !is_neg(l.sub(1))) return false;
  const Formula& b = l.sub(0).sub(0);
  const Formula& a = l.sub(1).sub(0);
  return f.sub(1).sub(0) == a && f.sub(1).sub(1) == b;
}

bool match_eq_refl(const Formula& f) {
  return f.kind() == FormulaKind::kEq && f.term(0) == f.term(1);
}

// a' is a with some (possibly no) occurrences of s replaced by t.
bool replaces_some(const Term& a, const Term& a2, const Term& s, const Term& t) {
  if (a == a2) return true;
  if (a == s && a2 == t) return true;
  if (a.kind() != a2.kind() || a.arity() != a2.arity()) return false;
  if (a.kind() == TermKind::kVar || a.kind() == TermKind::kZero) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!replaces_some(a.arg(i), a2.arg(i), s, t)) return false;
  }
  return true;
}

bool match_eq_subst(const Formula& f) {
  if (!is_imp(f) || f.sub(0).kind() != FormulaKind::kEq || !is_imp(f.sub(1))) return false;
  const Term& s = f.sub(0).term(0);
  const Term& t = f.sub(0).term(1);
  const Formula& a = f.sub(1).sub(0);
  const Formula& a2 = f.sub(1).sub(1);
  if (!a.is_atomic() || a.kind() != a2.kind()) return false;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (!replaces_some(a.term(i), a2.term(i), s, t)) return false;
  }
  return true;
}

// First term in `b` standing where `a` has a free x.
std::optional<Term> find_instance_term(const Term& a, const Term& b, std::uint64_t x) {
  if (a.kind() == TermKind::kVar && a.var_index() == x) return b;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return std::nullopt;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto t = find_instance_term(a.arg(i), b.arg(i), x)) return t;
  }
  return std::nullopt;
}

std::optional<Term> find_instance_term(const Formula& a, const Formula& b, std::uint64_t x) {
  if (a.kind() != b.kind()) return std::nullopt;
  if (a.is_quantifier() && (a.bound_var() == x || a.bound_var() != b.bound_var())) return std::nullopt;
  for (std::size_t i = 0; i < a.term_count(); ++i) {
    if (auto t = find_instance_term(a.term(i), b.term(i), x)) return t;
  }
  for (std::size_t i = 0; i < a.sub_count(); ++i) {
    if (auto t = find_instance_term(a.sub(i), b.sub(i), x)) return t;
  }
  return std::nullopt;
}

// No free x in f sits under a binder of a variable of t.
bool free_for(const Formula& f, std::uint64_t x, const std::vector<std::uint64_t>& t_vars) {
  if (f.is_quantifier()) {
    if (f.bound_var() == x) return true;
    if (std::binary_search(t_vars.begin(), t_vars.end(), f.bound_var()) && occurs_free(f.body(), x)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < f.sub_count(); ++i) {
    if (!free_for(f.sub(i), x, t_vars)) return false;
  }
  return true;
}

bool match_quant_inst(const Formula& f) {
  if (!is_imp(f) || f.sub(0).kind() != FormulaKind::kForall) return false;
  const std::uint64_t x = f.sub(0).bound_var();
  const Formula& a = f.sub(0).body();
  const Formula& b = f.sub(1);
  auto t = find_instance_term(a, b, x);
  if (!t) return a == b;
  return free_for(a, x, variables(*t)) && substitute_free(a, x, *t) == b;
}

bool match_quant_dist(const Formula& f) {
  if (!is_imp(f) || f.sub(0).kind() != FormulaKind::kForall || !is_imp(f.sub(0).body())) return false;
  const std::uint64_t x = f.sub(0).bound_var();
  const Formula& a = f.sub(0).body().sub(0);
  const Formula& b = f.sub(0).body().sub(1);
  const Formula& r = f.sub(1);
  if (!is_imp(r) || !(r.sub(0) == a) || r.sub(1).kind() != FormulaKind::kForall) return false;
  return r.sub(1).bound_var() == x && r.sub(1).body() == b && !occurs_free(a, x);
}

bool matches(Schema s, const Formula& f) {
  switch (s) {
    case Schema::kK: return match_k(f);
    case Schema::kS: return match_s(f);
    case Schema::kContraposition: return match_contraposition(f);
    case Schema::kEqRefl: return match_eq_refl(f);
    case Schema::kEqSubst: return match_eq_subst(f);
    case Schema::kQuantInst: return match_quant_inst(f);
    case Schema::kQuantDist: return match_quant_dist(f);
  }
  return false;
}

std::optional<Justification> axiom_justification(const Formula& f, const TheoryConfig& theory) {
  for (std::size_t i = 0; i < theory.extra_axioms.size(); ++i) {
    if (theory.extra_axioms[i] == f) {
      Justification j;
      j.kind = Justification::Kind::kExtraAxiom;
      j.axiom = i;
      return j;
    }
  }
  if (auto s = matching_schema(f, theory)) {
    Justification j;
    j.kind = Justification::Kind::kSchema;
    j.schema = *s;
    return j;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Schema> matching_schema(const Formula& f, const TheoryConfig& theory) {
  for (Schema s : theory.schemas) {
    if (matches(s, f)) return s;
  }
  return std::nullopt;
}

bool is_axiom(const Formula& f, const TheoryConfig& theory) {
  return axiom_justification(f, theory).has_value();
}

bool check_mp(const Formula& p, const Formula& q, const Formula& r) {
  return is_imp(q) && q.sub(0) == p && q.sub(1) == r;
}

bool check_mp(const SeqCode& p, const SeqCode& q, const SeqCode& r, const Alphabet& alphabet) {
  if (!is_wff_code(p, alphabet) || !is_wff_code(q, alphabet) || !is_wff_code(r, alphabet)) return false;
  return check_mp(decode_formula(p, alphabet), decode_formula(q, alphabet), decode_formula(r, alphabet));
}

// ---------------------------------------------------------------------------
// Proof checking

std::optional<std::vector<Justification>> annotate(std::span<const Formula> steps, const TheoryConfig& theory) {
  std::vector<Justification> out;
  out.reserve(steps.size());
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Formula& f = steps[k];
    std::optional<Justification> found = axiom_justification(f, theory);
    if (!found && theory.modus_ponens) {
      for (std::size_t j = 0; j < k && !found; ++j) {
        if (!is_imp(steps[j]) || !(steps[j].sub(1) == f)) continue;
        for (std::size_t i = 0; i < k; ++i) {
          if (steps[i] == steps[j].sub(0)) {
            Justification just;
            just.kind = Justification::Kind::kModusPonens;
            just.minor = i;
            just.major = j;
            found = just;
            break;
          }
        }
      }
    }
    if (!found && theory.generalization && f.kind() == FormulaKind::kForall) {
      for (std::size_t i = 0; i < k; ++i) {
        if (steps[i] == f.body()) {
          Justification just;
          just.kind = Justification::Kind::kGeneralization;
          just.minor = i;
          just.var = f.bound_var();
          found = just;
          break;
        }
      }
    }
    if (!found) return std::nullopt;
    out.push_back(*found);
  }
  return out;
}

bool check_proof(std::span<const Formula> steps, const TheoryConfig& theory) {
  return !steps.empty() && annotate(steps, theory).has_value();
}

bool check_proof(const SeqCode& proof_code, const TheoryConfig& theory, const Alphabet& alphabet,
                 const CodecOptions& options) {
  std::vector<Formula> steps;
  try {
    steps = decode_proof(proof_code, alphabet, options);
  } catch (const Error&) {
    return false;
  }
  return check_proof(steps, theory);
}

// ---------------------------------------------------------------------------
// Bounded search

namespace {

class Search {
 public:
  Search(const TheoryConfig& theory, const Alphabet& alphabet, std::size_t bound)
      : theory_(theory), alphabet_(alphabet), bound_(bound) {}

  void add_subformulas(const Formula& f) {
    std::vector<const Formula*> stack{&f};
    while (!stack.empty()) {
      const Formula* g = stack.back();
      stack.pop_back();
      if (closure_.emplace(key(*g), *g).second) {
        for (std::size_t i = 0; i < g->sub_count(); ++i) stack.push_back(&g->sub(i));
      }
    }
  }

  std::optional<std::vector<Formula>> run(const Formula& target) {
    if (bound_ == 0) return std::nullopt;
    std::vector<Formula> seeds = theory_.extra_axioms;
    for (const auto& [k, f] : closure_) seeds.push_back(f);
    if (closure_.size() <= 64) {
      for (const auto& [ka, a] : closure_) {
        for (const auto& [kb, b] : closure_) seeds.push_back(Formula::imp(a, Formula::imp(b, a)));
      }
    }
    for (const Formula& f : seeds) {
      if (is_axiom(f, theory_)) offer(f, {f});
    }
    bool changed = true;
    while (changed) {
      changed = false;
      // Snapshot: improvements found in this round are used in the next.
      const std::map<std::string, std::vector<Formula>> current = best_;
      if (theory_.modus_ponens) {
        for (const auto& [kq, q] : current) {
          const Formula& imp = q.back();
          if (!is_imp(imp)) continue;
          auto minor = current.find(key(imp.sub(0)));
          if (minor == current.end()) continue;
          changed |= offer(imp.sub(1), merge(minor->second, q, imp.sub(1)));
        }
      }
      if (theory_.generalization) {
        for (const auto& [kc, c] : closure_) {
          if (c.kind() != FormulaKind::kForall) continue;
          auto premise = current.find(key(c.body()));
          if (premise == current.end()) continue;
          changed |= offer(c, merge(premise->second, {}, c));
        }
      }
    }
    auto it = best_.find(key(target));
    if (it == best_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::string key(const Formula& f) { return to_text(f); }

  // a's steps, then b's steps not already present, then the conclusion.
  static std::vector<Formula> merge(const std::vector<Formula>& a, const std::vector<Formula>& b,
                                    const Formula& conclusion) {
    std::vector<Formula> out = a;
    std::set<std::string> seen;
    for (const Formula& f : out) seen.insert(key(f));
    for (const Formula& f : b) {
      if (seen.insert(key(f)).second) out.push_back(f);
    }
    if (seen.insert(key(conclusion)).second) out.push_back(conclusion);
    return out;
  }

  const std::vector<Nat>& step_codes(const std::vector<Formula>& proof) {
    codes_scratch_.clear();
    for (const Formula& f : proof) {
      const std::string k = key(f);
      auto it = value_cache_.find(k);
      if (it == value_cache_.end()) {
        it = value_cache_.emplace(k, to_number(encode_syntax(f, alphabet_))).first;
      }
      codes_scratch_.push_back(it->second);
    }
    return codes_scratch_;
  }

  bool better(const std::vector<Formula>& candidate, const std::vector<Formula>& incumbent) {
    if (candidate.size() != incumbent.size()) return candidate.size() < incumbent.size();
    const std::vector<Nat> a = step_codes(candidate);
    const std::vector<Nat> b = step_codes(incumbent);
    return a < b;
  }

  bool offer(const Formula& f, std::vector<Formula> proof) {
    if (proof.size() > bound_ || !(proof.back() == f)) return false;
    const std::string k = key(f);
    auto it = best_.find(k);
    if (it != best_.end() && !better(proof, it->second)) return false;
    best_[k] = std::move(proof);
    return true;
  }

  const TheoryConfig& theory_;
  const Alphabet& alphabet_;
  std::size_t bound_;
  std::map<std::string, Formula> closure_;
  std::map<std::string, std::vector<Formula>> best_;
  std::map<std::string, Nat> value_cache_;
  std::vector<Nat> codes_scratch_;
};

}  // namespace

std::optional<std::vector<Formula>> search_proof(const Formula& target, std::size_t bound,
                                                 const TheoryConfig& theory, const Alphabet& alphabet) {
  Search search(theory, alphabet, bound);
  search.add_subformulas(target);
  for (const Formula& a : theory.extra_axioms) search.add_subformulas(a);
  return search.run(target);
}

std::optional<SeqCode> prov_bounded(const SeqCode& target, std::size_t bound, const TheoryConfig& theory,
                                    const Alphabet& alphabet) {
  if (!is_wff_code(target, alphabet)) {
    throw Error(ErrorKind::kNotWff, "not a wff code: " + to_support_literal(target.support()));
  }
  auto proof = search_proof(decode_formula(target, alphabet), bound, theory, alphabet);
  if (!proof) return std::nullopt;
  return encode_proof(*proof, alphabet);
}

FixedPoint godel_sentence(const TheoryConfig& theory, const Alphabet& alphabet, const DiagOptions& options) {
  (void)theory;  // Prov is the only provability predicate in the alphabet
  const std::uint64_t x = options.target_var;
  const Formula phi = Formula::neg(Formula::prov(Term::var(x)));
  return fixed_point(encode_syntax(phi, alphabet), alphabet, options);
}

}  // namespace zg
