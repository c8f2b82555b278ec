#include "zeckgodel/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zeckgodel/error.hpp"
#include "zeckgodel/logic.hpp"
#include "zeckgodel/numeric.hpp"
#include "zeckgodel/oracle.hpp"
#include "zeckgodel/primecode.hpp"
#include "zeckgodel/seqcode.hpp"
#include "zeckgodel/substitution.hpp"
#include "zeckgodel/syntax.hpp"
#include "zeckgodel/text_format.hpp"
#include "zeckgodel/zeckendorf.hpp"

namespace zg {
namespace {

using Json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Json nat_json(const Nat& n) {
  if (auto v = to_u64(n)) return *v;
  return n.get_str();
}

Nat nat_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Nat(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_string()) return parse_nat(j.get<std::string>());
  throw Error(ErrorKind::kInvalidArgument, "expected a natural number, got " + j.dump());
}

Json support_json(const ZeckSupport& s) {
  Json arr = Json::array();
  for (const Nat& e : s.indices()) arr.push_back(nat_json(e));
  return arr;
}

std::vector<Nat> nat_list(std::string_view text) {
  const std::string body = trim(text);
  Json doc;
  try {
    doc = Json::parse(body.front() == '[' ? body : "[" + body + "]");
  } catch (const Json::exception&) {
    throw Error(ErrorKind::kInvalidArgument, "expected a list of naturals such as [0,0], got '" + body + "'");
  }
  std::vector<Nat> out;
  for (const Json& j : doc) out.push_back(nat_from_json(j));
  return out;
}

ZeckSupport parse_support(std::string_view text) {
  std::string body = trim(text);
  if (body.rfind("Z[", 0) == 0) body = body.substr(1);
  if (body.empty()) throw Error(ErrorKind::kInvalidArgument, "empty support literal");
  return ZeckSupport::from_indices(nat_list(body));
}

// Decimal, 0x-hex, Z[e1,...] or a {"support": [...]} object as printed by
// this tool.
SeqCode parse_code(std::string_view text) {
  const std::string body = trim(text);
  if (body.rfind("Z[", 0) == 0) return SeqCode::from_support(parse_support(body));
  if (!body.empty() && body.front() == '{') {
    Json doc;
    try {
      doc = Json::parse(body);
    } catch (const Json::exception& e) {
      throw Error(ErrorKind::kInvalidArgument, std::string("bad code object: ") + e.what());
    }
    if (!doc.contains("support")) throw Error(ErrorKind::kInvalidArgument, "code object lacks \"support\"");
    std::vector<Nat> indices;
    for (const Json& j : doc["support"]) indices.push_back(nat_from_json(j));
    return SeqCode::from_support(ZeckSupport::from_indices(std::move(indices)));
  }
  return SeqCode::from_number(parse_nat(body));
}

bool looks_like_code(std::string_view text) {
  const std::string body = trim(text);
  if (body.empty() || body == "0") return false;
  return std::isdigit(static_cast<unsigned char>(body.front())) || body.front() == '{' ||
         body.rfind("Z[", 0) == 0;
}

struct Context {
  bool json = false;
  CodecOptions codec;
  std::size_t bound = 8;
  Alphabet alphabet = default_alphabet();
  TheoryConfig theory;
  std::ostream* out = nullptr;

  Json code(const SeqCode& c) const {
    Json j;
    j["support"] = support_json(c.support());
    if (is_materializable(c, codec)) j["number"] = to_number(c, codec).get_str();
    else j["bits_estimate"] = nat_json(bits_estimate(c));
    return j;
  }

  Json code_summary(const SeqCode& c) const {
    Json j = code(c);
    j["length"] = c.support().size();
    if (!c.support().empty()) j["max_index"] = nat_json(c.support().max_index());
    if (!j.contains("bits_estimate")) j["bits_estimate"] = nat_json(bits_estimate(c));
    return j;
  }

  Formula formula(std::string_view arg) const {
    if (looks_like_code(arg)) return decode_formula(parse_code(arg), alphabet);
    return read_formula(arg);
  }

  Term term(std::string_view arg) const {
    if (looks_like_code(arg)) return decode_term(parse_code(arg), alphabet);
    return read_term(arg);
  }

  SeqCode formula_code(std::string_view arg) const {
    if (looks_like_code(arg)) return parse_code(arg);
    return encode_syntax(read_formula(arg), alphabet);
  }

  // JSON mode: the whole object. Text mode: `text` if given, else the
  // object compactly.
  void emit(const Json& j, const std::string& text = {}) const {
    if (json || text.empty()) *out << j.dump() << '\n';
    else *out << text << '\n';
  }
};

std::uint64_t parse_u64(const std::string& s) {
  auto v = to_u64(parse_nat(s));
  if (!v) throw Error(ErrorKind::kInvalidArgument, "value does not fit in 64 bits: " + s);
  return *v;
}

std::uint64_t parse_var(const std::string& s) {
  const std::string body = trim(s);
  return parse_u64(!body.empty() && body.front() == 'v' ? body.substr(1) : body);
}

Json justification_json(const Justification& j, const TheoryConfig& theory) {
  Json out;
  switch (j.kind) {
    case Justification::Kind::kSchema:
      out["rule"] = "axiom";
      out["schema"] = std::string(schema_name(j.schema));
      break;
    case Justification::Kind::kExtraAxiom:
      out["rule"] = "axiom";
      out["extra_axiom"] = to_text(theory.extra_axioms[j.axiom]);
      break;
    case Justification::Kind::kModusPonens:
      out["rule"] = "mp";
      out["premises"] = {j.minor + 1, j.major + 1};
      break;
    case Justification::Kind::kGeneralization:
      out["rule"] = "gen";
      out["premise"] = j.minor + 1;
      out["var"] = "v" + std::to_string(j.var);
      break;
  }
  return out;
}

std::string justification_text(const Json& j) {
  std::string rule = j["rule"].get<std::string>();
  if (j.contains("schema")) return "axiom " + j["schema"].get<std::string>();
  if (j.contains("extra_axiom")) return "axiom (extra)";
  if (rule == "mp") return "mp " + j["premises"][0].dump() + "," + j["premises"][1].dump();
  return "gen " + j["premise"].dump() + " " + j["var"].get<std::string>();
}

std::vector<Formula> read_proof_file(const std::string& content) {
  std::vector<Formula> steps;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    steps.push_back(read_formula(body));
  }
  return steps;
}

void report_proof(const Context& ctx, const std::vector<Formula>& steps) {
  auto just = annotate(steps, ctx.theory);
  Json j;
  j["valid"] = !steps.empty() && just.has_value();
  Json arr = Json::array();
  std::string text = j["valid"].get<bool>() ? "valid" : "invalid";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Json step;
    step["formula"] = to_text(steps[i]);
    if (just) step["justification"] = justification_json((*just)[i], ctx.theory);
    if (just) text += "\n" + std::to_string(i + 1) + ". " + step["formula"].get<std::string>() + "  [" +
                      justification_text(step["justification"]) + "]";
    arr.push_back(step);
  }
  j["steps"] = arr;
  ctx.emit(j, text);
}

Json fixed_point_json(const Context& ctx, const FixedPoint& fp, const DiagOptions& options) {
  Json j;
  j["psi"] = ctx.code_summary(fp.psi);
  j["m"] = ctx.code_summary(fp.m);
  j["m_bits"] = bit_length(to_number(fp.m, options.codec));
  j["identity_holds"] = fp.psi == diag(fp.m, ctx.alphabet, options);
  return j;
}

std::string fixed_point_text(const Json& j) {
  auto line = [](const std::string& name, const Json& c) {
    std::string s = name + ": " + std::to_string(c["length"].get<std::size_t>()) + " symbols, max index " +
                    c["max_index"].dump() + ", ~" + c["bits_estimate"].dump() + " bits\n  Z[";
    for (std::size_t i = 0; i < c["support"].size(); ++i) {
      if (i) s += ',';
      const Json& e = c["support"][i];
      s += e.is_string() ? e.get<std::string>() : e.dump();
    }
    return s + "]";
  };
  return line("psi", j["psi"]) + "\n" + line("m", j["m"]) + "\npsi == diag(m): " +
         (j["identity_holds"].get<bool>() ? "true" : "false");
}

Json size_report_json(const SizeReport& r) { return Json::parse(r.to_json()); }

std::string size_report_text(const SizeReport& r, const std::string& sentence) {
  std::ostringstream s;
  s << "sentence        " << sentence << '\n'
    << "symbols         " << r.sequence_length << '\n'
    << "zeck bits       " << r.zeck_bits << " (max index " << r.zeck_max_index.get_str() << ")\n"
    << "prime bits      " << r.prime_bits << '\n'
    << "encode   zeck   " << r.zeck_encode.count() << " ns, prime " << r.prime_encode.count() << " ns\n"
    << "subst    zeck   " << r.zeck_substitute.count() << " ns, prime " << r.prime_substitute.count() << " ns";
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeckendorf Gödel coding toolkit", "zgodel"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string alphabet_path;
  std::string theory_path;
  std::string format = "text";
  std::uint64_t threshold = CodecOptions{}.materialize_max_index;
  std::size_t bound = 8;
  app.add_option("--alphabet", alphabet_path, "alphabet JSON file")->check(CLI::ExistingFile);
  app.add_option("--theory", theory_path, "theory JSON file")->check(CLI::ExistingFile);
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threshold", threshold, "largest Fibonacci index to materialise as a number");
  app.add_option("--bound", bound, "proof search step bound");

  // One string per slot: a vector option would split "[0,0]" into elements.
  std::vector<std::string> pos(3);
  auto positional = [&pos](CLI::App* sub, std::initializer_list<const char*> names) {
    std::size_t i = 0;
    for (const char* name : names) sub->add_option(name, pos[i++], name)->required();
  };

  auto* fib_cmd = app.add_subcommand("fib", "F_e (F_1 = 1, F_2 = 2)");
  positional(fib_cmd, {"e"});
  auto* pair_cmd = app.add_subcommand("pair", "Cantor pairing <x,y>");
  positional(pair_cmd, {"x", "y"});
  auto* unpair_cmd = app.add_subcommand("unpair", "inverse Cantor pairing");
  positional(unpair_cmd, {"p"});

  auto* zeck_cmd = app.add_subcommand("zeck", "Zeckendorf support");
  zeck_cmd->require_subcommand(1);
  auto* zeck_encode = zeck_cmd->add_subcommand("encode", "support -> number");
  positional(zeck_encode, {"support"});
  auto* zeck_decode = zeck_cmd->add_subcommand("decode", "number -> support");
  positional(zeck_decode, {"n"});

  auto* seq_cmd = app.add_subcommand("seq", "sequence codes");
  seq_cmd->require_subcommand(1);
  auto* seq_encode_cmd = seq_cmd->add_subcommand("encode", "[a1,...] -> code");
  positional(seq_encode_cmd, {"sequence"});
  auto* seq_decode_cmd = seq_cmd->add_subcommand("decode", "code -> [a1,...]");
  positional(seq_decode_cmd, {"code"});
  auto* seq_at_cmd = seq_cmd->add_subcommand("at", "i-th element (1-based)");
  positional(seq_at_cmd, {"code", "index"});
  auto* seq_concat_cmd = seq_cmd->add_subcommand("concat", "concatenate two codes");
  positional(seq_concat_cmd, {"left", "right"});

  auto* syntax_cmd = app.add_subcommand("syntax", "terms and formulas");
  syntax_cmd->require_subcommand(1);
  auto* syntax_parse = syntax_cmd->add_subcommand("parse", "prefix text -> symbols");
  positional(syntax_parse, {"text"});
  auto* syntax_encode = syntax_cmd->add_subcommand("encode", "prefix text -> code");
  positional(syntax_encode, {"text"});
  auto* syntax_decode = syntax_cmd->add_subcommand("decode", "code -> prefix text");
  positional(syntax_decode, {"code"});
  auto* syntax_check = syntax_cmd->add_subcommand("check", "is the code a wff / term code");
  positional(syntax_check, {"code"});

  std::string sub_var = "v0";
  bool sub_free_only = false;
  auto* sub_cmd = app.add_subcommand("sub", "substitute a term for a variable");
  positional(sub_cmd, {"formula", "term"});
  sub_cmd->add_option("--var", sub_var, "target variable");
  sub_cmd->add_flag("--free", sub_free_only, "replace free occurrences only");

  auto* diag_cmd = app.add_subcommand("diag", "substitute a formula's own numeral for v0");
  positional(diag_cmd, {"formula"});
  auto* fixpoint_cmd = app.add_subcommand("fixpoint", "fixed point of a formula in v0");
  positional(fixpoint_cmd, {"formula"});

  auto* proof_cmd = app.add_subcommand("proof", "proof codes");
  proof_cmd->require_subcommand(1);
  auto* proof_check = proof_cmd->add_subcommand("check", "check a proof code or file");
  positional(proof_check, {"proof"});

  auto* prov_cmd = app.add_subcommand("prov", "bounded proof search");
  positional(prov_cmd, {"formula"});
  auto* godel_cmd = app.add_subcommand("godel", "Gödel sentence for not Prov(x)");

  auto* oracle_cmd = app.add_subcommand("oracle", "F_n + 2F_m = F_k");
  oracle_cmd->require_subcommand(1);
  auto* oracle_check_cmd = oracle_cmd->add_subcommand("check", "check n m k");
  positional(oracle_check_cmd, {"n", "m", "k"});
  auto* oracle_solve_cmd = oracle_cmd->add_subcommand("solve", "find k for n m");
  positional(oracle_solve_cmd, {"n", "m"});
  auto* oracle_mp_cmd = oracle_cmd->add_subcommand("mp", "witness (n-1, n, n+2)");
  positional(oracle_mp_cmd, {"n"});

  std::size_t compare_symbols = 50;
  std::uint64_t compare_seed = 1;
  std::string compare_json;
  std::string compare_formula;
  auto* compare_cmd = app.add_subcommand("compare", "Zeckendorf vs prime-exponent code sizes");
  compare_cmd->add_option("--symbols", compare_symbols, "length of a random sentence");
  compare_cmd->add_option("--seed", compare_seed, "seed for the random sentence");
  compare_cmd->add_option("--json", compare_json, "also write the report to this file");
  compare_cmd->add_option("--formula", compare_formula, "benchmark this sentence instead");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context ctx;
  ctx.json = format == "json";
  ctx.codec.materialize_max_index = threshold;
  ctx.bound = bound;
  ctx.out = &out;

  try {
    if (!alphabet_path.empty()) ctx.alphabet = Alphabet::load(alphabet_path);
    if (!theory_path.empty()) ctx.theory = TheoryConfig::load(theory_path);

    if (fib_cmd->parsed()) {
      const Nat v = fib(parse_u64(pos[0]));
      ctx.emit(Json{{"e", parse_u64(pos[0])}, {"value", v.get_str()}}, v.get_str());
    } else if (pair_cmd->parsed()) {
      const Nat v = cantor_pair(parse_nat(pos[0]), parse_nat(pos[1]));
      ctx.emit(Json{{"value", v.get_str()}}, v.get_str());
    } else if (unpair_cmd->parsed()) {
      auto [x, y] = cantor_unpair(parse_nat(pos[0]));
      ctx.emit(Json{{"x", x.get_str()}, {"y", y.get_str()}}, x.get_str() + " " + y.get_str());
    } else if (zeck_encode->parsed()) {
      const std::string arg = trim(pos[0]);
      const ZeckSupport s = !arg.empty() && arg.front() == '{' ? parse_code(arg).support() : parse_support(arg);
      const Nat v = z_encode(s);
      ctx.emit(Json{{"number", v.get_str()}}, v.get_str());
    } else if (zeck_decode->parsed()) {
      const ZeckSupport s = z_decode(parse_nat(pos[0]));
      ctx.emit(Json{{"support", support_json(s)}}, to_support_literal(s));
    } else if (seq_encode_cmd->parsed()) {
      ctx.emit(ctx.code(seq_encode(nat_list(pos[0]))));
    } else if (seq_decode_cmd->parsed()) {
      Json arr = Json::array();
      for (const Nat& a : seq_decode(parse_code(pos[0]))) arr.push_back(nat_json(a));
      ctx.emit(Json{{"sequence", arr}}, arr.dump());
    } else if (seq_at_cmd->parsed()) {
      const Nat v = symbol_at(parse_code(pos[0]), parse_nat(pos[1]));
      ctx.emit(Json{{"value", nat_json(v)}}, v.get_str());
    } else if (seq_concat_cmd->parsed()) {
      ctx.emit(ctx.code(concat(parse_code(pos[0]), parse_code(pos[1]))));
    } else if (syntax_parse->parsed()) {
      const Syntax s = read_syntax(pos[0]);
      Json codes = Json::array();
      for (const Nat& c : to_codes(flatten(s), ctx.alphabet)) codes.push_back(nat_json(c));
      Json j{{"category", category_of(s) == Category::kTerm ? "term" : "formula"},
             {"text", to_text(s)},
             {"symbols", codes}};
      ctx.emit(j, to_text(s));
    } else if (syntax_encode->parsed()) {
      ctx.emit(ctx.code(encode_syntax(read_syntax(pos[0]), ctx.alphabet)));
    } else if (syntax_decode->parsed()) {
      const Syntax s = decode_syntax(parse_code(pos[0]), ctx.alphabet);
      ctx.emit(Json{{"category", category_of(s) == Category::kTerm ? "term" : "formula"}, {"text", to_text(s)}},
               to_text(s));
    } else if (syntax_check->parsed()) {
      const SeqCode c = parse_code(pos[0]);
      const bool wff = is_wff_code(c, ctx.alphabet);
      const bool term = is_term_code(c, ctx.alphabet);
      ctx.emit(Json{{"wff", wff}, {"term", term}}, wff ? "wff" : term ? "term" : "neither");
    } else if (sub_cmd->parsed()) {
      SubRequest r;
      r.formula_code = ctx.formula_code(pos[0]);
      r.replacement_code = looks_like_code(pos[1]) ? parse_code(pos[1])
                                                   : encode_syntax(read_term(pos[1]), ctx.alphabet);
      r.target_var = parse_var(sub_var);
      const SeqCode result = sub_free_only ? sub_free(r, ctx.alphabet) : sub_z(r, ctx.alphabet);
      Json j = ctx.code(result);
      j["text"] = to_text(decode_formula(result, ctx.alphabet));
      ctx.emit(j);
    } else if (diag_cmd->parsed()) {
      DiagOptions opts;
      opts.codec = ctx.codec;
      ctx.emit(ctx.code_summary(diag(ctx.formula_code(pos[0]), ctx.alphabet, opts)));
    } else if (fixpoint_cmd->parsed()) {
      DiagOptions opts;
      opts.codec = ctx.codec;
      const FixedPoint fp = fixed_point(ctx.formula_code(pos[0]), ctx.alphabet, opts);
      const Json j = fixed_point_json(ctx, fp, opts);
      ctx.emit(j, fixed_point_text(j));
    } else if (proof_check->parsed()) {
      std::string source = pos[0];
      if (!looks_like_code(source) && std::filesystem::is_regular_file(source)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        source = buf.str();
      }
      std::vector<Formula> steps;
      if (looks_like_code(source)) {
        steps = decode_proof(parse_code(source), ctx.alphabet, ctx.codec);
      } else {
        steps = read_proof_file(source);
      }
      report_proof(ctx, steps);
    } else if (prov_cmd->parsed()) {
      const Formula target = ctx.formula(pos[0]);
      auto proof = search_proof(target, ctx.bound, ctx.theory, ctx.alphabet);
      Json j;
      j["found"] = proof.has_value();
      j["bound"] = ctx.bound;
      std::string text = proof ? "found" : "no proof within " + std::to_string(ctx.bound) + " steps";
      if (proof) {
        Json steps = Json::array();
        for (std::size_t i = 0; i < proof->size(); ++i) {
          steps.push_back(to_text((*proof)[i]));
          text += "\n" + std::to_string(i + 1) + ". " + steps.back().get<std::string>();
        }
        j["steps"] = steps;
        j["code"] = ctx.code_summary(encode_proof(*proof, ctx.alphabet, ctx.codec));
      }
      ctx.emit(j, text);
    } else if (godel_cmd->parsed()) {
      DiagOptions opts;
      opts.codec = ctx.codec;
      const FixedPoint fp = godel_sentence(ctx.theory, ctx.alphabet, opts);
      Json j = fixed_point_json(ctx, fp, opts);
      j["theta"] = to_text(decode_formula(fp.m, ctx.alphabet));
      ctx.emit(j, "theta: " + j["theta"].get<std::string>() + "\n" + fixed_point_text(j));
    } else if (oracle_check_cmd->parsed()) {
      const bool ok = oracle_check({parse_u64(pos[0]), parse_u64(pos[1]), parse_u64(pos[2])});
      ctx.emit(Json{{"holds", ok}}, ok ? "true" : "false");
    } else if (oracle_solve_cmd->parsed()) {
      auto k = oracle_solve(parse_u64(pos[0]), parse_u64(pos[1]));
      ctx.emit(Json{{"k", k ? Json(*k) : Json(nullptr)}}, k ? std::to_string(*k) : "none");
    } else if (oracle_mp_cmd->parsed()) {
      const OracleTriple t = mp_witness(parse_u64(pos[0]));
      const bool ok = oracle_check(t);
      ctx.emit(Json{{"n", t.n}, {"m", t.m}, {"k", t.k}, {"holds", ok}},
               std::to_string(t.n) + " " + std::to_string(t.m) + " " + std::to_string(t.k) +
                   (ok ? " true" : " false"));
    } else if (compare_cmd->parsed()) {
      const Formula f = compare_formula.empty() ? random_sentence(compare_symbols, compare_seed)
                                                : read_formula(compare_formula);
      const Sequence seq = to_codes(flatten(f), ctx.alphabet);
      const SizeReport report = compare_sizes(seq);
      if (!compare_json.empty()) {
        std::ofstream file(compare_json);
        if (!file) throw Error(ErrorKind::kInvalidArgument, "cannot write " + compare_json);
        file << report.to_json() << '\n';
      }
      Json j = size_report_json(report);
      j["sentence"] = to_text(f);
      ctx.emit(j, size_report_text(report, to_text(f)));
    }
  } catch (const Error& e) {
    Json j{{"code", std::string(error_code_name(e.kind()))}, {"message", e.what()}};
    if (e.position()) j["position"] = *e.position();
    err << j.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << Json{{"code", "internal_error"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace zg
