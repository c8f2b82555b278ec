#include "zeckgodel/primecode.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "json.hpp"
#include "zeckgodel/error.hpp"
#include "zeckgodel/substitution.hpp"

namespace zg {

PrimeTable::PrimeTable(std::size_t count) {
  if (count == 0) return;
  // p_n < n (ln n + ln ln n) for n >= 6.
  const double n = static_cast<double>(std::max<std::size_t>(count, 6));
  const auto limit = static_cast<std::size_t>(n * (std::log(n) + std::log(std::log(n)))) + 1;
  std::vector<bool> composite(limit + 1, false);
  primes_.reserve(count);
  for (std::size_t i = 2; i <= limit && primes_.size() < count; ++i) {
    if (composite[i]) continue;
    primes_.push_back(i);
    for (std::size_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
}

const PrimeTable& default_prime_table() {
  static const PrimeTable table;
  return table;
}

Nat code_p(const Sequence& seq, const PrimeTable& table) {
  if (seq.size() > table.size()) {
    throw Error(ErrorKind::kInvalidArgument, "sequence of length " + std::to_string(seq.size()) +
                                                 " exceeds the prime table (" + std::to_string(table.size()) +
                                                 " primes)");
  }
  Nat product = 1;
  Nat power;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const Nat& a = seq[i];
    if (a == 0) {
      throw Error(ErrorKind::kZeroSymbol, "symbol value 0 not representable under prime coding (position " +
                                              std::to_string(i + 1) + ")");
    }
    auto e = to_u64(a);
    if (!e) throw Error(ErrorKind::kCodeTooLarge, "prime exponent too large: " + a.get_str());
    mpz_ui_pow_ui(power.get_mpz_t(), table.prime(i), *e);
    product *= power;
  }
  return product;
}

Sequence decode_p(const Nat& n, const PrimeTable& table) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "prime code must be >= 1");
  Sequence out;
  Nat rest = n;
  const Nat one = 1;
  for (std::size_t i = 0; rest != one; ++i) {
    if (i >= table.size()) {
      throw Error(ErrorKind::kFactorExceedsTable,
                  "factor exceeds table: cofactor left after " + std::to_string(table.size()) + " primes");
    }
    const Nat p(static_cast<unsigned long>(table.prime(i)));
    const mp_bitcnt_t e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    if (e == 0) {
      throw Error(ErrorKind::kPrimeSupportGap,
                  "gap in prime support: p_" + std::to_string(i + 1) + " = " + p.get_str() + " does not divide");
    }
    out.emplace_back(static_cast<unsigned long>(e));
  }
  return out;
}

Nat sub_prime(const Sequence& formula_seq, const Sequence& term_seq, const Nat& target, const PrimeTable& table) {
  return code_p(splice(formula_seq, target, term_seq), table);
}

std::string SizeReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["sequence_length"] = sequence_length;
  doc["zeck_bits"] = zeck_bits;
  doc["prime_bits"] = prime_bits;
  if (auto e = to_u64(zeck_max_index)) doc["zeck_max_index"] = *e;
  else doc["zeck_max_index"] = zeck_max_index.get_str();
  doc["timings_ns"] = {
      {"zeck_encode", zeck_encode.count()},
      {"prime_encode", prime_encode.count()},
      {"zeck_substitute", zeck_substitute.count()},
      {"prime_substitute", prime_substitute.count()},
  };
  return doc.dump();
}

namespace {

std::chrono::nanoseconds median_time(std::size_t runs, const std::function<void()>& body) {
  std::vector<std::chrono::nanoseconds> samples;
  body();  // warm caches
  for (std::size_t r = 0; r < std::max<std::size_t>(runs, 1); ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    samples.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start));
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

}  // namespace

SizeReport compare_sizes(const Sequence& seq, const CompareOptions& options) {
  SizeReport report;
  report.sequence_length = seq.size();
  const SeqCode zeck = seq_encode(seq);
  const Nat zeck_value = to_number(zeck);
  const Nat prime_value = code_p(seq);
  report.zeck_bits = bit_length(zeck_value);
  report.prime_bits = bit_length(prime_value);
  report.zeck_max_index = zeck.support().empty() ? Nat(0) : zeck.support().max_index();

  Nat sink;
  report.zeck_encode = median_time(options.runs, [&] { sink = to_number(seq_encode(seq)); });
  report.prime_encode = median_time(options.runs, [&] { sink = code_p(seq); });
  report.zeck_substitute = median_time(options.runs, [&] {
    const Sequence items = seq_decode(SeqCode::from_number(zeck_value));
    sink = to_number(seq_encode(splice(items, options.probe_target, options.probe_replacement)));
  });
  report.prime_substitute = median_time(options.runs, [&] {
    const Sequence items = decode_p(prime_value);
    sink = code_p(splice(items, options.probe_target, options.probe_replacement));
  });
  return report;
}

namespace {

class FormulaGenerator {
 public:
  FormulaGenerator(std::uint64_t seed, std::uint64_t var_count, std::uint64_t min_bound_var, bool closed)
      : rng_(seed), var_count_(var_count), min_bound_var_(min_bound_var), closed_(closed) {}

  Formula formula(std::size_t len) {
    // Minimum lengths: Prov 2, = 3, ¬ 3, quantifier 4, binary connective 5.
    std::vector<int> options;
    if (len == 2) options = {0};
    if (len >= 3) options = {0, 1, 2};
    if (len >= 4 && min_bound_var_ < var_count_) options.push_back(3);
    if (len >= 5) options.push_back(4);
    switch (options[pick(options.size())]) {
      case 0: return Formula::prov(term(len - 1));
      case 1: {
        const std::size_t a = 1 + pick(len - 2);
        return Formula::eq(term(a), term(len - 1 - a));
      }
      case 2: return Formula::neg(formula(len - 1));
      case 3: {
        const std::uint64_t v = min_bound_var_ + pick(var_count_ - min_bound_var_);
        scope_.push_back(v);
        Formula body = formula(len - 2);
        scope_.pop_back();
        return pick(2) ? Formula::forall(v, std::move(body)) : Formula::exists(v, std::move(body));
      }
      default: {
        const std::size_t a = 2 + pick(len - 4);
        Formula l = formula(a);
        Formula r = formula(len - 1 - a);
        switch (pick(3)) {
          case 0: return Formula::imp(std::move(l), std::move(r));
          case 1: return Formula::conj(std::move(l), std::move(r));
          default: return Formula::disj(std::move(l), std::move(r));
        }
      }
    }
  }

  Term term(std::size_t len) {
    if (len == 1 && closed_) {
      const std::size_t i = pick(scope_.size() + 1);
      return i == 0 ? Term::zero() : Term::var(scope_[i - 1]);
    }
    if (len == 1) return pick(var_count_ + 1) == 0 ? Term::zero() : Term::var(pick(var_count_));
    if (len == 2 || pick(2) == 0) {
      return pick(2) ? Term::succ(term(len - 1)) : Term::diag(term(len - 1));
    }
    const std::size_t a = 1 + pick(len - 2);
    Term l = term(a);
    Term r = term(len - 1 - a);
    return pick(2) ? Term::plus(std::move(l), std::move(r)) : Term::times(std::move(l), std::move(r));
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::mt19937_64 rng_;
  std::uint64_t var_count_;
  std::uint64_t min_bound_var_;
  bool closed_;
  std::vector<std::uint64_t> scope_;  // variables bound at the current position
};

}  // namespace

Formula random_formula(std::size_t symbols, std::uint64_t seed, std::uint64_t var_count,
                       std::uint64_t min_bound_var) {
  if (symbols < 2) throw Error(ErrorKind::kInvalidArgument, "a formula needs at least 2 symbols");
  if (var_count == 0) throw Error(ErrorKind::kInvalidArgument, "need at least one variable");
  FormulaGenerator gen(seed, var_count, min_bound_var, false);
  return gen.formula(symbols);
}

Formula random_sentence(std::size_t symbols, std::uint64_t seed, std::uint64_t var_count) {
  if (symbols < 2) throw Error(ErrorKind::kInvalidArgument, "a sentence needs at least 2 symbols");
  if (var_count == 0) throw Error(ErrorKind::kInvalidArgument, "need at least one variable");
  FormulaGenerator gen(seed, var_count, 0, true);
  return gen.formula(symbols);
}

}  // namespace zg
