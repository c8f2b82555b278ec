#include "zeckgodel/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "fib_table.hpp"
#include "zeckgodel/error.hpp"

namespace zg {
namespace {

void require_natural(const Nat& n, const char* what) {
  if (sgn(n) < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string(what) + ": negative value is not a natural");
  }
}

// Append-only table of F_1..F_size. Readers share the lock; growth takes it
// exclusively. std::deque never moves existing elements on push_back, so
// handed-out references survive later growth.
class FibTable {
 public:
  FibTable() {
    values_.emplace_back(1);  // F_1
    values_.emplace_back(2);  // F_2
  }

  const Nat& at(FibIndex e) {
    {
      std::shared_lock lock(mutex_);
      if (e <= values_.size()) return values_[e - 1];
    }
    std::unique_lock lock(mutex_);
    const FibIndex target =
        std::min<FibIndex>(kFibMemoLimit, std::max<FibIndex>(e, 2 * values_.size()));
    while (values_.size() < target) {
      const std::size_t n = values_.size();
      values_.push_back(values_[n - 1] + values_[n - 2]);
    }
    return values_[e - 1];
  }

  // Largest memoised e with F_e <= n, provided F_{kFibMemoLimit} > n.
  std::optional<FibIndex> search(const Nat& n) {
    // Grow until the table's last value exceeds n or the cap is reached.
    for (;;) {
      {
        std::shared_lock lock(mutex_);
        if (values_.back() > n) {
          auto it = std::upper_bound(values_.begin(), values_.end(), n);
          return static_cast<FibIndex>(it - values_.begin());
        }
        if (values_.size() >= kFibMemoLimit) return std::nullopt;
      }
      FibIndex size;
      {
        std::shared_lock lock(mutex_);
        size = values_.size();
      }
      at(std::min<FibIndex>(kFibMemoLimit, 2 * size));
    }
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Nat> values_;
};

FibTable& table() {
  static FibTable instance;
  return instance;
}

}  // namespace

namespace detail {

const Nat& fib_memo(FibIndex e) { return table().at(e); }

std::pair<Nat, Nat> classic_fib_pair(std::uint64_t k) {
  //   G_{2j}   = G_j (2 G_{j+1} - G_j)
  //   G_{2j+1} = G_j^2 + G_{j+1}^2
  Nat a = 0;  // G_j
  Nat b = 1;  // G_{j+1}
  if (k == 0) return {std::move(a), std::move(b)};
  Nat c, d;
  for (int bit = 63 - __builtin_clzll(k); bit >= 0; --bit) {
    c = a * (2 * b - a);
    d = a * a + b * b;
    if ((k >> bit) & 1) {
      a = d;
      b = c + d;
    } else {
      a = c;
      b = d;
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace detail

std::pair<Nat, Nat> fib_pair_doubling(FibIndex e) {
  if (e == 0) {
    throw Error(ErrorKind::kInvalidArgument, "fib: index 0 is outside F_1 = 1, F_2 = 2");
  }
  return detail::classic_fib_pair(e + 1);
}

Nat fib(FibIndex e) {
  if (e == 0) {
    throw Error(ErrorKind::kInvalidArgument, "fib: index 0 is outside F_1 = 1, F_2 = 2");
  }
  if (e <= kFibMemoLimit) return detail::fib_memo(e);
  return fib_pair_doubling(e).first;
}

FibIndex max_fib_index_le(const Nat& n) {
  require_natural(n, "max_fib_index_le");
  if (n == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "max_fib_index_le: no positive Fibonacci number is <= 0");
  }
  if (auto e = table().search(n)) return *e;

  // F_e ~ phi^(e+1) / sqrt(5), so e ~ (bits + 0.16) / log2(phi) - 1.
  // 1440420 / 10^6 approximates 1 / log2(phi); the loops below make it exact.
  FibIndex e = static_cast<FibIndex>(bit_length(n)) * 1440420 / 1000000;
  e = std::max<FibIndex>(e, 1);
  auto [lo, hi] = fib_pair_doubling(e);  // F_e, F_{e+1}
  while (lo > n) {
    Nat prev = hi - lo;
    hi = std::move(lo);
    lo = std::move(prev);
    --e;
  }
  while (hi <= n) {
    Nat next = lo + hi;
    lo = std::move(hi);
    hi = std::move(next);
    ++e;
  }
  return e;
}

Nat cantor_pair(const Nat& x, const Nat& y) {
  require_natural(x, "cantor_pair");
  require_natural(y, "cantor_pair");
  Nat s = x + y;
  Nat t = s * (s + 1);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
  return t + x;
}

Nat isqrt(const Nat& n) {
  require_natural(n, "isqrt");
  Nat r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& p) {
  require_natural(p, "cantor_unpair");
  // w = floor((sqrt(8p + 1) - 1) / 2) is the diagonal x + y.
  Nat w = isqrt(8 * p + 1) - 1;
  mpz_fdiv_q_2exp(w.get_mpz_t(), w.get_mpz_t(), 1);
  Nat t = w * (w + 1);
  mpz_fdiv_q_2exp(t.get_mpz_t(), t.get_mpz_t(), 1);
  Nat x = p - t;
  Nat y = w - x;
  return {std::move(x), std::move(y)};
}

Nat zeck_length_bound(const Nat& n) {
  require_natural(n, "zeck_length_bound");
  if (n == 0) return 0;
  return Nat(static_cast<unsigned long>(max_fib_index_le(n)));
}

std::size_t bit_length(const Nat& n) {
  if (n == 0) return 0;
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::optional<std::uint64_t> to_u64(const Nat& n) {
  if (sgn(n) < 0 || bit_length(n) > 64) return std::nullopt;
  std::uint64_t value = 0;
  mpz_export(&value, nullptr, -1, sizeof(value), 0, 0, n.get_mpz_t());
  return value;
}

Nat parse_nat(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  const bool ok = !digits.empty() && std::all_of(digits.begin(), digits.end(), [&](char ch) {
    const auto u = static_cast<unsigned char>(ch);
    return base == 16 ? std::isxdigit(u) != 0 : std::isdigit(u) != 0;
  });
  if (!ok) {
    throw Error(ErrorKind::kInvalidArgument,
                "not a decimal or 0x-hexadecimal natural: '" + std::string(text) + "'");
  }
  Nat n;
  n.set_str(std::string(digits), base);
  return n;
}

std::string to_decimal(const Nat& n) { return n.get_str(10); }

}  // namespace zg
