#include "zeckgodel/zeckendorf.hpp"

#include <algorithm>

#include "fib_table.hpp"
#include "zeckgodel/error.hpp"

namespace zg {
namespace {

// (sum G_{t - base}, sum G_{t - base + 1}) over ascending classical
// subscripts t >= base, split in halves and recombined with
//   G_{d+t} = G_d G_{t+1} + G_{d-1} G_t.
// Costs O(M(n) log k) instead of one doubling chain per term.
std::pair<Nat, Nat> fib_sum(std::span<const std::uint64_t> ts, std::uint64_t base) {
  if (ts.size() == 1) {
    const std::uint64_t t = ts.front() - base;
    if (t >= 2 && t <= kFibMemoLimit) {
      return {detail::fib_memo(t - 1), detail::fib_memo(t)};
    }
    return detail::classic_fib_pair(t);
  }
  const std::size_t mid = ts.size() / 2;
  auto [u_lo, v_lo] = fib_sum(ts.first(mid), base);
  auto [u_hi, v_hi] = fib_sum(ts.subspan(mid), ts[mid]);
  const std::uint64_t d = ts[mid] - base;  // >= 1: subscripts are distinct
  auto [g_dm1, g_d] = detail::classic_fib_pair(d - 1);
  Nat g_dp1 = g_dm1 + g_d;
  Nat u = u_lo + g_d * v_hi + g_dm1 * u_hi;
  Nat v = v_lo + g_dp1 * v_hi + g_d * u_hi;
  return {std::move(u), std::move(v)};
}

}  // namespace

bool is_valid_support(std::span<const Nat> indices) {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) return false;
    if (i > 0 && indices[i - 1] - indices[i] < 2) return false;
  }
  return true;
}

ZeckSupport ZeckSupport::from_indices(std::vector<Nat> indices) {
  if (!is_valid_support(indices)) {
    throw Error(ErrorKind::kMalformedSupport,
                "support must hold positive, strictly decreasing, non-consecutive indices");
  }
  return ZeckSupport(std::move(indices));
}

Nat z_encode(const ZeckSupport& support) {
  if (support.empty()) return 0;
  std::vector<std::uint64_t> ts;
  ts.reserve(support.size());
  for (auto it = support.indices().rbegin(); it != support.indices().rend(); ++it) {
    auto e = to_u64(*it);
    if (!e || *e == UINT64_MAX) {
      throw Error(ErrorKind::kCodeTooLarge,
                  "z_encode: Fibonacci index " + it->get_str() + " is beyond any materialisable size");
    }
    ts.push_back(*e + 1);  // F_e = G_{e+1}
  }
  if (ts.back() - 1 <= kFibMemoLimit) {
    Nat sum = 0;
    for (std::uint64_t t : ts) sum += detail::fib_memo(t - 1);
    return sum;
  }
  return fib_sum(ts, 0).first;
}

ZeckSupport z_decode(const Nat& n) {
  if (sgn(n) < 0) {
    throw Error(ErrorKind::kInvalidArgument, "z_decode: negative value is not a natural");
  }
  std::vector<Nat> out;
  if (n == 0) return ZeckSupport::from_indices(std::move(out));

  Nat rest = n;
  FibIndex e = max_fib_index_le(rest);
  if (e > kFibMemoLimit) {
    // Walk down from (F_e, F_{e+1}) until the remainder fits the memo table.
    auto [lo, hi] = fib_pair_doubling(e);
    while (rest > 0 && e > kFibMemoLimit) {
      if (lo <= rest) {
        out.emplace_back(static_cast<unsigned long>(e));
        rest -= lo;
      }
      Nat prev = hi - lo;
      hi = std::move(lo);
      lo = std::move(prev);
      --e;
    }
  }
  while (rest > 0) {
    e = max_fib_index_le(rest);
    out.emplace_back(static_cast<unsigned long>(e));
    rest -= detail::fib_memo(e);
  }
  return ZeckSupport::from_indices(std::move(out));
}

std::string to_support_literal(const ZeckSupport& support) {
  std::string s = "Z[";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i) s += ',';
    s += support.indices()[i].get_str();
  }
  s += ']';
  return s;
}

}  // namespace zg
