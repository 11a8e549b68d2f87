#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace dd2::detail {

/// Runs fn(0), fn(1), ... and returns the successful result with the lowest
/// index, so the answer does not depend on `threads`. Tasks above an index
/// that already succeeded are skipped.
template <class Result, class Fn>
std::optional<Result> first_success(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (auto r = fn(i)) return r;
    }
    return std::nullopt;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best_index{count};
  std::mutex guard;
  std::optional<Result> best;

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best_index.load()) return;
      auto r = fn(i);
      if (!r) continue;
      std::lock_guard lock(guard);
      if (i < best_index.load()) {
        best_index.store(i);
        best = std::move(r);
      }
    }
  };

  std::vector<std::jthread> pool;
  const unsigned workers = std::min<std::size_t>(threads, count);
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  pool.clear();
  return best;
}

/// C(n, k), saturating at the maximum uint64.
inline std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i is exact; split to avoid overflowing the product.
    const std::uint64_t factor = n - k + i;
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t a = r / g;
    const std::uint64_t b = factor / (i / g);
    if (a > cap / b) return cap;
    r = a * b;
  }
  return r;
}

}  // namespace dd2::detail
