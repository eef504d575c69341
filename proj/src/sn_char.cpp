#include "wreath/sn_char.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace wreath {

namespace {

// Remove a rim hook of length `len` for every bead that can slide down by
// `len`; the sign is (-1)^(beads jumped over).
template <class Recurse>
std::int64_t mn_step(const Partition& lambda, const CycleType& rho, Recurse&& recurse) {
  if (lambda.size() != rho.size())
    throw std::invalid_argument("mn_value: |lambda| != |rho|");
  if (rho.empty()) return 1;

  const int len = rho[0];
  const CycleType rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int count = lambda.length();
  std::vector<int> beta = beta_set(lambda, count);
  std::vector<bool> occupied(beta.empty() ? 0 : beta.front() + 1, false);
  for (int b : beta) occupied[b] = true;

  std::int64_t total = 0;
  for (int idx = 0; idx < count; ++idx) {
    const int b = beta[idx];
    const int target = b - len;
    if (target < 0 || occupied[target]) continue;
    int jumped = 0;
    for (int x = target + 1; x < b; ++x) jumped += occupied[x];
    std::vector<int> moved = beta;
    moved[idx] = target;
    const std::int64_t sub = recurse(from_beta_set(std::move(moved)), rest);
    total += (jumped % 2 ? -sub : sub);
  }
  return total;
}

std::int64_t mn_plain(const Partition& lambda, const CycleType& rho) {
  return mn_step(lambda, rho, mn_plain);
}

std::mutex cache_mutex;
std::map<std::pair<Partition, CycleType>, std::int64_t> cache;

std::int64_t mn_cached(const Partition& lambda, const CycleType& rho) {
  auto key = std::make_pair(lambda, rho);
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const std::int64_t value = mn_step(lambda, rho, mn_cached);
  std::lock_guard lock(cache_mutex);
  cache.emplace(std::move(key), value);
  return value;
}

}  // namespace

std::int64_t mn_value(const Partition& lambda, const CycleType& rho) {
  return mn_cached(lambda, rho);
}

std::int64_t mn_value_uncached(const Partition& lambda, const CycleType& rho) {
  return mn_plain(lambda, rho);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial: n outside [0, 20]");
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / i;
  return out;
}

std::uint64_t degree(const Partition& lambda) {
  // n!/prod(hooks), interleaved to stay within 64 bits for moderate n.
  std::vector<int> hooks;
  for (const auto& row : hook_lengths(lambda)) hooks.insert(hooks.end(), row.begin(), row.end());
  unsigned __int128 num = 1;
  std::size_t next = 0;
  for (int i = 2; i <= lambda.size(); ++i) {
    num *= static_cast<unsigned>(i);
    while (next < hooks.size() && num % static_cast<unsigned>(hooks[next]) == 0)
      num /= static_cast<unsigned>(hooks[next++]);
  }
  for (; next < hooks.size(); ++next) num /= static_cast<unsigned>(hooks[next]);
  return static_cast<std::uint64_t>(num);
}

std::uint64_t centralizer_order(const CycleType& rho) {
  std::map<int, int> mult;
  for (int part : rho.parts()) ++mult[part];
  std::uint64_t z = 1;
  for (auto [m, a] : mult) {
    for (int i = 0; i < a; ++i) z *= static_cast<std::uint64_t>(m);
    z *= factorial(a);
  }
  return z;
}

IntMatrix character_table_sn(int k) {
  if (k < 1 || k > kMaxCharacterTableSize)
    throw std::out_of_range("character_table_sn: k must lie in [1, " +
                            std::to_string(kMaxCharacterTableSize) + "]");
  const auto parts = generate_partitions(k);
  const auto n = static_cast<Eigen::Index>(parts.size());
  IntMatrix table(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) table(i, j) = mn_value(parts[i], parts[j]);
  return table;
}

}  // namespace wreath
