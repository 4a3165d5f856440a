#include "modr/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace modr {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n)
    return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

namespace {

void extend_subsets(std::size_t n, std::size_t k, std::vector<std::size_t> &cur,
                    std::vector<std::vector<std::size_t>> &out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  const std::size_t start = cur.empty() ? 0 : cur.back() + 1;
  for (std::size_t v = start; v + (k - cur.size()) <= n; ++v) {
    cur.push_back(v);
    extend_subsets(n, k, cur, out);
    cur.pop_back();
  }
}

// Choose which positions go to each block, recursively, keeping them sorted.
void extend_shuffles(std::span<const long> blocks, std::size_t block, std::vector<char> &used,
                     std::vector<std::size_t> &perm, std::vector<Shuffle> &out) {
  if (block == blocks.size()) {
    std::vector<std::size_t> p = perm;
    const int sign = sort_with_sign(p);
    out.push_back({perm, sign});
    return;
  }
  const std::size_t want = static_cast<std::size_t>(blocks[block]);
  const std::size_t total = used.size();
  // Enumerate increasing selections of `want` unused positions.
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < total; ++i)
    if (!used[i])
      free.push_back(i);
  for (const auto &sel : lex_subsets(free.size(), want)) {
    for (std::size_t s : sel) {
      used[free[s]] = 1;
      perm.push_back(free[s]);
    }
    extend_shuffles(blocks, block + 1, used, perm, out);
    for (std::size_t s : sel) {
      used[free[s]] = 0;
      perm.pop_back();
    }
  }
}

} // namespace

const std::vector<std::vector<std::size_t>> &lex_subsets(std::size_t n, std::size_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>,
                  std::unique_ptr<std::vector<std::vector<std::size_t>>>>
      cache;
  std::lock_guard lock(mu);
  auto &slot = cache[{n, k}];
  if (!slot) {
    slot = std::make_unique<std::vector<std::vector<std::size_t>>>();
    std::vector<std::size_t> cur;
    if (k <= n)
      extend_subsets(n, k, cur, *slot);
  }
  return *slot;
}

std::size_t subset_rank(std::size_t n, std::span<const std::size_t> tuple) {
  const std::size_t k = tuple.size();
  std::size_t r = 0;
  std::size_t prev = 0;
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t v = prev; v < tuple[t]; ++v)
      r += binomial(n - 1 - v, k - 1 - t);
    prev = tuple[t] + 1;
  }
  return r;
}

int sort_with_sign(std::vector<std::size_t> &idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j])
        return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

std::optional<std::pair<int, std::vector<std::size_t>>>
insert_sorted(std::span<const std::size_t> tuple, std::size_t c) {
  const auto it = std::lower_bound(tuple.begin(), tuple.end(), c);
  if (it != tuple.end() && *it == c)
    return std::nullopt;
  const std::size_t pos = static_cast<std::size_t>(it - tuple.begin());
  std::vector<std::size_t> out;
  out.reserve(tuple.size() + 1);
  out.insert(out.end(), tuple.begin(), it);
  out.push_back(c);
  out.insert(out.end(), it, tuple.end());
  return std::make_pair(pos % 2 == 0 ? 1 : -1, std::move(out));
}

const std::vector<Shuffle> &shuffles(std::span<const long> blocks) {
  static std::mutex mu;
  static std::map<std::vector<long>, std::unique_ptr<std::vector<Shuffle>>> cache;
  std::vector<long> key(blocks.begin(), blocks.end());
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end())
      return *it->second;
  }
  auto out = std::make_unique<std::vector<Shuffle>>();
  if (std::none_of(key.begin(), key.end(), [](long b) { return b < 0; })) {
    std::size_t total = 0;
    for (long b : key)
      total += static_cast<std::size_t>(b);
    std::vector<char> used(total, 0);
    std::vector<std::size_t> perm;
    extend_shuffles(key, 0, used, perm, *out);
  }
  std::lock_guard lock(mu);
  auto &slot = cache[key];
  if (!slot)
    slot = std::move(out);
  return *slot;
}

} // namespace modr
