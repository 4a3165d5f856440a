#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace modr {

std::size_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of {0, ..., n-1} as increasing tuples, in lexicographic order.
/// The table is built once per (n, k) and shared.
const std::vector<std::vector<std::size_t>> &lex_subsets(std::size_t n, std::size_t k);

/// Position of an increasing tuple in lex_subsets(n, tuple.size()).
std::size_t subset_rank(std::size_t n, std::span<const std::size_t> tuple);

/// Sorts idx in place and returns the sign of the sorting permutation, or 0
/// when an index repeats.
int sort_with_sign(std::vector<std::size_t> &idx);

/// Inserts c into an increasing tuple. Returns the sign (-1)^position and the
/// resulting tuple, or nullopt when c is already present.
std::optional<std::pair<int, std::vector<std::size_t>>>
insert_sorted(std::span<const std::size_t> tuple, std::size_t c);

/// A shuffle: perm[s] is the argument position placed in slot s. Within each
/// block the positions increase.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign;
};

/// All (b_1, ..., b_r)-shuffles of b_1 + ... + b_r positions, in lexicographic
/// order of perm. Empty when a block size is negative. Cached per block list.
const std::vector<Shuffle> &shuffles(std::span<const long> blocks);

inline const std::vector<Shuffle> &shuffles(std::initializer_list<long> blocks) {
  return shuffles(std::span<const long>(blocks.begin(), blocks.size()));
}

} // namespace modr
