#pragma once

#include <concepts>

#include "subzip/types.hpp"

namespace subzip {

// The backend contract every index implements and the factorizers consume:
//   (a) suffix_rank(i)        — rank of suffix T[i..] among all non-sentinel suffixes,
//   (b) char_at(i)            — T[i],
//   (c) substring_range(x, y) — the rank interval of suffixes prefixed by T[x..y].
// All operations are pure reads on an immutable index; concurrent readers are safe.
//
// Ranks are normalized: every backend appends a sentinel (code 0, smaller than any
// symbol) internally, and the sentinel suffix (always the smallest) is dropped from
// the exposed rank space, so ranks form a permutation of [1..n].
template <typename I>
concept TextIndexLike = requires(const I& ix, Position p, Position q) {
  { ix.text_length() } -> std::convertible_to<Position>;
  { ix.alphabet_size() } -> std::convertible_to<std::uint32_t>;
  { ix.char_at(p) } -> std::convertible_to<Symbol>;
  { ix.suffix_rank(p) } -> std::convertible_to<Rank>;
  { ix.substring_range(p, q) } -> std::convertible_to<SaInterval>;
};

}  // namespace subzip
