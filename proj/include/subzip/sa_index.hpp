#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "subzip/suffix_tables.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Uncompressed baseline backend: suffix array + inverse + LCP + range minima.
// substring_range(x, y) is delimited by PSV/NSV over the LCP array below depth
// d = y-x+1, found with O(log m) block jumps.
class SaIndex {
 public:
  explicit SaIndex(std::vector<Symbol> text) : tables_(std::move(text)) {}
  explicit SaIndex(SuffixTables tables) : tables_(std::move(tables)) {}

  Position text_length() const { return tables_.n(); }
  std::uint32_t alphabet_size() const { return tables_.sigma(); }

  Symbol char_at(Position i) const {
    check_position(i, tables_.n(), "SaIndex::char_at");
    return tables_.text_at(i);
  }

  Rank suffix_rank(Position i) const {
    check_position(i, tables_.n(), "SaIndex::suffix_rank");
    return tables_.isa_at(i) - 1;
  }

  SaInterval substring_range(Position x, Position y) const {
    check_interval(x, y, tables_.n(), "SaIndex::substring_range");
    const std::uint32_t r0 = tables_.isa_at(x);
    const std::uint32_t d = y - x + 1;
    const std::uint32_t lo = tables_.psv_raw(r0, d) + 1;
    const std::uint32_t hi = tables_.nsv_raw(r0, d);
    if (lo < 2 || hi < lo) throw consistency_error("SaIndex::substring_range: degenerate block");
    return {lo - 1, hi - 1};
  }

  // PSV/NSV in normalized rank coordinates over the sentinel-free LCP array
  // (entry t compares the suffixes of normalized ranks t and t+1). psv returns 0
  // and nsv returns n+1 when no entry qualifies.
  std::uint32_t psv(Rank r, std::uint32_t d) const {
    check_position(r, tables_.n(), "SaIndex::psv");
    return tables_.psv_raw(r + 1, d) - 1;
  }

  std::uint32_t nsv(Rank r, std::uint32_t d) const {
    check_position(r, tables_.n(), "SaIndex::nsv");
    const std::uint32_t raw = tables_.nsv_raw(r + 1, d);
    return raw == tables_.m() ? tables_.n() + 1 : raw - 1;
  }

  // Normalized views: sa_norm(t) is the start of the rank-t suffix, lcp_norm(t)
  // compares ranks t and t+1, t in [1..n-1].
  Position sa_norm(Rank t) const { return tables_.sa_at(t + 1); }
  std::uint32_t lcp_norm(std::uint32_t t) const { return tables_.lcp_at(t + 1); }

  const SuffixTables& tables() const { return tables_; }

  // Accounting value analogous to the suffix-tree layout: four length-m integer
  // arrays at the configured width plus the coded text.
  std::uint64_t memory_bits(std::uint32_t int_width) const {
    const std::uint64_t lg_sigma = bit_width_ceil(tables_.sigma());
    return 4ull * int_width * tables_.m() + std::uint64_t(tables_.n()) * lg_sigma;
  }

  static std::uint64_t bit_width_ceil(std::uint32_t v) {
    std::uint64_t b = 0;
    while ((1ull << b) < v) ++b;
    return b;
  }

 private:
  SuffixTables tables_;
};

}  // namespace subzip
