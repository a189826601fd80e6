#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace subzip {

// Alphabet code in [1..sigma]; code 0 is the internal end-of-text sentinel and
// never appears at the public interface.
using Symbol = std::uint8_t;

// 1-based position into the original (sentinel-free) text, in [1..n].
using Position = std::uint32_t;

// 1-based lexicographic rank of a non-sentinel suffix, in [1..n].
using Rank = std::uint32_t;

// Inclusive range of suffix ranks whose suffixes share a given prefix.
struct SaInterval {
  Rank lo = 0;
  Rank hi = 0;

  bool contains(Rank r) const { return lo <= r && r <= hi; }
  std::uint32_t size() const { return hi - lo + 1; }
  friend bool operator==(const SaInterval&, const SaInterval&) = default;
};

enum class Scheme : std::uint8_t { lz78 = 0, lzd = 1, lzmw = 2 };

inline const char* scheme_name(Scheme s) {
  switch (s) {
    case Scheme::lz78: return "lz78";
    case Scheme::lzd: return "lzd";
    case Scheme::lzmw: return "lzmw";
  }
  return "?";
}

// A structural invariant the index construction must guarantee was observed to
// fail at query time; always indicates a bug or corrupted input structure.
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Malformed serialized data or an undecodable factor list.
struct format_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_position(Position i, Position n, const char* what) {
  if (i < 1 || i > n)
    throw std::out_of_range(std::string(what) + ": position " + std::to_string(i) +
                            " outside [1.." + std::to_string(n) + "]");
}

inline void check_interval(Position x, Position y, Position n, const char* what) {
  if (x < 1 || x > y || y > n)
    throw std::out_of_range(std::string(what) + ": interval [" + std::to_string(x) + ".." +
                            std::to_string(y) + "] invalid for n=" + std::to_string(n));
}

}  // namespace subzip
