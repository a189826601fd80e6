#pragma once

// Deterministic input generators shared by the unit and acceptance suites.

#include <cstdint>
#include <string>
#include <vector>

#include "subzip/bench.hpp"
#include "subzip/types.hpp"

namespace textgen {

using subzip::Symbol;

// codes 1..sigma, uniform
inline std::vector<Symbol> random_text(std::uint32_t n, std::uint32_t sigma, std::uint64_t seed) {
  subzip::SplitMix64 rng(seed);
  std::vector<Symbol> out(n);
  for (auto& c : out) c = static_cast<Symbol>(1 + rng.below(sigma));
  return out;
}

// prefix of the infinite Fibonacci word over {a=1, b=2}
inline std::vector<Symbol> fibonacci_prefix(std::uint32_t n) {
  std::string a = "a", b = "b";
  std::string prev = b, cur = a;  // F1 = b, F2 = a, F_k = F_{k-1} F_{k-2}
  while (cur.size() < n) {
    std::string nxt = cur + prev;
    prev = std::move(cur);
    cur = std::move(nxt);
  }
  std::vector<Symbol> out(n);
  for (std::uint32_t k = 0; k < n; ++k) out[k] = cur[k] == 'a' ? 1 : 2;
  return out;
}

inline std::vector<Symbol> unary_text(std::uint32_t n) { return std::vector<Symbol>(n, 1); }

// Word soup with a skewed vocabulary: letter distribution and word reuse shaped
// roughly like prose, so dictionaries and indexes behave text-like.
inline std::string english_like(std::size_t nbytes, std::uint64_t seed) {
  subzip::SplitMix64 rng(seed);
  const std::size_t vocab_size = 4096;
  std::vector<std::string> vocab(vocab_size);
  const char* common = "etaoinshrdlcumwf";
  for (auto& w : vocab) {
    const std::size_t len = 2 + rng.below(9);
    w.resize(len);
    for (auto& ch : w)
      ch = rng.below(3) != 0 ? common[rng.below(16)] : static_cast<char>('a' + rng.below(26));
  }
  std::string out;
  out.reserve(nbytes + 16);
  std::uint32_t words_in_sentence = 0;
  while (out.size() < nbytes) {
    // skewed rank choice: prefer low ranks
    std::uint64_t r = rng.below(1ull << (1 + rng.below(12)));
    out += vocab[r % vocab_size];
    ++words_in_sentence;
    if (words_in_sentence > 6 + rng.below(10)) {
      out += ".\n";
      words_in_sentence = 0;
    } else {
      out += ' ';
    }
  }
  out.resize(nbytes);
  return out;
}

}  // namespace textgen
