#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "subzip/types.hpp"

namespace subzip {

// Maps the byte values actually present in the input onto dense codes [1..sigma],
// in increasing byte order so that code comparisons agree with byte comparisons.
struct ByteCodec {
  std::vector<std::uint8_t> code_to_byte;  // code c (1-based) -> byte, size sigma

  static ByteCodec scan(const std::string& bytes) {
    std::array<bool, 256> present{};
    for (unsigned char b : bytes) present[b] = true;
    ByteCodec codec;
    for (int b = 0; b < 256; ++b)
      if (present[b]) codec.code_to_byte.push_back(static_cast<std::uint8_t>(b));
    return codec;
  }

  std::uint32_t sigma() const { return static_cast<std::uint32_t>(code_to_byte.size()); }

  std::vector<Symbol> encode(const std::string& bytes) const {
    std::array<std::uint16_t, 256> to_code{};
    for (std::uint32_t c = 0; c < code_to_byte.size(); ++c) to_code[code_to_byte[c]] = c + 1;
    std::vector<Symbol> out(bytes.size());
    for (std::size_t k = 0; k < bytes.size(); ++k) {
      const std::uint16_t c = to_code[static_cast<unsigned char>(bytes[k])];
      if (c == 0) throw format_error("ByteCodec::encode: byte not in code table");
      out[k] = static_cast<Symbol>(c);
    }
    return out;
  }

  std::uint8_t byte_of(Symbol code) const {
    if (code < 1 || code > code_to_byte.size()) throw format_error("ByteCodec: code out of range");
    return code_to_byte[code - 1];
  }
};

// Printable rendering of a literal byte: ASCII graphic characters other than
// backslash stay as-is, everything else becomes \xHH.
inline std::string render_byte(std::uint8_t b) {
  if (b > 0x20 && b < 0x7f && b != '\\') return std::string(1, static_cast<char>(b));
  static const char* hex = "0123456789abcdef";
  std::string s = "\\x";
  s.push_back(hex[b >> 4]);
  s.push_back(hex[b & 15]);
  return s;
}

inline std::string render_bytes(const std::string& bytes) {
  std::string out;
  for (unsigned char b : bytes) out += render_byte(b);
  return out;
}

}  // namespace subzip
