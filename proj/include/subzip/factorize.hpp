#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "subzip/stab_set.hpp"
#include "subzip/text_index.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Factor ids are query-local and start at 1; id 0 is the empty seed factor.
// References are always chosen under cap = remaining substring length, so the
// output is the exact factorization of T[i..j] as a standalone string: a final
// LZ78/LZD factor may omit its trailing character / second half, and a final
// LZMW factor falls back to a literal when no pair fits.

struct Lz78Factor {
  Position start;
  std::uint32_t ref;           // referred factor id, 0 = empty factor
  std::optional<Symbol> next;  // absent only for a final factor equal to its reference

  friend bool operator==(const Lz78Factor&, const Lz78Factor&) = default;
};

struct LzdHalf {
  enum class Kind : std::uint8_t { reference, literal } kind;
  std::uint32_t ref = 0;
  Symbol lit = 0;

  static LzdHalf make_ref(std::uint32_t r) { return {Kind::reference, r, 0}; }
  static LzdHalf make_lit(Symbol c) { return {Kind::literal, 0, c}; }

  friend bool operator==(const LzdHalf&, const LzdHalf&) = default;
};

struct LzdFactor {
  Position start;
  LzdHalf left;
  std::optional<LzdHalf> right;  // absent only when the substring ends after the left half

  friend bool operator==(const LzdFactor&, const LzdFactor&) = default;
};

struct LzmwFactor {
  Position start;
  bool is_pair;       // pair of consecutive factors F_ref · F_{ref+1}, else a literal
  std::uint32_t ref;  // valid when is_pair
  Symbol lit;         // valid when !is_pair

  friend bool operator==(const LzmwFactor&, const LzmwFactor&) = default;
};

struct Factorization {
  Scheme scheme;
  Position begin = 0, end = 0;
  std::variant<std::vector<Lz78Factor>, std::vector<LzdFactor>, std::vector<LzmwFactor>> factors;

  std::size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, factors);
  }
  std::uint32_t covered_length() const { return end - begin + 1; }

  const std::vector<Lz78Factor>& lz78() const { return std::get<std::vector<Lz78Factor>>(factors); }
  const std::vector<LzdFactor>& lzd() const { return std::get<std::vector<LzdFactor>>(factors); }
  const std::vector<LzmwFactor>& lzmw() const { return std::get<std::vector<LzmwFactor>>(factors); }
};

// When stab_out is supplied it must be a fresh StabSet over [1..n]; it holds the
// run's dictionary intervals afterwards.
template <TextIndexLike Index>
Factorization compress_lz78(const Index& ix, Position i, Position j,
                            StabSet* stab_out = nullptr) {
  const Position n = ix.text_length();
  check_interval(i, j, n, "compress_lz78");
  if (stab_out && (stab_out->universe() != n || stab_out->size() != 1))
    throw std::invalid_argument("compress_lz78: stab_out must be fresh over [1..n]");
  StabSet local(n);
  StabSet& stab = stab_out ? *stab_out : local;

  std::vector<Lz78Factor> fs;
  std::uint32_t x = 0;
  Position dst = i;
  while (dst <= j) {
    const std::uint32_t rem = j - dst + 1;
    const Rank q = ix.suffix_rank(dst);
    const StabSet::Entry e = stab.stab_longest(q, rem);
    ++x;
    if (e.len == rem) {
      fs.push_back({dst, e.id, std::nullopt});
      dst += e.len;
      break;
    }
    const Symbol c = ix.char_at(dst + e.len);
    fs.push_back({dst, e.id, c});
    stab.insert(ix.substring_range(dst, dst + e.len), e.len + 1, x);
    dst += e.len + 1;
  }
  return {Scheme::lz78, i, j, std::move(fs)};
}

template <TextIndexLike Index>
Factorization compress_lzd(const Index& ix, Position i, Position j) {
  const Position n = ix.text_length();
  check_interval(i, j, n, "compress_lzd");
  StabSet stab(n);

  std::vector<LzdFactor> fs;
  std::uint32_t x = 0;
  Position dst = i;
  while (dst <= j) {
    const Position start = dst;
    std::uint32_t rem = j - dst + 1;
    const StabSet::Entry e1 = stab.stab_longest(ix.suffix_rank(dst), rem);
    LzdHalf left = e1.len == 0 ? LzdHalf::make_lit(ix.char_at(dst)) : LzdHalf::make_ref(e1.id);
    const std::uint32_t len1 = e1.len == 0 ? 1 : e1.len;
    dst += len1;

    std::optional<LzdHalf> right;
    std::uint32_t len2 = 0;
    if (dst <= j) {
      rem = j - dst + 1;
      const StabSet::Entry e2 = stab.stab_longest(ix.suffix_rank(dst), rem);
      right = e2.len == 0 ? LzdHalf::make_lit(ix.char_at(dst)) : LzdHalf::make_ref(e2.id);
      len2 = e2.len == 0 ? 1 : e2.len;
      dst += len2;
    }

    ++x;
    fs.push_back({start, left, right});
    stab.insert(ix.substring_range(start, start + len1 + len2 - 1), len1 + len2, x);
  }
  return {Scheme::lzd, i, j, std::move(fs)};
}

template <TextIndexLike Index>
Factorization compress_lzmw(const Index& ix, Position i, Position j) {
  const Position n = ix.text_length();
  check_interval(i, j, n, "compress_lzmw");
  StabSet stab(n);

  std::vector<LzmwFactor> fs;
  std::uint32_t x = 0;
  Position dst = i;
  Position prev_start = 0;
  std::uint32_t prev_len = 0;
  while (dst <= j) {
    const std::uint32_t rem = j - dst + 1;
    const StabSet::Entry e = stab.stab_longest(ix.suffix_rank(dst), rem);
    std::uint32_t len;
    if (e.len >= 1) {
      fs.push_back({dst, true, e.id, 0});
      len = e.len;
    } else {
      fs.push_back({dst, false, 0, ix.char_at(dst)});
      len = 1;
    }
    ++x;
    if (x >= 2)
      stab.insert(ix.substring_range(prev_start, dst + len - 1), prev_len + len, x - 1);
    prev_start = dst;
    prev_len = len;
    dst += len;
  }
  return {Scheme::lzmw, i, j, std::move(fs)};
}

namespace detail {

inline void append_expansion(std::vector<Symbol>& out, const std::vector<Symbol>& exp) {
  out.insert(out.end(), exp.begin(), exp.end());
}

}  // namespace detail

// Expands references left to right; the result equals the queried substring.
inline std::vector<Symbol> decode(const Factorization& f) {
  std::vector<Symbol> out;
  std::vector<std::vector<Symbol>> exp{{}};  // by factor id, id 0 empty

  if (f.scheme == Scheme::lz78) {
    for (const Lz78Factor& fac : f.lz78()) {
      if (fac.ref >= exp.size()) throw format_error("decode: dangling lz78 reference");
      std::vector<Symbol> s = exp[fac.ref];
      if (fac.next) s.push_back(*fac.next);
      detail::append_expansion(out, s);
      exp.push_back(std::move(s));
    }
  } else if (f.scheme == Scheme::lzd) {
    auto half = [&](const LzdHalf& h) -> std::vector<Symbol> {
      if (h.kind == LzdHalf::Kind::literal) return {h.lit};
      if (h.ref == 0 || h.ref >= exp.size()) throw format_error("decode: dangling lzd reference");
      return exp[h.ref];
    };
    for (const LzdFactor& fac : f.lzd()) {
      std::vector<Symbol> s = half(fac.left);
      if (fac.right) {
        const std::vector<Symbol> r = half(*fac.right);
        s.insert(s.end(), r.begin(), r.end());
      }
      detail::append_expansion(out, s);
      exp.push_back(std::move(s));
    }
  } else {
    for (const LzmwFactor& fac : f.lzmw()) {
      std::vector<Symbol> s;
      if (fac.is_pair) {
        if (fac.ref == 0 || fac.ref + 1 >= exp.size()) throw format_error("decode: dangling lzmw reference");
        s = exp[fac.ref];
        const std::vector<Symbol>& r = exp[fac.ref + 1];
        s.insert(s.end(), r.begin(), r.end());
      } else {
        s = {fac.lit};
      }
      detail::append_expansion(out, s);
      exp.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace subzip
