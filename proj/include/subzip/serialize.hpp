#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "subzip/byte_codec.hpp"
#include "subzip/cdawg.hpp"
#include "subzip/rlbwt_index.hpp"
#include "subzip/sa_index.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Index file layout (all integers little-endian, fixed width):
//   magic "SUBZIP01", u32 version, u8 backend tag, u8 integer width p, u16 zero,
//   u64 n, u32 sigma, sigma bytes of code table, backend payload, u32 CRC32 of
//   everything before it.
// Backend payloads:
//   sa    — coded text (n bytes), raw suffix array (m integers of width p)
//   cdawg — u32 V, u64 E, per node (V1..V3), per edge (E1..E3), root edge chars
//   rlbwt — u32 sample rate, u64 r, run symbols, run lengths, u32 #samples, samples

enum class BackendTag : std::uint8_t { sa = 0, cdawg = 1, rlbwt = 2 };

inline const char* backend_name(BackendTag b) {
  switch (b) {
    case BackendTag::sa: return "sa";
    case BackendTag::cdawg: return "cdawg";
    case BackendTag::rlbwt: return "rlbwt";
  }
  return "?";
}

using AnyIndex = std::variant<SaIndex, Cdawg, RlbwtIndex>;

struct IndexFile {
  BackendTag backend;
  std::uint32_t int_width = 32;
  ByteCodec codec;
  AnyIndex index;

  Position text_length() const {
    return std::visit([](const auto& ix) { return ix.text_length(); }, index);
  }
};

namespace detail {

inline std::uint32_t crc32_update(std::uint32_t crc, const void* data, std::size_t len) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xedb88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  const auto* p = static_cast<const std::uint8_t*>(data);
  for (std::size_t k = 0; k < len; ++k) crc = table[(crc ^ p[k]) & 0xff] ^ (crc >> 8);
  return crc;
}

class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}

  void bytes(const void* data, std::size_t len) {
    os_.write(static_cast<const char*>(data), static_cast<std::streamsize>(len));
    crc_ = crc32_update(crc_, data, len);
  }
  void u8(std::uint8_t v) { bytes(&v, 1); }
  void u16(std::uint16_t v) { put_le(v, 2); }
  void u32(std::uint32_t v) { put_le(v, 4); }
  void u64(std::uint64_t v) { put_le(v, 8); }
  void uint(std::uint64_t v, std::uint32_t width_bits) { put_le(v, width_bits / 8); }

  void finish() {
    const std::uint32_t c = crc_;
    u32(c);
    if (!os_) throw format_error("index write failed");
  }

 private:
  void put_le(std::uint64_t v, int nbytes) {
    std::uint8_t buf[8];
    for (int k = 0; k < nbytes; ++k) buf[k] = static_cast<std::uint8_t>(v >> (8 * k));
    bytes(buf, static_cast<std::size_t>(nbytes));
  }
  std::ostream& os_;
  std::uint32_t crc_ = 0xffffffffu;
};

class Reader {
 public:
  explicit Reader(std::istream& is) : is_(is) {}

  void bytes(void* data, std::size_t len) {
    is_.read(static_cast<char*>(data), static_cast<std::streamsize>(len));
    if (static_cast<std::size_t>(is_.gcount()) != len) throw format_error("index file truncated");
    crc_ = crc32_update(crc_, data, len);
  }
  std::uint8_t u8() {
    std::uint8_t v;
    bytes(&v, 1);
    return v;
  }
  std::uint16_t u16() { return static_cast<std::uint16_t>(get_le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get_le(4)); }
  std::uint64_t u64() { return get_le(8); }
  std::uint64_t uint(std::uint32_t width_bits) { return get_le(static_cast<int>(width_bits / 8)); }
  std::uint32_t uint32_checked(std::uint32_t width_bits) {
    const std::uint64_t v = uint(width_bits);
    if (v > 0xffffffffull) throw format_error("stored integer exceeds 32 bits");
    return static_cast<std::uint32_t>(v);
  }

  void check_crc() {
    const std::uint32_t have = crc_;
    std::uint8_t buf[4];
    is_.read(reinterpret_cast<char*>(buf), 4);
    if (is_.gcount() != 4) throw format_error("index file truncated");
    std::uint32_t stored = 0;
    for (int k = 0; k < 4; ++k) stored |= std::uint32_t(buf[k]) << (8 * k);
    if (stored != have) throw format_error("index file checksum mismatch");
  }

 private:
  std::uint64_t get_le(int nbytes) {
    std::uint8_t buf[8];
    bytes(buf, static_cast<std::size_t>(nbytes));
    std::uint64_t v = 0;
    for (int k = 0; k < nbytes; ++k) v |= std::uint64_t(buf[k]) << (8 * k);
    return v;
  }
  std::istream& is_;
  std::uint32_t crc_ = 0xffffffffu;
};

constexpr char kMagic[8] = {'S', 'U', 'B', 'Z', 'I', 'P', '0', '1'};
constexpr std::uint32_t kVersion = 1;

}  // namespace detail

inline void save_index(std::ostream& os, const IndexFile& file) {
  detail::Writer w(os);
  w.bytes(detail::kMagic, 8);
  w.u32(detail::kVersion);
  w.u8(static_cast<std::uint8_t>(file.backend));
  w.u8(static_cast<std::uint8_t>(file.int_width));
  w.u16(0);
  w.u64(file.text_length());
  w.u32(file.codec.sigma());
  for (std::uint8_t b : file.codec.code_to_byte) w.u8(b);
  const std::uint32_t p = file.int_width;

  if (file.backend == BackendTag::sa) {
    const SaIndex& ix = std::get<SaIndex>(file.index);
    const SuffixTables& st = ix.tables();
    for (std::uint32_t i = 1; i <= st.n(); ++i) w.u8(st.text_at(i));
    for (std::uint32_t t = 1; t <= st.m(); ++t) w.uint(st.sa_at(t), p);
  } else if (file.backend == BackendTag::cdawg) {
    const Cdawg& ix = std::get<Cdawg>(file.index);
    w.u32(ix.node_count());
    w.u64(ix.stored_edge_count());
    for (const Cdawg::Node& nd : ix.nodes()) {
      w.uint(nd.in_edge_start, p);
      w.uint(nd.len_max, p);
      w.uint(nd.path_count, p);
    }
    for (const Cdawg::Edge& e : ix.edges()) {
      w.uint(e.parent, p);
      w.uint(e.label_len, p);
      w.uint(e.agg, p);
    }
    const auto chars = ix.root_edge_chars();
    w.u32(static_cast<std::uint32_t>(chars.size()));
    for (auto [e, c] : chars) {
      w.uint(e, p);
      w.u8(c);
    }
  } else {
    const RlbwtIndex& ix = std::get<RlbwtIndex>(file.index);
    w.u32(ix.sample_rate());
    w.u64(ix.run_count());
    for (Symbol c : ix.run_symbols()) w.u8(c);
    for (std::uint64_t l : ix.run_lengths()) w.uint(l, p);
    w.u32(static_cast<std::uint32_t>(ix.samples().size()));
    for (std::uint32_t s : ix.samples()) w.uint(s, p);
  }
  w.finish();
}

inline IndexFile load_index(std::istream& is) {
  detail::Reader r(is);
  char magic[8];
  r.bytes(magic, 8);
  if (std::memcmp(magic, detail::kMagic, 8) != 0) throw format_error("not an index file (bad magic)");
  if (r.u32() != detail::kVersion) throw format_error("unsupported index format version");
  const auto backend = static_cast<BackendTag>(r.u8());
  const std::uint32_t p = r.u8();
  r.u16();
  if (p != 32 && p != 64) throw format_error("unsupported integer width");
  const std::uint64_t n64 = r.u64();
  if (n64 < 1 || n64 > 0xfffffffeull) throw format_error("text length out of range");
  const auto n = static_cast<std::uint32_t>(n64);
  const std::uint32_t sigma = r.u32();
  if (sigma < 1 || sigma > 256) throw format_error("alphabet size out of range");
  ByteCodec codec;
  codec.code_to_byte.resize(sigma);
  r.bytes(codec.code_to_byte.data(), sigma);

  if (backend == BackendTag::sa) {
    std::vector<Symbol> text(n);
    r.bytes(text.data(), n);
    std::vector<std::uint32_t> sa(n + 1);
    for (std::uint32_t t = 0; t <= n; ++t) sa[t] = r.uint32_checked(p);
    r.check_crc();
    return {backend, p, std::move(codec),
            AnyIndex{std::in_place_type<SaIndex>, SuffixTables::from_parts(std::move(text), std::move(sa))}};
  }
  if (backend == BackendTag::cdawg) {
    const std::uint32_t V = r.u32();
    const std::uint64_t E = r.u64();
    if (V < 2 || E < 1 || E > 0xffffffffull) throw format_error("cdawg: bad array sizes");
    std::vector<Cdawg::Node> nodes(V);
    for (auto& nd : nodes) {
      nd.in_edge_start = r.uint32_checked(p);
      nd.len_max = r.uint32_checked(p);
      nd.path_count = r.uint32_checked(p);
      nd.len_min = 0;
    }
    std::vector<Cdawg::Edge> edges(E);
    for (auto& e : edges) {
      e.parent = r.uint32_checked(p);
      e.label_len = r.uint32_checked(p);
      e.agg = r.uint32_checked(p);
    }
    for (std::uint32_t v = 0; v < V; ++v) {
      const std::uint32_t b = nodes[v].in_edge_start;
      const std::uint32_t e2 = v + 1 < V ? nodes[v + 1].in_edge_start : static_cast<std::uint32_t>(E);
      if (b > e2 || e2 > E) throw format_error("cdawg: bad in-edge group bounds");
    }
    const std::uint32_t nchars = r.u32();
    std::vector<std::pair<std::uint32_t, Symbol>> chars(nchars);
    for (auto& [e, c] : chars) {
      e = r.uint32_checked(p);
      c = r.u8();
    }
    r.check_crc();
    return {backend, p, std::move(codec),
            AnyIndex{std::in_place_type<Cdawg>,
                     Cdawg::from_arrays(n, sigma, std::move(nodes), std::move(edges), chars)}};
  }
  if (backend == BackendTag::rlbwt) {
    const std::uint32_t rate = r.u32();
    const std::uint64_t rc = r.u64();
    if (rc < 1 || rc > std::uint64_t(n) + 1) throw format_error("rlbwt: bad run count");
    std::vector<Symbol> syms(rc);
    r.bytes(syms.data(), rc);
    std::vector<std::uint64_t> lens(rc);
    for (auto& l : lens) l = r.uint(p);
    const std::uint32_t ns = r.u32();
    std::vector<std::uint32_t> samples(ns);
    for (auto& s : samples) s = r.uint32_checked(p);
    r.check_crc();
    return {backend, p, std::move(codec),
            AnyIndex{std::in_place_type<RlbwtIndex>,
                     RlbwtIndex::from_parts(n, sigma, rate, std::move(syms), std::move(lens),
                                            std::move(samples))}};
  }
  throw format_error("unknown backend tag");
}

}  // namespace subzip
