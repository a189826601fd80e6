#pragma once

// Brute-force reference implementations for the test suite. Everything here
// favours obviousness over speed and shares no logic with the production
// headers: suffix tables by comparison sort, substring ranges by scanning,
// factorizations by explicit trie walks, and a CDAWG built by end-position-set
// minimization of an explicit suffix tree.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "subzip/factorize.hpp"
#include "subzip/types.hpp"

namespace oracle {

using subzip::Position;
using subzip::Rank;
using subzip::SaInterval;
using subzip::Scheme;
using subzip::Symbol;

using Text = std::vector<Symbol>;

struct NaiveTables {
  std::vector<std::uint32_t> sa;   // normalized: sa[t], t in [1..n]
  std::vector<std::uint32_t> isa;  // isa[i], i in [1..n]
  std::vector<std::uint32_t> lcp;  // lcp[t] between ranks t, t+1; t in [1..n-1]
};

inline NaiveTables naive_suffix_tables(const Text& s) {
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  std::vector<std::uint32_t> sa(n);
  for (std::uint32_t i = 0; i < n; ++i) sa[i] = i + 1;
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(s.begin() + a - 1, s.end(), s.begin() + b - 1, s.end());
  });
  NaiveTables t;
  t.sa.assign(n + 1, 0);
  t.isa.assign(n + 1, 0);
  t.lcp.assign(n, 0);
  for (std::uint32_t k = 0; k < n; ++k) {
    t.sa[k + 1] = sa[k];
    t.isa[sa[k]] = k + 1;
  }
  for (std::uint32_t k = 1; k + 1 <= n; ++k) {
    std::uint32_t a = t.sa[k], b = t.sa[k + 1], h = 0;
    while (a + h <= n && b + h <= n && s[a + h - 1] == s[b + h - 1]) ++h;
    t.lcp[k] = h;
  }
  return t;
}

// Scan all suffixes for a T[x..y] prefix match; the matching ranks must form a
// contiguous block.
inline SaInterval naive_range(const Text& s, Position x, Position y) {
  const NaiveTables t = naive_suffix_tables(s);
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  const std::uint32_t d = y - x + 1;
  std::uint32_t lo = 0, hi = 0;
  for (std::uint32_t r = 1; r <= n; ++r) {
    const std::uint32_t start = t.sa[r];
    const bool match = start + d - 1 <= n &&
                       std::equal(s.begin() + x - 1, s.begin() + y, s.begin() + start - 1);
    if (match) {
      if (lo == 0) lo = r;
      hi = r;
    } else if (lo != 0 && hi < r) {
      break;
    }
  }
  return {lo, hi};
}

// Normalized substring ranges for every (x, y) of one text, via per-position
// narrowing over the naive suffix array. ranges(x)[y - x] = range of T[x..y].
inline std::vector<std::vector<SaInterval>> all_ranges(const Text& s) {
  const NaiveTables t = naive_suffix_tables(s);
  const std::uint32_t n = static_cast<std::uint32_t>(s.size());
  std::vector<std::vector<SaInterval>> out(n + 1);
  for (std::uint32_t x = 1; x <= n; ++x) {
    std::uint32_t lo = 1, hi = n;
    out[x].reserve(n - x + 1);
    for (std::uint32_t y = x; y <= n; ++y) {
      const std::uint32_t d = y - x + 1;
      // within [lo..hi]: suffixes shorter than d first, then by the char at offset d
      auto key = [&](std::uint32_t r) -> int {
        const std::uint32_t start = t.sa[r];
        return start + d - 1 > n ? -1 : static_cast<int>(s[start + d - 2]);
      };
      const int c = s[y - 1];
      std::uint32_t a = lo, b = hi + 1;
      while (a < b) {  // first rank with key >= c
        const std::uint32_t mid = a + (b - a) / 2;
        if (key(mid) < c)
          a = mid + 1;
        else
          b = mid;
      }
      lo = a;
      b = hi + 1;
      while (a < b) {  // first rank with key > c
        const std::uint32_t mid = a + (b - a) / 2;
        if (key(mid) <= c)
          a = mid + 1;
        else
          b = mid;
      }
      hi = a - 1;
      out[x].push_back({lo, hi});
    }
  }
  return out;
}

// ---- trie-based factorization oracles ------------------------------------

namespace detail {

struct Trie {
  struct Node {
    std::map<Symbol, int> ch;
    int mark_id = -1;
    std::uint32_t depth = 0;
  };
  std::vector<Node> nodes{Node{}};

  int walk_insert(const Text& s, Position start, std::uint32_t len) {
    int v = 0;
    for (std::uint32_t k = 0; k < len; ++k) {
      const Symbol c = s[start - 1 + k];
      auto it = nodes[v].ch.find(c);
      if (it == nodes[v].ch.end()) {
        nodes.push_back(Node{{}, -1, nodes[v].depth + 1});
        it = nodes[v].ch.emplace(c, static_cast<int>(nodes.size()) - 1).first;
      }
      v = it->second;
    }
    return v;
  }

  // deepest marked node on the path of s[dst..], depth capped at rem
  std::pair<std::uint32_t, int> deepest_mark(const Text& s, Position dst, std::uint32_t rem) const {
    std::uint32_t best_len = 0;
    int best_id = nodes[0].mark_id;
    int v = 0;
    for (std::uint32_t k = 0; k < rem; ++k) {
      auto it = nodes[v].ch.find(s[dst - 1 + k]);
      if (it == nodes[v].ch.end()) break;
      v = it->second;
      if (nodes[v].mark_id >= 0) {
        best_len = nodes[v].depth;
        best_id = nodes[v].mark_id;
      }
    }
    return {best_len, best_id};
  }
};

}  // namespace detail

inline subzip::Factorization trie_lz78(const Text& s, Position i, Position j) {
  std::vector<subzip::Lz78Factor> fs;
  detail::Trie trie;  // node id == factor id for the prefix-closed dictionary
  Position dst = i;
  while (dst <= j) {
    const std::uint32_t rem = j - dst + 1;
    int v = 0;
    std::uint32_t len = 0;
    while (len < rem) {
      auto it = trie.nodes[v].ch.find(s[dst - 1 + len]);
      if (it == trie.nodes[v].ch.end()) break;
      v = it->second;
      ++len;
    }
    if (len == rem) {
      fs.push_back({dst, static_cast<std::uint32_t>(v), std::nullopt});
      dst += len;
    } else {
      const Symbol c = s[dst - 1 + len];
      fs.push_back({dst, static_cast<std::uint32_t>(v), c});
      trie.nodes.push_back({{}, -1, trie.nodes[v].depth + 1});
      trie.nodes[v].ch.emplace(c, static_cast<int>(trie.nodes.size()) - 1);
      dst += len + 1;
    }
  }
  return {Scheme::lz78, i, j, std::move(fs)};
}

inline subzip::Factorization trie_lzd(const Text& s, Position i, Position j) {
  std::vector<subzip::LzdFactor> fs;
  detail::Trie trie;
  std::uint32_t x = 0;
  Position dst = i;
  while (dst <= j) {
    const Position start = dst;
    auto [len1, id1] = trie.deepest_mark(s, dst, j - dst + 1);
    subzip::LzdHalf left = len1 == 0 ? subzip::LzdHalf::make_lit(s[dst - 1])
                                     : subzip::LzdHalf::make_ref(static_cast<std::uint32_t>(id1));
    if (len1 == 0) len1 = 1;
    dst += len1;

    std::optional<subzip::LzdHalf> right;
    std::uint32_t len2 = 0;
    if (dst <= j) {
      auto [l2, id2] = trie.deepest_mark(s, dst, j - dst + 1);
      right = l2 == 0 ? subzip::LzdHalf::make_lit(s[dst - 1])
                      : subzip::LzdHalf::make_ref(static_cast<std::uint32_t>(id2));
      len2 = l2 == 0 ? 1 : l2;
      dst += len2;
    }
    ++x;
    fs.push_back({start, left, right});
    trie.nodes[trie.walk_insert(s, start, len1 + len2)].mark_id = static_cast<int>(x);
  }
  return {Scheme::lzd, i, j, std::move(fs)};
}

inline subzip::Factorization trie_lzmw(const Text& s, Position i, Position j) {
  std::vector<subzip::LzmwFactor> fs;
  detail::Trie trie;
  std::uint32_t x = 0;
  Position dst = i;
  Position prev_start = 0;
  std::uint32_t prev_len = 0;
  while (dst <= j) {
    auto [len, id] = trie.deepest_mark(s, dst, j - dst + 1);
    std::uint32_t flen;
    if (len >= 1) {
      fs.push_back({dst, true, static_cast<std::uint32_t>(id), 0});
      flen = len;
    } else {
      fs.push_back({dst, false, 0, s[dst - 1]});
      flen = 1;
    }
    ++x;
    if (x >= 2)
      trie.nodes[trie.walk_insert(s, prev_start, prev_len + flen)].mark_id = static_cast<int>(x - 1);
    prev_start = dst;
    prev_len = flen;
    dst += flen;
  }
  return {Scheme::lzmw, i, j, std::move(fs)};
}

inline subzip::Factorization trie_parse(Scheme scheme, const Text& s, Position i, Position j) {
  switch (scheme) {
    case Scheme::lz78: return trie_lz78(s, i, j);
    case Scheme::lzd: return trie_lzd(s, i, j);
    case Scheme::lzmw: return trie_lzmw(s, i, j);
  }
  throw std::invalid_argument("trie_parse: bad scheme");
}

inline subzip::Factorization trie_parse(Scheme scheme, const Text& s) {
  return trie_parse(scheme, s, 1, static_cast<Position>(s.size()));
}

// ---- brute-force CDAWG by end-position-set minimization -------------------

struct BruteCdawg {
  std::uint32_t node_count = 0;
  std::uint64_t total_edges = 0;
  std::uint64_t report_edges = 0;  // pure-sentinel labels excluded
  std::multiset<std::pair<std::uint32_t, std::uint32_t>> len_intervals;
  std::map<std::uint32_t, std::uint64_t> path_histogram;  // #edges -> #paths
  std::vector<std::string> paths_lex;                     // all root-sink labels, lex order
};

inline BruteCdawg brute_cdawg(const Text& text) {
  std::string s(text.begin(), text.end());
  s.push_back('\0');  // sentinel, smallest
  const std::uint32_t m = static_cast<std::uint32_t>(s.size());

  // end positions (1-based) of every distinct substring
  std::map<std::string, std::vector<std::uint32_t>> endpos;
  for (std::uint32_t b = 1; b <= m; ++b)
    for (std::uint32_t a = 1; a <= b; ++a) endpos[s.substr(a - 1, b - a + 1)].push_back(b);

  auto is_leaf = [&](const std::string& a) {
    const auto& ep = endpos.at(a);
    return std::find(ep.begin(), ep.end(), m) != ep.end();
  };
  auto right_branching = [&](const std::string& a) {
    std::set<char> ext;
    for (std::uint32_t e : endpos.at(a))
      if (e < m) ext.insert(s[e]);
    return ext.size() >= 2;
  };

  // suffix tree nodes: root, right-branching strings, full suffixes (leaves)
  std::set<std::string> st_nodes;
  st_nodes.insert("");
  for (const auto& [a, ep] : endpos)
    if (right_branching(a) || is_leaf(a)) st_nodes.insert(a);

  // classes of internal nodes by end-position set; leaves merge into the sink
  std::map<std::vector<std::uint32_t>, std::vector<std::string>> classes;
  for (const auto& a : st_nodes)
    if (a.empty() || !is_leaf(a))
      classes[a.empty() ? std::vector<std::uint32_t>{} : endpos.at(a)].push_back(a);

  std::map<std::string, int> class_of;  // by representative string handling below
  std::vector<std::vector<std::string>> members;
  for (auto& [ep, strs] : classes) {
    std::sort(strs.begin(), strs.end(),
              [](const std::string& x, const std::string& y) { return x.size() < y.size(); });
    for (const auto& a : strs) class_of[a] = static_cast<int>(members.size());
    members.push_back(strs);
  }
  const int sink = static_cast<int>(members.size());

  BruteCdawg out;
  out.node_count = static_cast<std::uint32_t>(members.size()) + 1;
  for (const auto& mem : members)
    out.len_intervals.insert({static_cast<std::uint32_t>(mem.front().size()),
                              static_cast<std::uint32_t>(mem.back().size())});
  out.len_intervals.insert({1, m});  // sink

  // compact out-edges of each representative (longest member)
  struct BEdge {
    int to;
    std::string label;
  };
  std::vector<std::vector<BEdge>> edges(members.size());
  for (std::size_t c = 0; c < members.size(); ++c) {
    const std::string& rep = members[c].back();
    std::set<char> ext;
    for (std::uint32_t e : endpos.count(rep) ? endpos.at(rep) : std::vector<std::uint32_t>{})
      if (e < m) ext.insert(s[e]);
    if (rep.empty())
      for (char ch : std::set<char>(s.begin(), s.end())) ext.insert(ch);
    for (char ch : ext) {
      std::string b = rep + ch;
      while (!st_nodes.count(b)) {
        const auto& ep = endpos.at(b);
        std::set<char> nx;
        for (std::uint32_t e : ep)
          if (e < m) nx.insert(s[e]);
        b += *nx.begin();
      }
      const int to = is_leaf(b) ? sink : class_of[b];
      edges[c].push_back({to, b.substr(rep.size())});
      ++out.total_edges;
      if (!(b.size() == rep.size() + 1 && static_cast<unsigned char>(b.back()) == 0))
        ++out.report_edges;
    }
    std::sort(edges[c].begin(), edges[c].end(),
              [](const BEdge& x, const BEdge& y) { return x.label < y.label; });
  }

  // enumerate all root-sink paths in lexicographic order
  std::string cur;
  auto dfs = [&](auto&& self, int v, std::uint32_t nedges) -> void {
    if (v == sink) {
      out.paths_lex.push_back(cur);
      out.path_histogram[nedges]++;
      return;
    }
    for (const BEdge& e : edges[v]) {
      cur += e.label;
      self(self, e.to, nedges + 1);
      cur.resize(cur.size() - e.label.size());
    }
  };
  dfs(dfs, class_of[""], 0);
  return out;
}

inline std::vector<Symbol> to_symbols(const std::string& letters) {
  std::vector<Symbol> out(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k)
    out[k] = static_cast<Symbol>(letters[k] - 'a' + 1);
  return out;
}

}  // namespace oracle
