#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "subzip/types.hpp"

namespace subzip {

// Suffix array, inverse, LCP array and a blocked range-minimum structure over the
// sentinel-extended text T' = T·0 of length m = n+1. All arrays use raw 1-based
// coordinates: raw rank 1 is always the sentinel suffix, lcp_at(t) compares the
// suffixes of raw rank t and t+1.
class SuffixTables {
 public:
  explicit SuffixTables(std::vector<Symbol> text) : ext_(std::move(text)) {
    if (ext_.empty()) throw std::invalid_argument("SuffixTables: empty text");
    for (Symbol c : ext_)
      if (c == 0) throw std::invalid_argument("SuffixTables: symbol code 0 is reserved");
    sigma_ = *std::max_element(ext_.begin(), ext_.end());
    ext_.push_back(0);
    m_ = static_cast<std::uint32_t>(ext_.size());
    build_sa();
    finish();
  }

  // Rebuilds the derived tables from a stored (text, suffix array) pair.
  static SuffixTables from_parts(std::vector<Symbol> text, std::vector<std::uint32_t> sa_raw) {
    SuffixTables st(private_tag{}, std::move(text));
    if (sa_raw.size() != st.m_) throw format_error("suffix array length mismatch");
    st.sa_.assign(st.m_ + 1, 0);
    std::vector<bool> seen(st.m_ + 1, false);
    for (std::uint32_t t = 1; t <= st.m_; ++t) {
      std::uint32_t p = sa_raw[t - 1];
      if (p < 1 || p > st.m_ || seen[p]) throw format_error("stored suffix array is not a permutation");
      seen[p] = true;
      st.sa_[t] = p;
    }
    if (st.sa_[1] != st.m_) throw format_error("stored suffix array: sentinel suffix not smallest");
    st.finish();
    return st;
  }

  std::uint32_t n() const { return m_ - 1; }
  std::uint32_t m() const { return m_; }
  std::uint32_t sigma() const { return sigma_; }

  // 1-based access into the sentinel-extended text; text_at(m) == 0.
  Symbol text_at(std::uint32_t i) const { return ext_[i - 1]; }

  std::uint32_t sa_at(std::uint32_t t) const { return sa_[t]; }
  std::uint32_t isa_at(std::uint32_t i) const { return isa_[i]; }
  std::uint32_t lcp_at(std::uint32_t t) const { return lcp_[t]; }

  // max({0} U {t in [1..r-1] : lcp[t] < d})
  std::uint32_t psv_raw(std::uint32_t r, std::uint32_t d) const {
    return r < 2 ? 0 : last_below(1, r - 1, d);
  }

  // min({m} U {t in [r..m-1] : lcp[t] < d})
  std::uint32_t nsv_raw(std::uint32_t r, std::uint32_t d) const {
    std::uint32_t t = first_below(r, m_ - 1, d);
    return t == 0 ? m_ : t;
  }

  // Largest t in [a..b] with lcp[t] < d, clamped to valid lcp indices; 0 if none.
  std::uint32_t last_below(std::uint32_t a, std::uint32_t b, std::uint32_t d) const {
    if (a < 1) a = 1;
    if (b > m_ - 1) b = m_ - 1;
    if (m_ < 2 || a > b) return 0;
    const std::uint32_t ba = block_of(a), bb = block_of(b);
    std::uint32_t lo = std::max(a, block_start(bb));
    for (std::uint32_t t = b;; --t) {
      if (lcp_[t] < d) return t;
      if (t == lo) break;
    }
    if (ba == bb) return 0;
    std::uint32_t blk = rightmost_block_below(ba, bb - 1, d);
    if (blk == kNoBlock) return 0;
    lo = std::max(a, block_start(blk));
    for (std::uint32_t t = std::min(b, block_end(blk));; --t) {
      if (lcp_[t] < d) return t;
      if (t == lo) break;
    }
    return 0;
  }

  // Smallest t in [a..b] with lcp[t] < d, clamped; 0 if none.
  std::uint32_t first_below(std::uint32_t a, std::uint32_t b, std::uint32_t d) const {
    if (a < 1) a = 1;
    if (b > m_ - 1) b = m_ - 1;
    if (m_ < 2 || a > b) return 0;
    const std::uint32_t ba = block_of(a), bb = block_of(b);
    std::uint32_t hi = std::min(b, block_end(ba));
    for (std::uint32_t t = a; t <= hi; ++t)
      if (lcp_[t] < d) return t;
    if (ba == bb) return 0;
    std::uint32_t blk = leftmost_block_below(ba + 1, bb, d);
    if (blk == kNoBlock) return 0;
    hi = std::min(b, block_end(blk));
    for (std::uint32_t t = std::max(a, block_start(blk)); t <= hi; ++t)
      if (lcp_[t] < d) return t;
    return 0;
  }

  // min lcp[a..b]; a <= b required.
  std::uint32_t min_lcp(std::uint32_t a, std::uint32_t b) const {
    const std::uint32_t ba = block_of(a), bb = block_of(b);
    std::uint32_t best = UINT32_MAX;
    if (ba == bb) {
      for (std::uint32_t t = a; t <= b; ++t) best = std::min(best, lcp_[t]);
      return best;
    }
    for (std::uint32_t t = a; t <= block_end(ba); ++t) best = std::min(best, lcp_[t]);
    for (std::uint32_t t = block_start(bb); t <= b; ++t) best = std::min(best, lcp_[t]);
    if (ba + 1 <= bb - 1) best = std::min(best, block_range_min(ba + 1, bb - 1));
    return best;
  }

 private:
  struct private_tag {};
  SuffixTables(private_tag, std::vector<Symbol> text) : ext_(std::move(text)) {
    if (ext_.empty()) throw std::invalid_argument("SuffixTables: empty text");
    sigma_ = *std::max_element(ext_.begin(), ext_.end());
    ext_.push_back(0);
    m_ = static_cast<std::uint32_t>(ext_.size());
  }

  void build_sa() {
    const std::uint32_t m = m_;
    std::vector<std::uint32_t> sa0(m), rnk(m), tmp(m, 0), aux(m);
    const std::uint32_t buckets = std::max<std::uint32_t>(m + 2, 259);
    std::vector<std::uint32_t> cnt(buckets, 0);

    // stable counting sort of `aux` into `sa0` by key[.]
    auto csort = [&](const std::vector<std::uint32_t>& key) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (std::uint32_t i = 0; i < m; ++i) cnt[key[i] + 1]++;
      for (std::uint32_t b = 1; b < buckets; ++b) cnt[b] += cnt[b - 1];
      for (std::uint32_t i = 0; i < m; ++i) sa0[cnt[key[aux[i]]]++] = aux[i];
    };

    for (std::uint32_t i = 0; i < m; ++i) rnk[i] = ext_[i];
    std::iota(aux.begin(), aux.end(), 0u);
    csort(rnk);
    std::uint32_t cur = 0;
    tmp[sa0[0]] = 0;
    for (std::uint32_t i = 1; i < m; ++i) {
      cur += rnk[sa0[i]] != rnk[sa0[i - 1]];
      tmp[sa0[i]] = cur;
    }
    rnk.swap(tmp);

    for (std::uint32_t len = 1; cur + 1 < m; len <<= 1) {
      std::uint32_t p = 0;
      for (std::uint32_t i = m - len; i < m; ++i) aux[p++] = i;
      for (std::uint32_t i = 0; i < m; ++i)
        if (sa0[i] >= len) aux[p++] = sa0[i] - len;
      csort(rnk);
      cur = 0;
      tmp[sa0[0]] = 0;
      for (std::uint32_t i = 1; i < m; ++i) {
        const std::uint32_t a = sa0[i - 1], b = sa0[i];
        bool diff = rnk[a] != rnk[b];
        if (!diff) {
          const std::uint32_t a2 = a + len < m ? rnk[a + len] + 1 : 0;
          const std::uint32_t b2 = b + len < m ? rnk[b + len] + 1 : 0;
          diff = a2 != b2;
        }
        cur += diff;
        tmp[b] = cur;
      }
      rnk.swap(tmp);
    }

    sa_.assign(m + 1, 0);
    for (std::uint32_t t = 0; t < m; ++t) sa_[t + 1] = sa0[t] + 1;
  }

  void finish() {
    isa_.assign(m_ + 1, 0);
    for (std::uint32_t t = 1; t <= m_; ++t) isa_[sa_[t]] = t;

    // Kasai
    lcp_.assign(m_ + 1, 0);
    std::uint32_t h = 0;
    for (std::uint32_t i = 1; i <= m_; ++i) {
      const std::uint32_t r = isa_[i];
      if (r == m_) {
        h = 0;
        continue;
      }
      const std::uint32_t j = sa_[r + 1];
      while (i + h <= m_ && j + h <= m_ && ext_[i + h - 1] == ext_[j + h - 1]) ++h;
      lcp_[r] = h;
      if (h) --h;
    }

    // per-block minima plus a sparse table over blocks
    if (m_ >= 2) {
      nb_ = (m_ - 2) / kBlock + 1;
      bmin_.assign(nb_, UINT32_MAX);
      for (std::uint32_t t = 1; t <= m_ - 1; ++t)
        bmin_[block_of(t)] = std::min(bmin_[block_of(t)], lcp_[t]);
      levels_ = 1;
      while ((1u << levels_) <= nb_) ++levels_;
      st_.assign(levels_, std::vector<std::uint32_t>(nb_));
      for (std::uint32_t b = 0; b < nb_; ++b) st_[0][b] = bmin_[b];
      for (std::uint32_t k = 1; k < levels_; ++k)
        for (std::uint32_t b = 0; b + (1u << k) <= nb_; ++b)
          st_[k][b] = std::min(st_[k - 1][b], st_[k - 1][b + (1u << (k - 1))]);
    }
  }

  static constexpr std::uint32_t kBlock = 64;
  static constexpr std::uint32_t kNoBlock = UINT32_MAX;

  std::uint32_t block_of(std::uint32_t t) const { return (t - 1) / kBlock; }
  std::uint32_t block_start(std::uint32_t b) const { return b * kBlock + 1; }
  std::uint32_t block_end(std::uint32_t b) const { return std::min(m_ - 1, (b + 1) * kBlock); }

  std::uint32_t block_range_min(std::uint32_t b1, std::uint32_t b2) const {
    const std::uint32_t k = 31 - __builtin_clz(b2 - b1 + 1);
    return std::min(st_[k][b1], st_[k][b2 - (1u << k) + 1]);
  }

  std::uint32_t rightmost_block_below(std::uint32_t b1, std::uint32_t b2, std::uint32_t d) const {
    if (block_range_min(b1, b2) >= d) return kNoBlock;
    while (b1 < b2) {
      const std::uint32_t mid = b1 + (b2 - b1) / 2;
      if (block_range_min(mid + 1, b2) < d)
        b1 = mid + 1;
      else
        b2 = mid;
    }
    return b1;
  }

  std::uint32_t leftmost_block_below(std::uint32_t b1, std::uint32_t b2, std::uint32_t d) const {
    if (b1 > b2 || block_range_min(b1, b2) >= d) return kNoBlock;
    while (b1 < b2) {
      const std::uint32_t mid = b1 + (b2 - b1) / 2;
      if (block_range_min(b1, mid) < d)
        b2 = mid;
      else
        b1 = mid + 1;
    }
    return b1;
  }

  std::vector<Symbol> ext_;
  std::uint32_t m_ = 0;
  std::uint32_t sigma_ = 0;
  std::vector<std::uint32_t> sa_, isa_, lcp_;
  std::uint32_t nb_ = 0, levels_ = 0;
  std::vector<std::uint32_t> bmin_;
  std::vector<std::vector<std::uint32_t>> st_;
};

}  // namespace subzip
