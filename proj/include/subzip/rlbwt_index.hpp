#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "subzip/suffix_tables.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Run-length BWT backend. Stores the runs of the BWT of the sentinel-extended
// text, per-symbol run directories for rank queries, cumulative symbol counts,
// and inverse-suffix-array samples at every s-th text position (plus the last).
// suffix_rank and extraction walk the LF mapping from the nearest sample;
// substring_range extracts T[x..y] and backward-searches it.
class RlbwtIndex {
 public:
  explicit RlbwtIndex(const std::vector<Symbol>& text, std::uint32_t sample_rate = 64) {
    if (text.empty()) throw std::invalid_argument("RlbwtIndex: empty text");
    if (sample_rate < 1) throw std::invalid_argument("RlbwtIndex: sample rate must be positive");
    const SuffixTables st(text);
    n_ = st.n();
    m_ = st.m();
    sigma_ = st.sigma();
    sample_rate_ = sample_rate;

    Symbol prev = 0;
    bool first = true;
    for (std::uint32_t t = 1; t <= m_; ++t) {
      const std::uint32_t p = st.sa_at(t);
      const Symbol c = p == 1 ? st.text_at(m_) : st.text_at(p - 1);
      if (first || c != prev) {
        run_sym_.push_back(c);
        run_len_.push_back(1);
        first = false;
        prev = c;
      } else {
        run_len_.back()++;
      }
    }

    for (std::uint32_t i = 1; i <= m_; i += sample_rate_) samples_.push_back(st.isa_at(i));
    if ((m_ - 1) % sample_rate_ != 0) samples_.push_back(st.isa_at(m_));

    finish();
  }

  static RlbwtIndex from_parts(std::uint32_t n, std::uint32_t sigma, std::uint32_t sample_rate,
                               std::vector<Symbol> run_sym, std::vector<std::uint64_t> run_len,
                               std::vector<std::uint32_t> samples) {
    RlbwtIndex ix;
    ix.n_ = n;
    ix.m_ = n + 1;
    ix.sigma_ = sigma;
    ix.sample_rate_ = sample_rate;
    ix.run_sym_ = std::move(run_sym);
    ix.run_len_ = std::move(run_len);
    ix.samples_ = std::move(samples);
    if (ix.run_sym_.size() != ix.run_len_.size() || ix.run_sym_.empty())
      throw format_error("rlbwt: malformed runs");
    if (sample_rate < 1) throw format_error("rlbwt: bad sample rate");
    const std::size_t expect = (ix.m_ - 1) / sample_rate + 1 + ((ix.m_ - 1) % sample_rate != 0 ? 1 : 0);
    if (ix.samples_.size() != expect) throw format_error("rlbwt: sample count mismatch");
    ix.finish();
    return ix;
  }

  Position text_length() const { return n_; }
  std::uint32_t alphabet_size() const { return sigma_; }
  std::uint32_t run_count() const { return static_cast<std::uint32_t>(run_sym_.size()); }
  std::uint32_t sample_rate() const { return sample_rate_; }

  // LF step on raw ranks: from the rank of suffix i to the rank of suffix i-1.
  std::uint32_t lf_step(std::uint32_t raw_rank) const {
    check_position(raw_rank, m_, "RlbwtIndex::lf_step");
    const Symbol c = bwt_at(raw_rank);
    return count_[c] + rank_sym(c, raw_rank);
  }

  Rank suffix_rank(Position i) const {
    check_position(i, n_, "RlbwtIndex::suffix_rank");
    return raw_rank_of(i) - 1;
  }

  Symbol char_at(Position i) const {
    check_position(i, n_, "RlbwtIndex::char_at");
    return extract(i, i)[0];
  }

  // T[x..y] as symbol codes, read right-to-left off the LF walk from the nearest
  // sample past y.
  std::vector<Symbol> extract(Position x, Position y) const {
    check_interval(x, y, n_, "RlbwtIndex::extract");
    std::vector<Symbol> out(y - x + 1);
    std::uint32_t j = nearest_sampled_at_or_after(y + 1);
    std::uint32_t t = samples_[sample_slot(j)];
    while (j > x) {
      const Symbol c = bwt_at(t);
      if (j - 1 <= y) out[j - 1 - x] = c;
      t = count_[c] + rank_sym(c, t);
      --j;
    }
    return out;
  }

  SaInterval substring_range(Position x, Position y) const {
    check_interval(x, y, n_, "RlbwtIndex::substring_range");
    const std::vector<Symbol> pat = extract(x, y);
    std::uint32_t lo = 1, hi = m_;
    for (auto it = pat.rbegin(); it != pat.rend(); ++it) {
      const Symbol c = *it;
      lo = count_[c] + rank_sym(c, lo - 1) + 1;
      hi = count_[c] + rank_sym(c, hi);
      if (lo > hi) throw consistency_error("RlbwtIndex::substring_range: empty interval for in-text substring");
    }
    if (lo < 2) throw consistency_error("RlbwtIndex::substring_range: interval includes sentinel");
    return {lo - 1, hi - 1};
  }

  const std::vector<Symbol>& run_symbols() const { return run_sym_; }
  const std::vector<std::uint64_t>& run_lengths() const { return run_len_; }
  const std::vector<std::uint32_t>& samples() const { return samples_; }

  // Accounting: run symbols and lengths, samples, and the cumulative-count table.
  std::uint64_t memory_bits(std::uint32_t int_width) const {
    return std::uint64_t(run_count()) * (8 + int_width) +
           std::uint64_t(samples_.size()) * int_width + std::uint64_t(sigma_ + 2) * int_width;
  }

 private:
  RlbwtIndex() = default;

  void finish() {
    run_start_.resize(run_sym_.size());
    std::uint64_t acc = 1;
    for (std::size_t k = 0; k < run_sym_.size(); ++k) {
      run_start_[k] = static_cast<std::uint32_t>(acc);
      acc += run_len_[k];
      if (k > 0 && run_sym_[k] == run_sym_[k - 1]) throw format_error("rlbwt: adjacent runs share a symbol");
    }
    if (acc != std::uint64_t(m_) + 1) throw format_error("rlbwt: run lengths do not sum to m");

    count_.assign(sigma_ + 2, 0);
    std::vector<std::uint64_t> freq(sigma_ + 1, 0);
    for (std::size_t k = 0; k < run_sym_.size(); ++k) {
      if (run_sym_[k] > sigma_) throw format_error("rlbwt: run symbol out of range");
      freq[run_sym_[k]] += run_len_[k];
    }
    for (std::uint32_t c = 1; c <= sigma_ + 1; ++c)
      count_[c] = count_[c - 1] + static_cast<std::uint32_t>(freq[c - 1]);

    sym_runs_.assign(sigma_ + 1, {});
    sym_cum_.assign(sigma_ + 1, {});
    for (std::size_t k = 0; k < run_sym_.size(); ++k) {
      const Symbol c = run_sym_[k];
      sym_cum_[c].push_back(sym_runs_[c].empty()
                                ? 0
                                : sym_cum_[c].back() +
                                      static_cast<std::uint32_t>(run_len_[sym_runs_[c].back()]));
      sym_runs_[c].push_back(static_cast<std::uint32_t>(k));
    }
    for (std::uint32_t i = 0; i < samples_.size(); ++i)
      if (samples_[i] < 1 || samples_[i] > m_) throw format_error("rlbwt: sample out of range");
  }

  Symbol bwt_at(std::uint32_t t) const {
    const std::size_t k =
        std::upper_bound(run_start_.begin(), run_start_.end(), t) - run_start_.begin() - 1;
    return run_sym_[k];
  }

  // occurrences of c in BWT[1..pos]; pos may be 0
  std::uint32_t rank_sym(Symbol c, std::uint32_t pos) const {
    if (pos == 0 || sym_runs_[c].empty()) return 0;
    const auto& runs = sym_runs_[c];
    std::uint32_t lo = 0, hi = static_cast<std::uint32_t>(runs.size());
    while (lo < hi) {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      if (run_start_[runs[mid]] <= pos)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == 0) return 0;
    const std::uint32_t k = runs[lo - 1];
    const std::uint32_t inside =
        std::min<std::uint64_t>(pos - run_start_[k] + 1, run_len_[k]);
    return sym_cum_[c][lo - 1] + inside;
  }

  std::uint32_t sample_slot(std::uint32_t pos) const {
    if (pos == m_ && (m_ - 1) % sample_rate_ != 0)
      return static_cast<std::uint32_t>(samples_.size()) - 1;
    return (pos - 1) / sample_rate_;
  }

  std::uint32_t nearest_sampled_at_or_after(std::uint32_t i) const {
    const std::uint32_t k = (i - 1 + sample_rate_ - 1) / sample_rate_;
    const std::uint32_t pos = 1 + k * sample_rate_;
    return pos > m_ ? m_ : pos;
  }

  std::uint32_t raw_rank_of(Position i) const {
    const std::uint32_t j = nearest_sampled_at_or_after(i);
    std::uint32_t t = samples_[sample_slot(j)];
    for (std::uint32_t k = j; k > i; --k) {
      const Symbol c = bwt_at(t);
      t = count_[c] + rank_sym(c, t);
    }
    return t;
  }

  std::uint32_t n_ = 0, m_ = 0, sigma_ = 0, sample_rate_ = 64;
  std::vector<Symbol> run_sym_;
  std::vector<std::uint64_t> run_len_;
  std::vector<std::uint32_t> run_start_;
  std::vector<std::uint32_t> samples_;
  std::vector<std::uint32_t> count_;
  std::vector<std::vector<std::uint32_t>> sym_runs_;
  std::vector<std::vector<std::uint32_t>> sym_cum_;
};

}  // namespace subzip
