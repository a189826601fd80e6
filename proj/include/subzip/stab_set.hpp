#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "subzip/types.hpp"

namespace subzip {

// Per-query dynamic dictionary of weighted suffix-rank intervals. Intervals form
// a laminar family (equal, disjoint, or strictly nested — nested ranges are
// ancestor/descendant loci) and strictly nested intervals carry strictly longer
// strings, so a capped longest-match query is: find the innermost stored interval
// containing q, then walk outward to the first interval holding a length <= cap.
//
// Intervals live in a treap keyed by (lo ascending, hi descending) augmented with
// subtree max-hi, giving the innermost stabber in O(log z) expected time; the
// laminar forest is kept alongside for the outward walk. Each distinct interval
// stores all its (length, id) entries.
class StabSet {
 public:
  struct Entry {
    SaInterval interval;
    std::uint32_t len = 0;
    std::uint32_t id = 0;
  };

  explicit StabSet(std::uint32_t universe) : universe_(universe) {
    if (universe < 1) throw std::invalid_argument("StabSet: universe must be nonempty");
    pool_.push_back(Node{1, universe, next_prio(), -1, -1, universe, -1, {}, {{0, 0}}});
    troot_ = 0;
    count_ = 1;
  }

  std::uint32_t universe() const { return universe_; }
  std::size_t size() const { return count_; }

  void insert(SaInterval iv, std::uint32_t len, std::uint32_t id) {
    if (iv.lo < 1 || iv.hi > universe_ || iv.lo > iv.hi)
      throw std::out_of_range("StabSet::insert: interval outside universe");
    if (len < 1) throw std::invalid_argument("StabSet::insert: len must be positive");

    const int ex = find_exact(iv.lo, iv.hi);
    if (ex >= 0) {
      Node& nd = pool_[ex];
      if (nd.up >= 0 && len <= pool_[nd.up].lens.back().first)
        throw consistency_error("StabSet: inward monotonicity violated against enclosing interval");
      for (int kid : nd.kids)
        if (len >= pool_[kid].lens.front().first)
          throw consistency_error("StabSet: inward monotonicity violated against nested interval");
      nd.lens.insert(std::upper_bound(nd.lens.begin(), nd.lens.end(), std::make_pair(len, id)),
                     {len, id});
      ++count_;
      return;
    }

    int p = innermost(troot_, iv.lo);
    while (p >= 0 && pool_[p].hi < iv.hi) {
      if (pool_[p].lo < iv.lo)
        throw consistency_error("StabSet: inserted interval crosses a stored interval");
      p = pool_[p].up;
    }
    if (p < 0) throw consistency_error("StabSet: no enclosing interval (seed missing)");
    if (len <= pool_[p].lens.back().first)
      throw consistency_error("StabSet: inward monotonicity violated against enclosing interval");

    const int nn = static_cast<int>(pool_.size());
    pool_.push_back(Node{iv.lo, iv.hi, next_prio(), -1, -1, iv.hi, p, {}, {{len, id}}});

    auto& pk = pool_[p].kids;
    std::size_t first = 0;
    while (first < pk.size() && pool_[pk[first]].lo < iv.lo) ++first;
    if (first > 0 && pool_[pk[first - 1]].hi >= iv.lo)
      throw consistency_error("StabSet: inserted interval crosses a stored interval");
    std::size_t last = first;
    while (last < pk.size() && pool_[pk[last]].lo <= iv.hi) ++last;
    if (last > first && pool_[pk[last - 1]].hi > iv.hi)
      throw consistency_error("StabSet: inserted interval crosses a stored interval");
    for (std::size_t k = first; k < last; ++k) {
      if (len >= pool_[pk[k]].lens.front().first)
        throw consistency_error("StabSet: inward monotonicity violated against nested interval");
      pool_[pk[k]].up = nn;
      pool_[nn].kids.push_back(pk[k]);
    }
    pk.erase(pk.begin() + first, pk.begin() + last);
    pk.insert(pk.begin() + first, nn);

    treap_insert(nn);
    ++count_;
  }

  // Among entries whose interval contains q and whose len <= cap: max len, ties
  // broken by larger id. The seed ([1..universe], 0, 0) guarantees a result.
  Entry stab_longest(Rank q, std::uint32_t cap) const {
    if (q < 1 || q > universe_) throw std::out_of_range("StabSet::stab_longest: point outside universe");
    int t = innermost(troot_, q);
    while (t >= 0) {
      const Node& nd = pool_[t];
      if (nd.lens.front().first <= cap) {
        auto it = std::upper_bound(nd.lens.begin(), nd.lens.end(),
                                   std::make_pair(cap, UINT32_MAX));
        --it;
        return {{nd.lo, nd.hi}, it->first, it->second};
      }
      t = nd.up;
    }
    throw consistency_error("StabSet::stab_longest: no stabbing interval");
  }

  // All stored entries, ordered by id.
  std::vector<Entry> entries() const {
    std::vector<Entry> out;
    out.reserve(count_);
    for (const Node& nd : pool_)
      for (auto [len, id] : nd.lens) out.push_back({{nd.lo, nd.hi}, len, id});
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    return out;
  }

 private:
  struct Node {
    std::uint32_t lo, hi;
    std::uint32_t prio;
    int left, right;
    std::uint32_t max_hi;
    int up;                 // laminar parent
    std::vector<int> kids;  // laminar children, ordered by lo
    std::vector<std::pair<std::uint32_t, std::uint32_t>> lens;  // (len, id) ascending
  };

  std::uint32_t next_prio() {
    rng_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = rng_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::uint32_t>((z ^ (z >> 31)) >> 32);
  }

  static bool key_less(std::uint32_t alo, std::uint32_t ahi, std::uint32_t blo, std::uint32_t bhi) {
    return alo != blo ? alo < blo : ahi > bhi;
  }

  void pull(int t) {
    Node& nd = pool_[t];
    nd.max_hi = nd.hi;
    if (nd.left >= 0) nd.max_hi = std::max(nd.max_hi, pool_[nd.left].max_hi);
    if (nd.right >= 0) nd.max_hi = std::max(nd.max_hi, pool_[nd.right].max_hi);
  }

  // split into keys < (klo,khi) and the rest
  void split(int t, std::uint32_t klo, std::uint32_t khi, int& a, int& b) {
    if (t < 0) {
      a = b = -1;
      return;
    }
    if (key_less(pool_[t].lo, pool_[t].hi, klo, khi)) {
      split(pool_[t].right, klo, khi, pool_[t].right, b);
      a = t;
    } else {
      split(pool_[t].left, klo, khi, a, pool_[t].left);
      b = t;
    }
    pull(t);
  }

  int merge(int a, int b) {
    if (a < 0) return b;
    if (b < 0) return a;
    if (pool_[a].prio >= pool_[b].prio) {
      pool_[a].right = merge(pool_[a].right, b);
      pull(a);
      return a;
    }
    pool_[b].left = merge(a, pool_[b].left);
    pull(b);
    return b;
  }

  void treap_insert(int nn) {
    int a, b;
    split(troot_, pool_[nn].lo, pool_[nn].hi, a, b);
    troot_ = merge(merge(a, nn), b);
  }

  int find_exact(std::uint32_t lo, std::uint32_t hi) const {
    int t = troot_;
    while (t >= 0) {
      const Node& nd = pool_[t];
      if (nd.lo == lo && nd.hi == hi) return t;
      t = key_less(nd.lo, nd.hi, lo, hi) ? nd.right : nd.left;
    }
    return -1;
  }

  // Innermost stored interval containing q: maximum key among nodes with
  // lo <= q <= hi (max lo, then min hi). Subtrees without any hi >= q are pruned.
  int innermost(int t, std::uint32_t q) const {
    if (t < 0 || pool_[t].max_hi < q) return -1;
    const Node& nd = pool_[t];
    if (nd.lo > q) return innermost(nd.left, q);
    const int r = innermost(nd.right, q);
    if (r >= 0) return r;
    if (nd.hi >= q) return t;
    return innermost(nd.left, q);
  }

  std::uint32_t universe_;
  std::vector<Node> pool_;
  int troot_ = -1;
  std::uint64_t rng_ = 0x8c5f4e1a2b3c4d5eull;
  std::size_t count_ = 0;
};

}  // namespace subzip
