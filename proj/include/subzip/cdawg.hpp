#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "subzip/suffix_tables.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Compact directed acyclic word graph of the sentinel-extended text, laid out as
// two integer arrays: one entry of three values per node (incoming-edge group
// start, max path length, number of paths to the sink) and one per edge (parent
// node, label length, aggregated value = paths through lexicographically smaller
// sibling edges). Edges are grouped by child node and sorted by
// min_len(parent) + label_len, so the unique in-edge matching a remaining path
// length is found by binary search. First label characters are kept for edges
// leaving the root only; they give character access via the top edge of a path.
//
// Queries climb from the sink towards the root along the unique path whose total
// label length equals the suffix length, reading rank (sum of aggregated values),
// locus and range width off the climbed path.
class Cdawg {
 public:
  struct Node {
    std::uint32_t in_edge_start;  // (V1)
    std::uint32_t len_max;        // (V2)
    std::uint32_t path_count;     // (V3)
    std::uint32_t len_min;        // derived, not serialized
  };

  struct Edge {
    std::uint32_t parent;     // (E1)
    std::uint32_t label_len;  // (E2)
    std::uint32_t agg;        // (E3)
  };

  struct ClimbStep {
    std::uint32_t edge;       // index into the edge array
    std::uint32_t node;       // lower endpoint of that edge
    std::uint32_t prefix_len; // length of the root-to-node prefix along this path
    std::uint64_t below_agg;  // sum of agg over edges strictly below the node
  };

  // The unique root-to-sink path of length m - i + 1, top-down. The bottom step's
  // node is the sink; agg_total equals the normalized rank of suffix i.
  struct PathRecord {
    Position start = 0;
    std::uint32_t length = 0;
    std::vector<ClimbStep> steps;
    std::uint64_t agg_total = 0;
  };

  explicit Cdawg(const std::vector<Symbol>& text) { build(text); }

  static Cdawg from_arrays(std::uint32_t n, std::uint32_t sigma, std::vector<Node> nodes,
                           std::vector<Edge> edges,
                           const std::vector<std::pair<std::uint32_t, Symbol>>& root_chars) {
    Cdawg g;
    g.n_ = n;
    g.m_ = n + 1;
    g.sigma_ = sigma;
    g.nodes_ = std::move(nodes);
    g.edges_ = std::move(edges);
    if (g.nodes_.size() < 2) throw format_error("cdawg: fewer than two nodes");
    g.sink_ = static_cast<std::uint32_t>(g.nodes_.size()) - 1;
    g.edge_char_.assign(g.edges_.size(), 0);
    for (auto [e, c] : root_chars) {
      if (e >= g.edges_.size() || g.edges_[e].parent != 0) throw format_error("cdawg: bad root edge char entry");
      g.edge_char_[e] = c;
    }
    g.derive_len_min();
    g.validate();
    return g;
  }

  Position text_length() const { return n_; }
  std::uint32_t alphabet_size() const { return sigma_; }

  Symbol char_at(Position i) const {
    check_position(i, n_, "Cdawg::char_at");
    const PathRecord rec = climb_path(i);
    const Edge& top = edges_[rec.steps.front().edge];
    if (top.parent != 0) throw consistency_error("Cdawg::char_at: path does not reach the root");
    return edge_char_[rec.steps.front().edge];
  }

  Rank suffix_rank(Position i) const {
    check_position(i, n_, "Cdawg::suffix_rank");
    return static_cast<Rank>(climb_path(i).agg_total);
  }

  SaInterval substring_range(Position x, Position y) const {
    check_interval(x, y, n_, "Cdawg::substring_range");
    const std::uint32_t d = y - x + 1;
    const PathRecord rec = climb_path(x);
    for (const ClimbStep& s : rec.steps) {
      if (s.prefix_len >= d) {
        const std::uint64_t left = rec.agg_total - s.below_agg;
        if (left < 1) throw consistency_error("Cdawg::substring_range: empty left border");
        return {static_cast<Rank>(left),
                static_cast<Rank>(left + nodes_[s.node].path_count - 1)};
      }
    }
    throw consistency_error("Cdawg::substring_range: locus not on climb path");
  }

  PathRecord climb_path(Position i) const {
    check_position(i, n_, "Cdawg::climb_path");
    PathRecord rec;
    rec.start = i;
    rec.length = m_ - i + 1;
    std::uint32_t v = sink_;
    std::uint32_t rem = rec.length;
    while (v != 0) {
      const std::uint32_t e = find_in_edge(v, rem);
      rec.steps.push_back({e, v, rem, 0});
      rem -= edges_[e].label_len;
      v = edges_[e].parent;
    }
    if (rem != 0) throw consistency_error("Cdawg::climb_path: leftover length at root");
    std::reverse(rec.steps.begin(), rec.steps.end());
    std::uint64_t below = 0;
    for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it) {
      it->below_agg = below;
      below += edges_[it->edge].agg;
    }
    rec.agg_total = below;
    return rec;
  }

  // Distribution of the number of edges over all m root-to-sink paths.
  std::map<std::uint32_t, std::uint64_t> path_length_histogram() const {
    const std::uint32_t V = node_count();
    std::vector<std::uint32_t> topo(V);
    std::iota(topo.begin(), topo.end(), 0u);
    std::sort(topo.begin(), topo.end(),
              [&](std::uint32_t a, std::uint32_t b) { return nodes_[a].len_max < nodes_[b].len_max; });

    std::vector<std::uint32_t> pending(V, 0);  // out-edges not yet consumed
    for (const Edge& e : edges_) pending[e.parent]++;

    // dist[v]: path edge-count distribution as (offset, dense counts)
    std::vector<std::pair<std::uint32_t, std::vector<std::uint64_t>>> dist(V);
    dist[0] = {0, {1}};
    for (std::uint32_t v : topo) {
      if (v == 0) continue;
      auto& [off, counts] = dist[v];
      off = UINT32_MAX;
      for (std::uint32_t e = group_begin(v); e < group_end(v); ++e)
        off = std::min(off, dist[edges_[e].parent].first + 1);
      for (std::uint32_t e = group_begin(v); e < group_end(v); ++e) {
        const auto& [poff, pcounts] = dist[edges_[e].parent];
        if (counts.size() < poff + 1 - off + pcounts.size())
          counts.resize(poff + 1 - off + pcounts.size(), 0);
        for (std::size_t k = 0; k < pcounts.size(); ++k) counts[poff + 1 - off + k] += pcounts[k];
      }
      for (std::uint32_t e = group_begin(v); e < group_end(v); ++e) {
        const std::uint32_t u = edges_[e].parent;
        if (--pending[u] == 0 && u != sink_) {
          dist[u].second.clear();
          dist[u].second.shrink_to_fit();
        }
      }
    }
    std::map<std::uint32_t, std::uint64_t> hist;
    const auto& [soff, scounts] = dist[sink_];
    for (std::size_t k = 0; k < scounts.size(); ++k)
      if (scounts[k]) hist[soff + static_cast<std::uint32_t>(k)] = scounts[k];
    return hist;
  }

  std::uint32_t node_count() const { return static_cast<std::uint32_t>(nodes_.size()); }
  std::uint64_t stored_edge_count() const { return edges_.size(); }

  // Edge count with pure-sentinel edges excluded. A label consisting of the
  // sentinel alone can only occur on a length-1 edge into the sink.
  std::uint64_t edge_count() const {
    std::uint64_t drop = 0;
    for (std::uint32_t e = group_begin(sink_); e < group_end(sink_); ++e)
      if (edges_[e].label_len == 1) ++drop;
    return edges_.size() - drop;
  }

  std::uint64_t memory_bits(std::uint32_t int_width) const {
    const std::uint64_t lg_sigma = bit_width_ceil(sigma_);
    return 3ull * int_width * (node_count() + edge_count()) + std::uint64_t(sigma_) * lg_sigma;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<std::pair<std::uint32_t, Symbol>> root_edge_chars() const {
    std::vector<std::pair<std::uint32_t, Symbol>> out;
    for (std::uint32_t e = 0; e < edges_.size(); ++e)
      if (edges_[e].parent == 0) out.emplace_back(e, edge_char_[e]);
    return out;
  }

  // Structural checks shared by construction, loading and tests: in-edge key
  // ranges of every node tile [len_min..len_max] exactly (which is what makes any
  // feasible climb length match exactly one edge), path counts are flow-conserved,
  // and the root/sink annotations are as defined.
  void validate() const {
    const std::uint32_t V = node_count();
    if (nodes_[0].len_min != 0 || nodes_[0].len_max != 0)
      throw consistency_error("cdawg: root len interval must be [0..0]");
    if (nodes_[0].path_count != m_) throw consistency_error("cdawg: root path count != m");
    if (nodes_[sink_].path_count != 1) throw consistency_error("cdawg: sink path count != 1");
    if (nodes_[sink_].len_min != 1 || nodes_[sink_].len_max != m_)
      throw consistency_error("cdawg: sink len interval must be [1..m]");
    if (group_begin(0) != 0 || group_end(0) != 0) throw consistency_error("cdawg: root has in-edges");

    for (std::uint32_t v = 1; v < V; ++v) {
      const std::uint32_t gs = group_begin(v), ge = group_end(v);
      if (gs >= ge) throw consistency_error("cdawg: node without in-edges");
      std::uint32_t expect = nodes_[v].len_min;
      for (std::uint32_t e = gs; e < ge; ++e) {
        const Edge& ed = edges_[e];
        if (ed.parent >= V || ed.parent == sink_ || ed.label_len < 1)
          throw consistency_error("cdawg: malformed edge");
        const std::uint32_t k = nodes_[ed.parent].len_min + ed.label_len;
        const std::uint32_t K = nodes_[ed.parent].len_max + ed.label_len;
        if (k != expect) throw consistency_error("cdawg: in-edge key ranges do not tile len interval");
        expect = K + 1;
      }
      if (expect != nodes_[v].len_max + 1)
        throw consistency_error("cdawg: in-edge key ranges do not reach len_max");
    }

    std::vector<std::uint64_t> outflow(V, 0);
    for (std::uint32_t v = 1; v < V; ++v)
      for (std::uint32_t e = group_begin(v); e < group_end(v); ++e)
        outflow[edges_[e].parent] += nodes_[v].path_count;
    for (std::uint32_t v = 0; v < V; ++v) {
      if (v == sink_) {
        if (outflow[v] != 0) throw consistency_error("cdawg: sink has out-edges");
      } else if (outflow[v] != nodes_[v].path_count) {
        throw consistency_error("cdawg: path counts not flow-conserved");
      }
    }
  }

  static std::uint64_t bit_width_ceil(std::uint32_t v) {
    std::uint64_t b = 0;
    while ((1ull << b) < v) ++b;
    return b;
  }

 private:
  Cdawg() = default;

  std::uint32_t group_begin(std::uint32_t v) const { return nodes_[v].in_edge_start; }
  std::uint32_t group_end(std::uint32_t v) const {
    return v + 1 < nodes_.size() ? nodes_[v + 1].in_edge_start
                                 : static_cast<std::uint32_t>(edges_.size());
  }

  // Unique in-edge of v whose key range contains the remaining length:
  // first edge with len_max(parent) + label_len >= rem.
  std::uint32_t find_in_edge(std::uint32_t v, std::uint32_t rem) const {
    std::uint32_t lo = group_begin(v), hi = group_end(v);
    if (lo >= hi) throw consistency_error("Cdawg::climb_path: node without in-edges");
    while (lo < hi) {
      const std::uint32_t mid = lo + (hi - lo) / 2;
      const Edge& e = edges_[mid];
      if (nodes_[e.parent].len_max + e.label_len >= rem)
        hi = mid;
      else
        lo = mid + 1;
    }
    if (lo >= group_end(v)) throw consistency_error("Cdawg::climb_path: no in-edge matches length");
    const Edge& e = edges_[lo];
    if (nodes_[e.parent].len_min + e.label_len > rem)
      throw consistency_error("Cdawg::climb_path: no in-edge matches length");
    return lo;
  }

  void derive_len_min() {
    const std::uint32_t V = node_count();
    std::vector<std::uint32_t> topo(V);
    std::iota(topo.begin(), topo.end(), 0u);
    std::sort(topo.begin(), topo.end(),
              [&](std::uint32_t a, std::uint32_t b) { return nodes_[a].len_max < nodes_[b].len_max; });
    nodes_[0].len_min = 0;
    for (std::uint32_t v : topo) {
      if (v == 0) continue;
      std::uint32_t best = UINT32_MAX;
      for (std::uint32_t e = group_begin(v); e < group_end(v); ++e) {
        const Edge& ed = edges_[e];
        if (ed.parent >= V || nodes_[ed.parent].len_max >= nodes_[v].len_max)
          throw format_error("cdawg: edge order is not topological");
        best = std::min(best, nodes_[ed.parent].len_min + ed.label_len);
      }
      nodes_[v].len_min = best;
    }
  }

  void build(const std::vector<Symbol>& text) {
    if (text.empty()) throw std::invalid_argument("Cdawg: empty text");
    const SuffixTables st(text);
    n_ = st.n();
    m_ = st.m();
    sigma_ = st.sigma();

    // internal suffix tree nodes as lcp-intervals (depth, [l..r]), root included
    struct StNode {
      std::uint32_t depth, l, r;
    };
    std::vector<StNode> stn;
    {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> stk;  // (depth, left boundary)
      stk.emplace_back(0, 1);
      for (std::uint32_t t = 2; t <= m_; ++t) {
        std::uint32_t lb = t - 1;
        const std::uint32_t cur = st.lcp_at(t - 1);
        while (stk.back().first > cur) {
          stn.push_back({stk.back().first, stk.back().second, t - 1});
          lb = stk.back().second;
          stk.pop_back();
        }
        if (stk.back().first < cur) stk.emplace_back(cur, lb);
      }
      while (!stk.empty()) {
        stn.push_back({stk.back().first, stk.back().second, m_});
        stk.pop_back();
      }
    }
    const std::uint32_t nv = static_cast<std::uint32_t>(stn.size());

    std::vector<std::uint32_t> byint(nv);
    std::iota(byint.begin(), byint.end(), 0u);
    std::sort(byint.begin(), byint.end(), [&](std::uint32_t a, std::uint32_t b) {
      return stn[a].l != stn[b].l ? stn[a].l < stn[b].l : stn[a].r < stn[b].r;
    });
    auto find_node = [&](std::uint32_t l, std::uint32_t r) -> std::uint32_t {
      std::uint32_t lo = 0, hi = nv;
      while (lo < hi) {
        const std::uint32_t mid = lo + (hi - lo) / 2;
        const StNode& x = stn[byint[mid]];
        if (x.l < l || (x.l == l && x.r < r))
          lo = mid + 1;
        else
          hi = mid;
      }
      if (lo == nv || stn[byint[lo]].l != l || stn[byint[lo]].r != r)
        throw consistency_error("Cdawg: suffix-link target interval is not a node");
      return byint[lo];
    };

    // merge suffix-link neighbours with equal subtree size (equal end-position sets)
    std::vector<std::uint32_t> uf(nv);
    std::iota(uf.begin(), uf.end(), 0u);
    auto find_root = [&](std::uint32_t x) {
      while (uf[x] != x) x = uf[x] = uf[uf[x]];
      return x;
    };
    std::uint32_t st_root = 0;
    for (std::uint32_t u = 0; u < nv; ++u) {
      if (stn[u].depth == 0) {
        st_root = u;
        continue;
      }
      if (stn[u].depth < 2) continue;
      const std::uint32_t p = st.isa_at(st.sa_at(stn[u].l) + 1);
      const std::uint32_t d = stn[u].depth;
      const std::uint32_t lo = st.psv_raw(p, d - 1) + 1;
      const std::uint32_t hi = st.nsv_raw(p, d - 1);
      const std::uint32_t w = find_node(lo, hi);
      if (stn[w].depth + 1 != d)
        throw consistency_error("Cdawg: suffix-link target has wrong depth");
      if (stn[w].r - stn[w].l == stn[u].r - stn[u].l) uf[find_root(u)] = find_root(w);
    }

    // classes: representative = deepest member; len interval = member depth range
    std::vector<std::uint32_t> cls_rep(nv, UINT32_MAX), cls_min(nv), cls_size(nv, 0);
    for (std::uint32_t u = 0; u < nv; ++u) {
      const std::uint32_t c = find_root(u);
      if (cls_rep[c] == UINT32_MAX || stn[u].depth > stn[cls_rep[c]].depth) {
        if (cls_rep[c] == UINT32_MAX) cls_min[c] = stn[u].depth;
        cls_rep[c] = u;
      }
      cls_min[c] = std::min(cls_min[c], stn[u].depth);
      cls_size[c]++;
    }

    std::vector<std::uint32_t> class_roots;
    for (std::uint32_t u = 0; u < nv; ++u)
      if (find_root(u) == u && u != find_root(st_root)) class_roots.push_back(u);
    std::sort(class_roots.begin(), class_roots.end(), [&](std::uint32_t a, std::uint32_t b) {
      const StNode& x = stn[cls_rep[a]];
      const StNode& y = stn[cls_rep[b]];
      return x.l != y.l ? x.l < y.l : x.depth < y.depth;
    });

    const std::uint32_t V = static_cast<std::uint32_t>(class_roots.size()) + 2;
    sink_ = V - 1;
    std::vector<std::uint32_t> class_id(nv, UINT32_MAX);
    class_id[find_root(st_root)] = 0;
    for (std::uint32_t k = 0; k < class_roots.size(); ++k) class_id[class_roots[k]] = k + 1;

    nodes_.assign(V, Node{});
    nodes_[0] = {0, 0, m_, 0};
    nodes_[sink_] = {0, m_, 1, 1};
    for (std::uint32_t c : class_roots) {
      const std::uint32_t id = class_id[c];
      const StNode& rep = stn[cls_rep[c]];
      if (rep.depth - cls_min[c] + 1 != cls_size[c])
        throw consistency_error("Cdawg: merged class depths are not contiguous");
      nodes_[id] = {0, rep.depth, rep.r - rep.l + 1, cls_min[c]};
    }

    // one edge per child of each representative, in suffix-array (lexicographic) order
    struct RawEdge {
      std::uint32_t child, parent, label_len, agg;
      Symbol first_char;
    };
    std::vector<RawEdge> raw;
    raw.reserve(2 * static_cast<std::size_t>(m_));
    auto emit_children = [&](std::uint32_t parent_id, const StNode& rep) {
      const std::uint32_t d = rep.depth;
      std::uint32_t a = rep.l;
      while (a <= rep.r) {
        std::uint32_t b = rep.r;
        if (a < rep.r) {
          const std::uint32_t t = st.first_below(a, rep.r - 1, d + 1);
          if (t != 0) b = t;
        }
        std::uint32_t child_id, clen;
        if (a == b) {
          child_id = sink_;
          clen = (m_ - st.sa_at(a) + 1) - d;
        } else {
          const std::uint32_t w = find_node(a, b);
          child_id = class_id[find_root(w)];
          clen = stn[w].depth - d;
        }
        if (clen < 1) throw consistency_error("Cdawg: empty edge label");
        raw.push_back({child_id, parent_id, clen, a - rep.l, st.text_at(st.sa_at(a) + d)});
        a = b + 1;
      }
    };
    emit_children(0, stn[cls_rep[find_root(st_root)]]);
    for (std::uint32_t c : class_roots) emit_children(class_id[c], stn[cls_rep[c]]);

    std::sort(raw.begin(), raw.end(), [&](const RawEdge& x, const RawEdge& y) {
      if (x.child != y.child) return x.child < y.child;
      return nodes_[x.parent].len_min + x.label_len < nodes_[y.parent].len_min + y.label_len;
    });

    edges_.resize(raw.size());
    edge_char_.assign(raw.size(), 0);
    {
      std::uint32_t e = 0;
      for (std::uint32_t v = 0; v < V; ++v) {
        nodes_[v].in_edge_start = e;
        while (e < raw.size() && raw[e].child == v) {
          edges_[e] = {raw[e].parent, raw[e].label_len, raw[e].agg};
          if (raw[e].parent == 0) edge_char_[e] = raw[e].first_char;
          ++e;
        }
      }
      if (e != raw.size()) throw consistency_error("Cdawg: edge grouping failed");
    }

    // cross-check the class-derived len_min against the in-edge derivation
    std::vector<std::uint32_t> expect(V);
    for (std::uint32_t v = 0; v < V; ++v) expect[v] = nodes_[v].len_min;
    derive_len_min();
    for (std::uint32_t v = 0; v < V; ++v)
      if (expect[v] != nodes_[v].len_min)
        throw consistency_error("Cdawg: len_min mismatch between class and edge derivations");
    validate();
  }

  std::uint32_t n_ = 0, m_ = 0, sigma_ = 0, sink_ = 0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<Symbol> edge_char_;
};

}  // namespace subzip
