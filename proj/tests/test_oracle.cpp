#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "subzip/bench.hpp"
#include "textgen.hpp"

using namespace subzip;
using oracle::to_symbols;

TEST_CASE("naive suffix tables on pinned inputs") {
  const auto t = oracle::naive_suffix_tables(to_symbols("babac"));
  REQUIRE(std::vector<std::uint32_t>(t.sa.begin() + 1, t.sa.end()) ==
          std::vector<std::uint32_t>{2, 4, 1, 3, 5});
  const auto u = oracle::naive_suffix_tables(to_symbols("aaa"));
  REQUIRE(std::vector<std::uint32_t>(u.sa.begin() + 1, u.sa.end()) ==
          std::vector<std::uint32_t>{3, 2, 1});
  const auto v = oracle::naive_suffix_tables(to_symbols("ab"));
  REQUIRE(v.lcp == std::vector<std::uint32_t>{0, 0});  // slot 0 unused, one entry
}

TEST_CASE("naive range on pinned inputs") {
  const auto s = to_symbols("babac");
  REQUIRE(oracle::naive_range(s, 1, 2) == SaInterval{3, 4});
  REQUIRE(oracle::naive_range(s, 2, 3) == SaInterval{1, 1});
  REQUIRE(oracle::naive_range(s, 1, 5) == SaInterval{3, 3});
  REQUIRE(oracle::naive_range(s, 2, 2) == SaInterval{1, 2});
}

TEST_CASE("all_ranges agrees with naive_range") {
  SplitMix64 rng(5);
  for (int round = 0; round < 10; ++round) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(60));
    const auto s = textgen::random_text(n, 2 + round % 3, rng.next());
    const auto all = oracle::all_ranges(s);
    for (std::uint32_t x = 1; x <= n; ++x)
      for (std::uint32_t y = x; y <= n; ++y)
        REQUIRE(all[x][y - x] == oracle::naive_range(s, x, y));
  }
}

TEST_CASE("trie oracle reproduces the pinned factorizations") {
  const auto babac = to_symbols("babac");
  const auto f = oracle::trie_lz78(babac, 1, 5);
  REQUIRE(f.lz78().size() == 4);
  REQUIRE(f.lz78()[0] == Lz78Factor{1, 0, Symbol(2)});  // (0, b)
  REQUIRE(f.lz78()[1] == Lz78Factor{2, 0, Symbol(1)});  // (0, a)
  REQUIRE(f.lz78()[2] == Lz78Factor{3, 1, Symbol(1)});  // (1, a)
  REQUIRE(f.lz78()[3] == Lz78Factor{5, 0, Symbol(3)});  // (0, c)

  const auto aaaa = to_symbols("aaaa");
  const auto g = oracle::trie_lz78(aaaa, 1, 4);
  REQUIRE(g.lz78().size() == 3);
  REQUIRE(g.lz78()[0] == Lz78Factor{1, 0, Symbol(1)});
  REQUIRE(g.lz78()[1] == Lz78Factor{2, 1, Symbol(1)});
  REQUIRE(g.lz78()[2] == Lz78Factor{4, 1, std::nullopt});

  const auto abaab = to_symbols("abaabaabc");
  const auto h = oracle::trie_lz78(abaab, 1, 9);
  REQUIRE(h.lz78().size() == 6);  // a, b, aa, ba, ab, c
  REQUIRE(oracle::trie_lzd(abaab, 1, 9).lzd().size() == 3);  // ab, aab, aabc
  const auto d = oracle::trie_lzd(abaab, 1, 9).lzd();
  REQUIRE(d[0] == LzdFactor{1, LzdHalf::make_lit(1), LzdHalf::make_lit(2)});
  REQUIRE(d[1] == LzdFactor{3, LzdHalf::make_lit(1), LzdHalf::make_ref(1)});
  REQUIRE(d[2] == LzdFactor{6, LzdHalf::make_ref(2), LzdHalf::make_lit(3)});

  const auto dd = oracle::trie_lzd(aaaa, 1, 4).lzd();
  REQUIRE(dd.size() == 2);  // aa, aa
  REQUIRE(dd[0] == LzdFactor{1, LzdHalf::make_lit(1), LzdHalf::make_lit(1)});
  REQUIRE(dd[1] == LzdFactor{3, LzdHalf::make_ref(1), std::nullopt});

  const auto w = oracle::trie_lzmw(abaab, 1, 9).lzmw();
  REQUIRE(w.size() == 6);  // a, b, a, ab, aab, c
  REQUIRE(w[0] == LzmwFactor{1, false, 0, 1});
  REQUIRE(w[1] == LzmwFactor{2, false, 0, 2});
  REQUIRE(w[2] == LzmwFactor{3, false, 0, 1});
  REQUIRE(w[3] == LzmwFactor{4, true, 1, 0});
  REQUIRE(w[4] == LzmwFactor{6, true, 3, 0});
  REQUIRE(w[5] == LzmwFactor{9, false, 0, 3});

  const auto ww = oracle::trie_lzmw(aaaa, 1, 4).lzmw();
  REQUIRE(ww.size() == 3);  // a, a, aa
  REQUIRE(ww[2] == LzmwFactor{3, true, 1, 0});
}

TEST_CASE("oracle decode round trip on random substrings") {
  SplitMix64 rng(17);
  for (int round = 0; round < 30; ++round) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.below(200));
    const auto s = textgen::random_text(n, round % 2 ? 2 : 5, rng.next());
    for (Scheme scheme : {Scheme::lz78, Scheme::lzd, Scheme::lzmw}) {
      const std::uint32_t i = 1 + static_cast<std::uint32_t>(rng.below(n));
      const std::uint32_t j = i + static_cast<std::uint32_t>(rng.below(n - i + 1));
      const auto f = oracle::trie_parse(scheme, s, i, j);
      const std::vector<Symbol> expect(s.begin() + i - 1, s.begin() + j);
      REQUIRE(decode(f) == expect);
    }
  }
}

TEST_CASE("brute cdawg of babac matches the known shape") {
  const auto g = oracle::brute_cdawg(to_symbols("babac"));
  REQUIRE(g.node_count == 3);
  REQUIRE(g.total_edges == 6);
  REQUIRE(g.report_edges == 5);
  REQUIRE(g.path_histogram == std::map<std::uint32_t, std::uint64_t>{{1, 1}, {2, 5}});
  // paths read in lexicographic order are exactly the sorted sentinel-extended suffixes
  REQUIRE(g.paths_lex.size() == 6);
  const std::string sentinel(1, '\0');
  REQUIRE(g.paths_lex[0] == sentinel);
  REQUIRE(g.paths_lex[3] == "babac" + sentinel);
}

TEST_CASE("brute cdawg of a unary text") {
  const auto g = oracle::brute_cdawg(to_symbols("aaaa"));
  REQUIRE(g.node_count == 5);  // root, aaa-chain classes, sink
  REQUIRE(g.total_edges == 8);
  REQUIRE(g.report_edges == 4);
  REQUIRE(g.paths_lex.size() == 5);
}
