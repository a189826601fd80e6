#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "subzip/factorize.hpp"
#include "subzip/text_index.hpp"
#include "subzip/types.hpp"

namespace subzip {

// Deterministic generator so identical seeds give identical substring choices on
// any platform.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0..bound), bias-free
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }
};

// Mean with one minimum and one maximum observation removed; needs >= 3 values.
inline double trimmed_mean(std::vector<double> v) {
  if (v.size() < 3) throw std::invalid_argument("trimmed_mean: needs at least 3 observations");
  const auto mn = std::min_element(v.begin(), v.end());
  v.erase(mn);
  const auto mx = std::max_element(v.begin(), v.end());
  v.erase(mx);
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

struct BenchRow {
  std::string dataset;
  std::string backend;
  std::string scheme;
  std::uint32_t alpha = 0;
  std::uint32_t reps = 0;
  double mean_time_ns = 0.0;
  double mean_factors = 0.0;
};

struct BenchOptions {
  std::uint32_t min_exp = 3;
  std::uint32_t max_exp = 10;
  std::uint32_t reps = 10;
  std::uint64_t seed = 1;
};

using ClockFn = std::function<std::uint64_t()>;

inline std::uint64_t steady_now_ns() {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(
          std::chrono::steady_clock::now().time_since_epoch())
          .count());
}

// For each alpha = 2^min_exp .. 2^max_exp, factorizes `reps` uniformly random
// substrings of that length and reports the trimmed mean of the elapsed times.
template <TextIndexLike Index>
std::vector<BenchRow> run_bench(const Index& ix, const std::string& dataset,
                                const std::string& backend, Scheme scheme,
                                const BenchOptions& opt, const ClockFn& now_ns = steady_now_ns) {
  const Position n = ix.text_length();
  if (opt.reps < 3) throw std::invalid_argument("bench: reps must be at least 3");
  if (opt.min_exp > opt.max_exp || opt.max_exp >= 32 || (1ull << opt.max_exp) > n)
    throw std::invalid_argument("bench: substring length exponent out of range");

  SplitMix64 rng(opt.seed);
  std::vector<BenchRow> rows;
  for (std::uint32_t ex = opt.min_exp; ex <= opt.max_exp; ++ex) {
    const auto alpha = static_cast<std::uint32_t>(1u << ex);
    std::vector<double> times(opt.reps), factors(opt.reps);
    for (std::uint32_t k = 0; k < opt.reps; ++k) {
      const Position i = 1 + static_cast<Position>(rng.below(n - alpha + 1));
      const Position j = i + alpha - 1;
      const std::uint64_t t0 = now_ns();
      Factorization f = scheme == Scheme::lz78   ? compress_lz78(ix, i, j)
                        : scheme == Scheme::lzd ? compress_lzd(ix, i, j)
                                                : compress_lzmw(ix, i, j);
      const std::uint64_t t1 = now_ns();
      times[k] = static_cast<double>(t1 - t0);
      factors[k] = static_cast<double>(f.size());
    }
    rows.push_back({dataset, backend, scheme_name(scheme), alpha, opt.reps, trimmed_mean(times),
                    std::accumulate(factors.begin(), factors.end(), 0.0) /
                        static_cast<double>(opt.reps)});
  }
  return rows;
}

inline std::string bench_csv_header() {
  return "dataset,backend,scheme,alpha,reps,mean_time_ns,mean_factors";
}

inline std::string bench_csv_row(const BenchRow& r) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%.3f,%.3f", r.mean_time_ns, r.mean_factors);
  return r.dataset + "," + r.backend + "," + r.scheme + "," + std::to_string(r.alpha) + "," +
         std::to_string(r.reps) + "," + buf;
}

}  // namespace subzip
