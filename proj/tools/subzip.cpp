// Command-line front end: build an index over a byte file, answer substring
// factorization queries from it, run the randomized benchmark protocol, and
// report CDAWG path statistics.
//
// Exit codes: 0 success, 1 usage or invalid arguments, 2 I/O failure,
// 3 malformed data (index file or factorization).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "subzip/bench.hpp"
#include "subzip/byte_codec.hpp"
#include "subzip/cdawg.hpp"
#include "subzip/factorize.hpp"
#include "subzip/rlbwt_index.hpp"
#include "subzip/sa_index.hpp"
#include "subzip/serialize.hpp"
#include "subzip/types.hpp"

namespace {

using namespace subzip;

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  if (is.bad()) throw io_error("read failed: " + path);
  return ss.str();
}

IndexFile load_index_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("cannot open index file: " + path);
  return load_index(is);
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw io_error("cannot open output file: " + path);
  return file;
}

int cmd_build(const std::string& input, const std::string& output, const std::string& backend,
              std::uint32_t sample_rate, std::uint32_t int_width) {
  const std::string bytes = read_file(input);
  if (bytes.empty()) throw std::invalid_argument("input is empty");
  if (bytes.size() > 0xfffffffeull) throw std::invalid_argument("input longer than 2^32 - 2 bytes");

  const ByteCodec codec = ByteCodec::scan(bytes);
  const std::vector<Symbol> text = codec.encode(bytes);
  const auto n = static_cast<std::uint32_t>(text.size());

  std::optional<IndexFile> file;
  std::ostringstream info;
  info << "backend=" << backend << " n=" << n << " sigma=" << codec.sigma();
  if (backend == "sa") {
    SaIndex ix(text);
    info << " m=" << ix.tables().m() << " memory_bits=" << ix.memory_bits(int_width);
    file.emplace(IndexFile{BackendTag::sa, int_width, codec, AnyIndex{std::move(ix)}});
  } else if (backend == "cdawg") {
    Cdawg ix(text);
    info << " V=" << ix.node_count() << " e=" << ix.edge_count()
         << " memory_bits=" << ix.memory_bits(int_width);
    file.emplace(IndexFile{BackendTag::cdawg, int_width, codec, AnyIndex{std::move(ix)}});
  } else {
    RlbwtIndex ix(text, sample_rate);
    info << " r=" << ix.run_count() << " sample_rate=" << sample_rate
         << " memory_bits=" << ix.memory_bits(int_width);
    file.emplace(IndexFile{BackendTag::rlbwt, int_width, codec, AnyIndex{std::move(ix)}});
  }

  std::ofstream os(output, std::ios::binary);
  if (!os) throw io_error("cannot open output file: " + output);
  save_index(os, *file);
  os.flush();
  if (!os) throw io_error("write failed: " + output);
  std::cout << info.str() << " index_file=" << output << "\n";
  return 0;
}

std::string render_literal(const ByteCodec& codec, Symbol c) { return render_byte(codec.byte_of(c)); }

void render_factor_fields(const ByteCodec& codec, const Factorization& f, std::size_t k,
                          std::string& ref, std::string& lit) {
  ref.clear();
  lit.clear();
  if (f.scheme == Scheme::lz78) {
    const Lz78Factor& fac = f.lz78()[k];
    ref = std::to_string(fac.ref);
    if (fac.next) lit = render_literal(codec, *fac.next);
  } else if (f.scheme == Scheme::lzd) {
    const LzdFactor& fac = f.lzd()[k];
    auto half = [&](const LzdHalf& h) {
      if (h.kind == LzdHalf::Kind::reference) {
        ref += std::to_string(h.ref);
      } else {
        ref += "-";
        lit += render_literal(codec, h.lit);
      }
    };
    half(fac.left);
    if (fac.right) {
      ref += ";";
      half(*fac.right);
    }
  } else {
    const LzmwFactor& fac = f.lzmw()[k];
    if (fac.is_pair)
      ref = std::to_string(fac.ref);
    else
      lit = render_literal(codec, fac.lit);
  }
}

Position factor_start(const Factorization& f, std::size_t k) {
  if (f.scheme == Scheme::lz78) return f.lz78()[k].start;
  if (f.scheme == Scheme::lzd) return f.lzd()[k].start;
  return f.lzmw()[k].start;
}

int cmd_compress(const std::string& index_path, const std::string& scheme_str, Position begin,
                 Position end, const std::string& fmt) {
  const IndexFile file = load_index_file(index_path);
  const Position n = file.text_length();
  if (begin < 1 || begin > end || end > n)
    throw std::invalid_argument("interval [" + std::to_string(begin) + ".." + std::to_string(end) +
                                "] out of range for n=" + std::to_string(n));
  const Scheme scheme = scheme_str == "lz78"  ? Scheme::lz78
                        : scheme_str == "lzd" ? Scheme::lzd
                                              : Scheme::lzmw;
  const Factorization f = std::visit(
      [&](const auto& ix) {
        switch (scheme) {
          case Scheme::lz78: return compress_lz78(ix, begin, end);
          case Scheme::lzd: return compress_lzd(ix, begin, end);
          default: return compress_lzmw(ix, begin, end);
        }
      },
      file.index);

  std::string ref, lit;
  if (fmt == "csv") std::cout << "x,start,ref,literal\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    render_factor_fields(file.codec, f, k, ref, lit);
    if (fmt == "csv")
      std::cout << (k + 1) << ',' << factor_start(f, k) << ',' << ref << ',' << lit << '\n';
    else
      std::cout << (k + 1) << '\t' << factor_start(f, k) << '\t' << ref << '\t' << lit << '\n';
  }
  return 0;
}

int cmd_bench(const std::string& index_path, const std::string& scheme_str, std::uint32_t min_exp,
              std::uint32_t max_exp, std::uint32_t reps, std::uint64_t seed,
              const std::string& out_path) {
  const IndexFile file = load_index_file(index_path);
  const Scheme scheme = scheme_str == "lz78"  ? Scheme::lz78
                        : scheme_str == "lzd" ? Scheme::lzd
                                              : Scheme::lzmw;
  const std::string dataset = std::filesystem::path(index_path).stem().string();
  const BenchOptions opt{min_exp, max_exp, reps, seed};
  const std::vector<BenchRow> rows = std::visit(
      [&](const auto& ix) { return run_bench(ix, dataset, backend_name(file.backend), scheme, opt); },
      file.index);

  std::ofstream fs;
  std::ostream& os = open_output(out_path, fs, std::cout);
  os << bench_csv_header() << '\n';
  for (const BenchRow& r : rows) os << bench_csv_row(r) << '\n';
  os.flush();
  if (!os) throw io_error("write failed");
  return 0;
}

int cmd_stats(const std::string& index_path, const std::string& out_path) {
  const IndexFile file = load_index_file(index_path);
  if (file.backend != BackendTag::cdawg)
    throw std::invalid_argument("stats requires a cdawg index");
  const Cdawg& ix = std::get<Cdawg>(file.index);
  const auto hist = ix.path_length_histogram();

  std::ofstream fs;
  std::ostream& os = open_output(out_path, fs, std::cout);
  os << "edges,paths\n";
  double weighted = 0;
  std::uint64_t total = 0;
  for (auto [edges, cnt] : hist) {
    os << edges << ',' << cnt << '\n';
    weighted += static_cast<double>(edges) * static_cast<double>(cnt);
    total += cnt;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", weighted / static_cast<double>(total));
  os << "mean," << buf << '\n';
  os.flush();
  if (!os) throw io_error("write failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"substring factorization queries over prebuilt text indexes"};
  app.require_subcommand(1);

  std::string input, output, index_path, out_path;
  std::string backend = "sa", scheme = "lz78", fmt = "text";
  std::uint32_t sample_rate = 64, int_width = 32;
  std::uint32_t begin = 1, end = 1, min_exp = 3, max_exp = 10, reps = 10;
  std::uint64_t seed = 1;

  CLI::App* build = app.add_subcommand("build", "build an index over a byte file");
  build->add_option("-i,--input", input, "input file (treated as bytes)")->required();
  build->add_option("-o,--output", output, "index file to write")->required();
  build->add_option("-b,--backend", backend, "index backend")
      ->check(CLI::IsMember({"sa", "cdawg", "rlbwt"}));
  build->add_option("--sample-rate", sample_rate, "rlbwt inverse-suffix-array sample rate")
      ->check(CLI::PositiveNumber);
  build->add_option("--int-width", int_width, "stored integer width in bits")
      ->check(CLI::IsMember({32, 64}));

  CLI::App* compress = app.add_subcommand("compress", "factorize T[i..j] from an index");
  compress->add_option("--index", index_path, "index file")->required();
  compress->add_option("-s,--scheme", scheme, "factorization scheme")
      ->check(CLI::IsMember({"lz78", "lzd", "lzmw"}));
  compress->add_option("-i,--begin", begin, "1-based interval start")->required();
  compress->add_option("-j,--end", end, "1-based interval end (inclusive)")->required();
  compress->add_option("-f,--format", fmt, "output format")->check(CLI::IsMember({"text", "csv"}));

  CLI::App* bench = app.add_subcommand("bench", "time random substring queries");
  bench->add_option("--index", index_path, "index file")->required();
  bench->add_option("-s,--scheme", scheme, "factorization scheme")
      ->check(CLI::IsMember({"lz78", "lzd", "lzmw"}));
  bench->add_option("--min-exp", min_exp, "smallest substring length exponent");
  bench->add_option("--max-exp", max_exp, "largest substring length exponent");
  bench->add_option("--reps", reps, "queries per length");
  bench->add_option("--seed", seed, "random seed");
  bench->add_option("--out", out_path, "CSV output file (default stdout)");

  CLI::App* stats = app.add_subcommand("stats", "root-to-sink path edge-count histogram");
  stats->add_option("--index", index_path, "cdawg index file")->required();
  stats->add_option("--out", out_path, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  }

  try {
    if (build->parsed()) return cmd_build(input, output, backend, sample_rate, int_width);
    if (compress->parsed()) return cmd_compress(index_path, scheme, begin, end, fmt);
    if (bench->parsed()) return cmd_bench(index_path, scheme, min_exp, max_exp, reps, seed, out_path);
    if (stats->parsed()) return cmd_stats(index_path, out_path);
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
