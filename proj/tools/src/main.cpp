// Command-line front end: key generation, the encrypt/decrypt pipeline,
// fractal tracing to SVG/CSV, turn queries and the timing benchmark.
//
// Exit codes: 0 success, 1 I/O or unexpected failure, 2 usage error,
// 3..14 the library error codes (see dragoncrypto/errors.hpp).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dragoncrypto/bench.hpp"
#include "dragoncrypto/dragon.hpp"
#include "dragoncrypto/errors.hpp"
#include "dragoncrypto/pipeline.hpp"

namespace dc = dragoncrypto;

namespace {

// The benchmark always measures against the same internally generated key,
// so runs are comparable across machines and invocations.
constexpr std::uint64_t kBenchKeySeed = 1;
constexpr std::uint64_t kDefaultTextSeed = 42;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read \"" + path + "\"");
  return std::move(buffer).str();
}

std::string read_stdin() {
  std::ostringstream buffer;
  buffer << std::cin.rdbuf();
  return std::move(buffer).str();
}

void write_output(const std::string& path, std::string_view content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open \"" + path + "\" for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
}

dc::Bigint parse_int_flag(const std::string& text, const std::string& flag) {
  auto value = dc::parse_canonical_int(text);
  if (!value) {
    throw dc::ParameterError(flag + " expects a canonical decimal integer, got \"" +
                             text + "\"");
  }
  return std::move(*value);
}

// ---- trace output ------------------------------------------------------

std::string polyline_csv(const dc::PlanePoint& start, const dc::Bigint& step,
                         int theta_deg, unsigned n) {
  std::string out = "x,y\n";
  dc::dragon::trace_walk(start, step, theta_deg, n,
                         [&out](const dc::PlanePoint& p) {
                           out += p.x.str();
                           out.push_back(',');
                           out += p.y.str();
                           out.push_back('\n');
                         });
  return out;
}

// Fits the walk into a 1024-unit square with pure integer scaling: pass one
// finds the mantissa bounding box, pass two maps every vertex onto the
// integer pixel grid (y flipped so the walk reads the usual way up).
std::string polyline_svg(const dc::PlanePoint& start, const dc::Bigint& step,
                         int theta_deg, unsigned n) {
  dc::Bigint min_x, max_x, min_y, max_y;
  bool first = true;
  dc::dragon::trace_walk(start, step, theta_deg, n,
                         [&](const dc::PlanePoint& p) {
                           const dc::Bigint& x = p.x.mantissa();
                           const dc::Bigint& y = p.y.mantissa();
                           if (first) {
                             min_x = max_x = x;
                             min_y = max_y = y;
                             first = false;
                             return;
                           }
                           if (x < min_x) min_x = x;
                           if (x > max_x) max_x = x;
                           if (y < min_y) min_y = y;
                           if (y > max_y) max_y = y;
                         });
  dc::Bigint span = std::max(dc::Bigint(max_x - min_x),
                             dc::Bigint(max_y - min_y));
  if (span == 0) span = 1;

  std::string path_data;
  bool at_start = true;
  dc::dragon::trace_walk(
      start, step, theta_deg, n, [&](const dc::PlanePoint& p) {
        const dc::Bigint px = ((p.x.mantissa() - min_x) * 1024 + span / 2) / span;
        const dc::Bigint py =
            1024 - ((p.y.mantissa() - min_y) * 1024 + span / 2) / span;
        path_data += at_start ? "M" : " L";
        at_start = false;
        path_data += px.str();
        path_data.push_back(' ');
        path_data += py.str();
      });

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-16 -16 1056 1056\">\n";
  svg += "  <path fill=\"none\" stroke=\"#222\" stroke-width=\"2\" d=\"";
  svg += path_data;
  svg += "\"/>\n</svg>\n";
  return svg;
}

// ---- subcommand runners ------------------------------------------------

struct KeygenArgs {
  unsigned bits = 64;
  unsigned iterations = 15;
  std::string size = "1";
  int angle_deg = 0;
  unsigned precision = dc::kDefaultPrecision;
  std::string d = "100";
  std::string mode = "per-char";
  std::optional<std::uint64_t> seed;
  std::string out;
};

int run_keygen(const KeygenArgs& args) {
  dc::KeygenOptions options;
  options.bits = args.bits;
  options.iterations = args.iterations;
  options.size = parse_int_flag(args.size, "--size");
  options.angle_deg = args.angle_deg;
  options.precision = args.precision;
  options.d = parse_int_flag(args.d, "--d");
  if (args.mode == "per-char") {
    options.mode = dc::KeyMode::kPerCharacter;
  } else if (args.mode == "block") {
    options.mode = dc::KeyMode::kBlock;
  } else {
    throw dc::ParameterError("--mode must be per-char or block, got \"" +
                             args.mode + "\"");
  }
  options.seed = args.seed;
  const dc::PrivateKey key = dc::generate_key(options);
  write_output(args.out, dc::codec::write_key(key));
  return 0;
}

struct CryptArgs {
  std::string key_path;
  std::string in;
  std::string out;
};

int run_encrypt(const CryptArgs& args) {
  const dc::PrivateKey key = dc::codec::read_key(read_file(args.key_path));
  const std::string plaintext =
      args.in.empty() ? read_stdin() : read_file(args.in);
  write_output(args.out, dc::encrypt_to_string(key, plaintext) + "\n");
  return 0;
}

int run_decrypt(const CryptArgs& args) {
  const dc::PrivateKey key = dc::codec::read_key(read_file(args.key_path));
  std::string ciphertext = args.in.empty() ? read_stdin() : read_file(args.in);
  if (!ciphertext.empty() && ciphertext.back() == '\n') {
    ciphertext.pop_back();  // the single line terminator written by encrypt
  }
  write_output(args.out, dc::decrypt_from_string(key, ciphertext));
  return 0;
}

struct TraceArgs {
  std::string key_path;
  unsigned iterations = 12;
  std::string size = "1";
  int angle_deg = 0;
  unsigned precision = 0;
  std::string text;
  std::vector<std::string> point;
  std::string svg_out;
  std::string csv_out;
};

int run_trace(const TraceArgs& args) {
  dc::Bigint step;
  int theta_deg = 0;
  unsigned n = 0;
  unsigned scale = 0;
  std::optional<dc::PrivateKey> key;
  if (!args.key_path.empty()) {
    key = dc::codec::read_key(read_file(args.key_path));
    step = key->size;
    theta_deg = key->angle_deg;
    n = key->iterations;
    scale = key->precision;
  } else {
    step = parse_int_flag(args.size, "--size");
    theta_deg = args.angle_deg;
    n = args.iterations;
    scale = args.precision;
    if (theta_deg < 0 || theta_deg >= 360) {
      throw dc::ParameterError("--angle must lie in [0, 360) degrees");
    }
    if (step < 1) {
      throw dc::ParameterError("--size must be at least 1");
    }
    if (scale > dc::kMaxPrecision) {
      throw dc::ParameterError("--precision must be at most " +
                               std::to_string(dc::kMaxPrecision));
    }
  }

  dc::Bigint start_x = 0;
  dc::Bigint start_y = 0;
  if (!args.text.empty()) {
    if (!key) {
      throw dc::ParameterError("--text needs --key to embed the character");
    }
    const std::u32string decoded = dc::utf8_decode(args.text);
    if (decoded.size() != 1) {
      throw dc::ParameterError("--text walks a single character, got " +
                               std::to_string(decoded.size()));
    }
    const auto params = dc::codec::validate_key(*key);
    const auto pt = dc::koblitz::encode(
        static_cast<std::uint32_t>(decoded[0]), params, key->d);
    start_x = pt.x;
    start_y = pt.y;
  } else if (!args.point.empty()) {
    start_x = parse_int_flag(args.point[0], "--point");
    start_y = parse_int_flag(args.point[1], "--point");
  }

  const dc::PlanePoint start{dc::FixedPoint::from_integer(start_x, scale),
                             dc::FixedPoint::from_integer(start_y, scale)};
  if (!args.csv_out.empty() || (args.svg_out.empty() && args.csv_out.empty())) {
    // Default to CSV on stdout when neither output flag is given.
    write_output(args.csv_out, polyline_csv(start, step, theta_deg, n));
  }
  if (!args.svg_out.empty()) {
    write_output(args.svg_out, polyline_svg(start, step, theta_deg, n));
  }
  return 0;
}

struct TurnsArgs {
  unsigned iterations = 0;
  std::string index;
  std::string out;
};

int run_turns(const TurnsArgs& args) {
  std::string line;
  if (!args.index.empty()) {
    const dc::Bigint k = parse_int_flag(args.index, "--index");
    if (k < 1) {
      throw dc::ParameterError("--index must be at least 1");
    }
    line = dc::dragon::to_char(dc::dragon::nth_turn(k));
  } else {
    line = dc::dragon::folding_string(dc::dragon::turn_sequence(args.iterations));
  }
  write_output(args.out, line + "\n");
  return 0;
}

struct BenchArgs {
  std::size_t min_len = 26;
  std::size_t max_len = 6266;
  std::size_t step = 1040;
  unsigned trials = 3;
  std::uint64_t text_seed = kDefaultTextSeed;
  std::string out;
};

int run_bench(const BenchArgs& args) {
  if (args.step < 1) {
    throw dc::ParameterError("--step must be at least 1");
  }
  if (args.max_len < args.min_len) {
    throw dc::ParameterError("--max must be at least --min");
  }
  std::vector<std::size_t> lengths;
  for (std::size_t len = args.min_len; len <= args.max_len; len += args.step) {
    lengths.push_back(len);
  }

  dc::KeygenOptions options;
  options.bits = 24;
  options.iterations = 15;
  options.size = 1;
  options.angle_deg = 30;
  options.precision = 10;
  options.d = 100;
  options.mode = dc::KeyMode::kPerCharacter;
  options.seed = kBenchKeySeed;
  const dc::PrivateKey key = dc::generate_key(options);

  const auto records =
      dc::bench::run_cycles(key, lengths, args.trials, args.text_seed);
  write_output(args.out, dc::bench::to_csv(records));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toy cryptosystem: Koblitz curve embedding + dragon-walk displacement"};
  app.require_subcommand(1);

  KeygenArgs keygen_args;
  CLI::App* keygen = app.add_subcommand("keygen", "Generate a private key file");
  keygen->add_option("--bits", keygen_args.bits, "Prime bit length")
      ->capture_default_str();
  keygen->add_option("-n,--iterations", keygen_args.iterations,
                     "Fractal iterations (1..64)")
      ->capture_default_str();
  keygen->add_option("-l,--size", keygen_args.size, "Step size (positive integer)")
      ->capture_default_str();
  keygen->add_option("--angle", keygen_args.angle_deg,
                     "Rotation angle in degrees [0, 360)")
      ->capture_default_str();
  keygen->add_option("-q,--precision", keygen_args.precision,
                     "Fixed-point fractional digits (10..10000)")
      ->capture_default_str();
  keygen->add_option("--d", keygen_args.d, "Koblitz spread")
      ->capture_default_str();
  keygen->add_option("--mode", keygen_args.mode, "per-char or block")
      ->capture_default_str();
  keygen->add_option("--seed", keygen_args.seed,
                     "64-bit seed for a reproducible key");
  keygen->add_option("-o,--out", keygen_args.out,
                     "Key file path (stdout when omitted)");

  CryptArgs encrypt_args;
  CLI::App* encrypt = app.add_subcommand("encrypt", "Encrypt plaintext to the padded string");
  encrypt->add_option("-k,--key", encrypt_args.key_path, "Key file")->required();
  encrypt->add_option("-i,--in", encrypt_args.in, "Plaintext file (stdin when omitted)");
  encrypt->add_option("-o,--out", encrypt_args.out, "Ciphertext file (stdout when omitted)");

  CryptArgs decrypt_args;
  CLI::App* decrypt = app.add_subcommand("decrypt", "Decrypt a padded string");
  decrypt->add_option("-k,--key", decrypt_args.key_path, "Key file")->required();
  decrypt->add_option("-i,--in", decrypt_args.in, "Ciphertext file (stdin when omitted)");
  decrypt->add_option("-o,--out", decrypt_args.out, "Plaintext file (stdout when omitted)");

  TraceArgs trace_args;
  CLI::App* trace = app.add_subcommand("trace", "Write the walk's vertices as CSV or SVG");
  trace->add_option("-k,--key", trace_args.key_path,
                    "Take size/angle/iterations/precision from this key file");
  trace->add_option("-n,--iterations", trace_args.iterations,
                    "Fractal iterations (1..26)")
      ->capture_default_str();
  trace->add_option("-l,--size", trace_args.size, "Step size")
      ->capture_default_str();
  trace->add_option("--angle", trace_args.angle_deg, "Rotation angle in degrees")
      ->capture_default_str();
  trace->add_option("-q,--precision", trace_args.precision,
                    "Fixed-point fractional digits")
      ->capture_default_str();
  trace->add_option("--text", trace_args.text,
                    "Walk the curve point of this single character (needs --key)");
  trace->add_option("--point", trace_args.point, "Start point X Y")
      ->expected(2);
  trace->add_option("--svg", trace_args.svg_out, "SVG output path");
  trace->add_option("--csv", trace_args.csv_out, "CSV output path");

  TurnsArgs turns_args;
  CLI::App* turns = app.add_subcommand("turns", "Print turn sequences or single turns");
  CLI::Option* turns_n =
      turns->add_option("-n,--iterations", turns_args.iterations,
                        "Print the full F/L/R string of this iteration");
  CLI::Option* turns_index = turns->add_option(
      "--index", turns_args.index, "Print the single turn at this 1-based index");
  turns->add_option("-o,--out", turns_args.out, "Output path (stdout when omitted)");
  turns_n->excludes(turns_index);
  turns_index->excludes(turns_n);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time encrypt+decrypt cycles, write CSV");
  bench->add_option("--min", bench_args.min_len, "Smallest plaintext length")
      ->capture_default_str();
  bench->add_option("--max", bench_args.max_len, "Largest plaintext length")
      ->capture_default_str();
  bench->add_option("--step", bench_args.step, "Length increment")
      ->capture_default_str();
  bench->add_option("--trials", bench_args.trials, "Cycles per length (median wins)")
      ->capture_default_str();
  bench->add_option("--text-seed", bench_args.text_seed,
                    "Seed for the random plaintexts")
      ->capture_default_str();
  bench->add_option("-o,--out", bench_args.out, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*keygen) return run_keygen(keygen_args);
    if (*encrypt) return run_encrypt(encrypt_args);
    if (*decrypt) return run_decrypt(decrypt_args);
    if (*trace) return run_trace(trace_args);
    if (*turns) {
      if (turns_n->count() == 0 && turns_index->count() == 0) {
        std::cerr << "turns needs either --iterations or --index\n";
        return 2;
      }
      return run_turns(turns_args);
    }
    if (*bench) return run_bench(bench_args);
  } catch (const dc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
