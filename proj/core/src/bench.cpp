#include "dragoncrypto/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "dragoncrypto/pipeline.hpp"

namespace dragoncrypto::bench {
namespace {

// Uniform index below 95 by rejection over 7-bit draws, so the sequence
// depends only on the (standardized) mt19937_64 stream.
std::size_t keyboard_index(std::mt19937_64& rng) {
  while (true) {
    const std::uint64_t draw = rng() >> 57;
    if (draw < 95) return static_cast<std::size_t>(draw);
  }
}

}  // namespace

const std::string& keyboard_alphabet() {
  static const std::string alphabet = [] {
    std::string chars;
    for (char c = ' '; c <= '~'; ++c) chars.push_back(c);
    return chars;
  }();
  return alphabet;
}

std::u32string random_keyboard_text(std::size_t length, std::mt19937_64& rng) {
  const std::string& alphabet = keyboard_alphabet();
  std::u32string text;
  text.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    text.push_back(static_cast<char32_t>(alphabet[keyboard_index(rng)]));
  }
  return text;
}

std::vector<BenchRecord> run_cycles(const PrivateKey& key,
                                    const std::vector<std::size_t>& lengths,
                                    unsigned trials, std::uint64_t text_seed) {
  if (trials == 0) {
    throw std::invalid_argument("benchmark needs at least one trial");
  }
  std::mt19937_64 rng(text_seed);
  std::vector<BenchRecord> records;
  records.reserve(lengths.size());
  for (const std::size_t length : lengths) {
    const std::u32string text = random_keyboard_text(length, rng);
    // One untimed cycle first: pages, allocator arenas and branch history
    // would otherwise all land on the first measured trial.
    if (decrypt_text(key, encrypt_text(key, text)) != text) {
      throw std::runtime_error("benchmark roundtrip mismatch at length " +
                               std::to_string(length));
    }
    std::vector<double> times;
    times.reserve(trials);
    for (unsigned t = 0; t < trials; ++t) {
      const auto start = std::chrono::steady_clock::now();
      const codec::Ciphertext ct = encrypt_text(key, text);
      const std::u32string recovered = decrypt_text(key, ct);
      const auto stop = std::chrono::steady_clock::now();
      if (recovered != text) {
        throw std::runtime_error("benchmark roundtrip mismatch at length " +
                                 std::to_string(length));
      }
      times.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(times.begin(), times.end());
    const double median = trials % 2 == 1
                              ? times[trials / 2]
                              : (times[trials / 2 - 1] + times[trials / 2]) / 2;
    records.push_back(BenchRecord{length, median});
  }
  return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
  std::string out = "plaintext_length,cycle_seconds\n";
  for (const BenchRecord& rec : records) {
    char row[80];
    std::snprintf(row, sizeof(row), "%zu,%.9g\n", rec.plaintext_length,
                  rec.cycle_seconds);
    out += row;
  }
  return out;
}

}  // namespace dragoncrypto::bench
