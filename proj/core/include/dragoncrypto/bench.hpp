#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dragoncrypto/codec.hpp"

namespace dragoncrypto::bench {

struct BenchRecord {
  std::size_t plaintext_length = 0;
  double cycle_seconds = 0.0;  // median wall time of one encrypt+decrypt cycle
};

// The 95 printable ASCII characters of a standard keyboard.
const std::string& keyboard_alphabet();

std::u32string random_keyboard_text(std::size_t length, std::mt19937_64& rng);

// For each length: random keyboard plaintext, one untimed warm-up cycle,
// then `trials` timed encrypt+decrypt cycles (string rendering excluded),
// median wall time. Every cycle's roundtrip is verified; a mismatch aborts
// with std::runtime_error. Strictly sequential.
std::vector<BenchRecord> run_cycles(const PrivateKey& key,
                                    const std::vector<std::size_t>& lengths,
                                    unsigned trials, std::uint64_t text_seed);

// CSV with header "plaintext_length,cycle_seconds", LF endings.
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace dragoncrypto::bench
