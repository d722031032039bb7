#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dragoncrypto/codec.hpp"

namespace dragoncrypto {

// Strict UTF-8 codec (rejects overlong forms, surrogates and code points
// beyond U+10FFFF). Astral code points survive decoding; the encoders
// reject anything outside [1, 2^16).
std::u32string utf8_decode(std::string_view bytes);
std::string utf8_encode(std::u32string_view text);

// plaintext -> curve points -> fractal endpoints. Per-character mode encodes
// every code point separately; block mode packs runs of code points whose
// packed integer still satisfies d*(m+1) <= p (at most 160 per block).
codec::Ciphertext encrypt_text(const PrivateKey& key, std::u32string_view text);

// Exact inverse: reverse-walks every endpoint and re-derives the plaintext.
// A recovered start point that is non-integral, out of range or off the
// curve means a wrong key or corrupted data (KeyMismatch).
std::u32string decrypt_text(const PrivateKey& key, const codec::Ciphertext& ct);

// Convenience wrappers over the padded-string rendering.
std::string encrypt_to_string(const PrivateKey& key, std::string_view utf8_text);
std::string decrypt_from_string(const PrivateKey& key, std::string_view padded);

struct KeygenOptions {
  unsigned bits = 64;
  unsigned iterations = 15;
  Bigint size = 1;
  int angle_deg = 0;
  unsigned precision = kDefaultPrecision;
  Bigint d = 100;
  KeyMode mode = KeyMode::kPerCharacter;
  std::optional<std::uint64_t> seed;  // reproducible keys when set
};

// Random prime p of exactly `bits` bits with p = 3 (mod 4), then random
// (a, b) until the curve is non-singular. Deterministic for a fixed seed.
// Throws ParameterError on unusable options.
PrivateKey generate_key(const KeygenOptions& options);

}  // namespace dragoncrypto
