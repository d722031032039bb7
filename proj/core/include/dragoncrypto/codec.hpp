#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dragoncrypto/bigint.hpp"
#include "dragoncrypto/fixedpoint.hpp"
#include "dragoncrypto/koblitz.hpp"

namespace dragoncrypto {

enum class KeyMode { kPerCharacter, kBlock };

inline constexpr unsigned kKeyFormatVersion = 1;
inline constexpr unsigned kDefaultPrecision = 50;
inline constexpr unsigned kMinPrecision = 10;
inline constexpr unsigned kMaxPrecision = 10000;
inline constexpr unsigned kMaxIterations = 64;  // dragon::kMaxClosedFormIterations

// Every secret parameter of the scheme. a and b are kept reduced in [0, p);
// negative values in a key file are reduced at load.
struct PrivateKey {
  Bigint p;
  Bigint a;
  Bigint b;
  Bigint d;            // Koblitz spread
  Bigint size;         // forward step length
  unsigned iterations = 0;
  int angle_deg = 0;
  unsigned precision = kDefaultPrecision;
  KeyMode mode = KeyMode::kPerCharacter;

  friend bool operator==(const PrivateKey&, const PrivateKey&) = default;
};

namespace codec {

// Reduces a and b into [0, p). Leaves the key untouched when p < 2 (full
// validation will reject it anyway).
PrivateKey normalized(PrivateKey key);

// Checks every key invariant and returns the ready curve. Throws
// InvalidKeyParameters naming the first violated invariant.
koblitz::CurveParams validate_key(const PrivateKey& key);

// Ordered endpoint pairs; all coordinates of one ciphertext share one scale.
struct Ciphertext {
  std::vector<PlanePoint> points;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

// "X x1 X x2 X ... X Y y1 Y ... yn Y" without spaces, each coordinate in
// canonical fixed-point text; the empty list renders "XY".
std::string render(const Ciphertext& ct);

// Exact inverse of render: splits at the unique "XY" mark (coordinates
// contain no letters) and re-parses every coordinate. Throws
// MalformedCiphertext on any deviation from the grammar.
Ciphertext parse(std::string_view text);

// Line-based text, bit-exact:
//   version = 1
//   p = <decimal> ... mode = per-char|block
// LF endings, no trailing whitespace. write_key validates first; read_key
// rejects unknown versions (MalformedKey) and re-validates all invariants
// (InvalidKeyParameters).
std::string write_key(const PrivateKey& key);
PrivateKey read_key(std::string_view text);

}  // namespace codec
}  // namespace dragoncrypto
