#include "dragoncrypto/pipeline.hpp"

#include <random>
#include <utility>

#include "dragoncrypto/dragon.hpp"
#include "dragoncrypto/errors.hpp"
#include "dragoncrypto/fieldmath.hpp"

namespace dragoncrypto {
namespace {

// Endpoint of the keyed walk that starts at curve point (x, y).
PlanePoint walk_endpoint(const PrivateKey& key, const koblitz::CurvePoint& pt) {
  const PlanePoint start{FixedPoint::from_integer(pt.x, key.precision),
                         FixedPoint::from_integer(pt.y, key.precision)};
  return dragon::endpoint(start, key.size, key.angle_deg, key.iterations,
                          key.precision);
}

void check_code_point(char32_t c) {
  if (c == 0 || c >= koblitz::kCodePointBase) {
    throw CodePointOutOfRange("code point " +
                              std::to_string(static_cast<std::uint32_t>(c)) +
                              " outside [1, 65536)");
  }
}

// Greedy chunking for block mode: a block grows while the packed value m
// still embeds (d*(m+1) <= p) and the block stays under the length cap.
std::vector<Bigint> pack_blocks(const PrivateKey& key,
                                std::u32string_view text) {
  std::vector<Bigint> blocks;
  Bigint m = 0;
  std::size_t len = 0;
  for (const char32_t c : text) {
    check_code_point(c);
    const Bigint grown = m + (Bigint(static_cast<std::uint32_t>(c)) << (16 * len));
    if (len < koblitz::kMaxBlockChars && key.d * (grown + 1) <= key.p) {
      m = grown;
      ++len;
      continue;
    }
    if (len == 0) {
      throw MessageTooLarge("code point does not embed: d*(m+1) > p");
    }
    blocks.push_back(std::move(m));
    m = static_cast<std::uint32_t>(c);
    len = 1;
    if (key.d * (m + 1) > key.p) {
      throw MessageTooLarge("code point does not embed: d*(m+1) > p");
    }
  }
  if (len > 0) blocks.push_back(std::move(m));
  return blocks;
}

Bigint recover_message(const PrivateKey& key,
                       const koblitz::CurveParams& params,
                       const PlanePoint& end) {
  const PlanePoint start = dragon::reverse_start(
      end, key.size, key.angle_deg, key.iterations, key.precision);
  if (!start.x.is_integral() || !start.y.is_integral()) {
    throw KeyMismatch("recovered start point has nonzero fractional digits");
  }
  const Bigint x = start.x.to_integer();
  const Bigint y = start.y.to_integer();
  if (!koblitz::on_curve(params, x, y)) {
    throw KeyMismatch("recovered start point does not satisfy the curve");
  }
  return koblitz::decode(koblitz::CurvePoint{x, y}, key.d);
}

std::uint64_t random_u64(std::mt19937_64& rng) { return rng(); }

// Uniform Bigint with exactly `bits` random bits (leading bits may be zero).
Bigint random_bits(std::mt19937_64& rng, unsigned bits) {
  Bigint value = 0;
  for (unsigned filled = 0; filled < bits; filled += 64) {
    value = (value << 64) | random_u64(rng);
  }
  const unsigned drawn = ((bits + 63) / 64) * 64;
  return value >> (drawn - bits);
}

// Uniform in [0, bound) by rejection over the bound's bit width.
Bigint random_below(std::mt19937_64& rng, const Bigint& bound) {
  const unsigned bits = boost::multiprecision::msb(bound) + 1;
  while (true) {
    Bigint candidate = random_bits(rng, bits);
    if (candidate < bound) return candidate;
  }
}

Bigint random_prime_3_mod_4(std::mt19937_64& rng, unsigned bits) {
  while (true) {
    // Exact bit length, and = 3 (mod 4) so square roots stay computable.
    Bigint candidate = random_bits(rng, bits);
    boost::multiprecision::bit_set(candidate, bits - 1);
    boost::multiprecision::bit_set(candidate, 0);
    boost::multiprecision::bit_set(candidate, 1);
    while (boost::multiprecision::msb(candidate) + 1 == bits) {
      if (field::is_probable_prime(candidate)) return candidate;
      candidate += 4;  // keeps the residue class mod 4
    }
  }
}

}  // namespace

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    unsigned len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      throw ParameterError("text is not valid UTF-8: bad leading byte");
    }
    if (i + len > bytes.size()) {
      throw ParameterError("text is not valid UTF-8: truncated sequence");
    }
    for (unsigned k = 1; k < len; ++k) {
      const auto bk = static_cast<unsigned char>(bytes[i + k]);
      if ((bk & 0xC0) != 0x80) {
        throw ParameterError("text is not valid UTF-8: bad continuation byte");
      }
      cp = (cp << 6) | (bk & 0x3F);
    }
    constexpr char32_t kMinByLen[] = {0, 0x00, 0x80, 0x800, 0x10000};
    if (cp < kMinByLen[len]) {
      throw ParameterError("text is not valid UTF-8: overlong encoding");
    }
    if (cp >= 0xD800 && cp <= 0xDFFF) {
      throw ParameterError("text is not valid UTF-8: surrogate code point");
    }
    if (cp > 0x10FFFF) {
      throw ParameterError("text is not valid UTF-8: code point beyond U+10FFFF");
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char32_t cp : text) {
    if (cp >= 0xD800 && cp <= 0xDFFF) {
      throw InvalidCodePoint("surrogate code point cannot be written as UTF-8");
    }
    if (cp > 0x10FFFF) {
      throw InvalidCodePoint("code point beyond U+10FFFF");
    }
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

codec::Ciphertext encrypt_text(const PrivateKey& key, std::u32string_view text) {
  const koblitz::CurveParams params = codec::validate_key(key);
  codec::Ciphertext ct;
  if (key.mode == KeyMode::kPerCharacter) {
    ct.points.reserve(text.size());
    for (const char32_t c : text) {
      check_code_point(c);
      const auto pt =
          koblitz::encode(static_cast<std::uint32_t>(c), params, key.d);
      ct.points.push_back(walk_endpoint(key, pt));
    }
  } else {
    for (const Bigint& m : pack_blocks(key, text)) {
      const auto pt = koblitz::encode(m, params, key.d);
      ct.points.push_back(walk_endpoint(key, pt));
    }
  }
  return ct;
}

std::u32string decrypt_text(const PrivateKey& key, const codec::Ciphertext& ct) {
  const koblitz::CurveParams params = codec::validate_key(key);
  if (!ct.points.empty() && ct.points[0].x.scale() != key.precision) {
    throw KeyMismatch("ciphertext precision differs from the key's");
  }
  std::u32string out;
  out.reserve(ct.points.size());
  for (const PlanePoint& end : ct.points) {
    const Bigint m = recover_message(key, params, end);
    if (key.mode == KeyMode::kPerCharacter) {
      if (m < 1 || m >= koblitz::kCodePointBase) {
        throw InvalidCodePoint("decoded value outside [1, 65536)");
      }
      out.push_back(static_cast<char32_t>(static_cast<std::uint32_t>(m)));
    } else {
      if (m == 0) {
        throw InvalidCodePoint("decoded block is empty");
      }
      out += koblitz::unpack(m);
    }
  }
  return out;
}

std::string encrypt_to_string(const PrivateKey& key, std::string_view utf8_text) {
  return codec::render(encrypt_text(key, utf8_decode(utf8_text)));
}

std::string decrypt_from_string(const PrivateKey& key, std::string_view padded) {
  return utf8_encode(decrypt_text(key, codec::parse(padded)));
}

PrivateKey generate_key(const KeygenOptions& options) {
  if (options.bits < 3 || options.bits > 4096) {
    throw ParameterError("prime bit length must be in [3, 4096]");
  }
  if (options.d < 1) {
    throw ParameterError("Koblitz spread d must be at least 1");
  }
  if (options.size < 1) {
    throw ParameterError("step size must be at least 1");
  }
  if (options.iterations < 1 || options.iterations > kMaxIterations) {
    throw ParameterError("iteration count outside [1, " +
                         std::to_string(kMaxIterations) + "]");
  }
  if (options.angle_deg < 0 || options.angle_deg >= 360) {
    throw ParameterError("angle outside [0, 360) degrees");
  }
  if (options.precision < kMinPrecision || options.precision > kMaxPrecision) {
    throw ParameterError("precision outside [" + std::to_string(kMinPrecision) +
                         ", " + std::to_string(kMaxPrecision) + "]");
  }
  const Bigint smallest_p = Bigint(1) << (options.bits - 1);
  if (options.mode == KeyMode::kPerCharacter &&
      options.d * (Bigint(koblitz::kCodePointBase) + 1) > smallest_p) {
    throw ParameterError(
        "prime bit length too small for per-character mode: need d*(2^16+1) <= p");
  }
  if (options.mode == KeyMode::kBlock && options.d * 2 > smallest_p) {
    throw ParameterError(
        "prime bit length too small to embed even one code point with this d");
  }

  std::mt19937_64 rng;
  if (options.seed) {
    rng.seed(*options.seed);
  } else {
    std::random_device entropy;
    rng.seed((static_cast<std::uint64_t>(entropy()) << 32) ^ entropy());
  }

  PrivateKey key;
  key.p = random_prime_3_mod_4(rng, options.bits);
  do {
    key.a = random_below(rng, key.p);
    key.b = random_below(rng, key.p);
  } while (mod_floor(4 * key.a * key.a * key.a + 27 * key.b * key.b, key.p) ==
           0);
  key.d = options.d;
  key.size = options.size;
  key.iterations = options.iterations;
  key.angle_deg = options.angle_deg;
  key.precision = options.precision;
  key.mode = options.mode;
  codec::validate_key(key);
  return key;
}

}  // namespace dragoncrypto
