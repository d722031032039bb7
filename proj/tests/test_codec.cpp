#include <doctest.h>

#include <random>
#include <regex>
#include <string>

#include "dragoncrypto/codec.hpp"
#include "dragoncrypto/errors.hpp"

using dragoncrypto::Bigint;
using dragoncrypto::FixedPoint;
using dragoncrypto::InvalidKeyParameters;
using dragoncrypto::KeyMode;
using dragoncrypto::MalformedCiphertext;
using dragoncrypto::MalformedKey;
using dragoncrypto::PlanePoint;
using dragoncrypto::PrivateKey;
namespace codec = dragoncrypto::codec;

namespace {

PlanePoint point(long x, long y, unsigned scale) {
  return PlanePoint{FixedPoint::from_integer(x, scale),
                    FixedPoint::from_integer(y, scale)};
}

PrivateKey block_key_23() {
  PrivateKey key;
  key.p = 23;
  key.a = 1;
  key.b = 1;
  key.d = 1;
  key.size = 1;
  key.iterations = 4;
  key.angle_deg = 0;
  key.precision = 10;
  key.mode = KeyMode::kBlock;
  return key;
}

PrivateKey per_char_key() {
  PrivateKey key;
  key.p = 8388619;
  key.a = 1;
  key.b = 1;
  key.d = 100;
  key.size = 1;
  key.iterations = 15;
  key.angle_deg = 30;
  key.precision = 10;
  key.mode = KeyMode::kPerCharacter;
  return key;
}

codec::Ciphertext random_ciphertext(std::mt19937_64& rng) {
  static const unsigned kScales[] = {0, 1, 2, 3, 10, 50};
  const unsigned scale = kScales[rng() % 6];
  codec::Ciphertext ct;
  const std::size_t count = rng() % 8;
  for (std::size_t i = 0; i < count; ++i) {
    // Mantissas over a wide range, both signs, zeros included.
    Bigint mx = Bigint(rng()) * Bigint(rng()) - Bigint(rng());
    Bigint my = Bigint(rng()) - Bigint(rng());
    if (rng() % 10 == 0) mx = 0;
    ct.points.push_back(PlanePoint{FixedPoint::from_mantissa(mx, scale),
                                   FixedPoint::from_mantissa(my, scale)});
  }
  return ct;
}

}  // namespace

TEST_CASE("render worked examples") {
  codec::Ciphertext two;
  two.points = {point(9, 16, 0), point(12, 4, 0)};
  CHECK(codec::render(two) == "X9X12XY16Y4Y");

  codec::Ciphertext fractional;
  fractional.points = {PlanePoint{FixedPoint::from_mantissa(-250, 2),
                                  FixedPoint::from_mantissa(300, 2)}};
  CHECK(codec::render(fractional) == "X-2.50XY3.00Y");

  CHECK(codec::render(codec::Ciphertext{}) == "XY");
}

TEST_CASE("parse inverts render") {
  const auto two = codec::parse("X9X12XY16Y4Y");
  REQUIRE(two.points.size() == 2);
  CHECK(two.points[0].x.mantissa() == 9);
  CHECK(two.points[0].y.mantissa() == 16);
  CHECK(two.points[1].x.mantissa() == 12);
  CHECK(two.points[1].y.mantissa() == 4);
  CHECK(two.points[0].x.scale() == 0);

  CHECK(codec::parse("XY").points.empty());

  const auto fractional = codec::parse("X-2.50XY3.00Y");
  REQUIRE(fractional.points.size() == 1);
  CHECK(fractional.points[0].x.mantissa() == -250);
  CHECK(fractional.points[0].x.scale() == 2);
}

TEST_CASE("parse rejects the malformed classes") {
  // No XY mark.
  CHECK_THROWS_AS(codec::parse(""), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9Y16Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9X16X"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("9X16Y"), MalformedCiphertext);

  // Unbalanced or misplaced delimiters.
  CHECK_THROWS_AS(codec::parse("X9XY16"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9XY16YY"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("XX9XY16Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9XXY16Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("XY16Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9XY"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse(" XY"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("XY "), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("XY\n"), MalformedCiphertext);

  // Count mismatch.
  CHECK_THROWS_AS(codec::parse("X9X12XY16Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9XY16Y4Y"), MalformedCiphertext);

  // Non-canonical coordinate text.
  CHECK_THROWS_AS(codec::parse("X09XY1Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9.XY1Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X-0XY0Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X+9XY1Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X 9XY1Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9,0XY1Y"), MalformedCiphertext);

  // Mixed fractional precision.
  CHECK_THROWS_AS(codec::parse("X9.0X12.00XY16.0Y4.00Y"), MalformedCiphertext);
  CHECK_THROWS_AS(codec::parse("X9.0XY16Y"), MalformedCiphertext);
}

TEST_CASE("render/parse roundtrip on random ciphertexts") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const codec::Ciphertext ct = random_ciphertext(rng);
    const std::string rendered = codec::render(ct);
    const codec::Ciphertext back = codec::parse(rendered);
    REQUIRE(back == ct);
    REQUIRE(codec::render(back) == rendered);
  }
}

TEST_CASE("render output matches the coordinate grammar") {
  std::mt19937_64 rng(77);
  const std::regex shape(
      R"(^X((-?(0|[1-9][0-9]*)(\.[0-9]+)?)X)*Y((-?(0|[1-9][0-9]*)(\.[0-9]+)?)Y)*$)");
  for (int trial = 0; trial < 200; ++trial) {
    const std::string rendered = codec::render(random_ciphertext(rng));
    CAPTURE(rendered);
    CHECK(std::regex_match(rendered, shape));
    CHECK(rendered.find("XY") != std::string::npos);
  }
}

TEST_CASE("write_key emits the exact line format") {
  CHECK(codec::write_key(block_key_23()) ==
        "version = 1\n"
        "p = 23\n"
        "a = 1\n"
        "b = 1\n"
        "d = 1\n"
        "size = 1\n"
        "iterations = 4\n"
        "angle_deg = 0\n"
        "precision = 10\n"
        "mode = block\n");
}

TEST_CASE("read_key inverts write_key") {
  for (const PrivateKey& key : {block_key_23(), per_char_key()}) {
    const PrivateKey back = codec::read_key(codec::write_key(key));
    CHECK(back == key);
    CHECK(codec::write_key(back) == codec::write_key(key));
  }
}

TEST_CASE("read_key reduces negative curve coefficients") {
  PrivateKey key = block_key_23();
  const std::string text =
      "version = 1\np = 23\na = -1\nb = -3\nd = 1\nsize = 1\n"
      "iterations = 4\nangle_deg = 0\nprecision = 10\nmode = block\n";
  const PrivateKey read = codec::read_key(text);
  CHECK(read.a == 22);
  CHECK(read.b == 20);
}

TEST_CASE("read_key structural failures") {
  const std::string good = codec::write_key(block_key_23());

  auto mutate = [&](const std::string& from, const std::string& to) {
    std::string text = good;
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
  };

  CHECK_THROWS_AS(codec::read_key(""), MalformedKey);
  CHECK_THROWS_AS(codec::read_key("version = 1\n"), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(good + "extra = 1\n"), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(good.substr(0, good.size() - 1)),
                  MalformedKey);  // missing final LF
  CHECK_THROWS_AS(codec::read_key(mutate("version = 1", "version = 2")),
                  MalformedKey);
  CHECK_THROWS_AS(codec::read_key(mutate("p = 23", "p=23")), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(mutate("p = 23", "q = 23")), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(mutate("p = 23", "p = 023")), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(mutate("p = 23", "p = 23 ")), MalformedKey);
  CHECK_THROWS_AS(codec::read_key(mutate("mode = block", "mode = Block")),
                  MalformedKey);
  // CRLF endings leave a stray CR in every value.
  std::string crlf;
  for (const char c : good) {
    if (c == '\n') crlf += "\r\n"; else crlf.push_back(c);
  }
  CHECK_THROWS_AS(codec::read_key(crlf), MalformedKey);
}

TEST_CASE("key invariants are validated on read and write") {
  auto with = [](auto&& edit) {
    PrivateKey key = block_key_23();
    edit(key);
    return key;
  };

  // p must be a prime = 3 (mod 4), at least 7.
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.p = 13; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.p = 25; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.p = 3; })),
                  InvalidKeyParameters);
  // Singular curve.
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) {
                    k.a = 0;
                    k.b = 0;
                  })),
                  InvalidKeyParameters);
  // Unreduced coefficients are the caller's bug, not silently fixed here.
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.a = -1; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.b = 23; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.d = 0; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) { k.size = 0; })),
                  InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.iterations = 0; })),
      InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.iterations = 65; })),
      InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.angle_deg = 360; })),
      InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.angle_deg = -1; })),
      InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.precision = 9; })),
      InvalidKeyParameters);
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) { k.precision = 10001; })),
      InvalidKeyParameters);

  // Per-character mode needs every code point to embed: d*(2^16+1) <= p.
  CHECK_THROWS_AS(codec::validate_key(with([](PrivateKey& k) {
                    k.mode = KeyMode::kPerCharacter;
                  })),
                  InvalidKeyParameters);
  CHECK_NOTHROW(codec::validate_key(per_char_key()));
  CHECK_THROWS_AS(
      codec::validate_key(with([](PrivateKey& k) {
        k = PrivateKey{8388619, 1, 1, 129, 1, 15, 30, 10,
                       KeyMode::kPerCharacter};
      })),
      InvalidKeyParameters);  // 129 * 65537 > 8388619

  // Out-of-range machine-word fields in the file itself.
  const std::string good = codec::write_key(block_key_23());
  std::string text = good;
  text.replace(text.find("iterations = 4"), 14, "iterations = 99999999999999");
  CHECK_THROWS_AS(codec::read_key(text), InvalidKeyParameters);
}

TEST_CASE("normalized reduces into the field") {
  PrivateKey key = block_key_23();
  key.a = -1;
  key.b = 48;
  const PrivateKey norm = codec::normalized(key);
  CHECK(norm.a == 22);
  CHECK(norm.b == 2);
  // 4a^3 + 27b^2 = 4*(-1) + 27*4 = 104 = 12 (mod 23): non-singular.
  // Valid after normalization, not before.
  CHECK_NOTHROW(codec::validate_key(norm));
}
