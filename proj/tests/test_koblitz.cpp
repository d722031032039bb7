#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "dragoncrypto/errors.hpp"
#include "dragoncrypto/koblitz.hpp"

using dragoncrypto::Bigint;
using dragoncrypto::BlockTooLong;
using dragoncrypto::CodePointOutOfRange;
using dragoncrypto::EncodeFailure;
using dragoncrypto::InvalidCodePoint;
using dragoncrypto::InvalidKeyParameters;
using dragoncrypto::MessageTooLarge;
namespace field = dragoncrypto::field;
namespace koblitz = dragoncrypto::koblitz;

namespace {

koblitz::CurveParams curve(unsigned p, int a, int b) {
  return koblitz::CurveParams::checked(field::Prime::checked(p), a, b);
}

}  // namespace

TEST_CASE("CurveParams reduces coefficients and rejects singular curves") {
  const auto params = curve(23, -3, 24);
  CHECK(params.a() == 20);
  CHECK(params.b() == 1);
  CHECK(params.p().value() == 23);

  CHECK_THROWS_AS(curve(23, 0, 0), InvalidKeyParameters);
  // 4*(-3)^3 + 27*2^2 = 0: the classic singular pair.
  CHECK_THROWS_AS(curve(8388619, -3, 2), InvalidKeyParameters);
  CHECK_THROWS_AS(curve(8388619, -3, -2), InvalidKeyParameters);
  CHECK_NOTHROW(curve(8388619, -3, 3));
}

TEST_CASE("rhs worked values") {
  const auto params = curve(23, 1, 1);
  CHECK(params.rhs(9) == 3);   // 739 = 32*23 + 3
  CHECK(params.rhs(0) == 1);
  CHECK(params.rhs(1) == 3);
  CHECK(params.rhs(22) == ((Bigint(22) * 22 * 22 + 22 + 1) % 23));
}

TEST_CASE("on_curve") {
  const auto params = curve(23, 1, 1);
  CHECK(koblitz::on_curve(params, 9, 16));
  CHECK(koblitz::on_curve(params, 9, 7));  // the conjugate root 23 - 16
  CHECK(koblitz::on_curve(params, 0, 1));
  CHECK_FALSE(koblitz::on_curve(params, 9, 15));
  CHECK_FALSE(koblitz::on_curve(params, 10, 16));
  CHECK_FALSE(koblitz::on_curve(params, 23, 1));   // out of range
  CHECK_FALSE(koblitz::on_curve(params, -1, 1));
  CHECK_FALSE(koblitz::on_curve(params, 9, -7));
}

TEST_CASE("encode desk example lands on (9, 16) and decodes to 2") {
  const auto params = curve(23, 1, 1);
  const auto pt = koblitz::encode(2, params, 4);
  CHECK(pt.x == 9);
  CHECK(pt.y == 16);
  CHECK(koblitz::decode(pt, 4) == 2);

  // The j-scan really does take the smallest j: x=8 first (rhs 15, not a
  // residue mod 23), then x=9 (rhs 3 = 16^2). Verified against the
  // brute-force square table.
  std::set<Bigint> squares;
  for (int t = 0; t < 23; ++t) squares.insert(Bigint(t) * t % 23);
  CHECK(squares.count(params.rhs(8)) == 0);
  CHECK(squares.count(params.rhs(9)) == 1);
}

TEST_CASE("encode worked values") {
  CHECK(koblitz::encode(0, curve(23, 1, 1), 1) == koblitz::CurvePoint{0, 1});
  // 'A' = 65 with spread 4 over p = 271.
  CHECK(koblitz::encode(65, curve(271, 1, 1), 4) ==
        koblitz::CurvePoint{260, 37});
}

TEST_CASE("encode respects the embedding bound") {
  const auto params = curve(23, 1, 1);
  // m = 22 satisfies 1*23 <= 23, so the bound passes; x = 22 happens to be
  // a non-residue window, which is a different failure.
  CHECK_THROWS_AS(koblitz::encode(22, params, 1), EncodeFailure);
  CHECK_NOTHROW(koblitz::encode(19, params, 1));   // rhs(19) = 2 = 5^2 mod 23
  CHECK_THROWS_AS(koblitz::encode(23, params, 1), MessageTooLarge);
  CHECK_NOTHROW(koblitz::encode(4, params, 4));    // 4*5 = 20 <= 23
  CHECK_THROWS_AS(koblitz::encode(5, params, 4), MessageTooLarge);
  CHECK_THROWS_AS(koblitz::encode(-1, params, 1), std::invalid_argument);
  CHECK_THROWS_AS(koblitz::encode(1, params, 0), std::invalid_argument);
}

TEST_CASE("encode fails loudly when the whole window is non-residue") {
  // With d = 1 the window is a single x; rhs(8) = 15 is not a square mod 23.
  CHECK_THROWS_AS(koblitz::encode(8, curve(23, 1, 1), 1), EncodeFailure);
}

TEST_CASE("exhaustive roundtrip over small fields") {
  for (const unsigned p : {23u, 271u, 1019u}) {
    const auto params = curve(p, 1, 1);
    for (const int d : {1, 4, 100}) {
      // Largest embeddable m: d*(m+1) <= p.
      const Bigint max_m = Bigint(p) / d - 1;
      for (Bigint m = 0; m <= max_m; ++m) {
        CAPTURE(p);
        CAPTURE(d);
        CAPTURE(m);
        koblitz::CurvePoint pt;
        try {
          pt = koblitz::encode(m, params, d);
        } catch (const EncodeFailure&) {
          continue;  // possible for tiny d; never a wrong decode
        }
        REQUIRE(koblitz::on_curve(params, pt.x, pt.y));
        REQUIRE(koblitz::decode(pt, d) == m);
      }
    }
  }
}

TEST_CASE("pack/unpack base-2^16 digits, first character least significant") {
  CHECK(koblitz::pack(U"").m == 0);
  CHECK(koblitz::pack(U"A").m == 65);
  CHECK(koblitz::pack(U"AB").m == 65 + (Bigint(66) << 16));
  CHECK(koblitz::pack(U"AB").m == 4325441);
  CHECK(koblitz::unpack(4325441) == std::u32string(U"AB"));
  CHECK(koblitz::unpack(0).empty());
  CHECK(koblitz::pack(U"AB").chars == std::u32string(U"AB"));
}

TEST_CASE("pack/unpack roundtrip on random blocks") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t len = rng() % 161;
    std::u32string text;
    for (std::size_t i = 0; i < len; ++i) {
      text.push_back(static_cast<char32_t>(1 + rng() % 65535));
    }
    REQUIRE(koblitz::unpack(koblitz::pack(text).m) == text);
  }
}

TEST_CASE("pack guards") {
  const std::u32string maxed(160, U'a');
  CHECK_NOTHROW(koblitz::pack(maxed));
  const std::u32string over(161, U'a');
  CHECK_THROWS_AS(koblitz::pack(over), BlockTooLong);
  const char32_t zero[] = {U'a', 0, U'b', 0};
  CHECK_THROWS_AS(koblitz::pack(std::u32string_view(zero, 3)),
                  CodePointOutOfRange);
  const char32_t big[] = {0x10000, 0};
  CHECK_THROWS_AS(koblitz::pack(std::u32string_view(big, 1)),
                  CodePointOutOfRange);
}

TEST_CASE("unpack guards") {
  CHECK_THROWS_AS(koblitz::unpack(-1), std::invalid_argument);
  // 65536 has digits (0, 1): a zero code point inside the block.
  CHECK_THROWS_AS(koblitz::unpack(65536), InvalidCodePoint);
}

TEST_CASE("decode guards") {
  CHECK_THROWS_AS(koblitz::decode(koblitz::CurvePoint{1, 1}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(koblitz::decode(koblitz::CurvePoint{-1, 1}, 4),
                  std::invalid_argument);
  CHECK(koblitz::decode(koblitz::CurvePoint{11, 5}, 4) == 2);  // floor(11/4)
}
