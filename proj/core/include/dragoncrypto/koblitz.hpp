#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dragoncrypto/bigint.hpp"
#include "dragoncrypto/fieldmath.hpp"

namespace dragoncrypto::koblitz {

// Message characters are base-2^16 digits; code point 0 is excluded so the
// divmod unpacking terminates unambiguously.
inline constexpr std::uint32_t kCodePointBase = 1u << 16;
inline constexpr std::size_t kMaxBlockChars = 160;

// y^2 = x^3 + a x + b over F_p, used purely as an encoding alphabet.
class CurveParams {
 public:
  // Reduces a and b into [0, p) and rejects singular curves
  // (4a^3 + 27b^2 == 0 mod p) with InvalidKeyParameters.
  static CurveParams checked(field::Prime p, const Bigint& a, const Bigint& b);

  const field::Prime& p() const noexcept { return p_; }
  const Bigint& a() const noexcept { return a_; }
  const Bigint& b() const noexcept { return b_; }

  // x^3 + a x + b mod p.
  Bigint rhs(const Bigint& x) const;

 private:
  CurveParams(field::Prime p, Bigint a, Bigint b);

  field::Prime p_;
  Bigint a_;
  Bigint b_;
};

struct CurvePoint {
  Bigint x;
  Bigint y;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

bool on_curve(const CurveParams& params, const Bigint& x, const Bigint& y);

// A packed block: m = sum a_k * 2^16*(k-1) over the code points a_k.
struct MessageBlock {
  Bigint m;
  std::u32string chars;
};

// Packs up to kMaxBlockChars code points, each in [1, 2^16). Empty text
// packs to m = 0. Throws CodePointOutOfRange / BlockTooLong.
MessageBlock pack(std::u32string_view text);

// Inverse of pack on its range: repeated divmod by 2^16 until the quotient
// is zero. m must be non-negative.
std::u32string unpack(Bigint m);

// Embeds m as a curve point: the smallest j in [0, d) for which
// s = rhs(d*m + j) is a quadratic residue gives x = d*m + j, y = sqrt(s).
// Requires d >= 1 and d*(m+1) <= p (throws MessageTooLarge otherwise);
// throws EncodeFailure when no j works (probability ~ 2^-d).
CurvePoint encode(const Bigint& m, const CurveParams& params, const Bigint& d);

// floor(x / d); exact inverse of encode for the j-range used there.
Bigint decode(const CurvePoint& pt, const Bigint& d);

}  // namespace dragoncrypto::koblitz
