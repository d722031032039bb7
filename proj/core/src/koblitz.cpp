#include "dragoncrypto/koblitz.hpp"

#include <stdexcept>
#include <utility>

#include "dragoncrypto/errors.hpp"

namespace dragoncrypto::koblitz {

CurveParams::CurveParams(field::Prime p, Bigint a, Bigint b)
    : p_(std::move(p)), a_(std::move(a)), b_(std::move(b)) {}

CurveParams CurveParams::checked(field::Prime p, const Bigint& a,
                                 const Bigint& b) {
  const Bigint& m = p.value();
  Bigint ra = mod_floor(a, m);
  Bigint rb = mod_floor(b, m);
  // Discriminant up to a constant factor: zero means a cusp or node, and
  // x^3 + ax + b has repeated roots.
  if (mod_floor(4 * ra * ra * ra + 27 * rb * rb, m) == 0) {
    throw InvalidKeyParameters("singular curve: 4a^3 + 27b^2 = 0 (mod p)");
  }
  return CurveParams(std::move(p), std::move(ra), std::move(rb));
}

Bigint CurveParams::rhs(const Bigint& x) const {
  return mod_floor(x * x * x + a_ * x + b_, p_.value());
}

bool on_curve(const CurveParams& params, const Bigint& x, const Bigint& y) {
  if (x < 0 || x >= params.p().value()) return false;
  if (y < 0 || y >= params.p().value()) return false;
  return mod_floor(y * y, params.p().value()) == params.rhs(x);
}

MessageBlock pack(std::u32string_view text) {
  if (text.size() > kMaxBlockChars) {
    throw BlockTooLong("block of " + std::to_string(text.size()) +
                       " characters exceeds the limit of " +
                       std::to_string(kMaxBlockChars));
  }
  Bigint m = 0;
  for (std::size_t i = text.size(); i-- > 0;) {
    const char32_t c = text[i];
    if (c == 0 || c >= kCodePointBase) {
      throw CodePointOutOfRange("code point " +
                                std::to_string(static_cast<std::uint32_t>(c)) +
                                " outside [1, 65536)");
    }
    m = (m << 16) + static_cast<std::uint32_t>(c);
  }
  return MessageBlock{std::move(m), std::u32string(text)};
}

std::u32string unpack(Bigint m) {
  if (m < 0) {
    throw std::invalid_argument("packed block value must be non-negative");
  }
  std::u32string chars;
  while (m != 0) {
    const auto digit = static_cast<std::uint32_t>(m & 0xFFFF);
    if (digit == 0) {
      throw InvalidCodePoint("packed block contains code point 0");
    }
    chars.push_back(static_cast<char32_t>(digit));
    m >>= 16;
  }
  return chars;
}

CurvePoint encode(const Bigint& m, const CurveParams& params, const Bigint& d) {
  if (d < 1) {
    throw std::invalid_argument("Koblitz spread d must be at least 1");
  }
  if (m < 0) {
    throw std::invalid_argument("message value must be non-negative");
  }
  if (d * (m + 1) > params.p().value()) {
    throw MessageTooLarge("message value needs d*(m+1) <= p to embed");
  }
  // x runs over the window [d*m, d*(m+1)); every x in it decodes back to m.
  Bigint x = d * m;
  for (Bigint j = 0; j < d; ++j, ++x) {
    const Bigint s = params.rhs(x);
    if (field::is_quadratic_residue(s, params.p())) {
      return CurvePoint{x, field::mod_sqrt(s, params.p())};
    }
  }
  throw EncodeFailure("no quadratic residue in the d-window of message value");
}

Bigint decode(const CurvePoint& pt, const Bigint& d) {
  if (d < 1) {
    throw std::invalid_argument("Koblitz spread d must be at least 1");
  }
  if (pt.x < 0) {
    throw std::invalid_argument("curve point x-coordinate must be non-negative");
  }
  return pt.x / d;
}

}  // namespace dragoncrypto::koblitz
