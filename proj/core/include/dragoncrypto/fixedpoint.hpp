#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "dragoncrypto/bigint.hpp"

namespace dragoncrypto {

// Scaled-decimal real number: value = mantissa / 10^scale. All arithmetic is
// exact integer mantissa arithmetic, so a computation replayed with the same
// inputs yields bit-identical results on every platform. The single rounding
// point in the whole library is the guard-digit rounding inside sin_cos_deg.
class FixedPoint {
 public:
  FixedPoint() = default;  // zero at scale 0

  static FixedPoint from_mantissa(Bigint mantissa, unsigned scale);
  static FixedPoint from_integer(const Bigint& value, unsigned scale);

  // Canonical text: optional '-', integer digits without leading zeros,
  // then '.' and exactly `scale` fractional digits (no '.' when scale is 0).
  // parse accepts only that grammar and infers the scale from the text.
  static std::optional<FixedPoint> parse(std::string_view text);
  std::string str() const;

  const Bigint& mantissa() const noexcept { return mantissa_; }
  unsigned scale() const noexcept { return scale_; }

  bool is_zero() const noexcept { return mantissa_ == 0; }
  bool is_integral() const;
  // Requires is_integral().
  Bigint to_integer() const;

  // Exact widening to a larger scale. new_scale must be >= scale().
  FixedPoint rescaled(unsigned new_scale) const;

  // Operands must share one scale.
  FixedPoint operator+(const FixedPoint& rhs) const;
  FixedPoint operator-(const FixedPoint& rhs) const;
  FixedPoint operator-() const;
  // Exact product with an integer.
  FixedPoint mul_int(const Bigint& k) const;

  friend bool operator==(const FixedPoint&, const FixedPoint&) = default;
  bool operator<(const FixedPoint& rhs) const;

 private:
  Bigint mantissa_;
  unsigned scale_ = 0;
};

// A point of the plane in fixed-point coordinates.
struct PlanePoint {
  FixedPoint x;
  FixedPoint y;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// (sin theta, cos theta) at the given scale, for integer degrees in [0, 360).
//
// The angle is reduced to [0, 45] degrees with exact quarter-turn identities
// (multiples of 90 degrees come out exactly 0 / +-1), the series is summed
// with 10 guard digits, and the one rounding to the target scale is half to
// even. Pure integer arithmetic throughout: two processes at equal scale
// always produce equal mantissas.
std::pair<FixedPoint, FixedPoint> sin_cos_deg(int theta_deg, unsigned scale);

}  // namespace dragoncrypto
