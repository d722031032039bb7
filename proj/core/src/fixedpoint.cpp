#include "dragoncrypto/fixedpoint.hpp"

#include <stdexcept>

namespace dragoncrypto {
namespace {

void require_same_scale(const FixedPoint& a, const FixedPoint& b) {
  if (a.scale() != b.scale()) {
    throw std::invalid_argument("fixed-point operands have different scales");
  }
}

// Extra decimal digits carried through the trig series before the single
// half-even rounding back to the target scale.
constexpr unsigned kGuardDigits = 10;

// floor(pi * 10^digits), by Machin's formula with five internal guard
// digits; the result is accurate to well under one ulp.
Bigint pi_scaled(unsigned digits) {
  const unsigned work = digits + 5;
  const Bigint one = pow10(work);
  auto atan_inv = [&one](unsigned k) {
    // arctan(1/k) = sum (-1)^i / ((2i+1) k^(2i+1))
    const Bigint k2 = Bigint(k) * k;
    Bigint power = one / k;
    Bigint sum = power;
    for (unsigned i = 1; power != 0; ++i) {
      power /= k2;
      const Bigint term = power / (2 * i + 1);
      if (i % 2 == 1) {
        sum -= term;
      } else {
        sum += term;
      }
    }
    return sum;
  };
  const Bigint pi = 16 * atan_inv(5) - 4 * atan_inv(239);
  return pi / pow10(5);
}

// sin and cos of x (radians, scaled by `one`), for 0 <= x <= pi/4.
// Alternating Taylor sums with magnitude-tracked terms; every intermediate
// division truncates toward zero, keeping the accumulated error to a few
// dozen ulps of the guard scale.
std::pair<Bigint, Bigint> sin_cos_taylor(const Bigint& x, const Bigint& one) {
  const Bigint x2 = x * x;
  const Bigint one2 = one * one;

  Bigint sin_sum = x;
  Bigint term = x;
  for (unsigned k = 1; term != 0; ++k) {
    term = term * x2 / (one2 * (2 * k) * (2 * k + 1));
    if (term == 0) break;
    if (k % 2 == 1) {
      sin_sum -= term;
    } else {
      sin_sum += term;
    }
  }

  Bigint cos_sum = one;
  term = one;
  for (unsigned k = 1; term != 0; ++k) {
    term = term * x2 / (one2 * (2 * k - 1) * (2 * k));
    if (term == 0) break;
    if (k % 2 == 1) {
      cos_sum -= term;
    } else {
      cos_sum += term;
    }
  }

  return {sin_sum, cos_sum};
}

}  // namespace

FixedPoint FixedPoint::from_mantissa(Bigint mantissa, unsigned scale) {
  FixedPoint fp;
  fp.mantissa_ = std::move(mantissa);
  fp.scale_ = scale;
  return fp;
}

FixedPoint FixedPoint::from_integer(const Bigint& value, unsigned scale) {
  return from_mantissa(value * pow10(scale), scale);
}

std::optional<FixedPoint> FixedPoint::parse(std::string_view text) {
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) i = 1;

  std::size_t int_begin = i;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
  const std::string_view int_digits = text.substr(int_begin, i - int_begin);
  if (int_digits.empty()) return std::nullopt;
  if (int_digits.size() > 1 && int_digits[0] == '0') return std::nullopt;

  std::string_view frac_digits;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t frac_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    frac_digits = text.substr(frac_begin, i - frac_begin);
    if (frac_digits.empty()) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;

  std::string digits(int_digits);
  digits.append(frac_digits);
  std::size_t first_significant = digits.find_first_not_of('0');
  Bigint mantissa = first_significant == std::string::npos
                        ? Bigint(0)
                        : Bigint(digits.substr(first_significant));
  if (negative) {
    if (mantissa == 0) return std::nullopt;  // "-0" and "-0.00" are not canonical
    mantissa = -mantissa;
  }
  return from_mantissa(std::move(mantissa),
                       static_cast<unsigned>(frac_digits.size()));
}

std::string FixedPoint::str() const {
  std::string digits = Bigint(boost::multiprecision::abs(mantissa_)).str();
  std::string out;
  if (mantissa_ < 0) out.push_back('-');
  if (scale_ == 0) {
    out += digits;
    return out;
  }
  if (digits.size() <= scale_) {
    digits.insert(0, scale_ + 1 - digits.size(), '0');
  }
  out.append(digits, 0, digits.size() - scale_);
  out.push_back('.');
  out.append(digits, digits.size() - scale_, scale_);
  return out;
}

bool FixedPoint::is_integral() const {
  if (scale_ == 0) return true;
  return mantissa_ % pow10(scale_) == 0;
}

Bigint FixedPoint::to_integer() const {
  if (!is_integral()) {
    throw std::logic_error("to_integer on a non-integral fixed-point value");
  }
  return scale_ == 0 ? mantissa_ : Bigint(mantissa_ / pow10(scale_));
}

FixedPoint FixedPoint::rescaled(unsigned new_scale) const {
  if (new_scale < scale_) {
    throw std::invalid_argument("rescaled: narrowing a fixed-point scale is lossy");
  }
  return from_mantissa(mantissa_ * pow10(new_scale - scale_), new_scale);
}

FixedPoint FixedPoint::operator+(const FixedPoint& rhs) const {
  require_same_scale(*this, rhs);
  return from_mantissa(mantissa_ + rhs.mantissa_, scale_);
}

FixedPoint FixedPoint::operator-(const FixedPoint& rhs) const {
  require_same_scale(*this, rhs);
  return from_mantissa(mantissa_ - rhs.mantissa_, scale_);
}

FixedPoint FixedPoint::operator-() const {
  return from_mantissa(-mantissa_, scale_);
}

FixedPoint FixedPoint::mul_int(const Bigint& k) const {
  return from_mantissa(mantissa_ * k, scale_);
}

bool FixedPoint::operator<(const FixedPoint& rhs) const {
  require_same_scale(*this, rhs);
  return mantissa_ < rhs.mantissa_;
}

std::pair<FixedPoint, FixedPoint> sin_cos_deg(int theta_deg, unsigned scale) {
  if (theta_deg < 0 || theta_deg >= 360) {
    throw std::invalid_argument("sin_cos_deg: angle must be an integer degree in [0, 360)");
  }
  const int quadrant = theta_deg / 90;
  const int r = theta_deg % 90;
  const bool swapped = r > 45;  // sin r = cos (90-r), cos r = sin (90-r)
  const int reduced = swapped ? 90 - r : r;

  const unsigned guard_scale = scale + kGuardDigits;
  const Bigint one = pow10(guard_scale);
  // x = reduced * pi / 180 at the guard scale, one rounded step from a
  // ten-digit-finer pi.
  const Bigint x = div_round_half_even(
      Bigint(reduced) * pi_scaled(guard_scale + kGuardDigits),
      Bigint(180) * pow10(kGuardDigits));

  auto [sin_r, cos_r] = sin_cos_taylor(x, one);
  if (swapped) std::swap(sin_r, cos_r);

  // The single rounding point back to the target scale.
  Bigint sin_m = div_round_half_even(sin_r, pow10(kGuardDigits));
  Bigint cos_m = div_round_half_even(cos_r, pow10(kGuardDigits));

  switch (quadrant) {
    case 0: break;
    case 1: std::swap(sin_m, cos_m); cos_m = -cos_m; break;
    case 2: sin_m = -sin_m; cos_m = -cos_m; break;
    default: std::swap(sin_m, cos_m); sin_m = -sin_m; break;
  }
  return {FixedPoint::from_mantissa(std::move(sin_m), scale),
          FixedPoint::from_mantissa(std::move(cos_m), scale)};
}

}  // namespace dragoncrypto
