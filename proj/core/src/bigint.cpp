#include "dragoncrypto/bigint.hpp"

#include <stdexcept>

namespace dragoncrypto {

Bigint mod_floor(const Bigint& a, const Bigint& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Bigint r = a % m;  // cpp_int % is truncated, sign follows a
  if (r < 0) r += m;
  return r;
}

Bigint pow10(unsigned digits) {
  return boost::multiprecision::pow(Bigint(10), digits);
}

Bigint div_round_half_even(const Bigint& num, const Bigint& den) {
  if (den <= 0) throw std::invalid_argument("div_round_half_even: denominator must be positive");
  const bool negative = num < 0;
  Bigint a = boost::multiprecision::abs(num);
  Bigint q = a / den;
  Bigint twice_rem = (a % den) << 1;
  if (twice_rem > den || (twice_rem == den && boost::multiprecision::bit_test(q, 0))) {
    ++q;
  }
  return negative ? Bigint(-q) : q;
}

std::optional<Bigint> parse_canonical_int(std::string_view text) {
  std::size_t i = 0;
  const bool negative = !text.empty() && text[0] == '-';
  if (negative) i = 1;
  const std::string_view digits = text.substr(i);
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;
  if (negative && digits == "0") return std::nullopt;
  // cpp_int's string constructor treats a leading 0 as an octal prefix;
  // canonical digits never have one, so plain construction is safe.
  Bigint value{std::string(digits)};
  return negative ? Bigint(-value) : value;
}

}  // namespace dragoncrypto
