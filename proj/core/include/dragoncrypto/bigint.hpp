#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dragoncrypto {

// All integer quantities that can outgrow machine words (field elements,
// packed message blocks, fixed-point mantissas) use one shared
// arbitrary-precision type.
using Bigint = boost::multiprecision::cpp_int;

// Reduces a into [0, m). m must be positive.
Bigint mod_floor(const Bigint& a, const Bigint& m);

// 10^digits.
Bigint pow10(unsigned digits);

// Integer division rounded half to even. den must be positive.
Bigint div_round_half_even(const Bigint& num, const Bigint& den);

// Parses a canonical decimal integer: optional '-', then "0" or a digit
// string without leading zeros. "-0" is rejected. Returns nullopt on any
// deviation.
std::optional<Bigint> parse_canonical_int(std::string_view text);

}  // namespace dragoncrypto
