#pragma once

#include <utility>

#include "dragoncrypto/bigint.hpp"

namespace dragoncrypto::field {

// Fixed Miller-Rabin round count; witnesses come from a deterministic
// schedule seeded by the candidate itself, so answers are reproducible.
inline constexpr int kMillerRabinRounds = 64;

// base^exp mod m, in [0, m). exp must be non-negative, m at least 2.
Bigint mod_pow(const Bigint& base, const Bigint& exp, const Bigint& m);

// Miller-Rabin with kMillerRabinRounds deterministic pseudo-random bases.
// n must be non-negative.
bool is_probable_prime(const Bigint& n);

// A validated field modulus: probable prime, >= 7 and congruent 3 mod 4
// (the square-root exponent (p+1)/4 is only an integer then).
class Prime {
 public:
  // Throws InvalidKeyParameters naming the violated invariant.
  static Prime checked(Bigint value);

  const Bigint& value() const noexcept { return value_; }

  // (p+1)/4, the square-root exponent.
  const Bigint& sqrt_exponent() const noexcept { return sqrt_exp_; }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  explicit Prime(Bigint value);

  Bigint value_;
  Bigint sqrt_exp_;
};

// True iff s^((p+1)/2) == s (mod p). Holds for s = 0. s must lie in [0, p).
bool is_quadratic_residue(const Bigint& s, const Prime& p);

// The root s^((p+1)/4) mod p (always this one, never its negation).
// Throws NotAResidue when s has no square root mod p.
Bigint mod_sqrt(const Bigint& s, const Prime& p);

}  // namespace dragoncrypto::field
