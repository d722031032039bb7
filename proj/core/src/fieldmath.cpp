#include "dragoncrypto/fieldmath.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

#include "dragoncrypto/errors.hpp"

namespace dragoncrypto::field {
namespace {

// splitmix64; drives the deterministic Miller-Rabin witness schedule.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// XOR-fold of the 64-bit limbs of |n|: the schedule seed.
std::uint64_t fold_to_u64(const Bigint& n) {
  Bigint v = boost::multiprecision::abs(n);
  std::uint64_t folded = 0;
  while (v != 0) {
    folded ^= static_cast<std::uint64_t>(v & 0xffffffffffffffffULL);
    v >>= 64;
  }
  return folded;
}

constexpr std::array<std::uint32_t, 54> kSmallPrimes = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

// One Miller-Rabin round: n-1 = 2^r * odd, n odd and >= 5.
bool passes_round(const Bigint& n, const Bigint& base, const Bigint& odd,
                  unsigned r) {
  Bigint x = mod_pow(base, odd, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace

Bigint mod_pow(const Bigint& base, const Bigint& exp, const Bigint& m) {
  if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
  if (exp < 0) throw std::invalid_argument("mod_pow: exponent must be non-negative");
  Bigint result = 1;
  Bigint b = mod_floor(base, m);
  Bigint e = exp;
  while (e != 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

bool is_probable_prime(const Bigint& n) {
  if (n < 0) throw std::invalid_argument("is_probable_prime: n must be non-negative");
  if (n < 2) return false;
  for (std::uint32_t q : kSmallPrimes) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // n is odd and > 251 here.
  Bigint odd = n - 1;
  unsigned r = 0;
  while (!boost::multiprecision::bit_test(odd, 0)) {
    odd >>= 1;
    ++r;
  }
  std::uint64_t schedule = fold_to_u64(n);
  const Bigint span = n - 3;  // witnesses drawn from [2, n-2]
  for (int round = 0; round < kMillerRabinRounds; ++round) {
    Bigint raw = Bigint(splitmix64(schedule));
    raw = (raw << 64) | Bigint(splitmix64(schedule));
    Bigint base = 2 + raw % span;
    if (!passes_round(n, base, odd, r)) return false;
  }
  return true;
}

Prime::Prime(Bigint value)
    : value_(std::move(value)), sqrt_exp_((value_ + 1) / 4) {}

Prime Prime::checked(Bigint value) {
  if (value < 7) {
    throw InvalidKeyParameters("p must be at least 7 (got " + value.str() + ")");
  }
  if (value % 4 != 3) {
    throw InvalidKeyParameters(
        "p must be congruent to 3 mod 4 so the square-root exponent "
        "(p+1)/4 is an integer (got " + value.str() + ")");
  }
  if (!is_probable_prime(value)) {
    throw InvalidKeyParameters("p fails the Miller-Rabin primality test (got " +
                               value.str() + ")");
  }
  return Prime(std::move(value));
}

bool is_quadratic_residue(const Bigint& s, const Prime& p) {
  if (s < 0 || s >= p.value()) {
    throw std::invalid_argument("is_quadratic_residue: s must lie in [0, p)");
  }
  return mod_pow(s, (p.value() + 1) / 2, p.value()) == s;
}

Bigint mod_sqrt(const Bigint& s, const Prime& p) {
  if (!is_quadratic_residue(s, p)) {
    throw NotAResidue(s.str() + " is not a quadratic residue mod " +
                      p.value().str());
  }
  return mod_pow(s, p.sqrt_exponent(), p.value());
}

}  // namespace dragoncrypto::field
