#pragma once

#include <cstdint>
#include <random>

#include "supercong/supercong.hpp"

namespace supercong::testing {

// Fixed seeds keep every randomized property reproducible.
inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

inline long uniform(std::mt19937_64& g, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(g);
}

// n/d with |n| ≤ num_bound, 1 ≤ d ≤ den_bound.
inline Rational random_rational(std::mt19937_64& g, long num_bound, long den_bound) {
  return Rational(uniform(g, -num_bound, num_bound), uniform(g, 1, den_bound));
}

// A rational that is p-integral: its denominator avoids p.
inline Rational random_p_integral(std::mt19937_64& g, std::uint64_t p, long num_bound, long den_bound) {
  while (true) {
    Rational x = random_rational(g, num_bound, den_bound);
    if (x.den() % big_from_u64(p) != 0) return x;
  }
}

inline std::uint64_t random_odd_prime(std::mt19937_64& g, std::uint64_t hi) {
  const auto primes = mod::odd_primes_between(3, hi);
  return primes[static_cast<std::size_t>(uniform(g, 0, static_cast<long>(primes.size()) - 1))];
}

// Brute-force x mod p^s for p-integral x, via BigInt arithmetic only.
inline std::int64_t brute_residue(const Rational& x, std::uint64_t p, int s) {
  BigInt M = 1;
  for (int i = 0; i < s; ++i) M *= big_from_u64(p);
  BigInt n = x.num() % M, d = x.den() % M, inv;
  if (n < 0) n += M;
  if (d < 0) d += M;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
  BigInt r = (n * inv) % M;
  return big_to_i64(r);
}

}  // namespace supercong::testing
