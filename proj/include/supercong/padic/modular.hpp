#pragma once

// Word-size modular primitives. Every modulus used by the engine is a prime
// power p^s below 2^62, so products fit in unsigned __int128.

#include <cstdint>
#include <vector>

#include "supercong/errors.hpp"

namespace supercong::mod {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline constexpr u64 kModulusLimit = u64{1} << 62;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 r = a + b;  // a, b < m < 2^62: no overflow
  return r >= m ? r - m : r;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

inline u64 reduce_signed(i64 a, u64 m) {
  if (a >= 0) return static_cast<u64>(a) % m;
  u64 mag = static_cast<u64>(-(a + 1)) + 1;
  u64 r = mag % m;
  return r == 0 ? 0 : m - r;
}

inline u64 powmod(u64 base, u64 e, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Inverse of a modulo m when gcd(a, m) = 1; returns 0 otherwise.
inline u64 invmod_or_zero(u64 a, u64 m) {
  if (m == 1) return 0;
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) return 0;
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

// p^s, throwing TooLarge when it would reach 2^62.
inline u64 checked_prime_power(u64 p, int s) {
  if (p < 2) raise(Errc::InvalidArgument, "prime must be >= 2");
  if (s < 1) raise(Errc::InvalidArgument, "precision must be >= 1");
  u64 m = 1;
  for (int i = 0; i < s; ++i) {
    if (m > kModulusLimit / p) raise(Errc::TooLarge, "p^s exceeds the 2^62 modulus limit");
    m *= p;
  }
  return m;
}

// Removes all factors p from x (x ≠ 0) and returns how many were removed.
inline int strip(i64& x, u64 p) {
  int v = 0;
  const i64 pp = static_cast<i64>(p);
  while (x % pp == 0) {
    x /= pp;
    ++v;
  }
  return v;
}

inline int strip(u64& x, u64 p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  // Deterministic Miller-Rabin for 64-bit inputs with the first twelve prime bases.
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Odd primes in [lo, hi] by a sieve of Eratosthenes.
inline std::vector<u64> odd_primes_between(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 3 || lo > hi) return out;
  std::vector<bool> composite(hi + 1, false);
  for (u64 i = 2; i * i <= hi; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= hi; j += i) composite[j] = true;
  }
  for (u64 n = lo < 3 ? 3 : lo; n <= hi; ++n) {
    if (!composite[n] && (n & 1)) out.push_back(n);
  }
  return out;
}

}  // namespace supercong::mod
