#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong {

// p-adic valuation with an explicit infinity for zero.
struct ValuationResult {
  bool infinite = false;
  long value = 0;

  static ValuationResult infinity() { return {true, 0}; }
  static ValuationResult of(long v) { return {false, v}; }

  bool is_finite() const { return !infinite; }

  friend bool operator==(const ValuationResult& a, const ValuationResult& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend std::strong_ordering operator<=>(const ValuationResult& a, const ValuationResult& b) {
    if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
    return a.value <=> b.value;
  }
  friend ValuationResult operator+(const ValuationResult& a, const ValuationResult& b) {
    if (a.infinite || b.infinite) return infinity();
    return of(a.value + b.value);
  }

  std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline void require_prime(std::uint64_t p) {
  if (!mod::is_prime(p)) raise(Errc::InvalidArgument, std::to_string(p) + " is not prime");
}

inline void require_odd_prime(std::uint64_t p) {
  require_prime(p);
  if (p == 2) raise(Errc::InvalidArgument, "odd prime required");
}

inline ValuationResult valuation(const BigInt& x, std::uint64_t p) {
  if (x == 0) return ValuationResult::infinity();
  BigInt rest;
  BigInt pp = big_from_u64(p);
  auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
  return ValuationResult::of(static_cast<long>(v));
}

inline ValuationResult valuation(const Rational& x, std::uint64_t p) {
  if (x.is_zero()) return ValuationResult::infinity();
  return ValuationResult::of(valuation(x.num(), p).value - valuation(x.den(), p).value);
}

inline PadicInt inverse_mod(std::int64_t a, std::uint64_t p, int s) {
  PadicInt x(p, s, a);
  if (!x.is_unit()) raise(Errc::NotInvertible, std::to_string(a) + " is divisible by " + std::to_string(p));
  return x.inverse();
}

inline PadicInt reduce_big(const BigInt& x, std::uint64_t p, int s) {
  std::uint64_t m = mod::checked_prime_power(p, s);
  return PadicInt::from_residue(p, s, big_mod_u64(x, m));
}

inline PadicInt reduce_rational(const Rational& x, std::uint64_t p, int s) {
  std::uint64_t m = mod::checked_prime_power(p, s);
  std::uint64_t den = big_mod_u64(x.den(), m);
  if (den % p == 0) {
    raise(Errc::NotPIntegral, x.str() + " has negative " + std::to_string(p) + "-adic valuation");
  }
  std::uint64_t num = big_mod_u64(x.num(), m);
  return PadicInt::from_residue(p, s, mod::mulmod(num, mod::invmod_or_zero(den, m), m));
}

inline int legendre_symbol(const BigInt& a, std::uint64_t p) {
  std::uint64_t r = big_mod_u64(a, p);
  if (r == 0) return 0;
  return mod::powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

inline int legendre_symbol(std::int64_t a, std::uint64_t p) {
  std::uint64_t r = mod::reduce_signed(a, p);
  if (r == 0) return 0;
  return mod::powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// Character of a p-integral rational: the symbol of its image mod p.
inline int legendre_symbol(const Rational& a, std::uint64_t p) {
  PadicInt r = reduce_rational(a, p, 1);
  return legendre_symbol(static_cast<std::int64_t>(r.residue()), p);
}

// x^{p^{s−1}} mod p^s.
inline PadicInt teichmuller(std::int64_t x, std::uint64_t p, int s) {
  PadicInt y(p, s, x);
  if (!y.is_unit()) raise(Errc::NotAUnit, std::to_string(x) + " is divisible by " + std::to_string(p));
  for (int i = 1; i < s; ++i) y = y.pow(p);
  return y;
}

inline PadicInt teichmuller(const PadicInt& x) {
  if (!x.is_unit()) raise(Errc::NotAUnit, "Teichmuller lift of a non-unit");
  PadicInt y = x;
  for (int i = 1; i < x.precision(); ++i) y = y.pow(x.prime());
  return y;
}

// Unit root of X² − trace·X + p, lifted by Newton iteration from trace mod p.
inline PadicInt hensel_unit_root(std::int64_t trace, std::uint64_t p, int s) {
  if (mod::reduce_signed(trace, p) == 0) {
    raise(Errc::Supersingular, "p divides the trace " + std::to_string(trace));
  }
  PadicInt t(p, s, trace);
  PadicInt pp(p, s, static_cast<std::int64_t>(p % t.modulus()));
  PadicInt a = t;
  // Each step doubles the number of correct digits; s steps is always enough.
  for (int i = 0; i < s; ++i) {
    PadicInt f = a * a - t * a + pp;
    if (f.is_zero()) break;
    PadicInt df = a * 2 - t;
    a = a - f * df.inverse();
  }
  return a;
}

// Square root of a unit residue that is a square mod p: Tonelli-Shanks mod p, then Hensel.
inline PadicInt sqrt_unit(const PadicInt& a) {
  const std::uint64_t p = a.prime();
  if (p == 2) raise(Errc::InvalidArgument, "odd prime required");
  std::uint64_t r0 = a.residue() % p;
  if (r0 == 0) raise(Errc::NotAUnit, "square root of a non-unit");
  if (mod::powmod(r0, (p - 1) / 2, p) != 1) raise(Errc::InvalidArgument, "not a square mod p");
  std::uint64_t q = p - 1;
  int e = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++e;
  }
  std::uint64_t z = 2;
  while (mod::powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::uint64_t c = mod::powmod(z, q, p);
  std::uint64_t x = mod::powmod(r0, (q + 1) / 2, p);
  std::uint64_t t = mod::powmod(r0, q, p);
  int m = e;
  while (t != 1) {
    int i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mod::mulmod(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mod::mulmod(b, b, p);
    x = mod::mulmod(x, b, p);
    c = mod::mulmod(b, b, p);
    t = mod::mulmod(t, c, p);
    m = i;
  }
  PadicInt root = PadicInt::from_residue(p, a.precision(), x);
  for (int i = 0; i < a.precision(); ++i) {
    PadicInt f = root * root - a;
    if (f.is_zero()) break;
    root = root - f * (root * 2).inverse();
  }
  return root;
}

// Γ_p(n) = (−1)^n ∏_{1 ≤ j < n, p ∤ j} j mod p^s.
inline PadicInt padic_gamma(std::uint64_t n, std::uint64_t p, int s) {
  if (n < 1) raise(Errc::InvalidArgument, "padic_gamma needs n >= 1");
  std::uint64_t m = mod::checked_prime_power(p, s);
  std::uint64_t acc = 1 % m;
  for (std::uint64_t j = 1; j < n; ++j) {
    if (j % p != 0) acc = mod::mulmod(acc, j % m, m);
  }
  if (n & 1) acc = acc == 0 ? 0 : m - acc;
  return PadicInt::from_residue(p, s, acc);
}

inline Rational harmonic(std::uint64_t k) {
  Rational h(0);
  for (std::uint64_t j = 1; j <= k; ++j) h += Rational(1, static_cast<long>(j));
  return h;
}

}  // namespace supercong
