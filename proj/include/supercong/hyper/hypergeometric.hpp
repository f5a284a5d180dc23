#pragma once

// Truncated hypergeometric sums, exactly over Q and modulo p^s.
//
// The modular path never divides by p: every term is carried as p^v·N/D with
// N, D units, and the running sum as X/D over the latest denominator, so one
// inverse at the end suffices.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::hyper {

struct HGParams {
  std::vector<Rational> upper;  // a_1..a_r
  std::vector<Rational> lower;  // b_1..b_{r−1}
  Rational argument;            // λ
  std::uint64_t truncation = 0; // n: terms k = 0..n

  void validate() const {
    if (upper.size() != lower.size() + 1) {
      raise(Errc::InvalidArgument, "hypergeometric shape needs |upper| = |lower| + 1");
    }
    for (const auto& b : lower) {
      if (b.is_integer() && b.sign() <= 0) {
        raise(Errc::InvalidArgument, "lower parameter " + b.str() + " is a non-positive integer");
      }
    }
  }
};

// (a)_k = a(a+1)…(a+k−1).
inline Rational pochhammer(const Rational& a, std::uint64_t k) {
  Rational out(1);
  Rational x = a;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (x.is_zero()) return Rational(0);
    out *= x;
    x += Rational(1);
  }
  return out;
}

inline Rational truncated_hg(const HGParams& params) {
  params.validate();
  Rational sum(1);
  Rational term(1);
  for (std::uint64_t k = 0; k < params.truncation; ++k) {
    const Rational kk(static_cast<long>(k));
    Rational ratio = params.argument / Rational(static_cast<long>(k + 1));
    for (const auto& a : params.upper) ratio *= a + kk;
    if (ratio.is_zero()) break;
    for (const auto& b : params.lower) ratio /= b + kk;
    term *= ratio;
    sum += term;
  }
  return sum;
}

// ᵣF_{r−1}(1/2,…,1/2; 1,…,1; λ) truncated at n.
inline HGParams f_r_params(const Rational& lambda, int r, std::uint64_t n) {
  if (r < 1) raise(Errc::InvalidArgument, "F_r needs r >= 1");
  HGParams params;
  params.upper.assign(static_cast<std::size_t>(r), Rational(1, 2));
  params.lower.assign(static_cast<std::size_t>(r - 1), Rational(1));
  params.argument = lambda;
  params.truncation = n;
  return params;
}

inline Rational f_r(const Rational& lambda, int r, std::uint64_t n) {
  return truncated_hg(f_r_params(lambda, r, n));
}

namespace detail {

using mod::i64;
using mod::u64;

// A parameter num/den with den > 0 small enough for 64-bit term recurrences.
struct SmallParam {
  i64 num;
  i64 den;
};

inline std::optional<SmallParam> small_param(const Rational& x) {
  if (!big_fits_i64(x.num()) || !big_fits_i64(x.den())) return std::nullopt;
  i64 n = big_to_i64(x.num());
  i64 d = big_to_i64(x.den());
  // Keep headroom for n + k·d with k < 2^31.
  constexpr i64 kLimit = i64{1} << 30;
  if (n > kLimit || n < -kLimit || d > kLimit) return std::nullopt;
  return SmallParam{n, d};
}

// p^v·num/den with num, den units mod p^W (num = 0 encodes the zero value).
struct ScaledUnit {
  long v = 0;
  u64 num = 1;
  u64 den = 1;
};

inline ScaledUnit scaled_from_rational(const Rational& x, u64 p, u64 modulus) {
  ScaledUnit out;
  if (x.is_zero()) {
    out.num = 0;
    return out;
  }
  BigInt n = x.num(), d = x.den(), pp = big_from_u64(p), rest;
  long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t()));
  n = rest;
  long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), d.get_mpz_t(), pp.get_mpz_t()));
  d = rest;
  out.v = vn - vd;
  out.num = big_mod_u64(n, modulus);
  out.den = big_mod_u64(d, modulus);
  return out;
}

inline ScaledUnit scaled_from_padic(const PadicInt& x) {
  ScaledUnit out;
  if (x.is_zero()) {
    out.num = 0;
    return out;
  }
  u64 r = x.residue();
  out.v = mod::strip(r, x.prime());
  out.num = r;  // unit known mod p^{s−v}; the missing digits are multiplied by p^v ≥ p.
  return out;
}

// Multiplies the unit part by the integer x ≠ 0 and moves ord_p(x) into v,
// with sign −1 when x sits in a denominator.
inline void absorb(i64 x, u64 p, u64 modulus, u64& unit, long& v, bool& negative, int sign = 1) {
  if (x < 0) {
    negative = !negative;
    x = -x;
  }
  v += sign * mod::strip(x, p);
  unit = mod::mulmod(unit, static_cast<u64>(x) % modulus, modulus);
}

// Σ_{k≤n} ∏(a_i)_k/(k!∏(b_j)_k)·λ^k mod p^W. Returns nullopt when some term has
// negative valuation (callers fall back to exact arithmetic).
inline std::optional<u64> hg_sum_units(std::span<const SmallParam> upper,
                                       std::span<const SmallParam> lower, const ScaledUnit& lambda,
                                       std::uint64_t n, u64 p, int W) {
  const u64 M = mod::checked_prime_power(p, W);
  if (n == 0 || lambda.num == 0) return 1 % M;
  std::vector<u64> pw(static_cast<std::size_t>(W) + 1, 1);
  for (int i = 1; i <= W; ++i) pw[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i) - 1] * p;

  // Per-step constant factor λ·∏b_den/∏a_den.
  u64 c_num = lambda.num % M, c_den = lambda.den % M;
  long c_v = lambda.v;
  bool c_neg = false;
  for (const auto& b : lower) absorb(b.den, p, M, c_num, c_v, c_neg);
  for (const auto& a : upper) absorb(a.den, p, M, c_den, c_v, c_neg, -1);
  if (c_neg) c_num = c_num == 0 ? 0 : M - c_num;

  u64 N = 1 % M, D = 1 % M, X = 1 % M;
  long v = 0;
  for (std::uint64_t k = 0; k < n; ++k) {
    const i64 kk = static_cast<i64>(k);
    u64 sn = c_num, sd = c_den;
    long sv = c_v;
    bool neg = false;
    bool vanished = false;
    for (const auto& a : upper) {
      i64 x = a.num + kk * a.den;
      if (x == 0) {
        vanished = true;
        break;
      }
      absorb(x, p, M, sn, sv, neg);
    }
    if (vanished) break;
    for (const auto& b : lower) absorb(b.num + kk * b.den, p, M, sd, sv, neg, -1);
    absorb(kk + 1, p, M, sd, sv, neg, -1);
    if (neg) sn = sn == 0 ? 0 : M - sn;
    N = mod::mulmod(N, sn, M);
    D = mod::mulmod(D, sd, M);
    X = mod::mulmod(X, sd, M);
    v += sv;
    if (v < 0) return std::nullopt;
    if (v < W) X = mod::addmod(X, mod::mulmod(pw[static_cast<std::size_t>(v)], N, M), M);
  }
  return mod::mulmod(X, mod::invmod_or_zero(D, M), M);
}

inline std::optional<std::vector<SmallParam>> small_params(std::span<const Rational> xs) {
  std::vector<SmallParam> out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    auto sp = small_param(x);
    if (!sp) return std::nullopt;
    out.push_back(*sp);
  }
  return out;
}

inline void check_truncation(std::uint64_t n) {
  if (n >= (std::uint64_t{1} << 31)) raise(Errc::TooLarge, "truncation beyond 2^31 terms");
}

}  // namespace detail

// reduce_rational(truncated_hg(params)) computed by unit-tracking term
// recurrences; falls back to the exact sum when a term is not p-integral.
inline PadicInt truncated_hg_mod(const HGParams& params, std::uint64_t p, int s) {
  params.validate();
  detail::check_truncation(params.truncation);
  const std::uint64_t M = mod::checked_prime_power(p, s);
  auto up = detail::small_params(params.upper);
  auto lo = detail::small_params(params.lower);
  if (up && lo) {
    auto lam = detail::scaled_from_rational(params.argument, p, M);
    auto r = detail::hg_sum_units(*up, *lo, lam, params.truncation, p, s);
    if (r) return PadicInt::from_residue(p, s, *r);
  }
  return reduce_rational(truncated_hg(params), p, s);
}

// Same sum with the argument given as a residue mod p^s (for example λ^p).
inline PadicInt truncated_hg_mod(std::span<const Rational> upper, std::span<const Rational> lower,
                                 const PadicInt& argument, std::uint64_t n) {
  HGParams shape{std::vector<Rational>(upper.begin(), upper.end()),
                 std::vector<Rational>(lower.begin(), lower.end()), Rational(0), n};
  shape.validate();
  detail::check_truncation(n);
  auto up = detail::small_params(upper);
  auto lo = detail::small_params(lower);
  if (!up || !lo) raise(Errc::TooLarge, "parameters too large for the residue-argument path");
  auto r = detail::hg_sum_units(*up, *lo, detail::scaled_from_padic(argument), n,
                                argument.prime(), argument.precision());
  if (!r) raise(Errc::NotPIntegral, "a term has negative valuation");
  return PadicInt::from_residue(argument.prime(), argument.precision(), *r);
}

inline PadicInt f_r_mod(const Rational& lambda, int r, std::uint64_t n, std::uint64_t p, int s) {
  return truncated_hg_mod(f_r_params(lambda, r, n), p, s);
}

inline PadicInt f_r_mod(const PadicInt& lambda, int r, std::uint64_t n) {
  HGParams shape = f_r_params(Rational(0), r, n);
  return truncated_hg_mod(shape.upper, shape.lower, lambda, n);
}

}  // namespace supercong::hyper
