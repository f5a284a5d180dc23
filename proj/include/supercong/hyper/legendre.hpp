#pragma once

#include <cstdint>
#include <utility>

#include "supercong/errors.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/quad_ext.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::hyper {

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// Exact P_n(x) by (n+1)P_{n+1} = (2n+1)xP_n − nP_{n−1}.
inline Rational legendre_poly(std::uint64_t n, const Rational& x) {
  if (n == 0) return Rational(1);
  Rational prev(1), cur = x;
  for (std::uint64_t k = 1; k < n; ++k) {
    const long kk = static_cast<long>(k);
    Rational next = (Rational(2 * kk + 1) * x * cur - Rational(kk) * prev) / Rational(kk + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace detail {

inline PadicInt ring_one(const PadicInt& x) { return PadicInt::one(x.prime(), x.precision()); }
inline QuadExtElem ring_one(const QuadExtElem& x) {
  return QuadExtElem::embed(PadicInt::one(x.prime(), x.precision()), x.t());
}

}  // namespace detail

// P_n(x) in Z/p^s or its quadratic extension, via
//   P_n(x) = Σ_k binom(n,k)·binom(n+k,k)·((x−1)/2)^k,
// whose integer coefficients are carried as p^v·N/D so no step divides by p.
template <class Ring>
Ring legendre_poly_mod(std::uint64_t n, const Ring& x) {
  using mod::u64;
  const u64 p = x.prime();
  const int W = x.precision();
  if (p == 2) raise(Errc::InvalidArgument, "odd prime required");
  if (n >= (std::uint64_t{1} << 61)) raise(Errc::TooLarge, "Legendre index too large");
  const u64 M = mod::checked_prime_power(p, W);
  const Ring one = detail::ring_one(x);
  if (n == 0) return one;
  const Ring h = (x - PadicInt::one(p, W)) * PadicInt(p, W, 2).inverse();

  u64 pw[64];
  pw[0] = 1;
  for (int i = 1; i <= W; ++i) pw[i] = pw[i - 1] * p;

  u64 N = 1 % M, D = 1 % M;
  long v = 0;
  Ring hk = one;
  Ring X = one;
  for (std::uint64_t k = 0; k < n; ++k) {
    // c_{k+1}/c_k = (n−k)(n+k+1)/(k+1)².
    u64 a = n - k, b = n + k + 1, c = k + 1;
    long dv = mod::strip(a, p) + mod::strip(b, p) - 2 * mod::strip(c, p);
    N = mod::mulmod(N, mod::mulmod(a % M, b % M, M), M);
    u64 cc = c % M;
    u64 sd = mod::mulmod(cc, cc, M);
    D = mod::mulmod(D, sd, M);
    v += dv;
    hk = hk * h;
    X = X * PadicInt::from_residue(p, W, sd);
    if (v < W) X = X + hk * PadicInt::from_residue(p, W, mod::mulmod(pw[v], N, M));
  }
  return X * PadicInt::from_residue(p, W, mod::invmod_or_zero(D, M));
}

// ((−1)^k·₂F₁(−k,−k;1;λ), ₂F₁(−k,1+k;1;−λ/(1−λ))·(λ−1)^k); both equal
// P_k((1+λ)/(1−λ))·(λ−1)^k.
inline std::pair<Rational, Rational> terminating_2f1_pair(std::uint64_t k, const Rational& lambda) {
  if (lambda == Rational(1)) raise(Errc::DegenerateLambda, "lambda = 1");
  const Rational kk(static_cast<long>(k));
  HGParams first{{-kk, -kk}, {Rational(1)}, lambda, k};
  HGParams second{{-kk, kk + Rational(1)}, {Rational(1)}, -lambda / (Rational(1) - lambda), k};
  Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return {sign * truncated_hg(first),
          truncated_hg(second) * (lambda - Rational(1)).pow(static_cast<long>(k))};
}

// Σ_{k≤n} binom(2k,k)²·binom(n+k,2k)·(−λ/4)^k.
inline Rational zh_sun_3f2(std::uint64_t n, const Rational& lambda) {
  Rational sum(0);
  Rational x = -lambda / Rational(4);
  Rational xk(1);
  for (std::uint64_t k = 0; k <= n; ++k) {
    BigInt c = binomial(2 * k, k);
    sum += Rational(BigInt(c * c * binomial(n + k, 2 * k))) * xk;
    xk *= x;
  }
  return sum;
}

// The same sum as ₃F₂(1/2, −n, n+1; 1, 1; λ)_n, evaluated mod p^s by term ratios.
inline HGParams zh_sun_params(std::uint64_t n, const Rational& lambda) {
  const Rational nn(static_cast<long>(n));
  return HGParams{{Rational(1, 2), -nn, nn + Rational(1)}, {Rational(1), Rational(1)}, lambda, n};
}

inline PadicInt zh_sun_3f2_mod(std::uint64_t n, const Rational& lambda, std::uint64_t p, int s) {
  return truncated_hg_mod(zh_sun_params(n, lambda), p, s);
}

}  // namespace supercong::hyper
