#pragma once

// Apéry-type numbers and the harmonic-weighted auxiliary sums, exactly.

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/hyper/legendre.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/rational.hpp"
#include "supercong/report.hpp"

namespace supercong::hyper {

// Checks binom((p−1)/2+k, 2k) ≡ (−16)^{−k}·binom(2k,k) mod p².
inline CongruenceReport binom_half_congruence(std::uint64_t k, std::uint64_t p) {
  require_odd_prime(p);
  if (k > (p - 1) / 2) raise(Errc::IndexOutOfRange, "k must be at most (p-1)/2");
  Rational lhs(binomial((p - 1) / 2 + k, 2 * k));
  Rational rhs = Rational(binomial(2 * k, k)) / Rational(-16).pow(static_cast<long>(k));
  CheckParams params;
  params.p = p;
  params.k = static_cast<long>(k);
  return CongruenceReport::measured("binom_half", params, Backing::Classical, 2,
                                    observed_exact(lhs - rhs, p));
}

// c_n = Σ_k binom(n,k)²·binom(n+k,k)².
inline Rational apery_half(std::uint64_t n) {
  BigInt sum = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    BigInt t = binomial(n, k) * binomial(n + k, k);
    sum += t * t;
  }
  return Rational(sum);
}

// b_n = 2·Σ_k binom(n,k)²·binom(n+k,k)²·(H_{n+k} − H_{n−k}).
inline Rational gessel_aux(std::uint64_t n) {
  std::vector<Rational> h(2 * n + 1);
  h[0] = Rational(0);
  for (std::uint64_t j = 1; j <= 2 * n; ++j) h[j] = h[j - 1] + Rational(1, static_cast<long>(j));
  Rational sum(0);
  for (std::uint64_t k = 0; k <= n; ++k) {
    BigInt t = binomial(n, k) * binomial(n + k, k);
    sum += Rational(BigInt(t * t)) * (h[n + k] - h[n - k]);
  }
  return Rational(2) * sum;
}

struct AuxSequencePoint {
  std::uint64_t index = 0;
  Rational a;  // Σ_{i≤n} binom(2i,i)³·(λ/64)^i
  Rational b;  // Σ_{i≤n} binom(2i,i)³·(λ/64)^i·(6(H_{2i} − H_i) + q), q the Fermat quotient of λ/64
};

// ((λ/64)^{p−1} − 1)/p, exact.
inline Rational fermat_quotient(const Rational& u, std::uint64_t p) {
  return (u.pow(static_cast<long>(p - 1)) - Rational(1)) / Rational(static_cast<long>(p));
}

inline void require_unit_lambda64(const Rational& lambda, std::uint64_t p) {
  Rational u = lambda / Rational(64);
  if (u.is_zero() || valuation(u.num(), p).value != 0 || valuation(u.den(), p).value != 0) {
    raise(Errc::NotAUnit, "lambda/64 = " + u.str() + " is not a " + std::to_string(p) + "-adic unit");
  }
}

// Whole prefix a_0..a_n, b_0..b_n in one pass.
inline std::vector<AuxSequencePoint> aux_sequence_prefix(const Rational& lambda, std::uint64_t p,
                                                         std::uint64_t n) {
  require_odd_prime(p);
  require_unit_lambda64(lambda, p);
  const Rational u = lambda / Rational(64);
  const Rational q = fermat_quotient(u, p);
  std::vector<AuxSequencePoint> out;
  out.reserve(n + 1);
  Rational a(0), b(0), uk(1), h_i(0), h_2i(0);
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (i > 0) {
      h_i += Rational(1, static_cast<long>(i));
      h_2i += Rational(1, static_cast<long>(2 * i - 1)) + Rational(1, static_cast<long>(2 * i));
    }
    BigInt c = binomial(2 * i, i);
    Rational term = Rational(BigInt(c * c * c)) * uk;
    a += term;
    b += term * (Rational(6) * (h_2i - h_i) + q);
    out.push_back({i, a, b});
    uk *= u;
  }
  return out;
}

inline AuxSequencePoint aux_sequence(const Rational& lambda, std::uint64_t p, std::uint64_t n) {
  return aux_sequence_prefix(lambda, p, n).back();
}

}  // namespace supercong::hyper
