#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::hyper {

struct EtaFactor {
  int multiplier;  // d in η(dz)
  int exponent;    // e
};

struct EtaProductSpec {
  std::vector<EtaFactor> factors;

  // Σ d·e/24; the q-expansion starts at this power.
  Rational leading_power() const {
    long total = 0;
    for (const auto& f : factors) total += static_cast<long>(f.multiplier) * f.exponent;
    return Rational(total, 24);
  }

  std::string name() const {
    std::string out;
    for (const auto& f : factors) {
      out += "eta(" + (f.multiplier == 1 ? std::string() : std::to_string(f.multiplier)) + "z)^" +
             std::to_string(f.exponent);
    }
    return out;
  }

  static EtaProductSpec eta4z_6() { return {{{4, 6}}}; }
  static EtaProductSpec eta_z3_7z3() { return {{{1, 3}, {7, 3}}}; }
  static EtaProductSpec eta2z4_4z4() { return {{{2, 4}, {4, 4}}}; }
};

namespace detail {

using Poly = std::vector<BigInt>;  // coefficients of q^0..q^N

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t N) {
  Poly out(N + 1);
  for (std::size_t i = 0; i <= N && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N && j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// 1/f for f(0) = ±1.
inline Poly poly_inverse(const Poly& f, std::size_t N) {
  if (f.empty() || (f[0] != 1 && f[0] != -1)) raise(Errc::InvalidArgument, "series not invertible over Z");
  Poly g(N + 1);
  g[0] = f[0];  // ±1 is its own inverse
  for (std::size_t n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n && k < f.size(); ++k) acc += f[k] * g[n - k];
    g[n] = -acc * f[0];
  }
  return g;
}

inline Poly poly_pow(Poly base, long e, std::size_t N) {
  if (e < 0) {
    base = poly_inverse(base, N);
    e = -e;
  }
  Poly result(N + 1);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = poly_mul(result, base, N);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base, N);
  }
  return result;
}

// ∏_{n≥1, dn≤N} (1 − q^{dn}), multiplying in the sparse factors one at a time.
inline Poly euler_product(int d, std::size_t N) {
  Poly out(N + 1);
  out[0] = 1;
  for (std::size_t step = static_cast<std::size_t>(d); step <= N; step += static_cast<std::size_t>(d)) {
    for (std::size_t i = N; i >= step; --i) out[i] -= out[i - step];
  }
  return out;
}

}  // namespace detail

// Coefficients c_0..c_N of q^{lead}·∏ ∏_n (1 − q^{dn})^e.
inline std::vector<BigInt> eta_coefficients(const EtaProductSpec& spec, std::uint64_t N) {
  if (N < 1) raise(Errc::InvalidArgument, "need N >= 1");
  Rational lead = spec.leading_power();
  if (!lead.is_integer() || lead.sign() < 0) {
    raise(Errc::InvalidArgument, "leading q-power " + lead.str() + " is not a non-negative integer");
  }
  const std::size_t shift = static_cast<std::size_t>(big_to_i64(lead.num()));
  std::vector<BigInt> out(N + 1);
  if (shift > N) return out;
  const std::size_t M = N - shift;
  detail::Poly acc(M + 1);
  acc[0] = 1;
  for (const auto& f : spec.factors) {
    if (f.multiplier < 1) raise(Errc::InvalidArgument, "eta multiplier must be positive");
    acc = detail::poly_mul(acc, detail::poly_pow(detail::euler_product(f.multiplier, M), f.exponent, M), M);
  }
  for (std::size_t i = 0; i <= M; ++i) out[i + shift] = acc[i];
  return out;
}

}  // namespace supercong::hyper
