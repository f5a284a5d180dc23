#pragma once

// Harmonic-weighted binomial sums, Apéry-number congruences and Deuring's
// point-count congruences.

#include <cstdint>
#include <string>

#include "supercong/curves/curves.hpp"
#include "supercong/hyper/eta.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/hyper/sequences.hpp"
#include "supercong/lab/common.hpp"
#include "supercong/lab/k3.hpp"

namespace supercong::lab {

// a_{k+pn} ≡ a_k·a_n + p·b_k·Σ_{i≤n} i·binom(2i,i)³(λ/64)^i mod p², exactly.
inline CongruenceReport lemma41_check(const Rational& lambda, std::uint64_t p, std::uint64_t k, std::uint64_t n) {
  require_odd_prime(p);
  if (k < (p - 1) / 2 || k >= p) raise(Errc::InvalidArgument, "need (p-1)/2 <= k < p");
  const std::string name = "lemma41";
  CheckParams params = params_lps(lambda, p);
  params.k = static_cast<long>(k);
  params.n = static_cast<long>(n);
  const Rational u = lambda / Rational(64);
  if (u.is_zero() || valuation(u, p) != ValuationResult::of(0)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotAUnit);
  }
  const auto seq = hyper::aux_sequence_prefix(lambda, p, k + p * n);
  Rational weighted(0), ui(1);
  for (std::uint64_t i = 0; i <= n; ++i) {
    BigInt c = hyper::binomial(2 * i, i);
    weighted += Rational(BigInt(c * c * c * static_cast<unsigned long>(i))) * ui;
    ui *= u;
  }
  Rational diff = seq[k + p * n].a - seq[k].a * seq[n].a -
                  Rational(static_cast<long>(p)) * seq[k].b * weighted;
  return CongruenceReport::measured(name, params, Backing::Theorem, 2, observed_exact(diff, p));
}

namespace detail {

// Σ_{1≤i≤(p−1)/2} binom(2i,i)³·u^i·(weight·(H_{2i} − H_i) + q) + q mod p^W, where
// every index stays below p so all terms are p-integral.
inline PadicInt harmonic_binomial_sum(const PadicInt& u, const PadicInt& q, std::int64_t weight) {
  const std::uint64_t p = u.prime();
  const int W = u.precision();
  PadicInt sum = q;  // i = 0 term
  PadicInt c = PadicInt::one(p, W), ui = PadicInt::one(p, W), h = PadicInt::zero(p, W);
  for (std::uint64_t i = 1; i <= (p - 1) / 2; ++i) {
    // binom(2i,i) = binom(2i−2,i−1)·(2i)(2i−1)/i²; H_{2i} − H_i gains 1/(2i−1) + 1/(2i) − 1/i.
    c = c * static_cast<std::int64_t>(2 * (2 * i - 1)) * inverse_mod(static_cast<std::int64_t>(i), p, W);
    h = h + inverse_mod(static_cast<std::int64_t>(2 * i - 1), p, W) -
        inverse_mod(static_cast<std::int64_t>(2 * i), p, W);
    ui = ui * u;
    sum = sum + c * c * c * ui * (h * weight + q);
  }
  return sum;
}

}  // namespace detail

// b_{(p−1)/2} = Σ binom(2i,i)³(λ/64)^i·(6(H_{2i} − H_i) + q) ≡ 0 mod p, q the
// Fermat quotient of λ/64.
inline CongruenceReport corollary13_check(const Rational& lambda, std::uint64_t p, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  const std::string name = "corollary13";
  CheckParams params = params_lps(lambda, p);
  if (auto why = detail::cm_gate(lambda, p)) return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  const Rational u = lambda / Rational(64);
  if (valuation(u, p) != ValuationResult::of(0)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotAUnit);
  }
  const long claimed = 1;
  const int W = work_precision(claimed, opt);
  // q mod p^W needs u^{p−1} mod p^{W+1}.
  PadicInt lifted = reduce_rational(u, p, W + 1).pow(p - 1) - PadicInt::one(p, W + 1);
  PadicInt q = PadicInt::from_residue(p, W, lifted.residue() / p);
  PadicInt sum = detail::harmonic_binomial_sum(reduce_rational(u, p, W), q, 6);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                    observed_from_residue(sum.valuation(), W));
}

// Σ_{1≤i≤(p−1)/2} binom(2i,i)³·(H_{2i} − H_i) ≡ 0 mod p for p > 3.
inline CongruenceReport corollary14_check(std::uint64_t p, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  if (p <= 3) raise(Errc::PTooSmall, "needs p > 3");
  const std::string name = "corollary14";
  CheckParams params;
  params.p = p;
  const long claimed = 1;
  const int W = work_precision(claimed, opt);
  PadicInt sum = detail::harmonic_binomial_sum(PadicInt::one(p, W), PadicInt::zero(p, W), 1);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                    observed_from_residue(sum.valuation(), W));
}

// depth 2: Σ binom(n,k)²binom(n+k,k)² ≡ c_p mod p² with n = (p−1)/2;
// depth 3: F_4(1)_{(p−1)/2} ≡ c_p mod p³; c_p from η(2z)⁴η(4z)⁴.
inline CongruenceReport beukers_kilbourn_check(std::uint64_t p, int depth, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  if (depth != 2 && depth != 3) raise(Errc::InvalidArgument, "depth must be 2 or 3");
  const std::string name = depth == 2 ? "beukers" : "kilbourn";
  CheckParams params;
  params.p = p;
  const BigInt c = detail::eta_coefficient(hyper::EtaProductSpec::eta2z4_4z4(), p);
  const std::string note = "c_p=" + c.get_str();
  if (depth == 2) {
    Rational diff = hyper::apery_half((p - 1) / 2) - Rational(c);
    return CongruenceReport::measured(name, params, Backing::Theorem, 2, observed_exact(diff, p), note);
  }
  const int W = work_precision(3, opt);
  PadicInt lhs = hyper::f_r_mod(Rational(1), 4, (p - 1) / 2, p, W);
  return CongruenceReport::measured(name, params, Backing::Theorem, 3,
                                    observed_from_residue((lhs - reduce_big(c, p, W)).valuation(), W), note);
}

// #𝒳_r(λ)(F_p) ≡ (−1)^r·F_r(λ)_{p−1} and F_r(λ)_{p−1} ≡ F_r(λ)_{(p−1)/2} mod p.
inline CongruenceReport deuring_check(int r, const Rational& lambda, std::uint64_t p) {
  require_odd_prime(p);
  const std::string name = "deuring";
  CheckParams params = params_lps(lambda, p, std::nullopt, std::nullopt, r);
  if (!curves::p_integral(lambda, p)) {
    return CongruenceReport::skipped(name, params, Backing::Classical, Errc::NotPIntegral);
  }
  PadicInt count = curves::affine_variety_count_mod_p(r, lambda, p);
  PadicInt full = hyper::f_r_mod(lambda, r, p - 1, p, 1);
  PadicInt half = hyper::f_r_mod(lambda, r, (p - 1) / 2, p, 1);
  PadicInt signed_full = r % 2 == 0 ? full : -full;
  const bool ok = count == signed_full && full == half;
  return CongruenceReport::measured(name, params, Backing::Classical, 1, Observed{ValuationResult::of(ok ? 1 : 0), ok},
                                    "count=" + std::to_string(count.residue()) +
                                        " F_full=" + std::to_string(full.residue()) +
                                        " F_half=" + std::to_string(half.residue()));
}

}  // namespace supercong::lab
