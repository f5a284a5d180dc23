#pragma once

// Congruences attached to the Legendre family L_λ and the CM family E_λ:
// ASD, Hecke recursions, ₂F₁ ratio congruences and their squared (CM) forms.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "supercong/curves/curves.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/hyper/legendre.hpp"
#include "supercong/lab/common.hpp"
#include "supercong/padic/quad_ext.hpp"

namespace supercong::lab {

namespace detail {

// a_k for the invariant differential of L_λ: P_j((1+λ)/(1−λ))·(λ−1)^j when
// k = 2j+1, zero for even k.
inline PadicInt asd_coefficient(std::uint64_t k, const Rational& lambda, std::uint64_t p, int W) {
  if (k % 2 == 0) return PadicInt::zero(p, W);
  const std::uint64_t j = (k - 1) / 2;
  const Rational one(1);
  PadicInt x = reduce_rational((one + lambda) / (one - lambda), p, W);
  PadicInt scale = reduce_rational(lambda - one, p, W).pow(j);
  return hyper::legendre_poly_mod(j, x) * scale;
}

// ₂F₁(−K, −K; 1; λ)_K or ₂F₁(−K, K+1; 1; λ)_K mod p^W.
inline PadicInt twofone_sum(std::uint64_t K, bool plus, const Rational& lambda, std::uint64_t p, int W) {
  const Rational k(static_cast<long>(K));
  hyper::HGParams params{{-k, plus ? k + Rational(1) : -k}, {Rational(1)}, lambda, K};
  return hyper::truncated_hg_mod(params, p, W);
}

inline std::optional<CongruenceReport> legendre_gate(const std::string& name, const CheckParams& params,
                                                     const Rational& lambda, std::uint64_t p) {
  if (auto why = curve_gate(curves::CurveId::legendre(lambda), p)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  }
  return std::nullopt;
}

}  // namespace detail

// a_{mp^{s+1}} − A_p·a_{mp^s} + p·a_{mp^{s−1}} ≡ 0 mod p^{s+1}, A_p the trace of
// Frobenius on L_λ. The last index is dropped when it is not an integer.
inline CongruenceReport asd_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                  const CheckOptions& opt = {}) {
  require_odd_prime(p);
  if (m < 1 || s < 0) raise(Errc::InvalidArgument, "need m >= 1 and s >= 0");
  const std::string name = "asd";
  CheckParams params = params_lps(lambda, p, m, s);
  if (auto skip = detail::legendre_gate(name, params, lambda, p)) return *skip;
  const long claimed = s + 1;
  const int W = work_precision(claimed, opt);
  const std::int64_t A = curves::count_points(curves::CurveId::legendre(lambda), p).trace;
  const std::uint64_t mid = m_p_pow(m, p, s);
  const std::uint64_t hi = mid * p;
  PadicInt diff = detail::asd_coefficient(hi, lambda, p, W) - detail::asd_coefficient(mid, lambda, p, W) * A;
  if (s >= 1) {
    diff = diff + detail::asd_coefficient(mid / p, lambda, p, W) * static_cast<std::int64_t>(p);
  } else if (static_cast<std::uint64_t>(m) % p == 0) {
    diff = diff + detail::asd_coefficient(static_cast<std::uint64_t>(m) / p, lambda, p, W) *
                      static_cast<std::int64_t>(p);
  }
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                    observed_from_residue(diff.valuation(), W),
                                    "A_p=" + std::to_string(A));
}

// c_{mp^{s+1}} − a_p·c_{mp^s} + χ(p)·p^{weight−1}·c_{mp^{s−1}} = 0, exactly,
// with χ(p) the nebentypus at p. The claim is "exact"; a nonzero difference
// reports its valuation.
inline CongruenceReport hecke_recursion_check(std::span<const BigInt> coefficients, std::int64_t a_p,
                                              std::uint64_t p, long m, long s, int weight,
                                              const std::string& name = "hecke", int chi = 1) {
  require_prime(p);
  if (weight < 2) raise(Errc::InvalidArgument, "weight must be at least 2");
  if (m < 1 || s < 0) raise(Errc::InvalidArgument, "need m >= 1 and s >= 0");
  if (chi != 1 && chi != -1) raise(Errc::InvalidArgument, "nebentypus value must be 1 or -1");
  const std::uint64_t mid = m_p_pow(m, p, s);
  const std::uint64_t hi = mid * p;
  if (hi >= coefficients.size()) raise(Errc::IndexOutOfRange, "coefficient index m*p^(s+1) not available");
  BigInt diff = coefficients[hi] - BigInt(big_from_i64(a_p)) * coefficients[mid];
  std::optional<std::uint64_t> lo;
  if (s >= 1) {
    lo = mid / p;
  } else if (static_cast<std::uint64_t>(m) % p == 0) {
    lo = static_cast<std::uint64_t>(m) / p;
  }
  if (lo) {
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, static_cast<unsigned long>(weight - 1));
    diff += chi * pk * coefficients[*lo];
  }
  CheckParams params;
  params.p = p;
  params.m = m;
  params.s = s;
  params.k = weight;
  return CongruenceReport::measured(name, params, Backing::Classical, ValuationResult::infinity(),
                                    Observed{valuation(diff, p), false},
                                    diff == 0 ? "exact" : "inexact");
}

// ₂F₁((1−mp^s)/2, (1∓mp^s)/2; 1; λ) ≡ (−1/p)·β·₂F₁((1−mp^{s−1})/2, …) mod p^s,
// β the unit root of L_λ. `plus` selects the (1+mp^s)/2 parameter.
inline CongruenceReport twofone_ratio_check(const Rational& lambda, std::uint64_t p, long m, long s, bool plus,
                                            const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = plus ? "twofone_plus" : "twofone_minus";
  CheckParams params = params_lps(lambda, p, m, s);
  if (auto skip = detail::legendre_gate(name, params, lambda, p)) return *skip;
  const int W = work_precision(s, opt);
  PadicInt beta = curves::unit_root(curves::CurveId::legendre(lambda), p, W);
  if (beta.is_zero()) return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary);
  PadicInt num = detail::twofone_sum(half_index(m, p, s), plus, lambda, p, W);
  PadicInt den = detail::twofone_sum(half_index(m, p, s - 1), plus, lambda, p, W);
  PadicInt factor = beta * static_cast<std::int64_t>(character(Rational(-1), p, opt));
  // Product form: for m > 1 the denominator need not be a unit.
  const Observed obs = product_defect(num, den, factor);
  return CongruenceReport::measured(name, params, Backing::Theorem, s, obs);
}

// The doubled-strength forms mod p^{2s}:
//   minus: ₂F₁(−K_s, −K_s; 1; λ) ≡ ((1−λ)/p)(λ−1)^{(mp^s−mp^{s−1})/2}·β·₂F₁(−K_{s−1}, …)
//   plus:  ₂F₁(−K_s, K_s+1; 1; λ) ≡ (−1/p)·β·₂F₁(−K_{s−1}, K_{s−1}+1; 1; λ)
// with K_s = (mp^s−1)/2. The doubling needs L_λ itself to have CM; otherwise
// the claim falls back to s.
inline CongruenceReport squared_2f1_supercong_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                                    bool plus, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = plus ? "squared_2f1_plus" : "squared_2f1_minus";
  CheckParams params = params_lps(lambda, p, m, s);
  if (auto skip = detail::legendre_gate(name, params, lambda, p)) return *skip;
  const bool cm = curves::has_cm(curves::CurveId::legendre(lambda));
  const long claimed = cm ? 2 * s : s;
  const int W = work_precision(2 * s, opt);
  PadicInt beta = curves::unit_root(curves::CurveId::legendre(lambda), p, W);
  if (beta.is_zero()) return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary);
  PadicInt num = detail::twofone_sum(half_index(m, p, s), plus, lambda, p, W);
  PadicInt den = detail::twofone_sum(half_index(m, p, s - 1), plus, lambda, p, W);
  PadicInt factor = beta;
  if (plus) {
    factor = factor * static_cast<std::int64_t>(character(Rational(-1), p, opt));
  } else {
    const std::uint64_t e = (m_p_pow(m, p, s) - m_p_pow(m, p, s - 1)) / 2;
    factor = factor * reduce_rational(lambda - Rational(1), p, W).pow(e) *
             static_cast<std::int64_t>(character(Rational(1) - lambda, p, opt));
  }
  const Observed obs = product_defect(num, den, factor);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, obs,
                                    cm ? "L_lambda has CM" : "L_lambda has no CM; claim is s (NotCM)");
}

// m = s = 1 display: Σ_k binom(2k,k)²(λ/16)^k ≡ Σ_k binom(n+k,k)binom(n,k)(−λ)^k
// mod p² with n = (p−1)/2. Holds for every p-integral λ.
inline CongruenceReport squared_display_check(const Rational& lambda, std::uint64_t p, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  const std::string name = "squared_display";
  CheckParams params = params_lps(lambda, p);
  if (!curves::p_integral(lambda, p)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotPIntegral);
  }
  const long claimed = 2;
  const int W = work_precision(claimed, opt);
  const std::uint64_t n = (p - 1) / 2;
  PadicInt lhs = hyper::f_r_mod(lambda, 2, n, p, W);
  PadicInt rhs = detail::twofone_sum(n, true, lambda, p, W);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                    observed_from_residue((lhs - rhs).valuation(), W));
}

namespace detail {

// √(1−λ) in the unramified quadratic extension mod p^W. When 1−λ is a
// non-residue it is itself the extension parameter t.
inline QuadExtElem sqrt_one_minus(const Rational& lambda, std::uint64_t p, int W) {
  PadicInt c = reduce_rational(Rational(1) - lambda, p, W);
  if (legendre_symbol(static_cast<std::int64_t>(c.residue() % p), p) == -1) {
    return QuadExtElem(PadicInt::zero(p, W), PadicInt::one(p, W), c);
  }
  PadicInt t(p, W, QuadExtElem::default_nonresidue(p));
  return QuadExtElem::embed(sqrt_unit(c), t);
}

// The fourth roots of unity 1, i, −1, −i in the ring of `like`.
inline std::array<QuadExtElem, 4> fourth_roots(const QuadExtElem& like) {
  const std::uint64_t p = like.prime();
  const int W = like.precision();
  QuadExtElem one = QuadExtElem::embed(PadicInt::one(p, W), like.t());
  QuadExtElem i = sqrt_in_extension(PadicInt(p, W, -1), like.t());
  return {one, i, -one, -i};
}

}  // namespace detail

// P_{(mp^s−1)/2}(√(1−λ)) ≡ ε^{mp^{s−1}}·α·P_{(mp^{s−1}−1)/2}(√(1−λ)) mod p^{2s},
// α the unit root of E_λ and ε the fourth root of unity read off mod p at
// m = s = 1.
inline CongruenceReport cvh_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                  const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = "cvh";
  CheckParams params = params_lps(lambda, p, m, s);
  const curves::CurveId E = curves::CurveId::cm(lambda);
  if (auto why = curve_gate(E, p)) return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  if (!curves::has_cm(E)) return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotCM);
  const long claimed = 2 * s;
  const int W = work_precision(claimed, opt);
  PadicInt alpha = curves::unit_root(E, p, W);
  if (alpha.is_zero()) return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::Supersingular);

  QuadExtElem x = detail::sqrt_one_minus(lambda, p, W);
  const auto roots = detail::fourth_roots(x);
  QuadExtElem a = QuadExtElem::embed(alpha, x.t());
  QuadExtElem base = hyper::legendre_poly_mod((p - 1) / 2, x);
  std::optional<std::size_t> eps;
  for (std::size_t e = 0; e < roots.size(); ++e) {
    if ((base - roots[e] * a).valuation() >= 1) {
      eps = e;
      break;
    }
  }
  if (!eps) {
    return CongruenceReport::failed(name, params, Backing::Theorem, claimed, Errc::NoFourthRoot,
                                    "no fourth root of unity matches mod p");
  }
  if (roots[*eps].pow(4) != roots[0]) {
    return CongruenceReport::failed(name, params, Backing::Theorem, claimed, Errc::NoFourthRoot,
                                    "epsilon^4 != 1");
  }
  QuadExtElem num = hyper::legendre_poly_mod(half_index(m, p, s), x);
  QuadExtElem den = hyper::legendre_poly_mod(half_index(m, p, s - 1), x);
  QuadExtElem factor = roots[*eps].pow(m_p_pow(m, p, s - 1) % 4) * a;
  const Observed obs = product_defect(num, den, factor);
  static constexpr std::array<const char*, 4> kEps = {"1", "i", "-1", "-i"};
  const std::string note = std::string("epsilon=") + kEps[*eps];
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, obs, note);
}

// ₃F₂(1/2, −K_s, K_s+1; 1, 1; λ) ≡ ((1−λ)/p)·α²·₃F₂(1/2, −K_{s−1}, K_{s−1}+1; 1, 1; λ)
// mod p^{2s}, α the unit root of E_λ. Without CM the claim falls back to s.
inline CongruenceReport prop_3f2_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                       const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = "prop_3f2";
  CheckParams params = params_lps(lambda, p, m, s);
  const curves::CurveId E = curves::CurveId::cm(lambda);
  if (auto why = curve_gate(E, p)) return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  const bool cm = curves::has_cm(E);
  const long claimed = cm ? 2 * s : s;
  const int W = work_precision(2 * s, opt);
  PadicInt alpha = curves::unit_root(E, p, W);
  if (alpha.is_zero()) return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::Supersingular);
  PadicInt num = hyper::zh_sun_3f2_mod(half_index(m, p, s), lambda, p, W);
  PadicInt den = hyper::zh_sun_3f2_mod(half_index(m, p, s - 1), lambda, p, W);
  PadicInt factor = alpha * alpha * static_cast<std::int64_t>(character(Rational(1) - lambda, p, opt));
  const Observed obs = product_defect(num, den, factor);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, obs,
                                    cm ? std::string() : "E_lambda has no CM; claim is s (NotCM)");
}

}  // namespace supercong::lab
