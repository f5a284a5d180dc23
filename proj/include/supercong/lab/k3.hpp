#pragma once

// Congruences for F_3(λ) = ₃F₂(1/2,1/2,1/2; 1,1; λ) truncations and the CM
// family E_λ, whose unit root α squares to the K3 Frobenius eigenvalue.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "supercong/curves/curves.hpp"
#include "supercong/hyper/eta.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/lab/common.hpp"

namespace supercong::lab {

namespace detail {

inline std::optional<Errc> cm_gate(const Rational& lambda, std::uint64_t p) {
  const curves::CurveId E = curves::CurveId::cm(lambda);
  if (auto why = curve_gate(E, p)) return why;
  if (!curves::has_cm(E)) return Errc::NotCM;
  return std::nullopt;
}

// Coefficient tables of the η-products through at least q^N, grown on demand
// and shared across threads.
inline std::shared_ptr<const std::vector<BigInt>> eta_table(const hyper::EtaProductSpec& spec, std::uint64_t N) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const std::vector<BigInt>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = cache[spec.name()];
  if (!table || table->size() <= N) {
    const std::uint64_t grown = std::max<std::uint64_t>(N, table ? 2 * table->size() : 128);
    table = std::make_shared<const std::vector<BigInt>>(hyper::eta_coefficients(spec, grown));
  }
  return table;
}

inline BigInt eta_coefficient(const hyper::EtaProductSpec& spec, std::uint64_t n) {
  return (*eta_table(spec, n))[n];
}

}  // namespace detail

// Σ_{k≤(p−1)/2} ((1/2)_k/k!)³λ^k ≡ ((1−λ)/p)·α² mod p², with α = 0 at
// supersingular primes.
inline CongruenceReport theorem12_check(const Rational& lambda, std::uint64_t p, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  const std::string name = "theorem12";
  CheckParams params = params_lps(lambda, p);
  if (auto why = detail::cm_gate(lambda, p)) return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  const long claimed = 2;
  const int W = work_precision(claimed, opt);
  PadicInt lhs = hyper::f_r_mod(lambda, 3, (p - 1) / 2, p, W);
  PadicInt alpha = curves::unit_root(curves::CurveId::cm(lambda), p, W);
  PadicInt rhs = alpha * alpha * static_cast<std::int64_t>(character(Rational(1) - lambda, p, opt));
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                    observed_from_residue((lhs - rhs).valuation(), W),
                                    residue_note("lhs", lhs) + (alpha.is_zero() ? "; supersingular" : ""));
}

namespace detail {

// Representations p = a² + D·b² with a ≥ 0, b > 0.
inline std::vector<std::int64_t> norm_form_a(std::uint64_t p, int D) {
  std::vector<std::int64_t> out;
  for (std::uint64_t b = 1; D * b * b <= p; ++b) {
    const std::uint64_t rest = p - D * b * b;
    const auto a = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(rest)));
    for (std::uint64_t c = (a == 0 ? 0 : a - 1); c <= a + 1; ++c) {
      if (c * c == rest) out.push_back(static_cast<std::int64_t>(c));
    }
  }
  return out;
}

}  // namespace detail

// The theorem12 congruence read against 4a² − 2p (p = a² + D·b², D the CM
// field of E_λ), recording which sign σ matches; inert primes target 0. For
// λ = 64 and λ = 1 the sum is also compared with η-product coefficients.
inline CongruenceReport sun_target_check(const Rational& lambda, std::uint64_t p, const CheckOptions& opt = {}) {
  require_odd_prime(p);
  const std::string name = "sun_target";
  CheckParams params = params_lps(lambda, p);
  const long claimed = 2;
  const int W = work_precision(claimed, opt);

  if (lambda == Rational(1)) {
    PadicInt lhs = hyper::f_r_mod(lambda, 3, (p - 1) / 2, p, W);
    BigInt b = detail::eta_coefficient(hyper::EtaProductSpec::eta4z_6(), p);
    return CongruenceReport::measured(name, params, Backing::Theorem, claimed,
                                      observed_from_residue((lhs - reduce_big(b, p, W)).valuation(), W),
                                      "eta(4z)^6 b_p=" + b.get_str());
  }

  CongruenceReport base = theorem12_check(lambda, p, opt);
  if (base.skipped()) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, *base.reason());
  }
  Observed obs = *base.observed();
  PadicInt lhs = hyper::f_r_mod(lambda, 3, (p - 1) / 2, p, W);
  std::string note;

  if (lambda == Rational(64)) {
    BigInt a = detail::eta_coefficient(hyper::EtaProductSpec::eta_z3_7z3(), p);
    int v = (lhs - reduce_big(a, p, W)).valuation();
    Observed eta_obs = observed_from_residue(v, W);
    if (eta_obs.value < obs.value) obs = eta_obs;
    note += "eta(z)^3eta(7z)^3 a_p=" + a.get_str() + "; ";
  }

  const int D = *curves::cm_field(curves::CurveId::cm(lambda));
  const int chi = legendre_symbol(Rational(1) - lambda, p);
  if (legendre_symbol(static_cast<std::int64_t>(-D), p) == 1) {
    std::string match = "no sign matches 4a^2-2p";
    for (std::int64_t a : detail::norm_form_a(p, D)) {
      PadicInt target(p, W, 4 * a * a - 2 * static_cast<std::int64_t>(p));
      for (int sigma : {1, -1}) {
        if ((lhs - target * sigma).valuation() >= 2) {
          match = "a=" + std::to_string(a) + " sigma=" + std::to_string(sigma);
          break;
        }
      }
      if (match[0] == 'a') break;
    }
    note += "D=" + std::to_string(D) + " split; " + match + "; chi(1-lambda)=" + std::to_string(chi);
  } else {
    note += "D=" + std::to_string(D) + " inert; target 0";
  }
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, obs, note);
}

namespace detail {

struct K3Ratio {
  PadicInt num, den, factor;
};

inline K3Ratio k3_ratio(const Rational& lambda, std::uint64_t p, long m, long s, int W, const PadicInt& alpha,
                        const CheckOptions& opt) {
  return {hyper::f_r_mod(lambda, 3, half_index(m, p, s), p, W),
          hyper::f_r_mod(lambda, 3, half_index(m, p, s - 1), p, W),
          alpha * alpha * static_cast<std::int64_t>(character(Rational(1) - lambda, p, opt))};
}

}  // namespace detail

// F_3(λ)_{(mp^s−1)/2} ≡ ((1−λ)/p)·α²·F_3(λ)_{(mp^{s−1}−1)/2} mod p^s at primes
// where the K3 surface is ordinary: α a unit and F_3(λ)_{(p−1)/2} a unit.
inline CongruenceReport theorem11_k3_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                           const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = "theorem11";
  CheckParams params = params_lps(lambda, p, m, s);
  if (auto why = curve_gate(curves::CurveId::cm(lambda), p)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, *why);
  }
  const long claimed = s;
  const int W = work_precision(claimed, opt);
  PadicInt alpha = curves::unit_root(curves::CurveId::cm(lambda), p, W);
  if (alpha.is_zero() || !hyper::f_r_mod(lambda, 3, (p - 1) / 2, p, 1).is_unit()) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary);
  }
  auto q = detail::k3_ratio(lambda, p, m, s, W, alpha, opt);
  const Observed obs = product_defect(q.num, q.den, q.factor);
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, obs);
}

// The same congruence mod p^{2s} for CM λ. A failure is evidence against the
// conjecture, not a defect of the engine. One extra digit is carried so the
// p³ margin at s = 1 is visible.
inline CongruenceReport conjecture33_check(const Rational& lambda, std::uint64_t p, long m, long s,
                                           const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = "conjecture33";
  CheckParams params = params_lps(lambda, p, m, s);
  if (auto why = detail::cm_gate(lambda, p)) {
    return CongruenceReport::skipped(name, params, Backing::Conjecture, *why);
  }
  const long claimed = 2 * s;
  const int W = work_precision(claimed + 1, opt);
  PadicInt alpha = curves::unit_root(curves::CurveId::cm(lambda), p, W);
  if (alpha.is_zero()) return CongruenceReport::skipped(name, params, Backing::Conjecture, Errc::Supersingular);
  auto q = detail::k3_ratio(lambda, p, m, s, W, alpha, opt);
  const Observed obs = product_defect(q.num, q.den, q.factor);
  std::string note;
  if (s == 1) note = obs.value >= ValuationResult::of(3) ? "p^3 margin: yes" : "p^3 margin: no";
  return CongruenceReport::measured(name, params, Backing::Conjecture, claimed, obs, note);
}

}  // namespace supercong::lab
