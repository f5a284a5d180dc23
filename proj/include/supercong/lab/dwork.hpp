#pragma once

// Dwork-type ratio congruences for F_r(λ) truncations and a finite-window
// check of the three hypotheses behind them for A(n) = ((1/2)_n/n!)^r.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/lab/common.hpp"

namespace supercong::lab {

struct DworkWindow {
  std::uint64_t n_max = 60;
  long m_max = 3;
  long s_max = 2;
};

struct DworkHypothesisReport {
  int r = 0;
  std::uint64_t p = 0;
  DworkWindow window;
  bool a = false;  // ratio congruence A(n+mp^{s+1})/A(⌊n/p⌋+mp^s) ≡ A(n)/A(⌊n/p⌋) mod p^{s+1}
  bool b = false;  // A(n)/A(⌊n/p⌋) is p-integral
  bool c = false;  // A(i) ≡ 0 mod p for (p+1)/2 ≤ i < p
  std::string first_failure;

  bool pass() const { return a && b && c; }
};

namespace detail {

// p^v·unit with the unit known mod p^K.
struct ValUnit {
  long v = 0;
  std::uint64_t unit = 1;
};

// ((1/2)_n/n!)^r for n ≤ N from the term ratio (2n−1)/(2n).
inline std::vector<ValUnit> half_pochhammer_table(int r, std::uint64_t p, int K, std::uint64_t N) {
  const std::uint64_t M = mod::checked_prime_power(p, K);
  std::vector<ValUnit> out(N + 1);
  ValUnit c;
  for (std::uint64_t n = 1; n <= N; ++n) {
    std::uint64_t a = 2 * n - 1, b = 2 * n;
    c.v += mod::strip(a, p);
    c.v -= mod::strip(b, p);
    c.unit = mod::mulmod(mod::mulmod(c.unit, a % M, M), mod::invmod_or_zero(b % M, M), M);
    out[n] = c;
  }
  for (auto& x : out) {
    x.v *= r;
    x.unit = mod::powmod(x.unit, static_cast<std::uint64_t>(r), M);
  }
  return out;
}

// x/y mod p^k given that it is p-integral (v ≥ 0).
inline std::uint64_t ratio_mod(const ValUnit& x, const ValUnit& y, std::uint64_t p, int k, std::uint64_t M_K) {
  const long v = x.v - y.v;
  if (v >= k) return 0;
  const std::uint64_t Mk = mod::checked_prime_power(p, k);
  std::uint64_t u = mod::mulmod(x.unit, mod::invmod_or_zero(y.unit, M_K), M_K) % Mk;
  return mod::mulmod(u, mod::powmod(p, static_cast<std::uint64_t>(v), Mk), Mk);
}

}  // namespace detail

inline DworkHypothesisReport dwork_hypotheses_check(int r, std::uint64_t p, const DworkWindow& window = {}) {
  require_odd_prime(p);
  if (r < 1) raise(Errc::InvalidArgument, "r must be positive");
  if (window.m_max < 1 || window.s_max < 1) raise(Errc::InvalidArgument, "window needs m_max, s_max >= 1");
  DworkHypothesisReport rep;
  rep.r = r;
  rep.p = p;
  rep.window = window;
  const int K = static_cast<int>(window.s_max) + 1;
  const std::uint64_t M = mod::checked_prime_power(p, K);
  const std::uint64_t N = std::max<std::uint64_t>(window.n_max, p) +
                          static_cast<std::uint64_t>(window.m_max) * m_p_pow(1, p, window.s_max + 1);
  const auto A = detail::half_pochhammer_table(r, p, K, N);
  auto fail = [&rep](const std::string& what) {
    if (rep.first_failure.empty()) rep.first_failure = what;
  };

  rep.c = true;
  for (std::uint64_t i = (p + 1) / 2; i < p; ++i) {
    if (A[i].v < 1) {
      rep.c = false;
      fail("c) at i=" + std::to_string(i));
    }
  }

  rep.b = true;
  for (std::uint64_t n = 1; n <= window.n_max; ++n) {
    if (A[n].v < A[n / p].v) {
      rep.b = false;
      fail("b) at n=" + std::to_string(n));
    }
  }

  rep.a = true;
  for (long s = 1; s <= window.s_max; ++s) {
    const int k = static_cast<int>(s) + 1;
    for (long m = 1; m <= window.m_max; ++m) {
      const std::uint64_t big = static_cast<std::uint64_t>(m) * m_p_pow(1, p, s + 1);
      const std::uint64_t small = big / p;
      for (std::uint64_t n = 1; n <= window.n_max; ++n) {
        const auto& x1 = A[n + big];
        const auto& y1 = A[n / p + small];
        const auto& x0 = A[n];
        const auto& y0 = A[n / p];
        if (x1.v < y1.v || x0.v < y0.v) {
          rep.a = false;
          fail("a) non-integral ratio at n=" + std::to_string(n));
          continue;
        }
        if (detail::ratio_mod(x1, y1, p, k, M) != detail::ratio_mod(x0, y0, p, k, M)) {
          rep.a = false;
          fail("a) at n=" + std::to_string(n) + " m=" + std::to_string(m) + " s=" + std::to_string(s));
        }
      }
    }
  }
  return rep;
}

// F_r(λ)_{(mp^s−1)/2}/F_r(λ)_{(mp^{s−1}−1)/2} ≡ α mod p^{s−d_m}. α is taken from
// the m = 1 ratio one level up, where it is known mod p^{s+1}; d_m is the
// largest valuation of F_r(λ)_{(mp^{s'}−1)/2} over 0 ≤ s' ≤ s.
inline CongruenceReport dwork_ratio_check(int r, const Rational& lambda, std::uint64_t p, long m, long s,
                                          const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_odd_m(m);
  require_positive_s(s);
  const std::string name = "dwork_ratio";
  CheckParams params = params_lps(lambda, p, m, s, r);
  if (!curves::p_integral(lambda, p)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotPIntegral);
  }
  if (!hyper::f_r_mod(lambda, r, (p - 1) / 2, p, 1).is_unit()) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary);
  }
  const int W = work_precision(s + 1, opt);
  auto F = [&](long mm, long ss) { return hyper::f_r_mod(lambda, r, half_index(mm, p, ss), p, W); };

  PadicInt top = F(1, s + 1), below = F(1, s);
  PadicInt alpha = top * below.inverse();  // below ≡ α^s mod p is a unit

  int d = 0;
  for (long k = 0; k <= s; ++k) d = std::max(d, F(m, k).valuation());
  const long claimed = std::max<long>(0, s - d);  // 0: the congruence says nothing here
  PadicInt num = F(m, s), den = F(m, s - 1);
  const int v_den = den.valuation();
  const int known = std::min(W, static_cast<int>(s) + 1 + v_den);
  auto obs = ratio_defect((num - alpha * den).valuation(), v_den, known);
  const std::string note = residue_note("alpha", alpha.reduced(static_cast<int>(s) + 1)) + "; d_m=" + std::to_string(d);
  if (!obs) {
    // The denominator is 0 to working precision, so d_m is unbounded and the
    // congruence says nothing (F_3(−8)_1 = 0 is such a case).
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotInvertible,
                                     note + "; denominator vanished");
  }
  return CongruenceReport::measured(name, params, Backing::Theorem, claimed, *obs, note);
}

// F_r(λ)_{mp^s−1} ≡ γ·F_r(λ^p)_{mp^{s−1}−1} mod p^s, with γ read off the m = 1
// instance one level up. λ^p is formed as a residue.
inline CongruenceReport eq1_dwork_fullsum_check(int r, const Rational& lambda, std::uint64_t p, long m, long s,
                                                const CheckOptions& opt = {}) {
  require_odd_prime(p);
  require_positive_s(s);
  if (m < 1) raise(Errc::InvalidArgument, "m must be positive");
  const std::string name = "eq1";
  CheckParams params = params_lps(lambda, p, m, s, r);
  if (!curves::p_integral(lambda, p)) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotPIntegral);
  }
  if (!hyper::f_r_mod(lambda, r, p - 1, p, 1).is_unit()) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary);
  }
  const int W = work_precision(s + 1, opt);
  PadicInt lam = reduce_rational(lambda, p, W);
  PadicInt lam_p = lam.pow(p);
  auto lhs = [&](long mm, long ss) { return hyper::f_r_mod(lam, r, m_p_pow(mm, p, ss) - 1); };
  auto rhs = [&](long mm, long ss) { return hyper::f_r_mod(lam_p, r, m_p_pow(mm, p, ss - 1) - 1); };

  PadicInt gamma_den = rhs(1, s + 1);
  if (!gamma_den.is_unit()) {
    return CongruenceReport::skipped(name, params, Backing::Theorem, Errc::NotOrdinary, "gamma denominator");
  }
  PadicInt gamma = lhs(1, s + 1) * gamma_den.inverse();
  PadicInt num = lhs(m, s), den = rhs(m, s);
  const int v_den = den.valuation();
  const int known = std::min(W, static_cast<int>(s) + 1 + v_den);
  // γ is only known mod p^{s+1}, so the product is known mod p^{s+1+v(den)}.
  const Observed obs = product_defect((num - gamma * den).valuation(), known);
  const std::string note = residue_note("gamma", gamma.reduced(static_cast<int>(s) + 1));
  return CongruenceReport::measured(name, params, Backing::Theorem, s, obs, note);
}

}  // namespace supercong::lab
