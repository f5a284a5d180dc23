#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/formal/series.hpp"
#include "supercong/hyper/hypergeometric.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/rational.hpp"
#include "supercong/report.hpp"

namespace supercong::formal {

// Σ c_{ij} x^i y^j over i + j ≤ cap.
class TruncatedBiSeries {
 public:
  explicit TruncatedBiSeries(std::size_t cap) : cap_(cap), c_(cap + 1) {
    for (std::size_t i = 0; i <= cap; ++i) c_[i].assign(cap - i + 1, Rational(0));
  }

  std::size_t cap() const { return cap_; }
  const Rational& at(std::size_t i, std::size_t j) const {
    if (i + j > cap_) raise(Errc::IndexOutOfRange, "bidegree beyond the cap");
    return c_[i][j];
  }
  void set(std::size_t i, std::size_t j, const Rational& v) {
    if (i + j > cap_) raise(Errc::IndexOutOfRange, "bidegree beyond the cap");
    c_[i][j] = v;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i <= cap_; ++i) {
      for (std::size_t j = 0; i + j <= cap_; ++j) {
        if (c_[i][j] != c_[j][i]) return false;
      }
    }
    return true;
  }

  // F(x, 0) as a univariate series.
  TruncatedSeries restrict_x() const {
    TruncatedSeries out(cap_);
    for (std::size_t i = 0; i <= cap_; ++i) out.set(i, c_[i][0]);
    return out;
  }

  friend TruncatedBiSeries operator+(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    const std::size_t N = std::min(a.cap_, b.cap_);
    TruncatedBiSeries out(N);
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t j = 0; i + j <= N; ++j) out.c_[i][j] = a.c_[i][j] + b.c_[i][j];
    }
    return out;
  }

  friend TruncatedBiSeries operator*(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    const std::size_t N = std::min(a.cap_, b.cap_);
    TruncatedBiSeries out(N);
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (a.c_[i][j].is_zero()) continue;
        for (std::size_t k = 0; i + j + k <= N; ++k) {
          for (std::size_t l = 0; i + j + k + l <= N; ++l) {
            if (!b.c_[k][l].is_zero()) out.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
          }
        }
      }
    }
    return out;
  }

  // F(u(t), v(t)) for u, v without constant term.
  TruncatedSeries substitute(const TruncatedSeries& u, const TruncatedSeries& v) const {
    if (!u[0].is_zero() || !v[0].is_zero()) {
      raise(Errc::CompositionAtUnit, "substituted series need zero constant term");
    }
    const std::size_t N = std::min({cap_, u.cap(), v.cap()});
    std::vector<TruncatedSeries> upow{TruncatedSeries::constant(Rational(1), N)};
    std::vector<TruncatedSeries> vpow{TruncatedSeries::constant(Rational(1), N)};
    for (std::size_t i = 1; i <= N; ++i) {
      upow.push_back(series_multiply(upow.back(), u.truncated(N)));
      vpow.push_back(series_multiply(vpow.back(), v.truncated(N)));
    }
    TruncatedSeries out(N);
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (c_[i][j].is_zero()) continue;
        out = series_add(out, series_scale(series_multiply(upow[i], vpow[j]), c_[i][j]));
      }
    }
    return out;
  }

  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
    return a.cap_ == b.cap_ && a.c_ == b.c_;
  }

 private:
  std::size_t cap_;
  std::vector<std::vector<Rational>> c_;  // c_[i][j], j ≤ cap − i
};

// ℓ(τ) = Σ_{2n+1 ≤ N} F_r(λ)_n/(2n+1)·τ^{2n+1}.
inline TruncatedSeries hypergeometric_logarithm(int r, const Rational& lambda, std::size_t N) {
  if (r < 1) raise(Errc::InvalidArgument, "r must be positive");
  TruncatedSeries out(N);
  Rational partial(0), term(1);
  for (std::size_t n = 0; 2 * n + 1 <= N; ++n) {
    if (n > 0) {
      // ((1/2)_n/n!)^r: ratio ((2n−1)/(2n))^r.
      Rational ratio(static_cast<long>(2 * n - 1), static_cast<long>(2 * n));
      term *= ratio.pow(r) * lambda;
    }
    partial += term;
    out.set(2 * n + 1, partial / Rational(static_cast<long>(2 * n + 1)));
  }
  return out;
}

// b_{r,n}(λ) = ᵣF_{r−1}(−n,…,−n; 1,…,1; λ) = Σ_k binom(n,k)^r·((−1)^r λ)^k.
inline Rational stienstra_coefficient(int r, const Rational& lambda, std::uint64_t n) {
  if (r < 1) raise(Errc::InvalidArgument, "r must be positive");
  const Rational minus_n = -Rational(static_cast<long>(n));
  hyper::HGParams params{std::vector<Rational>(static_cast<std::size_t>(r), minus_n),
                         std::vector<Rational>(static_cast<std::size_t>(r - 1), Rational(1)), lambda,
                         n};
  return hyper::truncated_hg(params);
}

inline TruncatedSeries stienstra_logarithm(int r, const Rational& lambda, std::size_t N) {
  TruncatedSeries out(N);
  for (std::size_t n = 0; 2 * n + 1 <= N; ++n) {
    out.set(2 * n + 1, stienstra_coefficient(r, lambda, n) / Rational(static_cast<long>(2 * n + 1)));
  }
  return out;
}

// a_n = n·[τ^n]ℓ, the sequence whose ratio congruences certify F_p-type.
inline std::vector<Rational> log_coefficient_sequence(const TruncatedSeries& log) {
  std::vector<Rational> out(log.cap() + 1);
  for (std::size_t n = 0; n <= log.cap(); ++n) out[n] = log[n] * Rational(static_cast<long>(n));
  return out;
}

// F(x, y) = ℓ⁻¹(ℓ(x) + ℓ(y)) through total degree N.
inline TruncatedBiSeries group_law(const TruncatedSeries& log, std::size_t N) {
  if (log.cap() < N) raise(Errc::InvalidArgument, "logarithm cap below the requested degree");
  TruncatedSeries inv = series_reversion(log.truncated(N));
  TruncatedBiSeries h(N);
  for (std::size_t i = 1; i <= N; ++i) {
    h.set(i, 0, log[i]);
    h.set(0, i, log[i]);
  }
  TruncatedBiSeries out(N);
  TruncatedBiSeries power(N);
  power.set(0, 0, Rational(1));
  for (std::size_t k = 1; k <= N; ++k) {
    power = power * h;
    if (inv[k].is_zero()) continue;
    for (std::size_t i = 0; i <= N; ++i) {
      for (std::size_t j = 0; i + j <= N; ++j) {
        if (!power.at(i, j).is_zero()) out.set(i, j, out.at(i, j) + inv[k] * power.at(i, j));
      }
    }
  }
  return out;
}

struct IntegralityReport {
  std::uint64_t p = 0;
  std::size_t cap = 0;
  ValuationResult min_valuation = ValuationResult::infinity();
  std::optional<std::pair<std::size_t, std::size_t>> offending;  // first monomial below 0

  bool pass() const { return min_valuation >= ValuationResult::of(0); }
};

inline IntegralityReport integrality_report(const TruncatedBiSeries& F, std::uint64_t p) {
  require_prime(p);
  IntegralityReport out;
  out.p = p;
  out.cap = F.cap();
  for (std::size_t d = 0; d <= F.cap(); ++d) {
    for (std::size_t i = 0; i <= d; ++i) {
      const Rational& c = F.at(i, d - i);
      if (c.is_zero()) continue;
      ValuationResult v = valuation(c, p);
      if (v < out.min_valuation) {
        out.min_valuation = v;
        if (v < ValuationResult::of(0)) out.offending = std::make_pair(i, d - i);
      }
    }
  }
  return out;
}

// a_{mp^s} ≡ α·a_{mp^{s−1}} mod p^s, observed at α's precision.
inline CongruenceReport fp_type_ratio(const PadicInt& alpha, std::span<const Rational> sequence,
                                      std::uint64_t p, long m, long s) {
  if (alpha.prime() != p) raise(Errc::InvalidArgument, "alpha lives over a different prime");
  if (m < 1 || s < 1) raise(Errc::InvalidArgument, "need m, s >= 1");
  std::uint64_t hi = static_cast<std::uint64_t>(m);
  for (long i = 0; i < s; ++i) hi *= p;
  const std::uint64_t lo = hi / p;
  if (hi >= sequence.size()) raise(Errc::IndexOutOfRange, "index m*p^s beyond the sequence");
  const int W = alpha.precision();
  PadicInt a_hi = reduce_rational(sequence[hi], p, W);
  PadicInt a_lo = reduce_rational(sequence[lo], p, W);
  PadicInt diff = a_hi - alpha * a_lo;
  CheckParams params;
  params.p = p;
  params.m = m;
  params.s = s;
  return CongruenceReport::measured("fp_type_ratio", params, Backing::Theorem, s,
                                    observed_from_residue(diff.valuation(), W));
}

}  // namespace supercong::formal
