#pragma once

// Per-prime integrality of formal group laws, with the two controls: the
// multiplicative law (log has p in its denominators, law is integral) and a
// log carrying an artificial 1/p in degree 2 (law is not integral).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "supercong/curves/curves.hpp"
#include "supercong/formal/group_law.hpp"
#include "supercong/hyper/hypergeometric.hpp"

namespace supercong::lab {

enum class FormalControl { None, Additive, Multiplicative, InverseP };

struct FormalRow {
  std::uint64_t p = 0;
  std::optional<Errc> skipped;  // NotPIntegral or NotOrdinary
  std::optional<formal::IntegralityReport> report;

  bool pass() const { return report && report->pass(); }
};

namespace detail {

inline formal::TruncatedSeries control_log(FormalControl control, std::uint64_t p, std::size_t N) {
  formal::TruncatedSeries log(N);
  log.set(1, Rational(1));
  if (control == FormalControl::Multiplicative) {
    // log(1 + x) = Σ (−1)^{n+1} x^n/n
    for (std::size_t n = 2; n <= N; ++n) {
      log.set(n, Rational(n % 2 == 0 ? -1 : 1, static_cast<long>(n)));
    }
  } else if (control == FormalControl::InverseP) {
    if (N >= 2) log.set(2, Rational(1, static_cast<long>(p)));
  }
  return log;
}

}  // namespace detail

// Group law of the F_r(λ) logarithm through degree N, reported at each prime
// where λ is p-integral and F_r(λ)_{(p−1)/2} is a unit. The law is built once.
inline std::vector<FormalRow> formal_integrality_scan(int r, const Rational& lambda, std::size_t N,
                                                      const std::vector<std::uint64_t>& primes) {
  const formal::TruncatedBiSeries F = formal::group_law(formal::hypergeometric_logarithm(r, lambda, N), N);
  std::vector<FormalRow> rows;
  for (std::uint64_t p : primes) {
    FormalRow row;
    row.p = p;
    if (!curves::p_integral(lambda, p)) {
      row.skipped = Errc::NotPIntegral;
    } else if (!hyper::f_r_mod(lambda, r, (p - 1) / 2, p, 1).is_unit()) {
      row.skipped = Errc::NotOrdinary;
    } else {
      row.report = formal::integrality_report(F, p);
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<FormalRow> formal_control_scan(FormalControl control, std::size_t N,
                                                  const std::vector<std::uint64_t>& primes) {
  std::vector<FormalRow> rows;
  std::optional<formal::TruncatedBiSeries> shared;
  if (control != FormalControl::InverseP) shared = formal::group_law(detail::control_log(control, 0, N), N);
  for (std::uint64_t p : primes) {
    FormalRow row;
    row.p = p;
    row.report = formal::integrality_report(
        shared ? *shared : formal::group_law(detail::control_log(control, p, N), N), p);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace supercong::lab
