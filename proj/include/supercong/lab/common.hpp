#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>

#include "supercong/curves/curves.hpp"
#include "supercong/errors.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/rational.hpp"
#include "supercong/report.hpp"

namespace supercong::lab {

struct CheckOptions {
  int guard = 2;  // extra p-adic digits beyond the claimed exponent
  // Negative controls: flip the sign of the quadratic character, or drop it.
  bool negate_character = false;
  bool drop_character = false;
};

inline int work_precision(long claimed, const CheckOptions& opt) {
  return static_cast<int>(std::max<long>(1, claimed + std::max(0, opt.guard)));
}

// m·p^s, guarded against overflow.
inline std::uint64_t m_p_pow(long m, std::uint64_t p, long s) {
  if (m < 1 || s < 0) raise(Errc::InvalidArgument, "need m >= 1 and s >= 0");
  std::uint64_t out = static_cast<std::uint64_t>(m);
  for (long i = 0; i < s; ++i) {
    if (out > (std::uint64_t{1} << 40) / p) raise(Errc::TooLarge, "m*p^s too large");
    out *= p;
  }
  return out;
}

// (m·p^s − 1)/2 for odd m.
inline std::uint64_t half_index(long m, std::uint64_t p, long s) { return (m_p_pow(m, p, s) - 1) / 2; }

inline void require_odd_m(long m) {
  if (m < 1 || m % 2 == 0) raise(Errc::InvalidArgument, "m must be a positive odd integer");
}

inline void require_positive_s(long s) {
  if (s < 1) raise(Errc::InvalidArgument, "s must be >= 1");
}

inline CheckParams params_lps(const Rational& lambda, std::uint64_t p, std::optional<long> m = {},
                              std::optional<long> s = {}, std::optional<long> r = {}) {
  CheckParams out;
  out.lambda = lambda;
  out.p = p;
  out.m = m;
  out.s = s;
  out.r = r;
  return out;
}

// Reason a curve of the given family cannot be used at p, if any.
inline std::optional<Errc> curve_gate(const curves::CurveId& curve, std::uint64_t p) {
  if (curve.lambda == Rational(1)) return Errc::DegenerateLambda;
  if (curve.family == curves::Family::Legendre && curve.lambda.is_zero()) return Errc::DegenerateLambda;
  if (!curves::p_integral(curve.lambda, p)) return Errc::NotPIntegral;
  if (!curves::good_reduction(curve, p)) return Errc::BadReduction;
  return std::nullopt;
}

inline int character(const Rational& a, std::uint64_t p, const CheckOptions& opt) {
  if (opt.drop_character) return 1;
  int chi = legendre_symbol(a, p);
  return opt.negate_character ? -chi : chi;
}

// Defect of num/den − c from diff = num − c·den. diff is known modulo
// p^known (the working precision, or less when c is less precise than that
// relative to den). Returns nullopt when den vanished at working precision.
inline std::optional<Observed> ratio_defect(int diff_valuation, int den_valuation, int known) {
  if (den_valuation >= known) return std::nullopt;
  const int top = std::min(diff_valuation, known);
  return Observed{ValuationResult::of(top - den_valuation), diff_valuation >= known};
}

template <class Ring>
std::optional<Observed> ratio_defect(const Ring& num, const Ring& den, const Ring& c) {
  const int W = std::min(num.precision(), den.precision());
  Ring diff = num - c * den;
  return ratio_defect(diff.valuation(), den.valuation(), W);
}

// Defect of num ≡ c·den read as stated, without dividing by den: a vanishing
// den leaves a claim about num alone.
inline Observed product_defect(int diff_valuation, int known) {
  return Observed{ValuationResult::of(std::min(diff_valuation, known)), diff_valuation >= known};
}

template <class Ring>
Observed product_defect(const Ring& num, const Ring& den, const Ring& c) {
  const int W = std::min(num.precision(), den.precision());
  return product_defect((num - c * den).valuation(), W);
}

inline std::string residue_note(const std::string& label, const PadicInt& x) {
  return label + "=" + std::to_string(x.residue()) + " mod " + std::to_string(x.prime()) + "^" +
         std::to_string(x.precision());
}

}  // namespace supercong::lab
