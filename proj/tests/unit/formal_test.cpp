#include <gtest/gtest.h>

#include "support.hpp"

namespace sc = supercong;
namespace fm = supercong::formal;
using sc::PadicInt;
using sc::Rational;

namespace {

fm::TruncatedSeries series(std::vector<Rational> c, std::size_t cap) { return fm::TruncatedSeries(std::move(c), cap); }

Rational factorial(long n) {
  Rational f(1);
  for (long i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

}  // namespace

TEST(Series, ComposeExample) {
  const auto f = series({Rational(0), Rational(1), Rational(1)}, 4);
  const auto fg = fm::series_compose(f, f);
  EXPECT_EQ(fg, series({Rational(0), Rational(1), Rational(2), Rational(2), Rational(1)}, 4));
  EXPECT_THROW(fm::series_compose(f, series({Rational(1), Rational(1)}, 4)), sc::ArithmeticError);
}

TEST(Series, ReversionOfKnownSeries) {
  constexpr std::size_t N = 15;
  // x − x² reverts to Σ C_{n−1} x^n.
  const auto f = series({Rational(0), Rational(1), Rational(-1)}, N);
  std::vector<Rational> catalan(N + 1, Rational(0));
  for (std::size_t n = 1; n <= N; ++n) {
    catalan[n] = Rational(sc::hyper::binomial(2 * (n - 1), n - 1)) / Rational(static_cast<long>(n));
  }
  EXPECT_EQ(fm::series_reversion(f), series(catalan, N));
  EXPECT_EQ(fm::series_reversion_triangular(f), series(catalan, N));
  // 1 − e^{−x} reverts to −log(1 − x) = Σ x^n/n.
  std::vector<Rational> e(N + 1, Rational(0)), log(N + 1, Rational(0));
  for (std::size_t n = 1; n <= N; ++n) {
    e[n] = Rational(n % 2 == 1 ? 1 : -1) / factorial(static_cast<long>(n));
    log[n] = Rational(1, static_cast<long>(n));
  }
  EXPECT_EQ(fm::series_reversion(series(e, N)), series(log, N));
  EXPECT_THROW(fm::series_reversion(series({Rational(0), Rational(0), Rational(1)}, N)), sc::ArithmeticError);
}

TEST(Series, NewtonAndTriangularReversionAgree) {
  auto g = sc::testing::rng(20);
  for (int i = 0; i < 40; ++i) {
    const std::size_t N = static_cast<std::size_t>(sc::testing::uniform(g, 2, 14));
    std::vector<Rational> c(N + 1, Rational(0));
    c[1] = sc::testing::random_rational(g, 9, 5);
    if (c[1].is_zero()) c[1] = Rational(3);
    for (std::size_t n = 2; n <= N; ++n) c[n] = sc::testing::random_rational(g, 20, 7);
    const auto f = series(c, N);
    const auto inv = fm::series_reversion(f);
    EXPECT_EQ(inv, fm::series_reversion_triangular(f));
    EXPECT_EQ(fm::series_compose(f, inv), fm::TruncatedSeries::identity(N));
    EXPECT_EQ(fm::series_compose(inv, f), fm::TruncatedSeries::identity(N));
  }
}

TEST(HypergeometricLog, FrozenCoefficient) {
  const auto log = fm::hypergeometric_logarithm(3, Rational(1), 5);
  EXPECT_EQ(log[1], Rational(1));
  EXPECT_EQ(log[2], Rational(0));
  EXPECT_EQ(log[5], Rational(603, 2560));
  const auto a = fm::log_coefficient_sequence(log);
  EXPECT_EQ(a[5], Rational(603, 512));
}

TEST(GroupLaw, AdditiveAndMultiplicative) {
  constexpr std::size_t N = 8;
  const auto add = fm::group_law(fm::TruncatedSeries::identity(N), N);
  const auto mult = fm::group_law(sc::lab::detail::control_log(sc::lab::FormalControl::Multiplicative, 0, N), N);
  for (std::size_t i = 0; i <= N; ++i) {
    for (std::size_t j = 0; i + j <= N; ++j) {
      const bool linear = (i == 1 && j == 0) || (i == 0 && j == 1);
      EXPECT_EQ(add.at(i, j), Rational(linear ? 1 : 0)) << i << "," << j;
      EXPECT_EQ(mult.at(i, j), Rational(linear || (i == 1 && j == 1) ? 1 : 0)) << i << "," << j;
    }
  }
}

TEST(GroupLaw, AxiomsForHypergeometricLogarithms) {
  constexpr std::size_t N = 9;
  for (const auto& [r, lambda] : {std::pair{2, Rational(-1)}, std::pair{3, Rational(64)}, std::pair{2, Rational(1, 4)}}) {
    const auto log = fm::hypergeometric_logarithm(r, lambda, N);
    const auto F = fm::group_law(log, N);
    EXPECT_TRUE(F.is_symmetric());
    EXPECT_EQ(F.restrict_x(), fm::TruncatedSeries::identity(N));
    EXPECT_TRUE(F.at(0, 0).is_zero());
    auto t = [&](long a) { return fm::series_scale(fm::TruncatedSeries::identity(N), Rational(a)); };
    // ℓ(F(at, bt)) = ℓ(at) + ℓ(bt).
    EXPECT_EQ(fm::series_compose(log, F.substitute(t(2), t(-3))),
              fm::series_add(fm::series_compose(log, t(2)), fm::series_compose(log, t(-3))));
    // F(F(t, 2t), 3t) = F(t, F(2t, 3t)).
    EXPECT_EQ(F.substitute(F.substitute(t(1), t(2)), t(3)), F.substitute(t(1), F.substitute(t(2), t(3))));
  }
}

TEST(Integrality, HypergeometricLawsAndControls) {
  const auto primes = sc::mod::odd_primes_between(3, 13);
  for (const auto& [r, lambda] : {std::pair{2, Rational(-1)}, std::pair{3, Rational(-8)}}) {
    int reported = 0;
    for (const auto& row : sc::lab::formal_integrality_scan(r, lambda, 10, primes)) {
      if (row.skipped) continue;
      ++reported;
      EXPECT_TRUE(row.pass()) << "r=" << r << " p=" << row.p;
    }
    EXPECT_GT(reported, 0);
  }
  for (const auto& row : sc::lab::formal_control_scan(sc::lab::FormalControl::Multiplicative, 10, primes)) {
    EXPECT_TRUE(row.pass()) << row.p;
  }
  for (const auto& row : sc::lab::formal_control_scan(sc::lab::FormalControl::InverseP, 10, primes)) {
    EXPECT_FALSE(row.pass()) << row.p;
    EXPECT_TRUE(row.report->offending.has_value());
  }
  // The multiplicative log itself has p in its denominators.
  const auto mlog = sc::lab::detail::control_log(sc::lab::FormalControl::Multiplicative, 0, 10);
  EXPECT_EQ(sc::valuation(mlog[5], 5), sc::ValuationResult::of(-1));
}

TEST(FpTypeRatio, LegendreCurveSequence) {
  // a_n = n·[τ^n] of the invariant-differential logarithm of L_λ.
  const Rational lambda(3);
  constexpr std::size_t N = 7 * 7 * 7 + 1;
  std::vector<Rational> a(N + 1, Rational(0));
  for (std::size_t n = 1; n <= N; n += 2) {
    const std::uint64_t j = (n - 1) / 2;
    a[n] = sc::hyper::legendre_poly(j, (Rational(1) + lambda) / (Rational(1) - lambda)) *
           (lambda - Rational(1)).pow(static_cast<long>(j));
  }
  for (std::uint64_t p : {5u, 7u}) {
    const auto curve = sc::curves::CurveId::legendre(lambda);
    ASSERT_TRUE(sc::curves::count_points(curve, p).ordinary);
    for (long s : {1L, 2L}) {
      const PadicInt alpha = sc::curves::unit_root(curve, p, static_cast<int>(s) + 2);
      EXPECT_EQ(fm::fp_type_ratio(alpha, a, p, 1, s).outcome(), sc::Outcome::Pass) << p << " " << s;
      EXPECT_EQ(fm::fp_type_ratio(alpha + PadicInt::one(p, alpha.precision()), a, p, 1, s).outcome(),
                sc::Outcome::Fail) << p << " " << s;
    }
  }
}
