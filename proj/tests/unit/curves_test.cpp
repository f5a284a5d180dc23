#include <gtest/gtest.h>

#include "support.hpp"

namespace sc = supercong;
namespace cv = supercong::curves;
using sc::PadicInt;
using sc::Rational;

namespace {

// #{(x, y) ∈ F_p²: y² = f(x)} + 1 by enumerating both coordinates.
std::int64_t brute_count(const std::function<std::int64_t(std::int64_t)>& f, std::int64_t p) {
  std::int64_t n = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t fx = ((f(x) % p) + p) % p;
    for (std::int64_t y = 0; y < p; ++y) n += (y * y % p == fx);
  }
  return n;
}

std::int64_t res(const Rational& x, std::uint64_t p) {
  return static_cast<std::int64_t>(sc::reduce_rational(x, p, 1).residue());
}

}  // namespace

TEST(CountPoints, FrozenExamples) {
  auto l2 = cv::count_points(cv::CurveId::legendre(Rational(2)), 5);
  EXPECT_EQ(l2.count, 8);
  EXPECT_EQ(l2.trace, -2);
  EXPECT_TRUE(l2.ordinary);
  auto em1 = cv::count_points(cv::CurveId::cm(Rational(-1)), 7);
  EXPECT_EQ(em1.count, 8);
  EXPECT_EQ(em1.trace, 0);
  EXPECT_FALSE(em1.ordinary);
}

TEST(CountPoints, AgreesWithBruteForceEnumeration) {
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 53)) {
    const auto P = static_cast<std::int64_t>(p);
    for (const Rational lambda : {Rational(2), Rational(-1), Rational(7), Rational(-8), Rational(1, 4), Rational(64)}) {
      const auto leg = cv::CurveId::legendre(lambda);
      if (cv::good_reduction(leg, p)) {
        const std::int64_t l = res(lambda, p);
        auto f = [&](std::int64_t x) { return x * ((x - 1 + P) % P) % P * ((x - l + P) % P); };
        ASSERT_EQ(cv::count_points(leg, p).count, brute_count(f, P)) << leg.name() << " p=" << p;
      }
      const auto cm = cv::CurveId::cm(lambda);
      if (cv::good_reduction(cm, p)) {
        const std::int64_t c = res(Rational(1) / (Rational(1) - lambda), p);
        auto f = [&](std::int64_t x) { return ((x - 1 + P) % P) * (((x * x - c) % P + P) % P); };
        ASSERT_EQ(cv::count_points(cm, p).count, brute_count(f, P)) << cm.name() << " p=" << p;
      }
    }
  }
}

TEST(GoodReduction, FrozenExamples) {
  EXPECT_FALSE(cv::good_reduction(cv::CurveId::cm(Rational(64)), 7));
  EXPECT_TRUE(cv::good_reduction(cv::CurveId::legendre(Rational(2)), 5));
  EXPECT_FALSE(cv::good_reduction(cv::CurveId::legendre(Rational(6)), 3));
  EXPECT_FALSE(cv::good_reduction(cv::CurveId::legendre(Rational(1, 5)), 5));
  EXPECT_THROW(cv::count_points(cv::CurveId::cm(Rational(64)), 7), sc::ArithmeticError);
}

TEST(HasseInvariant, MatchesTraceModP) {
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 101)) {
    for (long l = 2; l <= 10; ++l) {
      const auto curve = cv::CurveId::legendre(Rational(l));
      if (!cv::good_reduction(curve, p)) continue;
      const auto d = cv::count_points(curve, p);
      ASSERT_EQ(cv::hasse_invariant(Rational(l), p), PadicInt(p, 1, d.trace)) << "lambda=" << l << " p=" << p;
    }
  }
}

TEST(UnitRoot, SolvesFrobeniusPolynomial) {
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 60)) {
    const auto curve = cv::CurveId::legendre(Rational(3));
    if (!cv::good_reduction(curve, p)) continue;
    const auto d = cv::count_points(curve, p, 4);
    if (!d.ordinary) {
      EXPECT_FALSE(d.unit_root.has_value());
      EXPECT_TRUE(cv::unit_root(curve, p, 4).is_zero());
      continue;
    }
    const PadicInt& a = *d.unit_root;
    EXPECT_TRUE(a.is_unit());
    EXPECT_TRUE((a * a - a * d.trace + static_cast<std::int64_t>(p)).is_zero()) << p;
  }
}

TEST(CmData, CatalogAndJInvariants) {
  EXPECT_EQ(cv::j_invariant(cv::CurveId::cm(Rational(-8))), Rational(1728));
  EXPECT_EQ(cv::j_invariant(cv::CurveId::cm(Rational(4))), Rational(0));
  EXPECT_EQ(cv::j_invariant(cv::CurveId::cm(Rational(64))), Rational(-3375));
  EXPECT_EQ(cv::j_invariant(cv::CurveId::legendre(Rational(-1))), Rational(1728));
  for (const auto& e : cv::cm_catalog()) {
    if (e.degenerate) {
      EXPECT_THROW(cv::j_invariant(cv::CurveId::cm(e.lambda)), sc::ArithmeticError);
    } else {
      EXPECT_TRUE(cv::has_cm(cv::CurveId::cm(e.lambda))) << e.lambda.str();
    }
  }
  EXPECT_FALSE(cv::has_cm(cv::CurveId::legendre(Rational(3))));
  EXPECT_EQ(cv::cm_lambdas().size(), 7u);
}

TEST(CmData, CmCurvesAreSupersingularAtInertPrimes) {
  // E_{−8} has CM by Z[i]: a_p = 0 whenever p ≡ 3 mod 4.
  for (std::uint64_t p : sc::mod::odd_primes_between(5, 200)) {
    if (p % 4 != 3) continue;
    EXPECT_EQ(cv::count_points(cv::CurveId::cm(Rational(-8)), p).trace, 0) << p;
  }
}

TEST(AffineCount, AgreesWithBruteForceAndDeuring) {
  // r = 2: f = X₁X₂(X₁−X₂)(X₂−λX₁); count pairs (X, y) with y² = f(X) mod p.
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 23)) {
    const auto P = static_cast<std::int64_t>(p);
    for (long l : {2L, 3L, -1L, 5L}) {
      const std::int64_t lp = ((l % P) + P) % P;
      std::int64_t n = 0;
      for (std::int64_t x1 = 0; x1 < P; ++x1) {
        for (std::int64_t x2 = 0; x2 < P; ++x2) {
          const std::int64_t f = x1 * x2 % P * (((x1 - x2) % P + P) % P) % P * (((x2 - lp * x1) % P + P) % P) % P;
          for (std::int64_t y = 0; y < P; ++y) n += (y * y % P == f);
        }
      }
      EXPECT_EQ(cv::affine_variety_count_mod_p(2, Rational(l), p), PadicInt(p, 1, n)) << l << " " << p;
    }
  }
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 31)) {
    for (long l : {2L, -1L, 7L}) {
      EXPECT_EQ(sc::lab::deuring_check(2, Rational(l), p).outcome(), sc::Outcome::Pass) << l << " " << p;
    }
  }
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 13)) {
    EXPECT_EQ(sc::lab::deuring_check(3, Rational(-8), p).outcome(), sc::Outcome::Pass) << p;
  }
}
