#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

namespace sc = supercong;
using sc::PadicInt;
using sc::Rational;
using sc::ValuationResult;

TEST(Valuation, FrozenExamples) {
  EXPECT_EQ(sc::valuation(Rational(25, 12), 5), ValuationResult::of(2));
  EXPECT_FALSE(sc::valuation(Rational(0), 7).is_finite());
  EXPECT_EQ(sc::valuation(Rational(27, 512), 2), ValuationResult::of(-9));
}

TEST(InverseMod, FrozenExamples) {
  EXPECT_EQ(sc::inverse_mod(8, 5, 2).residue(), 22u);
  EXPECT_EQ(sc::inverse_mod(1, 11, 3).residue(), 1u);
  EXPECT_EQ(sc::inverse_mod(12, 5, 2).residue(), 23u);
  EXPECT_THROW(sc::inverse_mod(10, 5, 2), sc::ArithmeticError);
}

TEST(ReduceRational, FrozenExamples) {
  EXPECT_EQ(sc::reduce_rational(Rational(27, 512), 5, 2).residue(), 21u);
  EXPECT_EQ(sc::reduce_rational(Rational(13), 5, 1).residue(), 3u);
  try {
    sc::reduce_rational(Rational(1, 64), 2, 3);
    FAIL() << "expected NotPIntegral";
  } catch (const sc::ArithmeticError& e) {
    EXPECT_EQ(e.code(), sc::Errc::NotPIntegral);
  }
}

TEST(ReduceRational, AgreesWithBigIntOracle) {
  auto g = sc::testing::rng(1);
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t p = sc::testing::random_odd_prime(g, 60);
    const int s = static_cast<int>(sc::testing::uniform(g, 1, 4));
    const Rational x = sc::testing::random_p_integral(g, p, 1000000, 5000);
    EXPECT_EQ(sc::reduce_rational(x, p, s).residue(),
              static_cast<std::uint64_t>(sc::testing::brute_residue(x, p, s)));
  }
}

TEST(LegendreSymbol, FrozenExamplesAndEulerCriterion) {
  EXPECT_EQ(sc::legendre_symbol(std::int64_t{3}, 7), -1);
  EXPECT_EQ(sc::legendre_symbol(std::int64_t{4}, 11), 1);
  EXPECT_EQ(sc::legendre_symbol(std::int64_t{63}, 11), -1);
  for (std::uint64_t p : sc::mod::odd_primes_between(3, 200)) {
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
      const std::uint64_t e = sc::mod::powmod(static_cast<std::uint64_t>(a), (p - 1) / 2, p);
      ASSERT_EQ(sc::legendre_symbol(a, p), e == 1 ? 1 : -1) << a << " mod " << p;
    }
  }
}

TEST(Teichmuller, FrozenExamplesAndProperties) {
  EXPECT_EQ(sc::teichmuller(2, 5, 2).residue(), 7u);
  EXPECT_EQ(sc::teichmuller(1, 13, 3).residue(), 1u);
  // Power-map oracle 4^5 mod 25: the lift of 4 ≡ −1 is −1.
  EXPECT_EQ(sc::teichmuller(4, 5, 2).residue(), 24u);
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (std::int64_t x = 1; x < static_cast<std::int64_t>(p); ++x) {
      PadicInt w = sc::teichmuller(x, p, 3);
      EXPECT_EQ(w.pow(p - 1), 1);
      EXPECT_EQ(w.residue() % p, static_cast<std::uint64_t>(x));
    }
  }
}

TEST(HenselUnitRoot, FrozenExamplesAndRootProperty) {
  EXPECT_EQ(sc::hensel_unit_root(3, 11, 2).residue(), 80u);
  EXPECT_EQ(sc::hensel_unit_root(1, 5, 1).residue(), 1u);
  try {
    sc::hensel_unit_root(7, 7, 2);
    FAIL() << "expected Supersingular";
  } catch (const sc::ArithmeticError& e) {
    EXPECT_EQ(e.code(), sc::Errc::Supersingular);
  }
  auto g = sc::testing::rng(2);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = sc::testing::random_odd_prime(g, 100);
    const long bound = 2 * static_cast<long>(std::sqrt(static_cast<double>(p)));
    const long t = sc::testing::uniform(g, -bound, bound);
    if (t % static_cast<long>(p) == 0) continue;
    PadicInt a = sc::hensel_unit_root(t, p, 4);
    EXPECT_TRUE(a.is_unit());
    EXPECT_TRUE((a * a - a * t + static_cast<std::int64_t>(p)).is_zero());
  }
}

TEST(PadicGamma, FrozenExamples) {
  EXPECT_EQ(sc::padic_gamma(1, 7, 2), -1);
  EXPECT_EQ(sc::padic_gamma(6, 5, 2).residue(), 24u);
  EXPECT_EQ(sc::padic_gamma(4, 7, 1), -1);
}

TEST(Harmonic, FrozenExamplesAndWolstenholme) {
  EXPECT_EQ(sc::harmonic(0), Rational(0));
  EXPECT_EQ(sc::harmonic(3), Rational(11, 6));
  EXPECT_EQ(sc::harmonic(4), Rational(25, 12));
  EXPECT_EQ(sc::valuation(sc::harmonic(4), 5), ValuationResult::of(2));
  for (std::uint64_t p : sc::mod::odd_primes_between(5, 60)) {
    EXPECT_GE(sc::valuation(sc::harmonic(p - 1), p), ValuationResult::of(2)) << p;
  }
}

TEST(PadicInt, RingLawsAgainstBigIntOracle) {
  auto g = sc::testing::rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t p = sc::testing::random_odd_prime(g, 50);
    const int s = static_cast<int>(sc::testing::uniform(g, 1, 5));
    const Rational x = sc::testing::random_p_integral(g, p, 100000, 300);
    const Rational y = sc::testing::random_p_integral(g, p, 100000, 300);
    PadicInt a = sc::reduce_rational(x, p, s), b = sc::reduce_rational(y, p, s);
    EXPECT_EQ(a + b, sc::reduce_rational(x + y, p, s));
    EXPECT_EQ(a - b, sc::reduce_rational(x - y, p, s));
    EXPECT_EQ(a * b, sc::reduce_rational(x * y, p, s));
    if (a.is_unit()) EXPECT_EQ(a * a.inverse(), 1);
  }
}

TEST(PadicInt, MixedPrecisionTakesTheMinimum) {
  PadicInt a(5, 3, 7), b(5, 1, 2);
  EXPECT_EQ((a + b).precision(), 1);
  EXPECT_EQ((a * b).residue(), 4u);
}

TEST(QuadExt, SquareRootsSquareBack) {
  for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u}) {
    const PadicInt t(p, 3, sc::QuadExtElem::default_nonresidue(p));
    for (std::int64_t c = 1; c < static_cast<std::int64_t>(p); ++c) {
      const PadicInt cc(p, 3, c);
      sc::QuadExtElem r = sc::sqrt_in_extension(cc, t);
      EXPECT_EQ(r * r, sc::QuadExtElem::embed(cc, t)) << c << " mod " << p;
    }
  }
}

TEST(QuadExt, MultiplicationIsAssociativeAndInvertible) {
  auto g = sc::testing::rng(4);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t p = sc::testing::random_odd_prime(g, 40);
    const int s = static_cast<int>(sc::testing::uniform(g, 1, 4));
    const PadicInt t(p, s, sc::QuadExtElem::default_nonresidue(p));
    auto any = [&] {
      return sc::QuadExtElem(PadicInt(p, s, sc::testing::uniform(g, -5000, 5000)),
                             PadicInt(p, s, sc::testing::uniform(g, -5000, 5000)), t);
    };
    const auto x = any(), y = any(), z = any();
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * y, y * x);
    if (x.norm().is_unit()) {
      const auto one = sc::QuadExtElem::embed(PadicInt::one(p, s), t);
      EXPECT_EQ(x * x.inverse(), one);
    }
  }
}
