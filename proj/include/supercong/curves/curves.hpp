#pragma once

// Point counts and local data for the Legendre family L_λ: y² = x(x−1)(x−λ)
// and the CM family E_λ: y² = (x−1)(x² − 1/(1−λ)).

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/hyper/legendre.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/padic_int.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::curves {

enum class Family { Legendre, CmFamily };

struct CurveId {
  Family family;
  Rational lambda;

  static CurveId legendre(const Rational& lambda) { return {Family::Legendre, lambda}; }
  static CurveId cm(const Rational& lambda) { return {Family::CmFamily, lambda}; }

  std::string name() const { return (family == Family::Legendre ? "L_" : "E_") + lambda.str(); }
};

struct CurveLocalData {
  std::uint64_t p = 0;
  std::int64_t count = 0;  // #curve(F_p), point at infinity included
  std::int64_t trace = 0;  // p + 1 − count
  bool ordinary = false;
  bool good_reduction = false;
  std::optional<PadicInt> unit_root;
};

// χ(r) for r in [0, p), from a single pass over the squares.
class CharacterTable {
 public:
  explicit CharacterTable(std::uint64_t p) : p_(p), chi_(p, -1) {
    chi_[0] = 0;
    for (std::uint64_t x = 1; x <= (p - 1) / 2; ++x) chi_[x * x % p] = 1;
  }
  int operator()(std::uint64_t r) const { return chi_[r]; }
  std::uint64_t prime() const { return p_; }

 private:
  std::uint64_t p_;
  std::vector<signed char> chi_;
};

inline bool p_integral(const Rational& x, std::uint64_t p) { return x.den() % big_from_u64(p) != 0; }

inline std::uint64_t residue_mod_p(const Rational& x, std::uint64_t p) {
  return reduce_rational(x, p, 1).residue();
}

// Both families have good reduction exactly when λ ≢ 0, 1 mod p (λ p-integral).
// For E_λ the cubic (x−1)(x² − c), c = 1/(1−λ), has discriminant 4c(1−c)².
inline bool good_reduction(const CurveId& curve, std::uint64_t p) {
  if (p < 3 || !mod::is_prime(p)) return false;
  if (!p_integral(curve.lambda, p)) return false;
  std::uint64_t l = residue_mod_p(curve.lambda, p);
  return l != 0 && l != 1;
}

namespace detail {

inline void require_good(const CurveId& curve, std::uint64_t p) {
  require_odd_prime(p);
  if (!p_integral(curve.lambda, p)) {
    raise(Errc::NotPIntegral, curve.name() + " at p = " + std::to_string(p));
  }
  if (!good_reduction(curve, p)) raise(Errc::BadReduction, curve.name() + " at p = " + std::to_string(p));
}

inline std::int64_t character_sum(const CurveId& curve, std::uint64_t p, const CharacterTable& chi) {
  using mod::mulmod;
  const std::uint64_t l = residue_mod_p(curve.lambda, p);
  std::int64_t sum = 0;
  if (curve.family == Family::Legendre) {
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t f = mulmod(mulmod(x, (x + p - 1) % p, p), (x + p - l) % p, p);
      sum += chi(f);
    }
  } else {
    const std::uint64_t c = mod::invmod_or_zero((1 + p - l) % p, p);
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t f = mulmod((x + p - 1) % p, (mulmod(x, x, p) + p - c) % p, p);
      sum += chi(f);
    }
  }
  return sum;
}

}  // namespace detail

inline CurveLocalData count_points(const CurveId& curve, std::uint64_t p, int unit_root_precision = 0) {
  detail::require_good(curve, p);
  CharacterTable chi(p);
  CurveLocalData out;
  out.p = p;
  out.good_reduction = true;
  out.count = static_cast<std::int64_t>(p) + 1 + detail::character_sum(curve, p, chi);
  out.trace = static_cast<std::int64_t>(p) + 1 - out.count;
  if (out.trace * out.trace > 4 * static_cast<std::int64_t>(p)) {
    raise(Errc::InvalidArgument, "Hasse bound violated for " + curve.name());  // never expected
  }
  out.ordinary = out.trace % static_cast<std::int64_t>(p) != 0;
  if (unit_root_precision > 0 && out.ordinary) {
    out.unit_root = hensel_unit_root(out.trace, p, unit_root_precision);
  }
  return out;
}

// Unit root of Frobenius mod p^s; 0 at supersingular primes.
inline PadicInt unit_root(const CurveId& curve, std::uint64_t p, int s) {
  CurveLocalData d = count_points(curve, p);
  if (!d.ordinary) return PadicInt::zero(p, s);
  return hensel_unit_root(d.trace, p, s);
}

// A_p(λ) = (−1)^{(p−1)/2}·Σ_i binom((p−1)/2, i)²·λ^i mod p.
inline PadicInt hasse_invariant(const Rational& lambda, std::uint64_t p) {
  require_odd_prime(p);
  if (!p_integral(lambda, p)) raise(Errc::NotPIntegral, lambda.str());
  const std::uint64_t n = (p - 1) / 2;
  const std::uint64_t l = residue_mod_p(lambda, p);
  std::uint64_t binom = 1, lk = 1, sum = 0;
  for (std::uint64_t i = 0; i <= n; ++i) {
    sum = (sum + mod::mulmod(mod::mulmod(binom, binom, p), lk, p)) % p;
    // binom(n, i+1) = binom(n, i)·(n − i)/(i + 1); i + 1 ≤ n < p is invertible.
    binom = mod::mulmod(mod::mulmod(binom, (n - i) % p, p), mod::invmod_or_zero(i + 1, p), p);
    lk = mod::mulmod(lk, l, p);
  }
  if (n % 2 == 1) sum = (p - sum) % p;
  return PadicInt::from_residue(p, 1, sum);
}

inline constexpr std::uint64_t kAffineCountLimit = 1'100'000;

// Σ_{X∈F_p^r} (1 + χ(f(X))) mod p for
// f = X_1⋯X_r·(X_1−X_2)⋯(X_{r−1}−X_r)·(X_r − λX_1).
inline PadicInt affine_variety_count_mod_p(int r, const Rational& lambda, std::uint64_t p) {
  require_odd_prime(p);
  if (r != 2 && r != 3) raise(Errc::InvalidArgument, "r must be 2 or 3");
  if (!p_integral(lambda, p)) raise(Errc::NotPIntegral, lambda.str());
  std::uint64_t points = 1;
  for (int i = 0; i < r; ++i) {
    if (points > kAffineCountLimit / p) raise(Errc::TooLarge, "p^r beyond the affine count guard");
    points *= p;
  }
  CharacterTable chi(p);
  const std::uint64_t l = residue_mod_p(lambda, p);
  auto diff = [p](std::uint64_t a, std::uint64_t b) { return (a + p - b) % p; };
  std::int64_t sum = 0;
  if (r == 2) {
    for (std::uint64_t x1 = 0; x1 < p; ++x1) {
      const std::uint64_t lx1 = mod::mulmod(l, x1, p);
      for (std::uint64_t x2 = 0; x2 < p; ++x2) {
        std::uint64_t f = mod::mulmod(mod::mulmod(x1, x2, p), mod::mulmod(diff(x1, x2), diff(x2, lx1), p), p);
        sum += chi(f);
      }
    }
  } else {
    for (std::uint64_t x1 = 0; x1 < p; ++x1) {
      const std::uint64_t lx1 = mod::mulmod(l, x1, p);
      for (std::uint64_t x2 = 0; x2 < p; ++x2) {
        const std::uint64_t head = mod::mulmod(mod::mulmod(x1, x2, p), diff(x1, x2), p);
        for (std::uint64_t x3 = 0; x3 < p; ++x3) {
          std::uint64_t tail = mod::mulmod(mod::mulmod(x3, diff(x2, x3), p), diff(x3, lx1), p);
          sum += chi(mod::mulmod(head, tail, p));
        }
      }
    }
  }
  const std::int64_t total = static_cast<std::int64_t>(points % p) + sum;
  return PadicInt(p, 1, total);
}

// K3 trace through χ(1−λ)·(a_p(E_λ)² − p) mod p.
inline PadicInt k3_trace(const Rational& lambda, std::uint64_t p) {
  CurveLocalData d = count_points(CurveId::cm(lambda), p);
  const int chi = legendre_symbol(Rational(1) - lambda, p);
  return PadicInt(p, 1, chi * (d.trace * d.trace - static_cast<std::int64_t>(p)));
}

struct CmCatalogEntry {
  Rational lambda;
  std::string note;
  bool degenerate = false;
};

inline std::vector<CmCatalogEntry> cm_catalog() {
  return {
      {Rational(-8), "E_lambda has j = 1728", false},
      {Rational(1), "degenerate: E_lambda is not an elliptic curve", true},
      {Rational(-1, 8), "E_lambda has j = 287496", false},
      {Rational(4), "E_lambda has j = 0", false},
      {Rational(1, 4), "E_lambda has j = 54000", false},
      {Rational(64), "E_lambda has j = -3375", false},
      {Rational(1, 64), "E_lambda has j = 16581375", false},
      {Rational(-1), "E_lambda has j = 8000", false},
  };
}

// Catalog values with an honest elliptic curve behind them.
inline std::vector<Rational> cm_lambdas() {
  std::vector<Rational> out;
  for (const auto& e : cm_catalog()) {
    if (!e.degenerate) out.push_back(e.lambda);
  }
  return out;
}

inline Rational j_invariant(const CurveId& curve) {
  const Rational& l = curve.lambda;
  const Rational one(1);
  if (curve.family == Family::Legendre) {
    if (l.is_zero() || l == one) raise(Errc::DegenerateLambda, curve.name());
    Rational q = l * l - l + one;
    return Rational(256) * q * q * q / (l * l * (l - one) * (l - one));
  }
  if (l.is_zero() || l == one) raise(Errc::DegenerateLambda, curve.name());
  Rational c = one / (one - l);
  Rational q = one + Rational(3) * c;
  return Rational(64) * q * q * q / (c * (c - one) * (c - one));
}

struct CmJInvariant {
  long j;
  int field_d;  // CM by an order in Q(√−d)
};

// The thirteen rational j-invariants with complex multiplication.
inline const std::vector<CmJInvariant>& rational_cm_j_invariants() {
  static const std::vector<CmJInvariant> table = {
      {0, 3},        {54000, 3},     {-12288000, 3}, {1728, 1},     {287496, 1},
      {-3375, 7},    {16581375, 7},  {8000, 2},      {-32768, 11},  {-884736, 19},
      {-884736000, 43}, {-147197952000, 67},
  };
  return table;
}

inline std::optional<int> cm_field(const CurveId& curve) {
  Rational j = j_invariant(curve);
  if (!j.is_integer()) return std::nullopt;
  static const BigInt j163("-262537412640768000");
  if (j.num() == j163) return 163;
  for (const auto& e : rational_cm_j_invariants()) {
    if (j == Rational(e.j)) return e.field_d;
  }
  return std::nullopt;
}

inline bool has_cm(const CurveId& curve) { return cm_field(curve).has_value(); }

// The shifted model Y² = X(X² + A·X + B) of E_λ (x = X + 1).
struct ShiftedModel {
  Rational A;
  Rational B;
  Rational delta;  // A² − 4B = 4/(1−λ); A/√Δ = √(1−λ)
};

inline ShiftedModel shifted_model(const Rational& lambda) {
  if (lambda == Rational(1)) raise(Errc::DegenerateLambda, "lambda = 1");
  const Rational one(1);
  return {Rational(2), -lambda / (one - lambda), Rational(4) / (one - lambda)};
}

}  // namespace supercong::curves
