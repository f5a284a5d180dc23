#pragma once

#include <algorithm>
#include <cstdint>
#include <string>

#include "supercong/padic/arith.hpp"
#include "supercong/padic/padic_int.hpp"

namespace supercong {

// a + b·u in (Z/p^s)[u]/(u² − t) with t a non-residue mod p, so the ring is the
// unramified quadratic extension truncated at p^s.
class QuadExtElem {
 public:
  QuadExtElem(PadicInt a, PadicInt b, PadicInt t) : a_(a), b_(b), t_(t) {
    if (a_.prime() != b_.prime() || a_.prime() != t_.prime()) {
      raise(Errc::InvalidArgument, "mixed primes in quadratic extension");
    }
    if (legendre_symbol(static_cast<std::int64_t>(t_.residue() % t_.prime()), t_.prime()) != -1) {
      raise(Errc::InvalidArgument, "u^2 = t needs t to be a non-residue mod p");
    }
    int s = std::min({a_.precision(), b_.precision(), t_.precision()});
    a_ = a_.reduced(s);
    b_ = b_.reduced(s);
    t_ = t_.reduced(s);
  }

  static QuadExtElem embed(const PadicInt& a, const PadicInt& t) {
    return QuadExtElem(a, PadicInt::zero(a.prime(), a.precision()), t);
  }

  // Smallest positive non-residue mod p, used as the default t.
  static std::int64_t default_nonresidue(std::uint64_t p) {
    for (std::int64_t c = 2;; ++c) {
      if (legendre_symbol(c, p) == -1) return c;
    }
  }

  const PadicInt& a() const { return a_; }
  const PadicInt& b() const { return b_; }
  const PadicInt& t() const { return t_; }
  std::uint64_t prime() const { return a_.prime(); }
  int precision() const { return a_.precision(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  // min of the coordinate valuations, capped at the precision.
  int valuation() const { return std::min(a_.valuation(), b_.valuation()); }

  QuadExtElem conj() const { return QuadExtElem(a_, -b_, t_, Trusted{}); }
  PadicInt norm() const { return a_ * a_ - t_ * b_ * b_; }

  QuadExtElem inverse() const {
    PadicInt n = norm();
    if (!n.is_unit()) raise(Errc::NotInvertible, "norm is not a unit");
    PadicInt ni = n.inverse();
    return QuadExtElem(a_ * ni, -(b_ * ni), t_, Trusted{});
  }

  QuadExtElem pow(std::uint64_t e) const {
    QuadExtElem result = embed(PadicInt::one(prime(), precision()), t_);
    QuadExtElem base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  QuadExtElem operator-() const { return QuadExtElem(-a_, -b_, t_, Trusted{}); }

  friend QuadExtElem operator+(const QuadExtElem& x, const QuadExtElem& y) {
    return QuadExtElem(x.a_ + y.a_, x.b_ + y.b_, common_t(x, y), Trusted{});
  }
  friend QuadExtElem operator-(const QuadExtElem& x, const QuadExtElem& y) {
    return QuadExtElem(x.a_ - y.a_, x.b_ - y.b_, common_t(x, y), Trusted{});
  }
  friend QuadExtElem operator*(const QuadExtElem& x, const QuadExtElem& y) {
    PadicInt t = common_t(x, y);
    return QuadExtElem(x.a_ * y.a_ + t * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, t, Trusted{});
  }
  friend QuadExtElem operator*(const QuadExtElem& x, const PadicInt& k) {
    return QuadExtElem(x.a_ * k, x.b_ * k, x.t_, Trusted{});
  }
  friend QuadExtElem operator*(const PadicInt& k, const QuadExtElem& x) { return x * k; }
  friend QuadExtElem operator+(const QuadExtElem& x, const PadicInt& k) {
    return QuadExtElem(x.a_ + k, x.b_, x.t_, Trusted{});
  }
  friend QuadExtElem operator-(const QuadExtElem& x, const PadicInt& k) {
    return QuadExtElem(x.a_ - k, x.b_, x.t_, Trusted{});
  }

  friend bool operator==(const QuadExtElem& x, const QuadExtElem& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.t_ == y.t_;
  }
  friend bool operator!=(const QuadExtElem& x, const QuadExtElem& y) { return !(x == y); }

  std::string str() const {
    return std::to_string(a_.residue()) + " + " + std::to_string(b_.residue()) + "*u (u^2=" +
           std::to_string(t_.residue()) + ", mod " + std::to_string(prime()) + "^" +
           std::to_string(precision()) + ")";
  }

 private:
  struct Trusted {};
  QuadExtElem(PadicInt a, PadicInt b, PadicInt t, Trusted) : a_(a), b_(b), t_(t) {
    int s = std::min({a_.precision(), b_.precision(), t_.precision()});
    if (a_.precision() != s) a_ = a_.reduced(s);
    if (b_.precision() != s) b_ = b_.reduced(s);
    if (t_.precision() != s) t_ = t_.reduced(s);
  }

  static PadicInt common_t(const QuadExtElem& x, const QuadExtElem& y) {
    if (x.t_ != y.t_) raise(Errc::InvalidArgument, "quadratic extensions with different t");
    return x.t_.precision() <= y.t_.precision() ? x.t_ : y.t_;
  }

  PadicInt a_;
  PadicInt b_;
  PadicInt t_;
};

// Square root of a unit c in either Z/p^s (when c is a residue) or in the
// extension by √t (when it is not). Both results live in the extension ring.
inline QuadExtElem sqrt_in_extension(const PadicInt& c, const PadicInt& t) {
  if (!c.is_unit()) raise(Errc::NotAUnit, "square root of a non-unit");
  if (legendre_symbol(static_cast<std::int64_t>(c.residue() % c.prime()), c.prime()) == 1) {
    return QuadExtElem::embed(sqrt_unit(c), t);
  }
  // c = t·(c/t) with c/t a residue, so √c = √(c/t)·u.
  PadicInt w = sqrt_unit(c * t.inverse());
  return QuadExtElem(PadicInt::zero(c.prime(), c.precision()), w, t);
}

}  // namespace supercong
