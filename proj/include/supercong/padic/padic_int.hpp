#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/padic/modular.hpp"

namespace supercong {

// An element of Z/p^s carried with its (p, s). Binary operations on operands of
// different precision reduce to the smaller one.
class PadicInt {
 public:
  using u64 = std::uint64_t;
  using i64 = std::int64_t;

  PadicInt(u64 p, int precision, i64 value)
      : p_(p), s_(precision), m_(mod::checked_prime_power(p, precision)),
        r_(mod::reduce_signed(value, m_)) {}

  static PadicInt from_residue(u64 p, int precision, u64 residue) {
    PadicInt out(p, precision, 0);
    out.r_ = residue % out.m_;
    return out;
  }

  static PadicInt zero(u64 p, int precision) { return PadicInt(p, precision, 0); }
  static PadicInt one(u64 p, int precision) { return PadicInt(p, precision, 1); }

  u64 prime() const { return p_; }
  int precision() const { return s_; }
  u64 modulus() const { return m_; }
  u64 residue() const { return r_; }

  // Symmetric representative in (−m/2, m/2].
  i64 centered() const {
    return r_ > m_ / 2 ? -static_cast<i64>(m_ - r_) : static_cast<i64>(r_);
  }

  bool is_zero() const { return r_ == 0; }
  bool is_unit() const { return r_ % p_ != 0; }

  // Valuation of the residue, capped at the precision when the residue is 0.
  int valuation() const {
    if (r_ == 0) return s_;
    u64 x = r_;
    return mod::strip(x, p_);
  }

  PadicInt reduced(int s) const {
    if (s > s_) raise(Errc::PrecisionLoss, "cannot raise precision of a residue");
    return from_residue(p_, s, r_);
  }

  PadicInt inverse() const {
    u64 inv = mod::invmod_or_zero(r_, m_);
    if (inv == 0) raise(Errc::NotInvertible, std::to_string(r_) + " mod " + std::to_string(m_));
    return from_residue(p_, s_, inv);
  }

  PadicInt pow(u64 e) const { return from_residue(p_, s_, mod::powmod(r_, e, m_)); }

  PadicInt operator-() const { return from_residue(p_, s_, r_ == 0 ? 0 : m_ - r_); }

  friend PadicInt operator+(const PadicInt& a, const PadicInt& b) {
    auto [x, y] = align(a, b);
    return from_residue(x.p_, x.s_, mod::addmod(x.r_, y.r_, x.m_));
  }
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b) {
    auto [x, y] = align(a, b);
    return from_residue(x.p_, x.s_, mod::submod(x.r_, y.r_, x.m_));
  }
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b) {
    auto [x, y] = align(a, b);
    return from_residue(x.p_, x.s_, mod::mulmod(x.r_, y.r_, x.m_));
  }
  friend PadicInt operator*(const PadicInt& a, i64 k) {
    return from_residue(a.p_, a.s_, mod::mulmod(a.r_, mod::reduce_signed(k, a.m_), a.m_));
  }
  friend PadicInt operator*(i64 k, const PadicInt& a) { return a * k; }
  friend PadicInt operator+(const PadicInt& a, i64 k) { return a + PadicInt(a.p_, a.s_, k); }
  friend PadicInt operator-(const PadicInt& a, i64 k) { return a - PadicInt(a.p_, a.s_, k); }

  PadicInt& operator+=(const PadicInt& o) { return *this = *this + o; }
  PadicInt& operator-=(const PadicInt& o) { return *this = *this - o; }
  PadicInt& operator*=(const PadicInt& o) { return *this = *this * o; }

  // Equality compares the residues at the common (minimum) precision.
  friend bool operator==(const PadicInt& a, const PadicInt& b) {
    auto [x, y] = align(a, b);
    return x.r_ == y.r_;
  }
  friend bool operator!=(const PadicInt& a, const PadicInt& b) { return !(a == b); }
  friend bool operator==(const PadicInt& a, i64 k) { return a.r_ == mod::reduce_signed(k, a.m_); }
  friend bool operator!=(const PadicInt& a, i64 k) { return !(a == k); }

  std::string str() const {
    return std::to_string(r_) + " (mod " + std::to_string(p_) + "^" + std::to_string(s_) + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const PadicInt& x) { return os << x.str(); }

 private:
  static std::pair<PadicInt, PadicInt> align(const PadicInt& a, const PadicInt& b) {
    if (a.p_ != b.p_) raise(Errc::InvalidArgument, "mixed primes in p-adic arithmetic");
    if (a.s_ == b.s_) return {a, b};
    int s = std::min(a.s_, b.s_);
    return {a.s_ == s ? a : a.reduced(s), b.s_ == s ? b : b.reduced(s)};
  }

  u64 p_;
  int s_;
  u64 m_;
  u64 r_;
};

}  // namespace supercong
