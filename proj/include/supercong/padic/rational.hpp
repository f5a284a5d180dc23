#pragma once

// Exact rationals backed by GMP. mpq_class keeps values canonical (lowest
// terms, positive denominator) after every operation; the wrapper exists so
// the rest of the engine never touches gmpxx expression templates.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "supercong/errors.hpp"

namespace supercong {

using BigInt = mpz_class;

static_assert(sizeof(long) == 8, "64-bit long expected for GMP interop");

inline BigInt big_from_i64(std::int64_t v) { return BigInt(static_cast<long>(v)); }
inline BigInt big_from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Residue of a big integer modulo m (m ≥ 1), in [0, m).
inline std::uint64_t big_mod_u64(const BigInt& x, std::uint64_t m) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(m));
}

inline bool big_fits_i64(const BigInt& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

inline std::int64_t big_to_i64(const BigInt& x) {
  if (!big_fits_i64(x)) raise(Errc::TooLarge, "integer does not fit in 64 bits");
  return mpz_get_si(x.get_mpz_t());
}

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT: implicit integer promotion is intended
  Rational(int n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rational(long n, long d) {
    if (d == 0) raise(Errc::InvalidArgument, "zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) raise(Errc::InvalidArgument, "zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "n", "-n", "n/d" with decimal digits only; no whitespace, no floats.
  static Rational parse(std::string_view text) {
    std::size_t i = 0;
    auto read_int = [&](bool allow_sign) -> BigInt {
      bool neg = false;
      if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      std::size_t digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == digits) throw ParseError("expected digits in rational '" + std::string(text) + "'", i);
      BigInt v(std::string(text.substr(digits, i - digits)));
      return neg ? BigInt(-v) : v;
    };
    if (text.empty()) throw ParseError("empty rational", 0);
    BigInt num = read_int(true);
    BigInt den = 1;
    if (i < text.size() && text[i] == '/') {
      ++i;
      std::size_t den_pos = i;
      den = read_int(false);
      if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", den_pos);
    }
    if (i != text.size()) {
      throw ParseError("unexpected character in rational '" + std::string(text) + "'", i);
    }
    return Rational(num, den);
  }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) raise(Errc::InvalidArgument, "division by zero rational");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Integer powers; negative exponents invert (zero base with e < 0 is an error).
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) raise(Errc::InvalidArgument, "zero to a negative power");
      return Rational(1) / pow(-e);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

}  // namespace supercong
