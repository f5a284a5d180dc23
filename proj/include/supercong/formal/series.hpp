#pragma once

// Power series over Q truncated at an explicit degree cap. Every operation
// returns a series whose cap is the minimum of its inputs' caps.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::formal {

class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t cap) : c_(cap + 1, Rational(0)) {}
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t cap) : c_(std::move(coeffs)) {
    c_.resize(cap + 1, Rational(0));
  }

  static TruncatedSeries identity(std::size_t cap) {
    TruncatedSeries x(cap);
    if (cap >= 1) x.c_[1] = Rational(1);
    return x;
  }
  static TruncatedSeries constant(const Rational& a, std::size_t cap) {
    TruncatedSeries x(cap);
    x.c_[0] = a;
    return x;
  }

  std::size_t cap() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return c_.at(n); }
  Rational coefficient(std::size_t n) const { return n <= cap() ? c_[n] : Rational(0); }
  void set(std::size_t n, const Rational& v) {
    if (n > cap()) raise(Errc::IndexOutOfRange, "coefficient beyond the cap");
    c_[n] = v;
  }
  const std::vector<Rational>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t cap) const {
    return TruncatedSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(std::min(cap, this->cap()) + 1)),
                           std::min(cap, this->cap()));
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.cap() == b.cap() && a.c_ == b.c_;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i <= cap(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].str() + ")x^" + std::to_string(i);
    }
    return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(cap() + 1) + ")";
  }

 private:
  std::vector<Rational> c_;
};

inline TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t N = std::min(f.cap(), g.cap());
  TruncatedSeries out(N);
  for (std::size_t i = 0; i <= N; ++i) out.set(i, f[i] + g[i]);
  return out;
}

inline TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t N = std::min(f.cap(), g.cap());
  TruncatedSeries out(N);
  for (std::size_t i = 0; i <= N; ++i) out.set(i, f[i] - g[i]);
  return out;
}

inline TruncatedSeries series_scale(const TruncatedSeries& f, const Rational& a) {
  TruncatedSeries out(f.cap());
  for (std::size_t i = 0; i <= f.cap(); ++i) out.set(i, f[i] * a);
  return out;
}

inline TruncatedSeries series_multiply(const TruncatedSeries& f, const TruncatedSeries& g) {
  const std::size_t N = std::min(f.cap(), g.cap());
  std::vector<Rational> c(N + 1, Rational(0));
  for (std::size_t i = 0; i <= N; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= N; ++j) {
      if (!g[j].is_zero()) c[i + j] += f[i] * g[j];
    }
  }
  return TruncatedSeries(std::move(c), N);
}

// f(g(x)) by Horner's rule; g must have zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!g[0].is_zero()) raise(Errc::CompositionAtUnit, "inner series has nonzero constant term");
  const std::size_t N = std::min(f.cap(), g.cap());
  TruncatedSeries acc = TruncatedSeries::constant(f[N], N);
  for (std::size_t i = N; i-- > 0;) {
    acc = series_multiply(acc, g);
    acc.set(0, acc[0] + f[i]);
  }
  return acc;
}

// f′; the cap drops by one.
inline TruncatedSeries series_derivative(const TruncatedSeries& f) {
  const std::size_t N = f.cap() == 0 ? 0 : f.cap() - 1;
  TruncatedSeries out(N);
  for (std::size_t i = 1; i <= f.cap(); ++i) out.set(i - 1, f[i] * Rational(static_cast<long>(i)));
  return out;
}

// 1/f for f(0) ≠ 0.
inline TruncatedSeries series_reciprocal(const TruncatedSeries& f) {
  if (f[0].is_zero()) raise(Errc::NotReversible, "reciprocal of a series with zero constant term");
  const std::size_t N = f.cap();
  TruncatedSeries g(N);
  const Rational inv0 = Rational(1) / f[0];
  g.set(0, inv0);
  for (std::size_t n = 1; n <= N; ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += f[k] * g[n - k];
    g.set(n, -acc * inv0);
  }
  return g;
}

namespace detail {

inline void require_reversible(const TruncatedSeries& f) {
  if (!f[0].is_zero()) raise(Errc::CompositionAtUnit, "series to revert has nonzero constant term");
  if (f.cap() < 1 || f[1].is_zero()) raise(Errc::NotReversible, "linear coefficient is zero");
}

}  // namespace detail

// Compositional inverse by Newton iteration g ← g − (f∘g − x)/(f′∘g); the
// number of correct coefficients doubles per round.
inline TruncatedSeries series_reversion(const TruncatedSeries& f) {
  detail::require_reversible(f);
  const std::size_t N = f.cap();
  TruncatedSeries g = series_scale(TruncatedSeries::identity(N), Rational(1) / f[1]);
  const TruncatedSeries df = series_derivative(f);
  const TruncatedSeries x = TruncatedSeries::identity(N);
  for (std::size_t correct = 1; correct < N; correct *= 2) {
    TruncatedSeries residual = series_sub(series_compose(f, g), x);
    TruncatedSeries slope(N);
    TruncatedSeries dfg = series_compose(df, g.truncated(df.cap()));
    for (std::size_t i = 0; i <= dfg.cap(); ++i) slope.set(i, dfg[i]);
    g = series_sub(g, series_multiply(residual, series_reciprocal(slope)));
  }
  return g;
}

// Independent route: solve [x^n] f(g) = 0 for g_n one degree at a time.
inline TruncatedSeries series_reversion_triangular(const TruncatedSeries& f) {
  detail::require_reversible(f);
  const std::size_t N = f.cap();
  TruncatedSeries g(N);
  g.set(1, Rational(1) / f[1]);
  for (std::size_t n = 2; n <= N; ++n) {
    Rational cn = series_compose(f, g).coefficient(n);
    g.set(n, -cn / f[1]);
  }
  return g;
}

}  // namespace supercong::formal
