#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "supercong/errors.hpp"
#include "supercong/padic/arith.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong {

enum class Outcome { Pass, Fail, Skipped };

// What a failure would mean: Theorem and Classical failures are bugs (nonzero
// exit), Conjecture failures are evidence.
enum class Backing { Theorem, Classical, Conjecture };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "?";
}

inline std::string_view to_string(Backing b) {
  switch (b) {
    case Backing::Theorem: return "theorem";
    case Backing::Classical: return "classical";
    case Backing::Conjecture: return "conjecture";
  }
  return "?";
}

struct CheckParams {
  std::optional<Rational> lambda;
  std::uint64_t p = 0;
  std::optional<long> m;
  std::optional<long> s;
  std::optional<long> r;
  std::optional<long> k;
  std::optional<long> n;

  // Canonical text key; absent fields print as "-".
  std::string key() const {
    auto opt = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("-"); };
    return (lambda ? lambda->str() : std::string("-")) + "|" + std::to_string(p) + "|" + opt(m) +
           "|" + opt(s) + "|" + opt(r) + "|" + opt(k) + "|" + opt(n);
  }

  friend bool operator==(const CheckParams& a, const CheckParams& b) {
    return a.lambda == b.lambda && a.p == b.p && a.m == b.m && a.s == b.s && a.r == b.r &&
           a.k == b.k && a.n == b.n;
  }
};

// Observed defect valuation. `lower_bound` marks a difference that vanished at
// the working precision, so only "≥ value" is known.
struct Observed {
  ValuationResult value;
  bool lower_bound = false;

  std::string str() const { return (lower_bound ? ">=" : "") + value.str(); }

  friend bool operator==(const Observed& a, const Observed& b) {
    return a.value == b.value && a.lower_bound == b.lower_bound;
  }
};

// Defect of a residue computed at its own precision.
inline Observed observed_from_residue(int valuation_capped, int precision) {
  return Observed{ValuationResult::of(valuation_capped), valuation_capped >= precision};
}

inline Observed observed_exact(const Rational& difference, std::uint64_t p) {
  return Observed{valuation(difference, p), false};
}

class CongruenceReport {
 public:
  // pass is derived here and nowhere else: observed ≥ claimed.
  static CongruenceReport measured(std::string checker, CheckParams params, Backing backing,
                                   ValuationResult claimed, Observed observed,
                                   std::string note = {}) {
    CongruenceReport r(std::move(checker), std::move(params), backing);
    r.claimed_ = claimed;
    r.observed_ = observed;
    r.outcome_ = observed.value >= claimed ? Outcome::Pass : Outcome::Fail;
    r.note_ = std::move(note);
    return r;
  }

  static CongruenceReport measured(std::string checker, CheckParams params, Backing backing,
                                   long claimed, Observed observed, std::string note = {}) {
    return measured(std::move(checker), std::move(params), backing, ValuationResult::of(claimed),
                    observed, std::move(note));
  }

  static CongruenceReport skipped(std::string checker, CheckParams params, Backing backing,
                                  Errc reason, std::string note = {}) {
    CongruenceReport r(std::move(checker), std::move(params), backing);
    r.outcome_ = Outcome::Skipped;
    r.skipped_reason_ = reason;
    r.note_ = std::move(note);
    return r;
  }

  // A measurement that could not be completed (e.g. no fourth root of unity
  // matched): observed 0 against claimed ≥ 1, plus a reason.
  static CongruenceReport failed(std::string checker, CheckParams params, Backing backing,
                                 long claimed, Errc reason, std::string note = {}) {
    if (claimed < 1) raise(Errc::InvalidArgument, "a failed measurement needs claimed >= 1");
    CongruenceReport r = measured(std::move(checker), std::move(params), backing, claimed,
                                  Observed{ValuationResult::of(0), false}, std::move(note));
    r.skipped_reason_ = reason;
    return r;
  }

  // Rebuilds a stored record; the outcome is recomputed, never trusted.
  static CongruenceReport restore(std::string checker, CheckParams params, Backing backing,
                                  std::optional<ValuationResult> claimed,
                                  std::optional<Observed> observed, std::optional<Errc> reason,
                                  std::string note) {
    if (!claimed || !observed) {
      if (!reason) raise(Errc::InvalidArgument, "record has neither a measurement nor a reason");
      return skipped(std::move(checker), std::move(params), backing, *reason, std::move(note));
    }
    CongruenceReport r = measured(std::move(checker), std::move(params), backing, *claimed,
                                  *observed, std::move(note));
    r.skipped_reason_ = reason;
    return r;
  }

  const std::string& checker() const { return checker_; }
  const CheckParams& params() const { return params_; }
  Backing backing() const { return backing_; }
  Outcome outcome() const { return outcome_; }
  bool pass() const { return outcome_ == Outcome::Pass; }
  bool failed() const { return outcome_ == Outcome::Fail; }
  bool skipped() const { return outcome_ == Outcome::Skipped; }
  const std::optional<ValuationResult>& claimed() const { return claimed_; }
  const std::optional<Observed>& observed() const { return observed_; }
  const std::optional<Errc>& reason() const { return skipped_reason_; }
  const std::string& note() const { return note_; }

  std::string key() const { return checker_ + "|" + params_.key(); }

  std::string summary() const {
    std::string out = checker_ + " [" + params_.key() + "] " + std::string(to_string(outcome_));
    if (claimed_) out += " claimed=" + claimed_->str();
    if (observed_) out += " observed=" + observed_->str();
    if (skipped_reason_) out += " reason=" + std::string(to_string(*skipped_reason_));
    if (!note_.empty()) out += " (" + note_ + ")";
    return out;
  }

 private:
  CongruenceReport(std::string checker, CheckParams params, Backing backing)
      : checker_(std::move(checker)), params_(std::move(params)), backing_(backing) {}

  std::string checker_;
  CheckParams params_;
  Backing backing_;
  Outcome outcome_ = Outcome::Skipped;
  std::optional<ValuationResult> claimed_;
  std::optional<Observed> observed_;
  std::optional<Errc> skipped_reason_;
  std::string note_;
};

}  // namespace supercong
