#pragma once

// Every checker under a stable name, with the parameter grid a ScanSpec
// expands to for it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "supercong/curves/curves.hpp"
#include "supercong/harness/scan_spec.hpp"
#include "supercong/hyper/eta.hpp"
#include "supercong/hyper/sequences.hpp"
#include "supercong/lab/apery.hpp"
#include "supercong/lab/dwork.hpp"
#include "supercong/lab/elliptic.hpp"
#include "supercong/lab/k3.hpp"
#include "supercong/report.hpp"

namespace supercong::harness {

using Grid = std::function<std::vector<CheckParams>(const ScanSpec&)>;
using Runner = std::function<CongruenceReport(const CheckParams&, const lab::CheckOptions&)>;

struct CheckerInfo {
  std::string name;
  Backing backing;
  std::string summary;
  Grid grid;
  Runner run;
};

// Largest q-expansion index the Hecke checkers will expand to.
inline constexpr std::uint64_t kHeckeCoefficientLimit = 4096;

namespace detail {

inline std::vector<Rational> lambdas_or_catalog(const ScanSpec& spec) {
  return spec.lambdas.empty() ? curves::cm_lambdas() : spec.lambdas;
}

inline std::vector<CheckParams> grid_lambda_p(const ScanSpec& spec) {
  std::vector<CheckParams> out;
  for (const auto& l : lambdas_or_catalog(spec)) {
    for (auto p : spec.primes()) out.push_back(lab::params_lps(l, p));
  }
  return out;
}

inline Grid grid_lambda_p_ms(bool odd_m_only, long s_min, bool with_r = false) {
  return [=](const ScanSpec& spec) {
    std::vector<CheckParams> out;
    std::vector<long> rs{0};
    if (with_r) rs.assign(spec.rs.begin(), spec.rs.end());
    for (long r : rs) {
      for (const auto& l : lambdas_or_catalog(spec)) {
        for (auto p : spec.primes()) {
          for (long m : spec.ms) {
            if (m < 1 || (odd_m_only && m % 2 == 0)) continue;
            for (long s = s_min; s <= spec.s_max; ++s) {
              out.push_back(lab::params_lps(l, p, m, s, with_r ? std::optional<long>(r) : std::nullopt));
            }
          }
        }
      }
    }
    return out;
  };
}

inline std::vector<CheckParams> grid_p(const ScanSpec& spec) {
  std::vector<CheckParams> out;
  for (auto p : spec.primes()) {
    CheckParams c;
    c.p = p;
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckParams> grid_p_ms(const ScanSpec& spec) {
  std::vector<CheckParams> out;
  for (auto p : spec.primes()) {
    for (long m : spec.ms) {
      if (m < 1) continue;
      for (long s = 1; s <= spec.s_max; ++s) {
        CheckParams c;
        c.p = p;
        c.m = m;
        c.s = s;
        out.push_back(c);
      }
    }
  }
  return out;
}

struct HeckeForm {
  const char* name;
  hyper::EtaProductSpec (*spec)();
  int weight;
  std::uint64_t level;
  std::int64_t character_disc;  // nebentypus (D/·); 1 for the trivial character
};

inline CongruenceReport run_hecke(const HeckeForm& form, const CheckParams& c) {
  const std::uint64_t p = c.p;
  const std::uint64_t hi = lab::m_p_pow(*c.m, p, *c.s + 1);
  CheckParams keyed = c;
  keyed.k = form.weight;
  if (form.level % p == 0) return CongruenceReport::skipped(form.name, keyed, Backing::Classical, Errc::BadReduction);
  if (hi > kHeckeCoefficientLimit) {
    return CongruenceReport::skipped(form.name, keyed, Backing::Classical, Errc::TooLarge, "index beyond the q-expansion cap");
  }
  auto table = lab::detail::eta_table(form.spec(), hi);
  const std::int64_t a_p = big_to_i64((*table)[p]);
  const int chi = form.character_disc == 1 ? 1 : legendre_symbol(form.character_disc, p);
  return lab::hecke_recursion_check(*table, a_p, p, *c.m, *c.s, form.weight, form.name, chi);
}

}  // namespace detail

inline const std::vector<CheckerInfo>& registry() {
  using lab::CheckOptions;
  static const std::vector<CheckerInfo> table = [] {
    std::vector<CheckerInfo> t;
    auto L = [](const CheckParams& c) { return *c.lambda; };
    auto I = [](const std::optional<long>& x) { return static_cast<int>(*x); };

    t.push_back({"asd", Backing::Theorem, "three-term ASD congruence for L_lambda, mod p^(s+1)",
                 detail::grid_lambda_p_ms(false, 1),
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::asd_check(L(c), c.p, *c.m, *c.s, o); }});
    for (bool plus : {false, true}) {
      t.push_back({plus ? "twofone_plus" : "twofone_minus", Backing::Theorem,
                   "2F1 ratio congruence with (-1/p) times the unit root of L_lambda, mod p^s",
                   detail::grid_lambda_p_ms(true, 1), [=](const CheckParams& c, const CheckOptions& o) {
                     return lab::twofone_ratio_check(L(c), c.p, *c.m, *c.s, plus, o);
                   }});
      t.push_back({plus ? "squared_2f1_plus" : "squared_2f1_minus", Backing::Theorem,
                   "doubled-strength 2F1 ratio congruence, mod p^(2s) when L_lambda has CM",
                   detail::grid_lambda_p_ms(true, 1), [=](const CheckParams& c, const CheckOptions& o) {
                     return lab::squared_2f1_supercong_check(L(c), c.p, *c.m, *c.s, plus, o);
                   }});
    }
    t.push_back({"squared_display", Backing::Theorem, "binom(2k,k)^2 (lambda/16)^k sum against the (-lambda) binomial sum, mod p^2",
                 detail::grid_lambda_p,
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::squared_display_check(L(c), c.p, o); }});
    t.push_back({"cvh", Backing::Theorem, "Legendre polynomial ratio at sqrt(1-lambda) with empirical epsilon, mod p^(2s)",
                 detail::grid_lambda_p_ms(true, 1),
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::cvh_check(L(c), c.p, *c.m, *c.s, o); }});
    t.push_back({"prop_3f2", Backing::Theorem, "3F2(1/2,-K,K+1;1,1;lambda) ratio congruence, mod p^(2s)",
                 detail::grid_lambda_p_ms(true, 1),
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::prop_3f2_check(L(c), c.p, *c.m, *c.s, o); }});
    t.push_back({"theorem12", Backing::Theorem, "F_3(lambda)_{(p-1)/2} against ((1-lambda)/p) alpha^2, mod p^2",
                 detail::grid_lambda_p,
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::theorem12_check(L(c), c.p, o); }});
    t.push_back({"sun_target", Backing::Theorem, "theorem12 read against 4a^2-2p and eta-product coefficients",
                 detail::grid_lambda_p,
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::sun_target_check(L(c), c.p, o); }});
    t.push_back({"theorem11", Backing::Theorem, "F_3 ratio congruence at ordinary primes, mod p^s",
                 detail::grid_lambda_p_ms(true, 1),
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::theorem11_k3_check(L(c), c.p, *c.m, *c.s, o); }});
    t.push_back({"conjecture33", Backing::Conjecture, "F_3 ratio congruence for CM lambda, mod p^(2s)",
                 detail::grid_lambda_p_ms(true, 1),
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::conjecture33_check(L(c), c.p, *c.m, *c.s, o); }});
    t.push_back({"dwork_ratio", Backing::Theorem, "F_r ratio limit alpha, mod p^(s-d_m)", detail::grid_lambda_p_ms(true, 1, true),
                 [=](const CheckParams& c, const CheckOptions& o) {
                   return lab::dwork_ratio_check(I(c.r), L(c), c.p, *c.m, *c.s, o);
                 }});
    t.push_back({"eq1", Backing::Theorem, "full-sum ratio F_r(lambda)_{mp^s-1} / F_r(lambda^p)_{mp^(s-1)-1}, mod p^s",
                 detail::grid_lambda_p_ms(false, 1, true), [=](const CheckParams& c, const CheckOptions& o) {
                   return lab::eq1_dwork_fullsum_check(I(c.r), L(c), c.p, *c.m, *c.s, o);
                 }});
    t.push_back({"lemma41", Backing::Theorem, "telescoping congruence for the auxiliary sequence, mod p^2",
                 [](const ScanSpec& spec) {
                   std::vector<CheckParams> out;
                   for (const auto& l : detail::lambdas_or_catalog(spec)) {
                     for (auto p : spec.primes()) {
                       for (std::uint64_t k = (p - 1) / 2; k < p; ++k) {
                         for (long n = 0; n <= spec.s_max; ++n) {
                           CheckParams c = lab::params_lps(l, p);
                           c.k = static_cast<long>(k);
                           c.n = n;
                           out.push_back(c);
                         }
                       }
                     }
                   }
                   return out;
                 },
                 [=](const CheckParams& c, const CheckOptions&) {
                   return lab::lemma41_check(L(c), c.p, static_cast<std::uint64_t>(*c.k), static_cast<std::uint64_t>(*c.n));
                 }});
    t.push_back({"corollary13", Backing::Theorem, "harmonic-weighted binom(2i,i)^3 (lambda/64)^i sum, mod p",
                 detail::grid_lambda_p,
                 [=](const CheckParams& c, const CheckOptions& o) { return lab::corollary13_check(L(c), c.p, o); }});
    t.push_back({"corollary14", Backing::Theorem, "sum of binom(2i,i)^3 (H_2i - H_i), mod p", detail::grid_p,
                 [](const CheckParams& c, const CheckOptions& o) { return lab::corollary14_check(c.p, o); }});
    t.push_back({"beukers", Backing::Theorem, "Apery number c_{(p-1)/2} against eta(2z)^4 eta(4z)^4, mod p^2", detail::grid_p,
                 [](const CheckParams& c, const CheckOptions& o) { return lab::beukers_kilbourn_check(c.p, 2, o); }});
    t.push_back({"kilbourn", Backing::Theorem, "F_4(1)_{(p-1)/2} against eta(2z)^4 eta(4z)^4, mod p^3", detail::grid_p,
                 [](const CheckParams& c, const CheckOptions& o) { return lab::beukers_kilbourn_check(c.p, 3, o); }});
    t.push_back({"deuring", Backing::Classical, "affine point count against F_r(lambda) truncations, mod p",
                 [](const ScanSpec& spec) {
                   std::vector<CheckParams> out;
                   for (int r : spec.rs) {
                     if (r != 2 && r != 3) continue;
                     for (const auto& l : detail::lambdas_or_catalog(spec)) {
                       for (auto p : spec.primes()) out.push_back(lab::params_lps(l, p, std::nullopt, std::nullopt, r));
                     }
                   }
                   return out;
                 },
                 [=](const CheckParams& c, const CheckOptions&) { return lab::deuring_check(I(c.r), L(c), c.p); }});
    t.push_back({"binom_half", Backing::Classical, "binom((p-1)/2+k, 2k) against (-16)^(-k) binom(2k,k), mod p^2",
                 [](const ScanSpec& spec) {
                   std::vector<CheckParams> out;
                   for (auto p : spec.primes()) {
                     for (std::uint64_t k = 0; k <= (p - 1) / 2; ++k) {
                       CheckParams c;
                       c.p = p;
                       c.k = static_cast<long>(k);
                       out.push_back(c);
                     }
                   }
                   return out;
                 },
                 [](const CheckParams& c, const CheckOptions&) {
                   return hyper::binom_half_congruence(static_cast<std::uint64_t>(*c.k), c.p);
                 }});
    static const detail::HeckeForm forms[] = {
        {"hecke_eta4z6", &hyper::EtaProductSpec::eta4z_6, 3, 16, -4},
        {"hecke_eta_z3_7z3", &hyper::EtaProductSpec::eta_z3_7z3, 3, 7, -7},
        {"hecke_eta2z4_4z4", &hyper::EtaProductSpec::eta2z4_4z4, 4, 8, 1},
    };
    for (const auto& form : forms) {
      t.push_back({form.name, Backing::Classical, "exact Hecke recursion on eta-product coefficients", detail::grid_p_ms,
                   [&form](const CheckParams& c, const CheckOptions&) { return detail::run_hecke(form, c); }});
    }
    return t;
  }();
  return table;
}

inline const CheckerInfo* find_checker(const std::string& name) {
  for (const auto& c : registry()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

// Runs one task; arithmetic errors raised for a grid point become skips.
inline CongruenceReport run_task(const CheckerInfo& info, const CheckParams& params, const lab::CheckOptions& opt) {
  try {
    return info.run(params, opt);
  } catch (const ArithmeticError& e) {
    return CongruenceReport::skipped(info.name, params, info.backing, e.code(), e.what());
  }
}

}  // namespace supercong::harness
