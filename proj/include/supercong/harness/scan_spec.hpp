#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/curves/curves.hpp"
#include "supercong/errors.hpp"
#include "supercong/padic/modular.hpp"
#include "supercong/padic/rational.hpp"

namespace supercong::harness {

struct ScanSpec {
  std::vector<std::string> checkers;  // or {"all"}
  std::vector<Rational> lambdas;
  std::uint64_t p_min = 3;
  std::uint64_t p_max = 50;
  std::vector<long> ms{1};
  long s_max = 1;
  std::vector<int> rs{2, 3};
  std::optional<int> guard;  // extra digits beyond each claim
  unsigned workers = 1;

  // Odd primes in [p_min, p_max].
  std::vector<std::uint64_t> primes() const { return mod::odd_primes_between(p_min, p_max); }
};

namespace detail {

inline std::uint64_t parse_u64(std::string_view text, std::size_t offset, std::size_t& i) {
  const std::size_t start = i;
  std::uint64_t v = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    const std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
    if (v > (UINT64_MAX - digit) / 10) throw ParseError("integer overflow", offset + start);
    v = v * 10 + digit;
    ++i;
  }
  if (i == start) throw ParseError("expected digits", offset + i);
  return v;
}

}  // namespace detail

// "A..B" or a single "P". An empty range (A > B) is allowed and scans nothing.
inline std::pair<std::uint64_t, std::uint64_t> parse_prime_range(std::string_view text) {
  std::size_t i = 0;
  const std::uint64_t lo = detail::parse_u64(text, 0, i);
  if (i == text.size()) return {lo, lo};
  if (text.substr(i, 2) != "..") throw ParseError("expected '..' in prime range", i);
  i += 2;
  const std::uint64_t hi = detail::parse_u64(text, 0, i);
  if (i != text.size()) throw ParseError("trailing characters in prime range", i);
  if (hi >= (std::uint64_t{1} << 32)) throw ParseError("prime range too large", 0);
  return {lo, hi};
}

// Comma-separated exact rationals, or "cm-catalog".
inline std::vector<Rational> parse_lambda_list(std::string_view text) {
  if (text == "cm-catalog") return curves::cm_lambdas();
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw ParseError("bad lambda '" + std::string(item) + "'", start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Comma-separated integers, e.g. "1,3".
inline std::vector<long> parse_int_list(std::string_view text) {
  std::vector<long> out;
  std::size_t i = 0;
  while (true) {
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    const std::uint64_t v = detail::parse_u64(text, 0, i);
    if (v > (std::uint64_t{1} << 40)) throw ParseError("integer too large", i);
    out.push_back(neg ? -static_cast<long>(v) : static_cast<long>(v));
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return out;
}

}  // namespace supercong::harness
