#pragma once

// Append-only result store: one record per line as space-separated key=value
// fields, values percent-escaped, absent fields omitted. The last line for a
// record key wins.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/report.hpp"

namespace supercong::harness {

inline constexpr const char* kEngineVersion = "1.0.0";

struct ResultRecord {
  CongruenceReport report;
  std::string engine = kEngineVersion;
  std::string timestamp;

  std::string key() const { return report.key(); }
};

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string escape_field(std::string_view v) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : v) {
    if (c == '%' || c == '=' || c == ' ' || c == ',' || c < 0x20 || c == 0x7f) {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

inline std::optional<std::string> unescape_field(std::string_view v) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
  };
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != '%') {
      out += v[i];
      continue;
    }
    if (i + 2 >= v.size()) return std::nullopt;
    const int hi = nibble(v[i + 1]), lo = nibble(v[i + 2]);
    if (hi < 0 || lo < 0) return std::nullopt;
    out += static_cast<char>(hi * 16 + lo);
    i += 2;
  }
  return out;
}

inline std::string encode_record(const ResultRecord& rec) {
  const CongruenceReport& r = rec.report;
  const CheckParams& c = r.params();
  std::vector<std::pair<std::string, std::string>> f;
  f.emplace_back("checker", r.checker());
  if (c.lambda) f.emplace_back("lambda", c.lambda->str());
  f.emplace_back("p", std::to_string(c.p));
  if (c.m) f.emplace_back("m", std::to_string(*c.m));
  if (c.s) f.emplace_back("s", std::to_string(*c.s));
  if (c.r) f.emplace_back("r", std::to_string(*c.r));
  if (c.k) f.emplace_back("k", std::to_string(*c.k));
  if (c.n) f.emplace_back("n", std::to_string(*c.n));
  f.emplace_back("backing", std::string(to_string(r.backing())));
  f.emplace_back("outcome", std::string(to_string(r.outcome())));
  if (r.claimed()) f.emplace_back("claimed", r.claimed()->str());
  if (r.observed()) f.emplace_back("observed", r.observed()->str());
  if (r.reason()) f.emplace_back("reason", std::string(to_string(*r.reason())));
  if (!r.note().empty()) f.emplace_back("note", r.note());
  f.emplace_back("engine", rec.engine);
  if (!rec.timestamp.empty()) f.emplace_back("timestamp", rec.timestamp);
  std::string line;
  for (const auto& [k, v] : f) {
    if (!line.empty()) line += ' ';
    line += k + "=" + escape_field(v);
  }
  return line;
}

namespace detail {

inline std::optional<long> parse_long(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t used = 0;
  try {
    long v = std::stol(s, &used);
    if (used != s.size()) return std::nullopt;
    return v;
  } catch (...) {
    return std::nullopt;
  }
}

inline std::optional<ValuationResult> parse_valuation(const std::string& s) {
  if (s == "inf") return ValuationResult::infinity();
  auto v = parse_long(s);
  if (!v) return std::nullopt;
  return ValuationResult::of(*v);
}

inline std::optional<Backing> parse_backing(const std::string& s) {
  for (Backing b : {Backing::Theorem, Backing::Classical, Backing::Conjecture}) {
    if (to_string(b) == s) return b;
  }
  return std::nullopt;
}

}  // namespace detail

// nullopt for a line that is not a well-formed record, including one whose
// stored outcome disagrees with its claimed/observed fields.
inline std::optional<ResultRecord> decode_record(std::string_view line) {
  std::map<std::string, std::string> f;
  std::size_t i = 0;
  while (i < line.size()) {
    std::size_t end = line.find(' ', i);
    if (end == std::string_view::npos) end = line.size();
    const std::string_view tok = line.substr(i, end - i);
    const std::size_t eq = tok.find('=');
    if (eq == std::string_view::npos || eq == 0) return std::nullopt;
    auto value = unescape_field(tok.substr(eq + 1));
    if (!value) return std::nullopt;
    if (!f.emplace(std::string(tok.substr(0, eq)), *value).second) return std::nullopt;
    i = end + 1;
  }
  for (const char* req : {"checker", "p", "backing", "outcome", "engine"}) {
    if (!f.count(req)) return std::nullopt;
  }
  try {
    CheckParams c;
    if (f.count("lambda")) c.lambda = Rational::parse(f["lambda"]);
    auto p = detail::parse_long(f["p"]);
    if (!p || *p < 0) return std::nullopt;
    c.p = static_cast<std::uint64_t>(*p);
    for (auto [name, slot] : {std::pair{"m", &c.m}, std::pair{"s", &c.s}, std::pair{"r", &c.r},
                              std::pair{"k", &c.k}, std::pair{"n", &c.n}}) {
      if (!f.count(name)) continue;
      auto v = detail::parse_long(f[name]);
      if (!v) return std::nullopt;
      *slot = *v;
    }
    auto backing = detail::parse_backing(f["backing"]);
    if (!backing) return std::nullopt;
    std::optional<ValuationResult> claimed;
    if (f.count("claimed")) {
      claimed = detail::parse_valuation(f["claimed"]);
      if (!claimed) return std::nullopt;
    }
    std::optional<Observed> observed;
    if (f.count("observed")) {
      std::string o = f["observed"];
      const bool lower = o.rfind(">=", 0) == 0;
      auto v = detail::parse_valuation(lower ? o.substr(2) : o);
      if (!v) return std::nullopt;
      observed = Observed{*v, lower};
    }
    std::optional<Errc> reason;
    if (f.count("reason")) {
      Errc e{};
      if (!errc_from_string(f["reason"], e)) return std::nullopt;
      reason = e;
    }
    if (claimed.has_value() != observed.has_value()) return std::nullopt;
    ResultRecord rec{CongruenceReport::restore(f["checker"], c, *backing, claimed, observed, reason,
                                               f.count("note") ? f["note"] : std::string()),
                     f["engine"], f.count("timestamp") ? f["timestamp"] : std::string()};
    if (to_string(rec.report.outcome()) != f["outcome"]) return std::nullopt;
    return rec;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct QuarantinedLine {
  std::size_t line_number;  // 1-based
  std::string text;
};

struct StoreContents {
  std::vector<ResultRecord> records;  // latest per key, sorted by key
  std::vector<QuarantinedLine> quarantined;
};

struct RecordFilter {
  std::vector<std::string> checkers;  // empty: any
  std::optional<Rational> lambda;
  std::optional<std::uint64_t> p_min, p_max;
  std::optional<Outcome> outcome;
  std::optional<Backing> backing;

  bool matches(const ResultRecord& rec) const {
    const CongruenceReport& r = rec.report;
    if (!checkers.empty() && std::find(checkers.begin(), checkers.end(), r.checker()) == checkers.end()) return false;
    if (lambda && r.params().lambda != lambda) return false;
    if (p_min && r.params().p < *p_min) return false;
    if (p_max && r.params().p > *p_max) return false;
    if (outcome && r.outcome() != *outcome) return false;
    if (backing && r.backing() != *backing) return false;
    return true;
  }
};

struct AppendResult {
  std::size_t written = 0;
  std::size_t unchanged = 0;  // key already stored by this engine version
};

class ResultStore {
 public:
  explicit ResultStore(std::string path) : path_(std::move(path)) {}

  const std::string& path() const { return path_; }

  StoreContents load() const {
    StoreContents out;
    std::ifstream in(path_);
    if (!in) return out;
    std::map<std::string, ResultRecord> latest;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      if (line.empty()) continue;
      auto rec = decode_record(line);
      if (!rec) {
        out.quarantined.push_back({n, line});
        continue;
      }
      std::string key = rec->key();
      latest.insert_or_assign(std::move(key), std::move(*rec));
    }
    for (auto& [k, v] : latest) out.records.push_back(std::move(v));
    return out;
  }

  // Writes a record when its key is new, was stored by another engine
  // version, or `force` is set.
  AppendResult append(const std::vector<CongruenceReport>& reports, bool force,
                      const std::string& timestamp = utc_timestamp()) const {
    std::map<std::string, std::string> stored_engine;
    for (const auto& r : load().records) stored_engine[r.key()] = r.engine;
    AppendResult res;
    std::ofstream out(path_, std::ios::app);
    if (!out) raise(Errc::InvalidArgument, "cannot open store '" + path_ + "' for writing");
    for (const auto& rep : reports) {
      auto it = stored_engine.find(rep.key());
      if (!force && it != stored_engine.end() && it->second == kEngineVersion) {
        ++res.unchanged;
        continue;
      }
      out << encode_record(ResultRecord{rep, kEngineVersion, timestamp}) << '\n';
      ++res.written;
    }
    return res;
  }

  std::vector<ResultRecord> query(const RecordFilter& filter) const {
    std::vector<ResultRecord> out;
    for (auto& r : load().records) {
      if (filter.matches(r)) out.push_back(std::move(r));
    }
    return out;
  }

  // Copies quarantined lines to "<path>.quarantine" so nothing is lost.
  void write_quarantine(const std::vector<QuarantinedLine>& lines) const {
    if (lines.empty()) return;
    std::ofstream out(path_ + ".quarantine", std::ios::app);
    for (const auto& q : lines) out << "line " << q.line_number << ": " << q.text << '\n';
  }

 private:
  std::string path_;
};

}  // namespace supercong::harness
