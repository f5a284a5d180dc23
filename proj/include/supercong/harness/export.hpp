#pragma once

// Deterministic exports of stored records. Rows are sorted by record key and
// the timestamp column is left out unless asked for, so identical stores give
// byte-identical output.

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "supercong/harness/store.hpp"

namespace supercong::harness {

enum class ExportFormat { Table, Csv };

// Fixed column order of both formats.
inline std::vector<std::string> export_columns(bool with_timestamp) {
  std::vector<std::string> cols{"checker", "lambda", "p", "m", "s", "r", "k", "n", "backing",
                                "outcome", "claimed", "observed", "reason", "note", "engine"};
  if (with_timestamp) cols.push_back("timestamp");
  return cols;
}

inline std::vector<std::string> export_row(const ResultRecord& rec, bool with_timestamp) {
  const CongruenceReport& r = rec.report;
  const CheckParams& c = r.params();
  auto opt = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string(); };
  std::vector<std::string> row{r.checker(),
                               c.lambda ? c.lambda->str() : std::string(),
                               std::to_string(c.p),
                               opt(c.m),
                               opt(c.s),
                               opt(c.r),
                               opt(c.k),
                               opt(c.n),
                               std::string(to_string(r.backing())),
                               std::string(to_string(r.outcome())),
                               r.claimed() ? r.claimed()->str() : std::string(),
                               r.observed() ? r.observed()->str() : std::string(),
                               r.reason() ? std::string(to_string(*r.reason())) : std::string(),
                               r.note(),
                               rec.engine};
  if (with_timestamp) row.push_back(rec.timestamp);
  return row;
}

namespace detail {

// RFC 4180 quoting, only where needed.
inline std::string csv_cell(const std::string& v) {
  if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
  std::string out = "\"";
  for (char ch : v) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i].empty() ? "-" : row[i];
      if (i + 1 < row.size()) cell.resize(std::max(width[i], std::size_t{1}), ' ');
      text += cell;
      if (i + 1 < row.size()) text += "  ";
    }
    out << text << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

inline void write_csv(std::ostream& out, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_cell(row[i]);
    }
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

inline void write_rows(std::ostream& out, ExportFormat format, const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  if (format == ExportFormat::Csv) {
    write_csv(out, header, rows);
  } else {
    write_table(out, header, rows);
  }
}

}  // namespace detail

inline void export_records(std::ostream& out, std::vector<ResultRecord> records, ExportFormat format,
                           bool with_timestamp = false) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ResultRecord& a, const ResultRecord& b) { return a.key() < b.key(); });
  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) rows.push_back(export_row(r, with_timestamp));
  detail::write_rows(out, format, export_columns(with_timestamp), rows);
}

// Observed defect valuations per checker: one row per (checker, observed)
// with counts, skipped records tallied under "skipped".
inline void export_histogram(std::ostream& out, const std::vector<ResultRecord>& records, ExportFormat format) {
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
  for (const auto& rec : records) {
    const CongruenceReport& r = rec.report;
    counts[{r.checker(), r.observed() ? r.observed()->str() : std::string("skipped")}]++;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, n] : counts) rows.push_back({key.first, key.second, std::to_string(n)});
  detail::write_rows(out, format, {"checker", "observed", "count"}, rows);
}

// conjecture33 records with their observed defect against 3, the margin the
// s = 1 instances appear to reach.
inline void export_evidence(std::ostream& out, std::vector<ResultRecord> records, ExportFormat format) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ResultRecord& a, const ResultRecord& b) { return a.key() < b.key(); });
  std::vector<std::vector<std::string>> rows;
  for (const auto& rec : records) {
    const CongruenceReport& r = rec.report;
    if (r.checker() != "conjecture33" || !r.observed()) continue;
    const CheckParams& c = r.params();
    const bool s1 = c.s && *c.s == 1;
    std::string margin = "-";
    if (s1) margin = r.observed()->value >= ValuationResult::of(3) ? "yes" : "no";
    rows.push_back({c.lambda ? c.lambda->str() : std::string(), std::to_string(c.p),
                    c.m ? std::to_string(*c.m) : std::string(), c.s ? std::to_string(*c.s) : std::string(),
                    r.claimed()->str(), r.observed()->str(), std::string(to_string(r.outcome())), margin});
  }
  detail::write_rows(out, format, {"lambda", "p", "m", "s", "claimed", "observed", "outcome", "p3_margin"}, rows);
}

}  // namespace supercong::harness
