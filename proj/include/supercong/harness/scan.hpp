#pragma once

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "supercong/harness/registry.hpp"

namespace supercong::harness {

struct ScanTask {
  const CheckerInfo* checker;
  CheckParams params;
};

inline std::vector<const CheckerInfo*> resolve_checkers(const std::vector<std::string>& names) {
  std::vector<const CheckerInfo*> out;
  for (const auto& n : names) {
    if (n == "all") {
      for (const auto& c : registry()) out.push_back(&c);
      continue;
    }
    const CheckerInfo* c = find_checker(n);
    if (!c) raise(Errc::InvalidArgument, "unknown checker '" + n + "'");
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ScanTask> expand(const ScanSpec& spec) {
  std::vector<ScanTask> tasks;
  for (const CheckerInfo* c : resolve_checkers(spec.checkers)) {
    for (auto& params : c->grid(spec)) tasks.push_back({c, std::move(params)});
  }
  return tasks;
}

inline lab::CheckOptions options_for(const ScanSpec& spec) {
  lab::CheckOptions opt;
  if (spec.guard) opt.guard = *spec.guard;
  return opt;
}

// Runs the tasks on a bounded pool. Output order is by record key, so the
// result does not depend on the worker count.
inline std::vector<CongruenceReport> run_scan(const std::vector<ScanTask>& tasks, unsigned workers,
                                              const lab::CheckOptions& opt = {}) {
  std::vector<std::optional<CongruenceReport>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      slots[i] = run_task(*tasks[i].checker, tasks[i].params, opt);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<CongruenceReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  std::stable_sort(out.begin(), out.end(),
                   [](const CongruenceReport& a, const CongruenceReport& b) { return a.key() < b.key(); });
  return out;
}

inline std::vector<CongruenceReport> run_scan(const ScanSpec& spec) {
  return run_scan(expand(spec), spec.workers, options_for(spec));
}

struct ScanSummary {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::size_t theorem_failures = 0;     // Theorem or Classical backing
  std::size_t conjecture_failures = 0;  // evidence, not bugs

  int exit_status() const { return theorem_failures > 0 ? 1 : 0; }
};

inline ScanSummary summarize(const std::vector<CongruenceReport>& reports) {
  ScanSummary s;
  for (const auto& r : reports) {
    if (r.pass()) ++s.pass;
    if (r.skipped()) ++s.skipped;
    if (r.failed()) {
      ++s.fail;
      if (r.backing() == Backing::Conjecture) {
        ++s.conjecture_failures;
      } else {
        ++s.theorem_failures;
      }
    }
  }
  return s;
}

}  // namespace supercong::harness
