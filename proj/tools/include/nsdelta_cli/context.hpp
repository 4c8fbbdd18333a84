#pragma once

#include <atomic>
#include <chrono>
#include <string>

#include "nsdelta/infinity_structure.hpp"
#include "nsdelta/zero_structure.hpp"
#include "nsdelta_cli/cache.hpp"

namespace nsdelta {

enum ExitCode : int { exit_ok = 0, exit_falsified = 1, exit_error = 2, exit_budget = 3 };

struct GlobalOptions {
  std::string format = "json";
  bool pretty = false;
  Int budget_elements = 5'000'000;
  Int budget_factorizations = 10'000'000;
  double budget_seconds = 0;  // 0: no wall-clock limit
  unsigned threads = 1;
  std::string cache_dir;      // empty: caching off
};

class Deadline {
 public:
  explicit Deadline(double seconds = 0)
      : start_(std::chrono::steady_clock::now()), seconds_(seconds) {}

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }
  bool expired() const { return seconds_ > 0 && elapsed() >= seconds_; }
  double limit() const noexcept { return seconds_; }

 private:
  std::chrono::steady_clock::time_point start_;
  double seconds_;
};

struct Context {
  explicit Context(GlobalOptions o);

  GlobalOptions options;
  ResultCache cache;
  Deadline deadline;
  std::atomic<Int> elements_scanned{0};
  std::atomic<Int> cache_hits{0};
  std::atomic<Int> cache_misses{0};

  InfinityDeltaOptions infinity_options(Int window_periods = 2) const;
  ZeroDeltaOptions zero_options() const;

  // Budget counters and limits, for the "budget" block of a document.
  json budget_report() const;
};

// Delta_inf(S) and Delta_0(S) through the on-disk cache.
InfinityDeltaResult delta_inf_cached(Context& ctx, const NumericalSemigroup& s,
                                     Int window_periods = 2);
ZeroDeltaResult delta0_cached(Context& ctx, const NumericalSemigroup& s);

struct IntRange {
  Int lo = 0;
  Int hi = 0;
};

// "a..b" or a single integer.
IntRange parse_range(const std::string& text);
// Comma-separated integers.
std::vector<Int> parse_int_list(const std::string& text);

}  // namespace nsdelta
