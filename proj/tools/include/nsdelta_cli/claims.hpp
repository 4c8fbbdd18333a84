#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsdelta_cli/context.hpp"

namespace nsdelta {

struct VerifyParams {
  std::optional<std::vector<Int>> gens;
  std::optional<IntRange> x;
  std::optional<IntRange> m;
  std::optional<IntRange> k;
  std::optional<Int> max_gen;
  bool quick = false;     // smallest parameter instance only
  bool extended = false;  // add the expensive instances
  Int window_periods = 2;
};

enum class InstanceStatus { pass, fail, budget, skipped, report };

std::string_view to_string(InstanceStatus s);

struct InstanceOutcome {
  InstanceStatus status = InstanceStatus::pass;
  json detail = json::object();
};

struct ClaimInstance {
  std::string label;
  std::function<InstanceOutcome(Context&)> run;
};

struct Claim {
  std::string id;
  std::string title;
  bool report_only = false;  // outcomes are recorded, never pass/fail
  std::function<std::vector<ClaimInstance>(const VerifyParams&)> instances;
};

const std::vector<Claim>& claim_registry();

// nullptr when no claim has this id.
const Claim* find_claim(std::string_view id);

// Runs every instance (in parallel over ctx.options.threads, results in
// instance order). Budget errors and an expired deadline mark instances as
// "budget" rather than failing them.
json run_claim(Context& ctx, const Claim& claim, const VerifyParams& params);

}  // namespace nsdelta
