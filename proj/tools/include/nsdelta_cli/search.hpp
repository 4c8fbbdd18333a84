#pragma once

#include <vector>

#include "nsdelta_cli/context.hpp"

namespace nsdelta {

struct SearchParams {
  DeltaSet target;
  Norm p = Norm::infinity;  // zero or infinity
  std::size_t min_dim = 2;
  std::size_t max_dim = 3;
  Int max_gen = 30;
  Int max_candidates = 100'000;
  std::size_t max_hits = 50;  // hits listed; all are counted
};

// Rejects targets no numerical semigroup can realize. Empty on success.
std::string search_target_problem(const SearchParams& params);

// Enumerates minimally generated semigroups by ascending dimension, then
// lexicographically, and reports those whose Delta_p equals the target.
// Each hit is recomputed from scratch (one extra window for infinity).
json search_delta(Context& ctx, const SearchParams& params);

}  // namespace nsdelta
