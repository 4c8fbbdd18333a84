#include "nsdelta_cli/search.hpp"

#include <optional>

#include "nsdelta/parallel.hpp"

namespace nsdelta {

namespace {

// Next strictly increasing tuple with entries in [2, max_gen]; false when done.
bool next_tuple(std::vector<Int>& t, Int max_gen) {
  const std::size_t k = t.size();
  for (std::size_t i = k; i-- > 0;) {
    const Int limit = max_gen - static_cast<Int>(k - 1 - i);
    if (t[i] < limit) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool canonical(const std::vector<Int>& t) {
  if (gcd_of(t) != 1) return false;
  return minimal_generating_set(t) == t;
}

DeltaSet compute(Context& ctx, const NumericalSemigroup& s, Norm p, bool fresh) {
  if (p == Norm::zero) {
    return fresh ? delta0_semigroup_report(s, ctx.zero_options()).delta
                 : delta0_cached(ctx, s).delta;
  }
  return fresh ? delta_inf_semigroup(s, ctx.infinity_options(3)).delta
               : delta_inf_cached(ctx, s).delta;
}

}  // namespace

std::string search_target_problem(const SearchParams& params) {
  if (params.p != Norm::zero && params.p != Norm::infinity) {
    return "search supports p = 0 and p = inf only";
  }
  if (params.target.empty()) return "the target delta set is empty";
  if (!params.target.contains(1)) {
    return params.p == Norm::zero
               ? "1 is missing: L_0(x) is an interval for every large x, so 1 lies in every "
                 "Delta_0(S)"
               : "1 is missing: L_inf(x) contains consecutive lengths for large x, so 1 lies "
                 "in every Delta_inf(S)";
  }
  if (params.min_dim < 2 || params.max_dim < params.min_dim) return "invalid dimension range";
  return {};
}

json search_delta(Context& ctx, const SearchParams& params) {
  if (auto problem = search_target_problem(params); !problem.empty()) {
    throw Error(ErrorCode::invalid_argument, problem);
  }
  std::vector<std::vector<Int>> candidates;
  bool exhausted = true;
  for (std::size_t k = params.min_dim; k <= params.max_dim && exhausted; ++k) {
    if (static_cast<Int>(k) + 1 > params.max_gen) break;
    std::vector<Int> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<Int>(i) + 2;
    do {
      if (!canonical(t)) continue;
      if (static_cast<Int>(candidates.size()) >= params.max_candidates) {
        exhausted = false;
        break;
      }
      candidates.push_back(t);
    } while (next_tuple(t, params.max_gen));
  }

  enum class Verdict { miss, hit, over_budget, unvisited };
  std::vector<Verdict> verdicts(candidates.size(), Verdict::unvisited);
  parallel_chunks(candidates.size(), ctx.options.threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      if (ctx.deadline.expired()) return;
      try {
        const NumericalSemigroup s(candidates[i]);
        verdicts[i] = compute(ctx, s, params.p, false) == params.target ? Verdict::hit
                                                                         : Verdict::miss;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::budget_exceeded && err.code() != ErrorCode::cap_exceeded &&
            err.code() != ErrorCode::overflow) {
          throw;
        }
        verdicts[i] = Verdict::over_budget;
      }
    }
  });

  json hits = json::array();
  json skipped = json::array();
  Int tested = 0, hit_count = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    switch (verdicts[i]) {
      case Verdict::unvisited: exhausted = false; continue;
      case Verdict::over_budget: skipped.push_back(candidates[i]); break;
      case Verdict::hit:
        if (hits.size() < params.max_hits) {
          const NumericalSemigroup s(candidates[i]);
          const DeltaSet again = compute(ctx, s, params.p, true);
          hits.push_back({{"generators", candidates[i]},
                          {"delta", again},
                          {"reverified", again == params.target}});
        }
        ++hit_count;
        break;
      case Verdict::miss: break;
    }
    ++tested;
  }
  return json{{"target", params.target},
              {"p", std::string(to_string(params.p))},
              {"space",
               {{"min_dim", params.min_dim},
                {"max_dim", params.max_dim},
                {"max_gen", params.max_gen},
                {"max_candidates", params.max_candidates}}},
              {"hits", hits},
              {"hit_count", hit_count},
              {"candidates_tested", tested},
              {"over_budget", skipped},
              {"exhausted", exhausted && skipped.empty()}};
}

}  // namespace nsdelta
