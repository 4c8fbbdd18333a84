#include "nsdelta_cli/context.hpp"

#include <charconv>
#include <cstdlib>

namespace nsdelta {

namespace {

Int parse_int(std::string_view text) {
  Int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::invalid_argument, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Context::Context(GlobalOptions o)
    : options(std::move(o)),
      cache(options.cache_dir.empty() ? ResultCache() : ResultCache(options.cache_dir)),
      deadline(options.budget_seconds) {}

InfinityDeltaOptions Context::infinity_options(Int window_periods) const {
  InfinityDeltaOptions o;
  o.window_periods = window_periods;
  o.max_elements = options.budget_elements;
  o.threads = options.threads;
  return o;
}

ZeroDeltaOptions Context::zero_options() const {
  ZeroDeltaOptions o;
  o.max_elements = options.budget_elements;
  o.threads = options.threads;
  return o;
}

json Context::budget_report() const {
  return json{{"max_elements", options.budget_elements},
              {"max_factorizations", options.budget_factorizations},
              {"max_seconds", options.budget_seconds},
              {"elements_scanned", elements_scanned.load()},
              {"cache", cache.enabled() ? json{{"hits", cache_hits.load()},
                                               {"misses", cache_misses.load()}}
                                        : json("off")}};
}

InfinityDeltaResult delta_inf_cached(Context& ctx, const NumericalSemigroup& s,
                                     Int window_periods) {
  const std::string key = ResultCache::make_key(s.generators(), "delta_inf",
                                                json{{"window_periods", window_periods}});
  if (auto hit = ctx.cache.get(key)) {
    ++ctx.cache_hits;
    return InfinityDeltaResult{hit->at("delta").get<DeltaSet>(),
                               hit->at("certificate").get<PeriodicityCertificate>()};
  }
  if (ctx.cache.enabled()) ++ctx.cache_misses;
  auto r = delta_inf_semigroup(s, ctx.infinity_options(window_periods));
  ctx.elements_scanned += r.certificate.horizon + 1;
  ctx.cache.put(key, json{{"delta", r.delta}, {"certificate", r.certificate}});
  return r;
}

ZeroDeltaResult delta0_cached(Context& ctx, const NumericalSemigroup& s) {
  const std::string key = ResultCache::make_key(s.generators(), "delta_0", json::object());
  if (auto hit = ctx.cache.get(key)) {
    ++ctx.cache_hits;
    return ZeroDeltaResult{hit->at("delta").get<DeltaSet>(),
                           hit->at("stability_bound").get<Int>(),
                           hit->at("elements_scanned").get<Int>()};
  }
  if (ctx.cache.enabled()) ++ctx.cache_misses;
  auto r = delta0_semigroup_report(s, ctx.zero_options());
  ctx.elements_scanned += r.elements_scanned;
  ctx.cache.put(key, json{{"delta", r.delta},
                          {"stability_bound", r.stability_bound},
                          {"elements_scanned", r.elements_scanned}});
  return r;
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (r.lo > r.hi) throw Error(ErrorCode::invalid_argument, "empty range '" + text + "'");
  return r;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_int(std::string_view(text).substr(pos, end - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace nsdelta
