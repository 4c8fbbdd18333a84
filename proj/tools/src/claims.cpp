#include "nsdelta_cli/claims.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "nsdelta/families.hpp"
#include "nsdelta/parallel.hpp"
#include "nsdelta/presentations.hpp"

namespace nsdelta {

namespace {

using Instances = std::vector<ClaimInstance>;

std::string label_of(std::span<const Int> gens) {
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out += (i ? "," : "") + std::to_string(gens[i]);
  }
  return out + ">";
}

std::string label_of(const NumericalSemigroup& s) { return label_of(s.generators()); }

InstanceOutcome outcome(bool ok, json detail) {
  return InstanceOutcome{ok ? InstanceStatus::pass : InstanceStatus::fail, std::move(detail)};
}

void require_within(const Context& ctx, Int horizon) {
  if (horizon > ctx.options.budget_elements) {
    throw Error(ErrorCode::budget_exceeded, "horizon " + std::to_string(horizon) +
                                                " exceeds the element budget " +
                                                std::to_string(ctx.options.budget_elements));
  }
}

const std::vector<std::vector<Int>>& structure_suite() {
  static const std::vector<std::vector<Int>> s{{4, 6, 9}, {3, 10, 11}, {6, 9, 20}, {5, 13, 16}};
  return s;
}

// Semigroups for the structure claims: --gens, else the suite (first member
// when quick).
std::vector<std::vector<Int>> structure_inputs(const VerifyParams& p) {
  if (p.gens) return {generator_list(make_semigroup(*p.gens).semigroup)};
  if (p.quick) return {structure_suite().front()};
  return structure_suite();
}

template <class F>
Instances per_semigroup(const VerifyParams& p, F body) {
  Instances out;
  for (const auto& g : structure_inputs(p)) {
    out.push_back(ClaimInstance{label_of(g), [g, p, body](Context& ctx) {
                                  return body(ctx, NumericalSemigroup(g), p);
                                }});
  }
  return out;
}

IntRange range_or(const std::optional<IntRange>& r, IntRange fallback) {
  return r ? *r : fallback;
}

std::vector<Int> iota_range(IntRange r) {
  std::vector<Int> v;
  for (Int i = r.lo; i <= r.hi; ++i) v.push_back(i);
  return v;
}

// Compares an engine result with the family prediction.
InstanceOutcome check_prediction(Context& ctx, const FamilySpec& spec, Norm p) {
  const auto predicted = predicted_delta(spec, p);
  const NumericalSemigroup s = construct_family(spec);
  json detail{{"semigroup", generator_list(s)}, {"family", format_family(spec)}};
  DeltaSet got;
  if (p == Norm::infinity) {
    auto r = delta_inf_cached(ctx, s);
    got = r.delta;
    detail["certificate"] = r.certificate;
  } else {
    auto r = delta0_cached(ctx, s);
    got = r.delta;
    detail["stability_bound"] = r.stability_bound;
  }
  detail["computed"] = got;
  if (predicted.kind != PredictedDelta::Kind::exact) {
    detail["note"] = "no exact prediction for this instance";
    return InstanceOutcome{InstanceStatus::report, detail};
  }
  detail["predicted"] = predicted.exact;
  return outcome(got == predicted.exact, detail);
}

template <class Spec>
Instances family_instances(const std::vector<Spec>& specs, Norm p) {
  Instances out;
  for (const auto& spec : specs) {
    out.push_back(ClaimInstance{format_family(spec), [spec, p](Context& ctx) {
                                  return check_prediction(ctx, spec, p);
                                }});
  }
  return out;
}

template <class T>
std::vector<T> first_if(bool quick, std::vector<T> v) {
  if (quick && v.size() > 1) v.resize(1);
  return v;
}

// ---- infinity structure ---------------------------------------------------

InstanceOutcome linf_bounds(Context& ctx, const NumericalSemigroup& s, const VerifyParams& p) {
  const IntRange r = range_or(p.x, {0, 10 * s.gen_sum()});
  require_within(ctx, r.hi);
  const InfinityLengths engine(s, r.hi);
  ctx.elements_scanned += r.hi + 1;
  Int checked = 0;
  for (Int x = std::max<Int>(r.lo, 0); x <= r.hi; ++x) {
    if (!s.contains(x)) continue;
    ++checked;
    if (!verify_linf_bounds(engine, x)) {
      return outcome(false, {{"counterexample", {{"x", x}, {"lengths", engine.lengths(x)}}}});
    }
  }
  return outcome(true, {{"elements", checked}, {"x_range", {r.lo, r.hi}}});
}

InstanceOutcome aap(Context& ctx, const NumericalSemigroup& s, const VerifyParams& p) {
  const auto c = structure_constants(s);
  const IntRange r = range_or(p.x, {c.period, 2 * c.period});
  require_within(ctx, r.hi);
  const InfinityLengths engine(s, r.hi);
  ctx.elements_scanned += r.hi + 1;
  Int checked = 0;
  for (Int x = std::max<Int>(r.lo, 0); x <= r.hi; ++x) {
    if (!s.contains(x)) continue;
    for (std::size_t i = 0; i < s.embedding_dim(); ++i) {
      ++checked;
      if (!verify_aap(engine, c, x, i)) {
        return outcome(false, {{"counterexample",
                                {{"x", x}, {"index", i + 1},
                                 {"dominant_lengths", engine.dominant_lengths(x, i)}}}});
      }
    }
  }
  return outcome(true, {{"checks", checked}, {"x_range", {r.lo, r.hi}}});
}

InstanceOutcome shifts(Context& ctx, const NumericalSemigroup& s, const VerifyParams& p) {
  const auto c = structure_constants(s);
  const Int g1 = c.per_index[0].g;
  const Int b_prime = s.largest_generator() + g1;
  json per_index = json::array();
  for (std::size_t i = 0; i < s.embedding_dim(); ++i) {
    const Int B = c.per_index[i].B + g1;
    const Int threshold =
        std::max(index_shift_threshold(s, i, B), sum_shift_threshold(s, b_prime));
    const IntRange r = range_or(p.x, {threshold, threshold + c.period - 1});
    const Int horizon = checked_add(r.hi, checked_add(c.A, s.largest_generator()));
    require_within(ctx, horizon);
    const InfinityLengths engine(s, horizon);
    ctx.elements_scanned += horizon + 1;
    Int checked = 0, below = 0;
    for (Int x = std::max<Int>(r.lo, 0); x <= r.hi; ++x) {
      if (!s.contains(x)) continue;
      if (x < threshold) {
        ++below;
        continue;
      }
      ++checked;
      if (!verify_shift(engine, x, i, B, b_prime)) {
        return outcome(false, {{"counterexample", {{"x", x}, {"index", i + 1}, {"B", B},
                                                   {"B_prime", b_prime}}}});
      }
    }
    per_index.push_back({{"index", i + 1}, {"B", B}, {"threshold", threshold},
                         {"checked", checked}, {"below_threshold", below}});
  }
  return outcome(true, {{"B_prime", b_prime}, {"per_index", per_index}});
}

InstanceOutcome interval_decomposition(Context& ctx, const NumericalSemigroup& s,
                                       const VerifyParams& p) {
  if (s.embedding_dim() < 3) {
    return InstanceOutcome{InstanceStatus::skipped,
                           {{"reason", "the decomposition needs at least three generators"}}};
  }
  const auto c = structure_constants(s);
  const Int start = theorem_periodicity_start(s, c);
  const IntRange r = range_or(p.x, {start, start + c.period - 1});
  require_within(ctx, r.hi);
  const InfinityLengths engine(s, r.hi);
  ctx.elements_scanned += r.hi + 1;
  Int checked = 0;
  for (Int x = std::max<Int>(r.lo, 0); x <= r.hi; ++x) {
    if (!s.contains(x)) continue;
    ++checked;
    if (!verify_interval_decomposition(engine, c, x)) {
      return outcome(false, {{"counterexample", {{"x", x}, {"lengths", engine.lengths(x)}}},
                             {"largeness_start", start}});
    }
  }
  return outcome(true, {{"elements", checked}, {"x_range", {r.lo, r.hi}}});
}

InstanceOutcome periodicity(Context& ctx, const NumericalSemigroup& s, const VerifyParams& p) {
  const auto base = delta_inf_cached(ctx, s, p.window_periods);
  const auto more = delta_inf_cached(ctx, s, p.window_periods + 1);
  json detail{{"delta", base.delta},
              {"certificate", base.certificate},
              {"delta_with_extra_window", more.delta}};
  return outcome(base.delta == more.delta && base.certificate.window_periods == p.window_periods,
                 detail);
}

InstanceOutcome residue_classes(Context& ctx, const NumericalSemigroup& s, const VerifyParams&) {
  const auto d = delta_inf_cached(ctx, s).delta;
  const Int bound = 50 * s.multiplicity();
  json classes = json::array();
  bool ok = true;
  for (Int j = 0; j < s.multiplicity(); ++j) {
    const auto rd = residue_class_delta(s, j, bound);
    const bool in =
        std::includes(d.values.begin(), d.values.end(), rd.values.begin(), rd.values.end());
    ok = ok && in;
    classes.push_back({{"residue", j}, {"delta", rd}, {"contained", in}});
  }
  return outcome(ok, {{"delta_inf", d}, {"bound", bound}, {"classes", classes}});
}

// ---- delta_inf families ----------------------------------------------------

InstanceOutcome geometric_proof_facts(Context&, const family::Geometric& f) {
  const NumericalSemigroup s = construct_family(f);
  const auto order = family_generators(f);
  const Int a1 = order[0], a2 = order[1];
  auto pos = [&](Int g) {
    return static_cast<std::size_t>(std::find(s.generators().begin(), s.generators().end(), g) -
                                    s.generators().begin());
  };
  auto vec = [&](Int c1, Int c2) {
    std::vector<Int> z(s.embedding_dim(), 0);
    z[pos(a1)] += c1;
    z[pos(a2)] += c2;
    return z;
  };
  json facts = json::array();
  auto record = [&](Int c, Int x, std::vector<std::vector<Int>> stated) {
    std::vector<std::vector<Int>> actual;
    for (const auto& z : enumerate_factorizations(s, x)) actual.push_back(z.exponents);
    std::sort(stated.begin(), stated.end());
    const auto d = delta_set_of_element(s, x, Norm::infinity);
    facts.push_back({{"c", c},
                     {"element", x},
                     {"stated_factorizations", stated},
                     {"factorizations", actual},
                     {"matches_statement", actual == stated},
                     {"delta_inf", d},
                     {"c_in_delta", d.contains(c)}});
  };
  for (Int c = 1; c <= f.a; ++c) {
    record(c, (f.b + f.a - c) * a1, {vec(f.b + f.a - c, 0), vec(f.a - c, f.a)});
  }
  for (Int c = f.a + 1; c <= f.b; ++c) record(c, c * a2, {vec(f.b, c - f.a), vec(0, c)});
  const auto pres = minimal_presentation(s);
  return InstanceOutcome{InstanceStatus::report,
                         {{"semigroup", generator_list(s)},
                          {"elements", facts},
                          {"presentation_trades", pres.trades.size()},
                          {"delta_inf", delta_inf_semigroup(s).delta}}};
}

// ---- delta_0 ---------------------------------------------------------------

InstanceOutcome delta0_eventual(Context& ctx, const NumericalSemigroup& s, const VerifyParams&) {
  const Int x0 = delta0_stability_bound(s);
  const Int hi = checked_add(x0, 3 * s.largest_generator());
  require_within(ctx, hi);
  const SupportScanner scan(s, hi);
  ctx.elements_scanned += hi + 1;
  Int checked = 0;
  for (Int x = x0 + 1; x <= hi; ++x) {
    if (!s.contains(x)) continue;
    ++checked;
    const auto d = delta_of_length_mask(scan.zero_length_mask(x));
    if (!(d.empty() || d == DeltaSet{{1}})) {
      return outcome(false,
                     {{"counterexample", {{"x", x}, {"zero_lengths", scan.zero_lengths(x).values}}},
                      {"stability_bound", x0}});
    }
  }
  return outcome(true, {{"stability_bound", x0}, {"elements", checked}, {"x_range", {x0 + 1, hi}}});
}

InstanceOutcome singleton_presentation(Context& ctx, const FamilySpec& spec) {
  const NumericalSemigroup s = construct_family(spec);
  const bool singleton = singleton_support_presentation_exists(s);
  const auto d = delta0_cached(ctx, s);
  return outcome(singleton && d.delta == DeltaSet{{1}},
                 {{"semigroup", generator_list(s)},
                  {"singleton_support_presentation", singleton},
                  {"delta_0", d.delta},
                  {"stability_bound", d.stability_bound}});
}

InstanceOutcome med_delta0(Context& ctx, const NumericalSemigroup& s) {
  if (!is_max_embedding_dimension(s)) {
    return InstanceOutcome{InstanceStatus::skipped,
                           {{"reason", "not of maximal embedding dimension"}}};
  }
  const auto d = delta0_cached(ctx, s);
  return outcome(d.delta == DeltaSet{{1, 2}},
                 {{"delta_0", d.delta}, {"stability_bound", d.stability_bound}});
}

InstanceOutcome generalized_arithmetic(Context& ctx, const family::GeneralizedArithmetic& f) {
  const NumericalSemigroup s = construct_family(f);
  const auto d = delta0_cached(ctx, s);
  // a + (ah + (r+1)d) + q (ah + kd), with a - 1 = qk + r
  const Int q = (f.a - 1) / f.k, r = (f.a - 1) % f.k;
  const Int x = f.a + (f.a * f.h + (r + 1) * f.d) + q * (f.a * f.h + f.k * f.d);
  const auto zs = enumerate_factorizations(s, x);
  std::vector<std::vector<Int>> factorizations;
  for (const auto& z : zs) factorizations.push_back(z.exponents);
  return outcome(d.delta == DeltaSet{{1, 2}},
                 {{"semigroup", generator_list(s)},
                  {"delta_0", d.delta},
                  {"stability_bound", d.stability_bound},
                  {"witness", {{"element", x},
                               {"factorizations", factorizations},
                               {"delta_0", delta_set_of_element(s, x, Norm::zero)}}}});
}

InstanceOutcome gluing_rule(Context& ctx, Int a3) {
  Int n = 0, single = 0;
  for (Int a = 2; a < a3; ++a) {
    for (Int b = a + 1; b < a3; ++b) {
      const std::vector<Int> g{a, b, a3};
      if (gcd_of(g) != 1 || minimal_generating_set(g).size() != 3) continue;
      const NumericalSemigroup s(g);
      const auto predicted = delta0_3gen(s);
      const auto exact = delta0_cached(ctx, s);
      ++n;
      if (predicted.values.size() == 1) ++single;
      if (!(predicted == exact.delta)) {
        return outcome(false, {{"counterexample", {{"semigroup", g},
                                                   {"gluing_expressions",
                                                    gluing_expressions_3gen(s).size()},
                                                   {"predicted", predicted},
                                                   {"exact", exact.delta}}}});
      }
    }
  }
  return outcome(true, {{"semigroups", n}, {"two_or_more_gluings", single}});
}

InstanceOutcome interval_chain(Context&, Int k) {
  json steps = json::array();
  bool ok = true;
  for (const auto& step : construction_chain(family::Interval{k})) {
    const std::vector<Int> unit{1};
    const bool glued = is_gluing(step.scale, step.previous, step.added, unit);
    ok = ok && glued;
    steps.push_back({{"previous", step.previous},
                     {"scale", step.scale},
                     {"added", step.added},
                     {"gluing", glued}});
  }
  return outcome(ok, {{"steps", steps}});
}

// The stated trades in construction order: 2e_2 ~ 3e_1,
// 2e_i ~ 2e_{i-2} + e_{i-1}, and 2e_{k+1} ~ e_1 + ... + e_k.
std::vector<std::pair<std::vector<Int>, std::vector<Int>>> gaps_trades(Int k) {
  const auto n = static_cast<std::size_t>(k + 1);
  std::vector<std::pair<std::vector<Int>, std::vector<Int>>> out;
  std::vector<Int> l(n, 0), r(n, 0);
  l[1] = 2;
  r[0] = 3;
  out.emplace_back(l, r);
  for (std::size_t i = 2; i + 1 < n; ++i) {
    std::vector<Int> li(n, 0), ri(n, 0);
    li[i] = 2;
    ri[i - 2] = 2;
    ri[i - 1] = 1;
    out.emplace_back(li, ri);
  }
  std::vector<Int> lt(n, 0), rt(n, 1);
  lt[n - 1] = 2;
  rt[n - 1] = 0;
  out.emplace_back(lt, rt);
  return out;
}

InstanceOutcome gaps_facts(Context& ctx, Int k) {
  const auto order = family_generators(family::Gaps{k});
  const NumericalSemigroup s = construct_family(family::Gaps{k});
  const Int top = order.back();
  const auto d3 = delta_set_of_element(s, 3 * top, Norm::zero);
  const auto d2 = delta_set_of_element(s, 2 * top, Norm::zero);
  bool ok = d3 == DeltaSet{{k}} && d2 == DeltaSet{{k - 1}};

  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[i] = static_cast<std::size_t>(
        std::find(s.generators().begin(), s.generators().end(), order[i]) -
        s.generators().begin());
  }
  auto sorted = [&](const std::vector<Int>& z) {
    std::vector<Int> out(z.size(), 0);
    for (std::size_t i = 0; i < z.size(); ++i) out[pos[i]] = z[i];
    return Factorization{out};
  };
  const auto pres = minimal_presentation(s);
  Factorizer f(s);
  Int literal = 0, by_component = 0;
  json bad = json::array();
  for (const auto& [lhs, rhs] : gaps_trades(k)) {
    const auto zl = sorted(lhs), zr = sorted(rhs);
    const Int value = zl.value(s.generators());
    if (value != zr.value(s.generators())) {
      bad.push_back({{"left", lhs}, {"right", rhs}, {"reason", "sides differ in value"}});
      continue;
    }
    const Trade t = make_trade(s, zl, zr);
    if (std::find(pres.trades.begin(), pres.trades.end(), t) != pres.trades.end()) {
      ++literal;
      continue;
    }
    const auto graph = factorization_graph(f, value);
    auto comp = [&](const Factorization& z) {
      return graph.component[static_cast<std::size_t>(
          std::lower_bound(graph.nodes.begin(), graph.nodes.end(), z) - graph.nodes.begin())];
    };
    if (!graph.connected() && comp(zl) != comp(zr)) {
      ++by_component;
    } else {
      bad.push_back({{"left", lhs}, {"right", rhs}, {"reason", "not a minimal-presentation trade"}});
    }
  }
  ok = ok && bad.empty() && pres.trades.size() == static_cast<std::size_t>(k);
  json detail{{"semigroup", generator_list(s)},
              {"construction_order", order},
              {"delta_0_of_3a", d3},
              {"delta_0_of_2a", d2},
              {"membership_half", d3.contains(k) && d2.contains(k - 1)},
              {"trades_literal", literal},
              {"trades_by_component", by_component},
              {"presentation_size", pres.trades.size()}};
  if (!bad.empty()) detail["bad_trades"] = bad;
  const auto pred = predicted_delta(family::Gaps{k}, Norm::zero).constraint;
  detail["window"] = {pred.window_lo, pred.window_hi};
  detail["window_asserted"] = k >= pred.asserted_from_k;
  (void)ctx;
  return outcome(ok, detail);
}

InstanceOutcome gaps_full_delta0(Context& ctx, Int k) {
  const NumericalSemigroup s = construct_family(family::Gaps{k});
  const auto d = delta0_cached(ctx, s);
  const auto pred = predicted_delta(family::Gaps{k}, Norm::zero).constraint;
  return InstanceOutcome{InstanceStatus::report,
                         {{"semigroup", generator_list(s)},
                          {"delta_0", d.delta},
                          {"stability_bound", d.stability_bound},
                          {"constraint_holds", pred.satisfied_by(d.delta)},
                          {"window_asserted", k >= pred.asserted_from_k}}};
}

InstanceOutcome gaps_prefix_scan(Context& ctx, Int k) {
  const NumericalSemigroup s = construct_family(family::Gaps{k});
  const Int hi = 8 * family_generators(family::Gaps{k}).back();
  require_within(ctx, hi);
  const SupportScanner scan(s, hi);
  ctx.elements_scanned += hi + 1;
  std::set<std::uint32_t> masks;
  for (Int x = 0; x <= hi; ++x) masks.insert(scan.zero_length_mask(x));
  DeltaSet seen{{}};
  for (auto m : masks) seen.merge(delta_of_length_mask(m));
  const auto pred = predicted_delta(family::Gaps{k}, Norm::zero).constraint;
  return outcome(pred.satisfied_by(seen), {{"semigroup", generator_list(s)},
                                           {"scanned", {0, hi}},
                                           {"observed", seen},
                                           {"window", {pred.window_lo, pred.window_hi}},
                                           {"window_expected", pred.window_expected}});
}

std::vector<Claim> build_registry() {
  std::vector<Claim> r;
  r.push_back({"linf-bounds", "bounds on the least infinity-length and on max L_inf(x, i)", false,
               [](const VerifyParams& p) { return per_semigroup(p, linf_bounds); }});
  r.push_back({"aap-containment",
               "L_inf(x, i) is an almost arithmetic progression (both containments)", false,
               [](const VerifyParams& p) { return per_semigroup(p, aap); }});
  r.push_back({"shift-identities",
               "shifts by a_i and by A above the explicit thresholds", false,
               [](const VerifyParams& p) { return per_semigroup(p, shifts); }});
  r.push_back({"interval-decomposition",
               "small gaps present and other gaps near x/A, x/a_2, x/a_1", false,
               [](const VerifyParams& p) { return per_semigroup(p, interval_decomposition); }});
  r.push_back({"delta-inf-periodicity",
               "Delta_inf(x + p) = Delta_inf(x) for large x, certificate stable under W + 1", false,
               [](const VerifyParams& p) { return per_semigroup(p, periodicity); }});
  r.push_back({"residue-class-deltas",
               "deltas of g_1 S_1 residue classes mod a_1 lie in Delta_inf(S)", false,
               [](const VerifyParams& p) { return per_semigroup(p, residue_classes); }});
  r.push_back({"geometric-delta-inf", "Delta_inf = {1..b} for geometric generators", false,
               [](const VerifyParams& p) {
                 return family_instances(
                     first_if(p.quick, std::vector<family::Geometric>{
                                           {2, 3, 3}, {2, 5, 3}, {3, 4, 3}, {2, 3, 4}}),
                     Norm::infinity);
               }});
  r.push_back({"supersymmetric-delta-inf", "Delta_inf = {1..p_1} for supersymmetric semigroups",
               false, [](const VerifyParams& p) {
                 return family_instances(
                     first_if(p.quick, std::vector<family::Supersymmetric>{
                                           {{5, 3, 2}}, {{7, 3, 2}}, {{7, 5, 2}}}),
                     Norm::infinity);
               }});
  r.push_back({"arithmetic-delta-inf", "Delta_inf = {1..q+d+1} for arithmetic sequences", false,
               [](const VerifyParams& p) {
                 return family_instances(
                     first_if(p.quick, std::vector<family::Arithmetic>{
                                           {5, 1, 2}, {7, 2, 3}, {9, 1, 4}, {8, 3, 3}}),
                     Norm::infinity);
               }});
  r.push_back({"three-gap-delta-inf", "Delta_inf(<3, 3m+1, 3m+2>) = {1..m+1} u {2m, 2m+1}",
               false, [](const VerifyParams& p) {
                 std::vector<family::ThreeGap> specs;
                 const IntRange m = range_or(p.m, p.quick ? IntRange{3, 3} : IntRange{3, 8});
                 for (Int v : iota_range(m)) specs.push_back({v});
                 return family_instances(specs, Norm::infinity);
               }});
  r.push_back({"geometric-proof-factorizations",
               "factorization sets used for the geometric family (recorded, not asserted)", true,
               [](const VerifyParams& p) {
                 Instances out;
                 for (const auto& f : first_if(p.quick, std::vector<family::Geometric>{
                                                            {2, 3, 3}, {2, 5, 3}, {3, 4, 3}})) {
                   out.push_back({format_family(f),
                                  [f](Context& ctx) { return geometric_proof_facts(ctx, f); }});
                 }
                 return out;
               }});
  r.push_back({"delta0-eventual", "L_0(x) is an interval beyond the stability bound", false,
               [](const VerifyParams& p) { return per_semigroup(p, delta0_eventual); }});
  r.push_back({"singleton-presentation",
               "singleton-support presentations and Delta_0 = {1} (geometric, supersymmetric)",
               false, [](const VerifyParams& p) {
                 Instances out;
                 std::vector<FamilySpec> specs{family::Geometric{2, 3, 3},
                                               family::Supersymmetric{{5, 3, 2}},
                                               family::Geometric{2, 5, 3},
                                               family::Geometric{3, 4, 3},
                                               family::Geometric{2, 3, 4},
                                               family::Supersymmetric{{7, 3, 2}},
                                               family::Supersymmetric{{7, 5, 3, 2}}};
                 for (const auto& spec : first_if(p.quick, specs)) {
                   out.push_back({format_family(spec), [spec](Context& ctx) {
                                    return singleton_presentation(ctx, spec);
                                  }});
                 }
                 return out;
               }});
  r.push_back({"med-delta0", "Delta_0 = {1, 2} for maximal embedding dimension", false,
               [](const VerifyParams& p) {
                 std::vector<std::vector<Int>> gens{{3, 10, 11}, {4, 5, 6, 7}, {3, 7, 8},
                                                    {4, 9, 10, 11}, {5, 6, 7, 8, 9},
                                                    {5, 11, 12, 13, 14}};
                 if (p.gens) gens = {*p.gens};
                 Instances out;
                 for (const auto& g : first_if(p.quick, gens)) {
                   out.push_back({label_of(g), [g](Context& ctx) {
                                    return med_delta0(ctx, make_semigroup(g).semigroup);
                                  }});
                 }
                 return out;
               }});
  r.push_back({"generalized-arithmetic-delta0",
               "Delta_0 = {1, 2} for generalized arithmetic sequences", false,
               [](const VerifyParams& p) {
                 Instances out;
                 for (const auto& f : first_if(p.quick, std::vector<family::GeneralizedArithmetic>{
                                                            {5, 2, 3, 2}, {7, 3, 2, 3},
                                                            {6, 2, 1, 3}, {8, 1, 3, 4}})) {
                   out.push_back({format_family(f), [f](Context& ctx) {
                                    return generalized_arithmetic(ctx, f);
                                  }});
                 }
                 return out;
               }});
  r.push_back({"three-generated-gluing",
               "three generators: Delta_0 = {1} iff at least two gluing expressions", false,
               [](const VerifyParams& p) {
                 const Int top = p.max_gen.value_or(p.quick ? 15 : 40);
                 Instances out;
                 for (Int c = 4; c <= top; ++c) {
                   out.push_back({"a3=" + std::to_string(c),
                                  [c](Context& ctx) { return gluing_rule(ctx, c); }});
                 }
                 return out;
               }});
  r.push_back({"interval-delta0", "interval construction has Delta_0 = {1..k-1}", false,
               [](const VerifyParams& p) {
                 std::vector<family::Interval> specs;
                 const IntRange k = range_or(p.k, p.quick ? IntRange{2, 2} : IntRange{2, 4});
                 for (Int v : iota_range(k)) specs.push_back({v});
                 return family_instances(specs, Norm::zero);
               }});
  r.push_back({"interval-chain-gluing",
               "every step of the interval construction is a gluing", false,
               [](const VerifyParams& p) {
                 const IntRange k = range_or(p.k, p.quick ? IntRange{3, 3} : IntRange{2, 5});
                 Instances out;
                 for (Int v : iota_range(k)) {
                   out.push_back({"interval:k=" + std::to_string(v),
                                  [v](Context& ctx) { return interval_chain(ctx, v); }});
                 }
                 return out;
               }});
  r.push_back({"gaps-delta0",
               "gap construction: element deltas {k}, {k-1} and the stated trades", false,
               [](const VerifyParams& p) {
                 const IntRange k = range_or(p.k, p.quick ? IntRange{3, 3} : IntRange{3, 10});
                 Instances out;
                 for (Int v : iota_range(k)) {
                   out.push_back({"gaps:k=" + std::to_string(v),
                                  [v](Context& ctx) { return gaps_facts(ctx, v); }});
                 }
                 if (p.extended) {
                   for (Int v : iota_range(k)) {
                     out.push_back({"gaps:k=" + std::to_string(v) + " full Delta_0",
                                    [v](Context& ctx) { return gaps_full_delta0(ctx, v); }});
                   }
                   out.push_back({"gaps:k=16 prefix scan",
                                  [](Context& ctx) { return gaps_prefix_scan(ctx, 16); }});
                 }
                 return out;
               }});
  return r;
}

}  // namespace

std::string_view to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::pass: return "pass";
    case InstanceStatus::fail: return "fail";
    case InstanceStatus::budget: return "budget";
    case InstanceStatus::skipped: return "skipped";
    case InstanceStatus::report: return "report";
  }
  return "?";
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

const Claim* find_claim(std::string_view id) {
  for (const auto& c : claim_registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

json run_claim(Context& ctx, const Claim& claim, const VerifyParams& params) {
  const auto instances = claim.instances(params);
  std::vector<json> rows(instances.size());
  parallel_chunks(instances.size(), ctx.options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      InstanceOutcome o;
      if (ctx.deadline.expired()) {
        o = InstanceOutcome{InstanceStatus::budget, {{"reason", "wall-clock budget exhausted"}}};
      } else {
        try {
          o = instances[i].run(ctx);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::budget_exceeded && e.code() != ErrorCode::cap_exceeded &&
              e.code() != ErrorCode::overflow) {
            throw;
          }
          o = InstanceOutcome{InstanceStatus::budget,
                              {{"code", std::string(to_string(e.code()))}, {"reason", e.what()}}};
        }
      }
      if (claim.report_only && o.status != InstanceStatus::budget) o.status = InstanceStatus::report;
      rows[i] = json{{"instance", instances[i].label},
                     {"status", std::string(to_string(o.status))},
                     {"detail", std::move(o.detail)}};
    }
  });
  json summary{{"pass", 0}, {"fail", 0}, {"budget", 0}, {"skipped", 0}, {"report", 0}};
  for (const auto& row : rows) summary[row["status"].get<std::string>()] =
      summary[row["status"].get<std::string>()].get<int>() + 1;
  return json{{"claim", claim.id},
              {"title", claim.title},
              {"kind", claim.report_only ? "report" : "verified"},
              {"instances", rows},
              {"summary", summary}};
}

}  // namespace nsdelta
