#include "nsdelta_cli/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "nsdelta/families.hpp"
#include "nsdelta/presentations.hpp"
#include "nsdelta_cli/claims.hpp"
#include "nsdelta_cli/search.hpp"

namespace nsdelta {

namespace {

struct CsvRow {
  std::string x;
  std::string invariant;
  std::string value;
};

struct CommandOutput {
  json input = json::object();
  json result = json::object();
  std::optional<json> certificate;
  std::vector<CsvRow> rows;  // sweep rows; empty means flatten `result`
  int exit_code = exit_ok;
};

std::string csv_cell(const json& v) {
  std::string text;
  if (v.is_string()) {
    text = v.get<std::string>();
  } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) {
               return e.is_primitive();
             })) {
    for (std::size_t i = 0; i < v.size(); ++i) text += (i ? ";" : "") + csv_cell(v[i]);
  } else {
    text = v.dump();
  }
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& out, const CommandOutput& o) {
  out << "x,invariant,value\n";
  if (!o.rows.empty()) {
    for (const auto& r : o.rows) out << r.x << ',' << r.invariant << ',' << r.value << '\n';
    return;
  }
  for (const auto& [key, value] : o.result.items()) out << ',' << key << ',' << csv_cell(value) << '\n';
}

// ---- compute ---------------------------------------------------------------

std::vector<Int> lengths_of(Context& ctx, const NumericalSemigroup& s, Int x, Norm p,
                            Int* count) {
  if (!s.contains(x)) {
    throw Error(ErrorCode::not_member, std::to_string(x) + " is not in the semigroup");
  }
  const auto zs =
      enumerate_factorizations(s, x, static_cast<std::size_t>(ctx.options.budget_factorizations));
  std::vector<Int> lengths;
  for (const auto& z : zs) lengths.push_back(p_length(z, p));
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  *count = static_cast<Int>(zs.size());
  return lengths;
}

struct ComputeArgs {
  std::string gens;
  std::string x;
  std::string p = "inf";
  Int m = 0;
  Int window = 2;
};

CommandOutput compute(Context& ctx, const std::string& what, const ComputeArgs& a) {
  CommandOutput o;
  const auto build = make_semigroup(parse_int_list(a.gens));
  const NumericalSemigroup& s = build.semigroup;
  o.input = {{"generators", generator_list(s)}};
  if (!build.removed.empty()) o.input["removed"] = build.removed;

  auto need_x = [&]() {
    if (a.x.empty()) throw Error(ErrorCode::invalid_argument, what + " needs --x");
    const IntRange r = parse_range(a.x);
    o.input["x"] = r.lo == r.hi ? json(r.lo) : json(a.x);
    return r;
  };

  if (what == "membership") {
    const IntRange r = need_x();
    json members = json::array();
    for (Int x = r.lo; x <= r.hi; ++x) {
      const bool in = s.contains(x);
      if (in) members.push_back(x);
      o.rows.push_back({std::to_string(x), "member", in ? "true" : "false"});
    }
    if (r.lo == r.hi) o.result = {{"x", r.lo}, {"member", s.contains(r.lo)}};
    else o.result = {{"members", members}};
  } else if (what == "apery") {
    const Int m = a.m ? a.m : s.multiplicity();
    o.input["m"] = m;
    const AperyTable t = apery_set(s, m);
    o.result = {{"apery", t}};
    for (std::size_t r = 0; r < t.entries().size(); ++r) {
      o.rows.push_back({std::to_string(r), "apery", std::to_string(t.entries()[r])});
    }
  } else if (what == "frobenius") {
    o.result = {{"frobenius", s.frobenius()}};
  } else if (what == "betti") {
    o.result = {{"betti", betti_elements(s)}};
  } else if (what == "presentation") {
    const auto pres = minimal_presentation(s);
    o.result = {{"presentation", pres},
                {"singleton_support", singleton_support_presentation_exists(s)}};
  } else if (what == "lengths" || what == "delta") {
    const Norm p = parse_norm(a.p);
    o.input["p"] = std::string(to_string(p));
    const IntRange r = need_x();
    json elements = json::array();
    for (Int x = r.lo; x <= r.hi; ++x) {
      if (r.lo != r.hi && !s.contains(x)) continue;
      Int count = 0;
      const auto lengths = lengths_of(ctx, s, x, p, &count);
      const auto delta = delta_of_sorted_set(lengths);
      json e{{"x", x}, {"lengths", lengths}, {"factorizations", count}};
      if (what == "delta") e["delta"] = delta;
      o.rows.push_back({std::to_string(x), "lengths", csv_cell(json(lengths))});
      if (what == "delta") o.rows.push_back({std::to_string(x), "delta", csv_cell(json(delta))});
      elements.push_back(std::move(e));
    }
    if (r.lo == r.hi) o.result = elements.at(0);
    else o.result = {{"elements", elements}};
  } else if (what == "delta-semigroup") {
    const Norm p = parse_norm(a.p);
    o.input["p"] = std::string(to_string(p));
    if (p == Norm::infinity) {
      o.input["window_periods"] = a.window;
      const auto r = delta_inf_cached(ctx, s, a.window);
      o.result = {{"delta", r.delta}, {"certificate", r.certificate}};
      o.certificate = json(r.certificate);
    } else if (p == Norm::zero) {
      const auto r = delta0_cached(ctx, s);
      o.result = {{"delta", r.delta}, {"stability_bound", r.stability_bound}};
      o.certificate = json{{"stability_bound", r.stability_bound},
                           {"elements_scanned", r.elements_scanned}};
    } else {
      throw Error(ErrorCode::invalid_argument, "delta-semigroup supports --p 0 and --p inf");
    }
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown compute target '" + what + "'");
  }
  return o;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  std::string gens, x, m, k;
  Int max_gen = 0;
  bool quick = false;
  bool extended = false;
  Int window = 2;
};

CommandOutput verify(Context& ctx, const VerifyArgs& a) {
  CommandOutput o;
  VerifyParams p;
  if (!a.gens.empty()) p.gens = parse_int_list(a.gens);
  if (!a.x.empty()) p.x = parse_range(a.x);
  if (!a.m.empty()) p.m = parse_range(a.m);
  if (!a.k.empty()) p.k = parse_range(a.k);
  if (a.max_gen > 0) p.max_gen = a.max_gen;
  p.quick = a.quick;
  p.extended = a.extended;
  p.window_periods = a.window;
  o.input = {{"claim", a.claim}, {"quick", a.quick}, {"extended", a.extended}};
  for (const auto& [key, text] : {std::pair{"gens", &a.gens}, std::pair{"x", &a.x},
                                  std::pair{"m", &a.m}, std::pair{"k", &a.k}}) {
    if (!text->empty()) o.input[key] = *text;
  }
  if (a.max_gen > 0) o.input["max_gen"] = a.max_gen;

  if (a.claim == "list") {
    json claims = json::array();
    for (const auto& c : claim_registry()) {
      claims.push_back({{"id", c.id}, {"title", c.title},
                        {"kind", c.report_only ? "report" : "verified"}});
      o.rows.push_back({"", c.id, csv_cell(json(c.title))});
    }
    o.result = {{"claims", claims}};
    return o;
  }
  std::vector<const Claim*> selected;
  if (a.claim == "all") {
    for (const auto& c : claim_registry()) selected.push_back(&c);
  } else if (const Claim* c = find_claim(a.claim)) {
    selected.push_back(c);
  } else {
    throw Error(ErrorCode::invalid_argument,
                "unknown claim '" + a.claim + "' (see 'verify list')");
  }
  json reports = json::array();
  json total{{"pass", 0}, {"fail", 0}, {"budget", 0}, {"skipped", 0}, {"report", 0}};
  for (const Claim* c : selected) {
    json r = run_claim(ctx, *c, p);
    for (const auto& [key, n] : r["summary"].items()) total[key] = total[key].get<int>() + n.get<int>();
    for (const auto& row : r["instances"]) {
      o.rows.push_back({csv_cell(row["instance"]), c->id, row["status"].get<std::string>()});
    }
    reports.push_back(std::move(r));
  }
  o.result = selected.size() == 1 ? reports[0] : json{{"claims", reports}, {"summary", total}};
  if (selected.size() != 1) o.result["summary"] = total;
  if (total["fail"].get<int>() > 0) o.exit_code = exit_falsified;
  else if (total["budget"].get<int>() > 0) o.exit_code = exit_budget;
  return o;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::string target;
  std::string p = "inf";
  std::size_t min_dim = 2;
  std::size_t max_dim = 3;
  Int max_gen = 30;
  Int max_candidates = 100'000;
  std::size_t max_hits = 50;
};

CommandOutput search(Context& ctx, const SearchArgs& a) {
  CommandOutput o;
  SearchParams p;
  p.target = make_delta_set(parse_int_list(a.target));
  p.p = parse_norm(a.p);
  p.min_dim = a.min_dim;
  p.max_dim = a.max_dim;
  p.max_gen = a.max_gen;
  p.max_candidates = a.max_candidates;
  p.max_hits = a.max_hits;
  o.input = {{"target", p.target}, {"p", std::string(to_string(p.p))}};
  o.result = search_delta(ctx, p);
  for (const auto& hit : o.result["hits"]) {
    o.rows.push_back({"", "hit", csv_cell(hit["generators"])});
  }
  for (const auto& hit : o.result["hits"]) {
    if (!hit["reverified"].get<bool>()) o.exit_code = exit_falsified;
  }
  if (o.exit_code == exit_ok && !o.result["over_budget"].empty()) o.exit_code = exit_budget;
  return o;
}

// ---- family ----------------------------------------------------------------

json prediction_json(const PredictedDelta& pred) {
  switch (pred.kind) {
    case PredictedDelta::Kind::exact: return {{"kind", "exact"}, {"delta", pred.exact}};
    case PredictedDelta::Kind::constraint:
      return {{"kind", "constraint"},
              {"required", pred.constraint.required},
              {"window", {pred.constraint.window_lo, pred.constraint.window_hi}},
              {"window_expected", pred.constraint.window_expected},
              {"asserted_from_k", pred.constraint.asserted_from_k}};
    case PredictedDelta::Kind::unspecified: return {{"kind", "unspecified"}};
  }
  return nullptr;
}

CommandOutput family_cmd(Context& ctx, const std::string& text, const std::string& p_text,
                         bool run_verify) {
  CommandOutput o;
  const FamilySpec spec = parse_family(text);
  const NumericalSemigroup s = construct_family(spec);
  std::vector<Norm> norms;
  if (p_text == "both") norms = {Norm::infinity, Norm::zero};
  else norms = {parse_norm(p_text)};
  o.input = {{"family", format_family(spec)}, {"p", p_text}, {"verify", run_verify}};
  o.result = {{"family", format_family(spec)},
              {"construction_order", family_generators(spec)},
              {"generators", generator_list(s)}};
  json predictions = json::object();
  bool mismatch = false;
  for (Norm p : norms) {
    const std::string key(to_string(p));
    if (p == Norm::one) throw Error(ErrorCode::invalid_argument, "family supports --p 0, inf or both");
    const auto pred = predicted_delta(spec, p);
    json entry{{"prediction", prediction_json(pred)}};
    if (run_verify) {
      DeltaSet got;
      if (p == Norm::infinity) {
        const auto r = delta_inf_cached(ctx, s);
        got = r.delta;
        entry["certificate"] = r.certificate;
      } else {
        const auto r = delta0_cached(ctx, s);
        got = r.delta;
        entry["stability_bound"] = r.stability_bound;
      }
      entry["computed"] = got;
      std::string status = "report";
      if (pred.kind == PredictedDelta::Kind::exact) {
        status = got == pred.exact ? "pass" : "fail";
      } else if (pred.kind == PredictedDelta::Kind::constraint) {
        const bool asserted = [&] {
          if (const auto* g = std::get_if<family::Gaps>(&spec)) {
            return g->k >= pred.constraint.asserted_from_k;
          }
          return true;
        }();
        const bool ok = pred.constraint.satisfied_by(got);
        status = asserted ? (ok ? "pass" : "fail") : "report";
        entry["constraint_holds"] = ok;
      }
      entry["status"] = status;
      mismatch = mismatch || status == "fail";
      o.rows.push_back({"", "delta_" + key, csv_cell(json(got))});
      o.rows.push_back({"", "status_" + key, status});
    }
    predictions[key] = std::move(entry);
  }
  o.result["norms"] = predictions;
  if (mismatch) o.exit_code = exit_falsified;
  return o;
}

// ---- driver ----------------------------------------------------------------

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::budget_exceeded:
    case ErrorCode::cap_exceeded:
      return exit_budget;
    default:
      return exit_error;
  }
}

void emit(std::ostream& out, const GlobalOptions& g, const json& doc) {
  out << (g.pretty ? doc.dump(2) : doc.dump()) << '\n';
}

}  // namespace

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta sets of numerical semigroups under the 0- and infinity-norms", "nsdelta"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  if (const char* env = std::getenv("NSDELTA_CACHE_DIR")) g.cache_dir = env;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--pretty", g.pretty, "Indent JSON output");
  app.add_option("--budget-elements", g.budget_elements, "Largest element range to scan");
  app.add_option("--budget-factorizations", g.budget_factorizations,
                 "Largest factorization count to enumerate for one element");
  app.add_option("--budget-seconds", g.budget_seconds, "Wall-clock limit for sweeps (0: none)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir,
                 "Result cache directory (default: $NSDELTA_CACHE_DIR, else off)");

  ComputeArgs ca;
  std::string compute_what;
  auto* compute_cmd = app.add_subcommand("compute", "Compute one invariant of a semigroup");
  compute_cmd->add_option("--gens", ca.gens, "Comma-separated generators")->required();
  compute_cmd->require_subcommand(1);
  for (const char* what : {"membership", "apery", "frobenius", "betti", "presentation",
                           "lengths", "delta", "delta-semigroup"}) {
    auto* sub = compute_cmd->add_subcommand(what);
    sub->callback([&compute_what, what] { compute_what = what; });
    const std::string w = what;
    if (w == "membership" || w == "lengths" || w == "delta") {
      sub->add_option("--x", ca.x, "Element or range a..b")->required();
    }
    if (w == "lengths" || w == "delta" || w == "delta-semigroup") {
      sub->add_option("--p", ca.p, "Norm: 0, 1 or inf");
    }
    if (w == "apery") sub->add_option("--m", ca.m, "Element of S (default: multiplicity)");
    if (w == "delta-semigroup") {
      sub->add_option("--window", ca.window, "Periods in the empirical window")
          ->check(CLI::PositiveNumber);
    }
  }

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Check a registered claim ('list', 'all')");
  verify_cmd->add_option("claim", va.claim, "Claim id, 'all' or 'list'")->required();
  verify_cmd->add_option("--gens", va.gens, "Use this semigroup where a claim takes one");
  verify_cmd->add_option("--x", va.x, "Element range a..b");
  verify_cmd->add_option("--m", va.m, "Parameter range for m");
  verify_cmd->add_option("--k", va.k, "Parameter range for k");
  verify_cmd->add_option("--max-gen", va.max_gen, "Largest generator for exhaustive scans");
  verify_cmd->add_flag("--quick", va.quick, "Smallest parameter instance only");
  verify_cmd->add_flag("--extended", va.extended, "Add expensive instances");
  verify_cmd->add_option("--window", va.window, "Periods in the periodicity window")
      ->check(CLI::PositiveNumber);

  SearchArgs sa;
  auto* search_cmd = app.add_subcommand("search", "Find semigroups with a given delta set");
  search_cmd->add_option("--target", sa.target, "Target set, comma-separated")->required();
  search_cmd->add_option("--p", sa.p, "Norm: 0 or inf");
  search_cmd->add_option("--min-dim", sa.min_dim, "Smallest embedding dimension");
  search_cmd->add_option("--max-dim", sa.max_dim, "Largest embedding dimension");
  search_cmd->add_option("--max-gen", sa.max_gen, "Largest generator");
  search_cmd->add_option("--max-candidates", sa.max_candidates, "Candidate limit");
  search_cmd->add_option("--max-hits", sa.max_hits, "Hits listed in the report");

  std::string family_text, family_p = "both";
  bool family_no_verify = false;
  auto* family_cmd_opt =
      app.add_subcommand("family", "Construct a family member, predict and check its delta sets");
  family_cmd_opt->add_option("spec", family_text, "e.g. geometric:a=2,b=3,k=3")->required();
  family_cmd_opt->add_option("--p", family_p, "0, inf or both");
  family_cmd_opt->add_flag("--no-verify", family_no_verify, "Construct and predict only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream diag;
    const int code = app.exit(e, out, diag);
    err << diag.str();
    return code == 0 ? exit_ok : exit_error;
  }

  std::string command;
  Context ctx(g);
  try {
    CommandOutput o;
    if (compute_cmd->parsed()) {
      command = "compute " + compute_what;
      o = compute(ctx, compute_what, ca);
    } else if (verify_cmd->parsed()) {
      command = "verify";
      o = verify(ctx, va);
    } else if (search_cmd->parsed()) {
      command = "search";
      o = search(ctx, sa);
    } else {
      command = "family";
      o = family_cmd(ctx, family_text, family_p, !family_no_verify);
    }
    if (g.format == "csv") {
      write_csv(out, o);
    } else {
      json doc{{"schema_version", kSchemaVersion},
               {"command", command},
               {"input", o.input},
               {"result", o.result},
               {"timing", {{"seconds", ctx.deadline.elapsed()}}},
               {"budget", ctx.budget_report()}};
      if (o.certificate) doc["certificate"] = *o.certificate;
      emit(out, g, doc);
    }
    return o.exit_code;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    if (g.format == "json") {
      emit(out, g, json{{"schema_version", kSchemaVersion},
                        {"command", command},
                        {"error", {{"code", std::string(to_string(e.code()))},
                                   {"message", e.what()}}}});
    }
    return exit_for(e);
  }
}

}  // namespace nsdelta
