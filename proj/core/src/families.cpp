#include "nsdelta/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

namespace nsdelta {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::invalid_argument, what); }

DeltaSet interval_set(Int lo, Int hi) {
  DeltaSet d;
  for (Int v = lo; v <= hi; ++v) d.values.push_back(v);
  return d;
}

Int parse_int(const std::string& text) {
  Int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) bad("not an integer: '" + text + "'");
  return value;
}

using Params = std::map<std::string, std::vector<Int>>;

Params parse_params(const std::string& body) {
  Params params;
  std::string current;
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    const std::size_t comma = std::min(body.find(',', pos), body.size());
    const std::string token = body.substr(pos, comma - pos);
    const std::size_t eq = token.find('=');
    if (eq != std::string::npos) {
      current = token.substr(0, eq);
      if (params.count(current)) bad("duplicate parameter '" + current + "'");
      params[current].push_back(parse_int(token.substr(eq + 1)));
    } else {
      // A bare value continues the previous key's list.
      if (current.empty()) bad("value '" + token + "' has no parameter name");
      params[current].push_back(parse_int(token));
    }
    pos = comma + 1;
  }
  return params;
}

Int scalar(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) bad("missing parameter '" + key + "'");
  if (it->second.size() != 1) bad("parameter '" + key + "' takes one value");
  return it->second.front();
}

std::vector<Int> list(const Params& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) bad("missing parameter '" + key + "'");
  return it->second;
}

void expect_keys(const Params& params, std::initializer_list<const char*> allowed) {
  for (const auto& [key, values] : params) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; })) {
      bad("unknown parameter '" + key + "'");
    }
  }
}

std::string join(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Int ipow(Int base, Int exp) {
  Int out = 1;
  for (Int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::pair<Int, Int> interval_seeds(const family::Interval& f) {
  if (f.seed1 != 0 || f.seed2 != 0) return {f.seed1, f.seed2};
  const Int p1 = least_prime_above(f.k);
  return {p1, least_prime_above(p1)};
}

}  // namespace

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Int least_prime_above(Int n) {
  Int c = std::max<Int>(n + 1, 2);
  while (!is_prime(c)) c = checked_add(c, 1);
  return c;
}

FamilySpec parse_family(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const Params params = colon == std::string::npos ? Params{} : parse_params(text.substr(colon + 1));
  FamilySpec spec;
  if (name == "geometric") {
    expect_keys(params, {"a", "b", "k"});
    spec = family::Geometric{scalar(params, "a"), scalar(params, "b"), scalar(params, "k")};
  } else if (name == "supersymmetric") {
    expect_keys(params, {"p"});
    spec = family::Supersymmetric{list(params, "p")};
  } else if (name == "arithmetic") {
    expect_keys(params, {"a", "d", "k"});
    spec = family::Arithmetic{scalar(params, "a"), scalar(params, "d"), scalar(params, "k")};
  } else if (name == "generalized_arithmetic" || name == "generalized-arithmetic") {
    expect_keys(params, {"a", "h", "d", "k"});
    spec = family::GeneralizedArithmetic{scalar(params, "a"), scalar(params, "h"),
                                         scalar(params, "d"), scalar(params, "k")};
  } else if (name == "med" || name == "med_check" || name == "med-check") {
    expect_keys(params, {"gens"});
    spec = family::MedCheck{list(params, "gens")};
  } else if (name == "three_gap" || name == "three-gap") {
    expect_keys(params, {"m"});
    spec = family::ThreeGap{scalar(params, "m")};
  } else if (name == "interval") {
    expect_keys(params, {"k", "seeds"});
    family::Interval f{scalar(params, "k")};
    if (params.count("seeds")) {
      const auto seeds = list(params, "seeds");
      if (seeds.size() != 2) bad("interval takes exactly two seeds");
      f.seed1 = seeds[0];
      f.seed2 = seeds[1];
    }
    spec = f;
  } else if (name == "gaps") {
    expect_keys(params, {"k"});
    spec = family::Gaps{scalar(params, "k")};
  } else {
    bad("unknown family '" + name + "'");
  }
  validate_family(spec);
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const family::Geometric& f) {
            return "geometric:a=" + std::to_string(f.a) + ",b=" + std::to_string(f.b) +
                   ",k=" + std::to_string(f.k);
          },
          [](const family::Supersymmetric& f) { return "supersymmetric:p=" + join(f.p); },
          [](const family::Arithmetic& f) {
            return "arithmetic:a=" + std::to_string(f.a) + ",d=" + std::to_string(f.d) +
                   ",k=" + std::to_string(f.k);
          },
          [](const family::GeneralizedArithmetic& f) {
            return "generalized_arithmetic:a=" + std::to_string(f.a) +
                   ",h=" + std::to_string(f.h) + ",d=" + std::to_string(f.d) +
                   ",k=" + std::to_string(f.k);
          },
          [](const family::MedCheck& f) { return "med:gens=" + join(f.generators); },
          [](const family::ThreeGap& f) { return "three_gap:m=" + std::to_string(f.m); },
          [](const family::Interval& f) {
            const auto [p1, p2] = interval_seeds(f);
            return "interval:k=" + std::to_string(f.k) + ",seeds=" + std::to_string(p1) + "," +
                   std::to_string(p2);
          },
          [](const family::Gaps& f) { return "gaps:k=" + std::to_string(f.k); },
      },
      spec);
}

void validate_family(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const family::Geometric& f) {
            if (f.k < 2) bad("geometric needs k >= 2");
            if (f.a < 2 || f.a >= f.b) bad("geometric needs 2 <= a < b");
            if (std::gcd(f.a, f.b) != 1) bad("geometric needs gcd(a, b) = 1");
          },
          [](const family::Supersymmetric& f) {
            if (f.p.size() < 2) bad("supersymmetric needs at least two factors");
            for (std::size_t i = 0; i < f.p.size(); ++i) {
              if (f.p[i] < 1) bad("supersymmetric factors must be positive");
              if (i > 0 && f.p[i] >= f.p[i - 1]) bad("supersymmetric factors must decrease");
              for (std::size_t j = 0; j < i; ++j) {
                if (std::gcd(f.p[i], f.p[j]) != 1) bad("supersymmetric factors must be coprime");
              }
            }
          },
          [](const family::Arithmetic& f) {
            if (f.k < 2 || f.k >= f.a) bad("arithmetic needs 2 <= k < a");
            if (f.d < 1 || std::gcd(f.a, f.d) != 1) bad("arithmetic needs d >= 1, gcd(a, d) = 1");
          },
          [](const family::GeneralizedArithmetic& f) {
            if (f.k < 2 || f.k >= f.a) bad("generalized arithmetic needs 2 <= k < a");
            if (f.h < 1) bad("generalized arithmetic needs h >= 1");
            if (f.d < 1 || std::gcd(f.a, f.d) != 1) {
              bad("generalized arithmetic needs d >= 1, gcd(a, d) = 1");
            }
          },
          [](const family::MedCheck& f) {
            const NumericalSemigroup s(f.generators);
            if (!is_max_embedding_dimension(s)) {
              bad("generators do not form a maximal embedding dimension semigroup");
            }
          },
          [](const family::ThreeGap& f) {
            if (f.m < 3) bad("three_gap needs m >= 3");
          },
          [](const family::Interval& f) {
            if (f.k < 2) bad("interval needs k >= 2");
            const auto [p1, p2] = interval_seeds(f);
            if (p1 == p2 || !is_prime(p1) || !is_prime(p2) || p1 <= f.k || p2 <= f.k) {
              bad("interval seeds must be distinct primes above k");
            }
          },
          [](const family::Gaps& f) {
            if (f.k < 3) bad("gaps needs k >= 3");
          },
      },
      spec);
}

std::vector<ChainStep> construction_chain(const FamilySpec& spec) {
  std::vector<ChainStep> steps;
  if (const auto* f = std::get_if<family::Interval>(&spec)) {
    const auto [p1, p2] = interval_seeds(*f);
    std::vector<Int> gens{p1, p2};
    for (Int i = 3; i <= f->k; ++i) {
      Int added = checked_mul(f->k + 1 - i, gens[0]);
      for (std::size_t j = 1; j < gens.size(); ++j) added = checked_add(added, gens[j]);
      const Int prime = least_prime_above(added);
      steps.push_back(ChainStep{gens, prime, added});
      for (Int& g : gens) g = checked_mul(g, prime);
      gens.push_back(added);
    }
  } else if (const auto* f = std::get_if<family::Gaps>(&spec)) {
    std::vector<Int> gens{2, 3};
    for (Int i = 3; i <= f->k; ++i) {
      const std::size_t n = gens.size();
      const Int added = checked_add(checked_mul(2, gens[n - 2]), gens[n - 1]);
      steps.push_back(ChainStep{gens, 2, added});
      for (Int& g : gens) g = checked_mul(g, 2);
      gens.push_back(added);
    }
    Int total = 0;
    for (Int g : gens) total = checked_add(total, g);
    steps.push_back(ChainStep{gens, 2, total});
  }
  return steps;
}

std::vector<Int> family_generators(const FamilySpec& spec) {
  validate_family(spec);
  return std::visit(
      overloaded{
          [](const family::Geometric& f) {
            std::vector<Int> g;
            for (Int i = 1; i <= f.k; ++i) {
              g.push_back(checked_mul(ipow(f.a, f.k - i), ipow(f.b, i - 1)));
            }
            return g;
          },
          [](const family::Supersymmetric& f) {
            Int total = 1;
            for (Int p : f.p) total = checked_mul(total, p);
            std::vector<Int> g;
            for (Int p : f.p) g.push_back(total / p);
            return g;
          },
          [](const family::Arithmetic& f) {
            std::vector<Int> g;
            for (Int i = 0; i <= f.k; ++i) g.push_back(checked_add(f.a, checked_mul(i, f.d)));
            return g;
          },
          [](const family::GeneralizedArithmetic& f) {
            std::vector<Int> g{f.a};
            for (Int i = 1; i <= f.k; ++i) {
              g.push_back(checked_add(checked_mul(f.a, f.h), checked_mul(i, f.d)));
            }
            return g;
          },
          [](const family::MedCheck& f) { return f.generators; },
          [](const family::ThreeGap& f) {
            return std::vector<Int>{3, checked_add(checked_mul(3, f.m), 1),
                                    checked_add(checked_mul(3, f.m), 2)};
          },
          [&spec](const family::Interval& f) {
            const auto steps = construction_chain(spec);
            if (steps.empty()) {
              const auto [p1, p2] = interval_seeds(f);
              return std::vector<Int>{p1, p2};
            }
            std::vector<Int> g = steps.back().previous;
            for (Int& v : g) v *= steps.back().scale;
            g.push_back(steps.back().added);
            return g;
          },
          [&spec](const family::Gaps&) {
            const auto steps = construction_chain(spec);
            std::vector<Int> g = steps.back().previous;
            for (Int& v : g) v *= steps.back().scale;
            g.push_back(steps.back().added);
            return g;
          },
      },
      spec);
}

NumericalSemigroup construct_family(const FamilySpec& spec) {
  return NumericalSemigroup(family_generators(spec));
}

bool DeltaConstraint::satisfied_by(const DeltaSet& d) const {
  for (Int v : required) {
    if (!d.contains(v)) return false;
  }
  std::vector<Int> window;
  for (Int v : d.values) {
    if (v >= window_lo && v <= window_hi) window.push_back(v);
  }
  return window == window_expected;
}

PredictedDelta predicted_delta(const FamilySpec& spec, Norm p) {
  validate_family(spec);
  PredictedDelta out;
  auto exact = [&](DeltaSet d) {
    out.kind = PredictedDelta::Kind::exact;
    out.exact = std::move(d);
  };
  if (p == Norm::one) return out;
  const bool zero = p == Norm::zero;
  std::visit(
      overloaded{
          [&](const family::Geometric& f) { exact(zero ? DeltaSet{{1}} : interval_set(1, f.b)); },
          [&](const family::Supersymmetric& f) {
            exact(zero ? DeltaSet{{1}} : interval_set(1, f.p.front()));
          },
          [&](const family::Arithmetic& f) {
            const Int q = (f.a - 1) / f.k;
            exact(zero ? DeltaSet{{1, 2}} : interval_set(1, q + f.d + 1));
          },
          [&](const family::GeneralizedArithmetic& f) {
            if (zero) {
              exact(DeltaSet{{1, 2}});
            } else if (f.h == 1) {
              exact(interval_set(1, (f.a - 1) / f.k + f.d + 1));
            }
          },
          [&](const family::MedCheck&) {
            if (zero) exact(DeltaSet{{1, 2}});
          },
          [&](const family::ThreeGap& f) {
            if (zero) {
              exact(DeltaSet{{1, 2}});
            } else {
              DeltaSet d = interval_set(1, f.m + 1);
              d.merge(DeltaSet{{2 * f.m, 2 * f.m + 1}});
              exact(std::move(d));
            }
          },
          [&](const family::Interval& f) {
            if (zero) exact(interval_set(1, f.k - 1));
          },
          [&](const family::Gaps& f) {
            if (!zero) return;
            out.kind = PredictedDelta::Kind::constraint;
            auto& c = out.constraint;
            c.required = {f.k - 1, f.k};
            c.window_lo = ceil_div(7 * f.k, 8);
            c.window_hi = f.k;
            for (Int v : c.required) {
              if (v >= c.window_lo) c.window_expected.push_back(v);
            }
            c.asserted_from_k = 16;
          },
      },
      spec);
  return out;
}

bool is_max_embedding_dimension(const NumericalSemigroup& s) {
  return s.multiplicity() >= 3 && static_cast<Int>(s.embedding_dim()) == s.multiplicity();
}

bool is_gluing(Int t1, std::span<const Int> s1, Int t2, std::span<const Int> s2) {
  if (t1 < 1 || t2 < 1 || std::gcd(t1, t2) != 1) return false;
  auto member_non_generator = [](Int t, std::span<const Int> gens) {
    const std::vector<Int> minimal = minimal_generating_set(gens);
    if (std::find(minimal.begin(), minimal.end(), t) != minimal.end()) return false;
    if (minimal.front() == 1) return true;
    return residue_shortest_paths(minimal, minimal.front()).contains(t);
  };
  return member_non_generator(t1, s2) && member_non_generator(t2, s1);
}

}  // namespace nsdelta
