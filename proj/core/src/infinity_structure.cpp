#include "nsdelta/infinity_structure.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "nsdelta/parallel.hpp"
#include "nsdelta/reach_set.hpp"

namespace nsdelta {

namespace {

constexpr std::int32_t kNone = std::numeric_limits<std::int32_t>::max();

void require_member(const NumericalSemigroup& s, Int x) {
  if (!s.contains(x)) {
    throw Error(ErrorCode::not_member, std::to_string(x) + " is not in the semigroup");
  }
}

// Least max-coordinate over factorizations of each r <= horizon by `gens`.
std::vector<std::int32_t> min_max_table(std::vector<Int> gens, Int horizon) {
  const auto n = static_cast<std::size_t>(horizon + 1);
  std::vector<std::int32_t> prev(n, kNone), next(n, kNone);
  prev[0] = 0;
  Int layer_gcd = 0;
  std::sort(gens.rbegin(), gens.rend());
  for (Int b : gens) {
    layer_gcd = std::gcd(layer_gcd, b);
    std::fill(next.begin(), next.end(), kNone);
    for (Int r = 0; r <= horizon; r += layer_gcd) {
      std::int32_t best = prev[static_cast<std::size_t>(r)];
      for (Int c = 1; c * b <= r && c < best; ++c) {
        const std::int32_t v = prev[static_cast<std::size_t>(r - c * b)];
        if (v == kNone) continue;
        const auto cand = std::max(static_cast<std::int32_t>(c), v);
        if (cand < best) best = cand;
      }
      next[static_cast<std::size_t>(r)] = best;
    }
    prev.swap(next);
  }
  return prev;
}

bool in_closed(Int lhs_lo, Int value, Int lhs_hi) { return lhs_lo <= value && value <= lhs_hi; }

}  // namespace

std::string_view to_string(CertificateMode mode) {
  return mode == CertificateMode::theorem_backed ? "theorem-backed" : "empirical";
}

StructureConstants structure_constants(const NumericalSemigroup& s) {
  StructureConstants c;
  c.A = s.gen_sum();
  const auto gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const QuotientData q = quotient_data(s, i);
    IndexConstants ic;
    ic.g = q.g;
    ic.quotient = q.quotient_generators;
    ic.quotient_frobenius = q.quotient_frobenius;
    ic.inverse = q.inverse;
    ic.B = ceil_div(checked_mul(q.g, q.quotient_frobenius + 1), gens[i]);
    c.per_index.push_back(std::move(ic));
  }
  c.period = checked_lcm(checked_lcm(gens[0], checked_mul(c.per_index[0].g, gens[1])), c.A);
  return c;
}

InfinityLengths::InfinityLengths(const NumericalSemigroup& s, Int horizon)
    : semigroup_(s), horizon_(horizon) {
  if (horizon < 0) throw Error(ErrorCode::invalid_argument, "negative horizon");
  if (horizon / s.multiplicity() >= kNone) {
    throw Error(ErrorCode::budget_exceeded, "horizon too large for length tables");
  }
  const auto gens = s.generators();
  min_other_.resize(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) others.push_back(gens[j]);
    }
    min_other_[i] = min_max_table(std::move(others), horizon);
  }
}

void InfinityLengths::check(Int x) const {
  if (x < 0 || x > horizon_) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(x) + " is outside the length-table horizon " +
                    std::to_string(horizon_));
  }
}

std::vector<Int> InfinityLengths::dominant_lengths(Int x, std::size_t index) const {
  check(x);
  const auto gens = semigroup_.generators();
  const Int a = gens[index];
  const auto& table = min_other_[index];
  std::vector<Int> out;
  for (Int ell = ceil_div(x, semigroup_.gen_sum()); ell * a <= x; ++ell) {
    if (table[static_cast<std::size_t>(x - ell * a)] <= ell) out.push_back(ell);
  }
  return out;
}

std::vector<Int> InfinityLengths::lengths(Int x) const {
  check(x);
  const auto gens = semigroup_.generators();
  const Int lo = ceil_div(x, semigroup_.gen_sum());
  const Int hi = x / gens[0];
  std::vector<bool> hit(static_cast<std::size_t>(hi - lo + 1), false);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& table = min_other_[i];
    for (Int ell = lo; ell * gens[i] <= x; ++ell) {
      if (table[static_cast<std::size_t>(x - ell * gens[i])] <= ell) {
        hit[static_cast<std::size_t>(ell - lo)] = true;
      }
    }
  }
  std::vector<Int> out;
  for (Int ell = lo; ell <= hi; ++ell) {
    if (hit[static_cast<std::size_t>(ell - lo)]) out.push_back(ell);
  }
  return out;
}

DeltaSet InfinityLengths::delta(Int x) const { return delta_of_sorted_set(lengths(x)); }

Int index_shift_threshold(const NumericalSemigroup& s, std::size_t index, Int B) {
  const auto gens = s.generators();
  Int C = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j != index) C = std::max(C, ceil_div(B + 1, gens[j]));
  }
  const Int a = gens[index];
  return checked_add(checked_add(checked_mul(checked_mul(a, a), C), checked_mul(a, B)), 1);
}

Int sum_shift_threshold(const NumericalSemigroup& s, Int B_prime) {
  const Int A = s.gen_sum();
  Int out = 0;
  for (Int a : s.generators()) {
    const Int num = checked_mul(checked_mul(A, A - a), B_prime);
    out = std::max(out, floor_div(num, a) + 1);
  }
  return out;
}

Int theorem_periodicity_start(const NumericalSemigroup& s, const StructureConstants& c) {
  const auto a = s.generators();
  if (a.size() < 3) return -1;
  const Int g1 = c.per_index[0].g;
  const Int g2 = c.per_index[1].g;
  const Int B1 = c.per_index[0].B;
  const Int B2 = c.per_index[1].B;
  Int start = index_shift_threshold(s, 0, B1 + g1);
  start = std::max(start, index_shift_threshold(s, 1, B2 + g1));
  start = std::max(start, sum_shift_threshold(s, a.back() + g1));
  // (x/a_1 - B_1) - x/a_2 > 3 g_1
  start = std::max(start, floor_div(checked_mul(checked_mul(3 * g1 + B1, a[0]), a[1]),
                                    a[1] - a[0]) + 1);
  // (x/a_2 - B_2) - x/a_3 > 2 g_1 g_2
  start = std::max(start, floor_div(checked_mul(checked_mul(2 * g1 * g2 + B2, a[1]), a[2]),
                                    a[2] - a[1]) + 1);
  return start;
}

namespace {

// Interned Delta_inf(x) for x in [0, horizon].
struct DeltaTable {
  std::vector<std::uint32_t> id;
  std::vector<DeltaSet> sets;
};

DeltaTable compute_delta_table(const NumericalSemigroup& s, Int horizon, unsigned threads) {
  const InfinityLengths engine(s, horizon);
  const auto n = static_cast<std::size_t>(horizon + 1);
  std::vector<std::vector<Int>> raw(n);
  parallel_chunks(n, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t x = begin; x < end; ++x) {
      raw[x] = engine.delta(static_cast<Int>(x)).values;
    }
  });
  DeltaTable table;
  table.id.resize(n);
  std::map<std::vector<Int>, std::uint32_t> intern;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, inserted] = intern.try_emplace(raw[x], static_cast<std::uint32_t>(table.sets.size()));
    if (inserted) table.sets.push_back(DeltaSet{raw[x]});
    table.id[x] = it->second;
  }
  return table;
}

bool periodic_on(const DeltaTable& t, Int from, Int count, Int period) {
  for (Int x = from; x < from + count; ++x) {
    if (t.id[static_cast<std::size_t>(x)] != t.id[static_cast<std::size_t>(x + period)]) {
      return false;
    }
  }
  return true;
}

DeltaSet union_up_to(const DeltaTable& t, Int last) {
  std::vector<bool> used(t.sets.size(), false);
  for (Int x = 0; x <= last; ++x) used[t.id[static_cast<std::size_t>(x)]] = true;
  DeltaSet out;
  for (std::size_t i = 0; i < t.sets.size(); ++i) {
    if (used[i]) out.merge(t.sets[i]);
  }
  return out;
}

}  // namespace

InfinityDeltaResult delta_inf_semigroup(const NumericalSemigroup& s,
                                        const InfinityDeltaOptions& options) {
  if (options.window_periods < 1) {
    throw Error(ErrorCode::invalid_argument, "window_periods must be at least 1");
  }
  const StructureConstants c = structure_constants(s);
  const Int p = c.period;
  const Int W = options.window_periods;
  const Int span = checked_mul(W + 1, p);

  InfinityDeltaResult out;
  auto& cert = out.certificate;
  cert.period = p;
  cert.window_periods = W;
  cert.theorem_start = theorem_periodicity_start(s, c);

  if (cert.theorem_start >= 0 && checked_add(cert.theorem_start, span) <= options.max_elements) {
    const Int horizon = cert.theorem_start + span - 1;
    const DeltaTable table = compute_delta_table(s, horizon, options.threads);
    if (periodic_on(table, cert.theorem_start, W * p, p)) {
      cert.mode = CertificateMode::theorem_backed;
      cert.start = cert.theorem_start;
      cert.horizon = horizon;
      out.delta = union_up_to(table, horizon);
      return out;
    }
    cert.theorem_check_failed = true;
  }

  // Empirical: the first run of W periods on which Delta_inf(x + p) = Delta_inf(x).
  Int horizon = std::max<Int>(4 * p, 4096);
  while (true) {
    horizon = std::min(horizon, options.max_elements);
    if (horizon < span) {
      throw Error(ErrorCode::budget_exceeded,
                  "element budget " + std::to_string(options.max_elements) +
                      " is below the " + std::to_string(W + 1) + " periods of length " +
                      std::to_string(p) + " needed for a certificate");
    }
    const DeltaTable table = compute_delta_table(s, horizon, options.threads);
    Int run = 0;
    for (Int x = 0; x + p <= horizon; ++x) {
      run = table.id[static_cast<std::size_t>(x)] == table.id[static_cast<std::size_t>(x + p)]
                ? run + 1
                : 0;
      if (run == W * p) {
        cert.mode = CertificateMode::empirical;
        cert.start = x - W * p + 1;
        cert.horizon = horizon;
        out.delta = union_up_to(table, horizon);
        return out;
      }
    }
    if (horizon == options.max_elements) {
      throw Error(ErrorCode::budget_exceeded,
                  "no periodicity window found below " + std::to_string(horizon));
    }
    horizon = horizon > options.max_elements / 2 ? options.max_elements : 2 * horizon;
  }
}

bool verify_linf_bounds(const InfinityLengths& engine, Int x) {
  const NumericalSemigroup& s = engine.semigroup();
  require_member(s, x);
  const auto gens = s.generators();
  const Int A = s.gen_sum();
  const Int ak = s.largest_generator();
  const auto k = static_cast<Int>(gens.size());
  const std::vector<Int> all = engine.lengths(x);
  const Int l = all.front();
  if (!in_closed(x, checked_mul(l, A), checked_add(x, checked_mul(ak, A)))) return false;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::vector<Int> dom = engine.dominant_lengths(x, i);
    if (dom.empty()) continue;
    const Int top = checked_mul(dom.back(), gens[i]);
    if (!in_closed(x - checked_mul(checked_mul(k, ak), gens[i]), top, x)) return false;
  }
  return true;
}

bool verify_linf_bounds(const NumericalSemigroup& s, Int x) {
  require_member(s, x);
  return verify_linf_bounds(InfinityLengths(s, x), x);
}

bool verify_aap(const InfinityLengths& engine, const StructureConstants& c, Int x,
                std::size_t index) {
  const NumericalSemigroup& s = engine.semigroup();
  require_member(s, x);
  const Int a = s.generator(index);
  const IndexConstants& ic = c.per_index.at(index);
  const Int residue = (ic.inverse % ic.g) * (x % ic.g) % ic.g;
  const std::vector<Int> dom = engine.dominant_lengths(x, index);
  for (Int ell : dom) {
    if (((ell - residue) % ic.g + ic.g) % ic.g != 0) return false;
  }
  const Int lo = ceil_div(checked_add(x, checked_mul(s.largest_generator(), c.A)), c.A);
  const Int hi = x / a - ic.B;
  for (Int ell = lo; ell <= hi; ++ell) {
    if (((ell - residue) % ic.g + ic.g) % ic.g != 0) continue;
    if (!std::binary_search(dom.begin(), dom.end(), ell)) return false;
  }
  return true;
}

bool verify_aap(const NumericalSemigroup& s, Int x, std::size_t index) {
  require_member(s, x);
  return verify_aap(InfinityLengths(s, x), structure_constants(s), x, index);
}

bool verify_shift(const InfinityLengths& engine, Int x, std::size_t index, Int B, Int B_prime) {
  const NumericalSemigroup& s = engine.semigroup();
  require_member(s, x);
  const Int need_index = index_shift_threshold(s, index, B);
  const Int need_sum = sum_shift_threshold(s, B_prime);
  if (x < need_index || x < need_sum) {
    throw Error(ErrorCode::threshold_not_met,
                "x=" + std::to_string(x) + " is below the shift thresholds " +
                    std::to_string(need_index) + " / " + std::to_string(need_sum));
  }
  const Int a = s.generator(index);
  const Int A = s.gen_sum();

  std::vector<Int> lhs, rhs;
  for (Int ell : engine.dominant_lengths(x + a, index)) {
    if ((ell + B) * a >= x + a) lhs.push_back(ell);
  }
  for (Int ell : engine.dominant_lengths(x, index)) {
    if ((ell + B) * a >= x) rhs.push_back(ell + 1);
  }
  if (lhs != rhs) return false;

  lhs.clear();
  rhs.clear();
  for (Int ell : engine.lengths(x + A)) {
    if ((ell - B_prime) * A <= x + A) lhs.push_back(ell);
  }
  for (Int ell : engine.lengths(x)) {
    if ((ell - B_prime) * A <= x) rhs.push_back(ell + 1);
  }
  return lhs == rhs;
}

bool verify_shift(const NumericalSemigroup& s, Int x, std::size_t index, Int B, Int B_prime) {
  require_member(s, x);
  return verify_shift(InfinityLengths(s, checked_add(x, s.gen_sum())), x, index, B, B_prime);
}

bool verify_interval_decomposition(const InfinityLengths& engine, const StructureConstants& c,
                                   Int x) {
  const NumericalSemigroup& s = engine.semigroup();
  if (s.embedding_dim() < 3) {
    throw Error(ErrorCode::invalid_argument,
                "interval decomposition needs at least three generators");
  }
  require_member(s, x);
  const auto a = s.generators();
  const Int g1 = c.per_index[0].g;
  const Int g2 = c.per_index[1].g;
  const Int B1 = c.per_index[0].B;
  const Int B2 = c.per_index[1].B;

  const std::vector<Int> lengths = engine.lengths(x);
  const DeltaSet delta = delta_of_sorted_set(lengths);
  std::vector<Int> small;
  for (Int d = 1; d <= std::min(g1, g2); ++d) small.push_back(d);
  small.push_back(g1);
  for (Int d : small) {
    if (!delta.contains(d)) return false;
  }
  auto in_region = [&](Int ell) {
    return in_closed(x, ell * c.A, x + a.back() * c.A) ||
           in_closed(x - B2 * a[1], ell * a[1], x) || in_closed(x - B1 * a[0], ell * a[0], x);
  };
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    const Int gap = lengths[i] - lengths[i - 1];
    if (std::find(small.begin(), small.end(), gap) != small.end()) continue;
    if (!in_region(lengths[i - 1]) && !in_region(lengths[i])) return false;
  }
  return true;
}

bool verify_interval_decomposition(const NumericalSemigroup& s, Int x) {
  if (s.embedding_dim() < 3) {
    throw Error(ErrorCode::invalid_argument,
                "interval decomposition needs at least three generators");
  }
  require_member(s, x);
  return verify_interval_decomposition(InfinityLengths(s, x), structure_constants(s), x);
}

DeltaSet residue_class_delta(const NumericalSemigroup& s, Int residue, Int bound) {
  const Int a1 = s.multiplicity();
  if (residue < 0 || residue >= a1) {
    throw Error(ErrorCode::invalid_argument, "residue must lie in [0, a_1)");
  }
  if (bound < 0) return DeltaSet{};
  ReachSet reach = ReachSet::origin(bound);
  const auto gens = s.generators();
  for (std::size_t j = 1; j < gens.size(); ++j) reach.close_under(gens[j]);
  std::vector<Int> members;
  // class elements s = j + q a_1 are indexed by q, the matching length offset
  for (Int v = residue; v <= bound; v += a1) {
    if (reach.test(v)) members.push_back((v - residue) / a1);
  }
  return delta_of_sorted_set(members);
}

bool residue_delta_subset(const NumericalSemigroup& s, Int residue, Int bound,
                          const DeltaSet& delta_inf) {
  const DeltaSet d = residue_class_delta(s, residue, bound);
  return std::includes(delta_inf.values.begin(), delta_inf.values.end(), d.values.begin(),
                       d.values.end());
}

bool residue_delta_subset(const NumericalSemigroup& s, Int residue, Int bound) {
  return residue_delta_subset(s, residue, bound, delta_inf_semigroup(s).delta);
}

}  // namespace nsdelta
