#include "nsdelta/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <utility>

namespace nsdelta {

namespace {

constexpr Int kMaxModulus = Int{1} << 26;

std::string join(std::span<const Int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

void validate_raw(std::span<const Int> raw) {
  if (raw.empty()) throw Error(ErrorCode::empty_generators, "generator list is empty");
  for (Int v : raw) {
    if (v == 0) throw Error(ErrorCode::zero_generator, "generator list contains 0");
    if (v < 0) {
      throw Error(ErrorCode::invalid_argument,
                  "negative generator " + std::to_string(v));
    }
  }
}

}  // namespace

Int AperyTable::max_entry() const noexcept {
  Int best = 0;
  for (Int w : entries_) best = std::max(best, w);
  return best;
}

AperyTable residue_shortest_paths(std::span<const Int> generators, Int modulus) {
  if (modulus <= 0) throw Error(ErrorCode::invalid_argument, "modulus must be positive");
  if (modulus > kMaxModulus) {
    throw Error(ErrorCode::budget_exceeded,
                "residue graph with " + std::to_string(modulus) + " nodes exceeds the limit");
  }
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<Int> dist(m, AperyTable::kUnreachable);
  std::vector<Int> steps;
  for (Int g : generators) {
    if (g % modulus != 0) steps.push_back(g);
  }
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  using Item = std::pair<Int, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[r]) continue;
    for (Int g : steps) {
      const Int nd = checked_add(d, g);
      const auto nr = static_cast<std::size_t>((static_cast<Int>(r) + g) % modulus);
      if (dist[nr] == AperyTable::kUnreachable || nd < dist[nr]) {
        dist[nr] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return AperyTable(modulus, std::move(dist));
}

std::vector<Int> minimal_generating_set(std::span<const Int> raw) {
  validate_raw(raw);
  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.front() == 1) return {1};

  // A generator can only be produced by strictly smaller ones, so test each
  // against the residue table of the ones kept so far.
  std::vector<Int> kept{sorted.front()};
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const Int candidate = sorted[i];
    if (candidate % kept.front() == 0) continue;
    if (kept.size() > 1) {
      AperyTable table = residue_shortest_paths(kept, kept.front());
      if (table.contains(candidate)) continue;
    }
    kept.push_back(candidate);
  }
  return kept;
}

Int frobenius_of(std::span<const Int> generators) {
  std::vector<Int> gens = minimal_generating_set(generators);
  if (gcd_of(gens) != 1) {
    throw Error(ErrorCode::gcd_not_one, "gcd=" + std::to_string(gcd_of(gens)));
  }
  if (gens.front() == 1) return -1;
  const AperyTable table = residue_shortest_paths(gens, gens.front());
  return table.max_entry() - gens.front();
}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw_generators) {
  validate_raw(raw_generators);
  const Int g = gcd_of(raw_generators);
  if (g != 1) {
    throw Error(ErrorCode::gcd_not_one, "gcd=" + std::to_string(g) + " for generators " +
                                            join(raw_generators));
  }
  generators_ = minimal_generating_set(raw_generators);
  if (generators_.size() < 2) {
    throw Error(ErrorCode::invalid_argument,
                "semigroup is the full nonnegative integers (embedding dimension 1)");
  }
  for (Int a : generators_) gen_sum_ = checked_add(gen_sum_, a);

  // The periodicity constant lcm(a_1, g_1 a_2, A) must be representable.
  std::vector<Int> rest(generators_.begin() + 1, generators_.end());
  const Int g1 = gcd_of(rest);
  checked_lcm(checked_lcm(generators_[0], checked_mul(g1, generators_[1])), gen_sum_);

  apery_ = residue_shortest_paths(generators_, generators_.front());
  frobenius_ = apery_.max_entry() - generators_.front();
}

SemigroupBuild make_semigroup(std::span<const Int> raw_generators) {
  NumericalSemigroup s(raw_generators);
  std::vector<Int> removed;
  std::vector<Int> seen;
  for (Int v : raw_generators) {
    const bool is_generator =
        std::binary_search(s.generators().begin(), s.generators().end(), v);
    const bool duplicate = std::find(seen.begin(), seen.end(), v) != seen.end();
    if (!is_generator || duplicate) removed.push_back(v);
    seen.push_back(v);
  }
  std::sort(removed.begin(), removed.end());
  return SemigroupBuild{std::move(s), std::move(removed)};
}

AperyTable apery_set(const NumericalSemigroup& s, Int m) {
  if (m <= 0 || !s.contains(m)) {
    throw Error(ErrorCode::not_member,
                "Apery modulus " + std::to_string(m) + " is not a nonzero element");
  }
  if (m == s.multiplicity()) return s.multiplicity_apery();
  return residue_shortest_paths(s.generators(), m);
}

Int frobenius(const NumericalSemigroup& s) { return s.frobenius(); }

QuotientData quotient_data(const NumericalSemigroup& s, std::size_t index) {
  const auto gens = s.generators();
  if (index >= gens.size()) {
    throw Error(ErrorCode::invalid_argument, "generator index out of range");
  }
  std::vector<Int> others;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j != index) others.push_back(gens[j]);
  }
  QuotientData q;
  q.index = index;
  q.g = gcd_of(others);
  for (Int& v : others) v /= q.g;
  q.quotient_generators = minimal_generating_set(others);
  q.quotient_frobenius = frobenius_of(q.quotient_generators);
  q.inverse = q.g == 1 ? 0 : mod_inverse(gens[index], q.g);
  return q;
}

}  // namespace nsdelta
