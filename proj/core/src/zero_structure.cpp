#include "nsdelta/zero_structure.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <string>

#include "nsdelta/parallel.hpp"

namespace nsdelta {

namespace {

void require_scan_dim(const NumericalSemigroup& s) {
  if (s.embedding_dim() > kMaxSupportScanDim) {
    throw Error(ErrorCode::budget_exceeded,
                "support scan over 2^" + std::to_string(s.embedding_dim()) +
                    " subsets exceeds the budget");
  }
}

}  // namespace

std::vector<SupportProfile> support_profiles(const NumericalSemigroup& s) {
  require_scan_dim(s);
  const auto gens = s.generators();
  const std::size_t k = gens.size();
  std::vector<SupportProfile> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    std::vector<Int> members;
    Int sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        members.push_back(gens[i]);
        sum = checked_add(sum, gens[i]);
      }
    }
    const Int d = gcd_of(members);
    for (Int& v : members) v /= d;
    const Int f = frobenius_of(members);
    out.push_back(SupportProfile{mask, d, checked_add(checked_mul(d, f + 1), sum)});
  }
  return out;
}

Int delta0_stability_bound(const NumericalSemigroup& s) {
  Int best = 0;
  for (const auto& p : support_profiles(s)) best = std::max(best, p.threshold);
  return best;
}

SupportScanner::SupportScanner(const NumericalSemigroup& s, Int horizon)
    : horizon_(horizon) {
  if (s.embedding_dim() > 31) {
    throw Error(ErrorCode::budget_exceeded, "support sizes above 31 do not fit a length mask");
  }
  if (horizon < 0 || horizon > kMaxScannerHorizon) {
    throw Error(ErrorCode::budget_exceeded, "support tables up to " + std::to_string(horizon) +
                                                " exceed the memory budget");
  }
  // table_[r]: support sizes over factorizations of r using generators 0..t.
  // Adding generator t: sizes with z_t >= 1 are 1 + sizes of r - c a_t, c >= 1,
  // accumulated along each residue chain in `tail`.
  const auto n = static_cast<std::size_t>(horizon) + 1;
  table_.assign(n, 0);
  table_[0] = 1u;
  std::vector<std::uint32_t> tail(n, 0);
  for (Int a : s.generators()) {
    const auto step = static_cast<std::size_t>(a);
    std::fill(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(std::min(step, n)), 0u);
    for (std::size_t r = step; r < n; ++r) tail[r] = table_[r - step] | tail[r - step];
    for (std::size_t r = step; r < n; ++r) table_[r] |= tail[r] << 1;
  }
}

std::uint32_t SupportScanner::zero_length_mask(Int x) const {
  if (x < 0 || x > horizon_) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(x) + " is outside the scanner horizon");
  }
  return table_[static_cast<std::size_t>(x)];
}

LengthSet SupportScanner::zero_lengths(Int x) const {
  LengthSet out{Norm::zero, {}};
  const std::uint32_t mask = zero_length_mask(x);
  for (Int j = 0; j < 32; ++j) {
    if (mask & (std::uint32_t{1} << j)) out.values.push_back(j);
  }
  return out;
}

DeltaSet delta_of_length_mask(std::uint32_t mask) {
  std::vector<Int> diffs;
  Int prev = -1;
  for (Int j = 0; j < 32; ++j) {
    if (!(mask & (std::uint32_t{1} << j))) continue;
    if (prev >= 0) diffs.push_back(j - prev);
    prev = j;
  }
  return make_delta_set(std::move(diffs));
}

ZeroDeltaResult delta0_semigroup_report(const NumericalSemigroup& s,
                                        const ZeroDeltaOptions& options) {
  ZeroDeltaResult out;
  out.stability_bound = delta0_stability_bound(s);
  const Int bound = out.stability_bound;
  if (bound > options.max_elements) {
    throw Error(ErrorCode::budget_exceeded,
                "stability bound " + std::to_string(bound) + " exceeds the element budget " +
                    std::to_string(options.max_elements));
  }
  const SupportScanner scanner(s, bound);

  // Every gap pattern is a function of the length mask, so collect masks.
  std::mutex merge_mutex;
  std::vector<std::uint32_t> masks;
  parallel_chunks(static_cast<std::size_t>(bound + 1), options.threads,
                  [&](std::size_t begin, std::size_t end) {
                    std::vector<std::uint32_t> local;
                    for (std::size_t x = begin; x < end; ++x) {
                      const auto xi = static_cast<Int>(x);
                      if (!s.contains(xi)) continue;
                      const std::uint32_t m = scanner.zero_length_mask(xi);
                      if (std::popcount(m) >= 2) local.push_back(m);
                    }
                    std::sort(local.begin(), local.end());
                    local.erase(std::unique(local.begin(), local.end()), local.end());
                    std::lock_guard lock(merge_mutex);
                    masks.insert(masks.end(), local.begin(), local.end());
                  });
  out.delta = DeltaSet{{1}};
  for (std::uint32_t m : masks) out.delta.merge(delta_of_length_mask(m));
  out.elements_scanned = bound + 1;
  return out;
}

bool check_L0_interval(const NumericalSemigroup& s, Int x) {
  if (!s.contains(x)) {
    throw Error(ErrorCode::not_member, std::to_string(x) + " is not in the semigroup");
  }
  const SupportScanner scanner(s, x);
  const DeltaSet d = delta_of_length_mask(scanner.zero_length_mask(x));
  return d.empty() || d == DeltaSet{{1}};
}

}  // namespace nsdelta
