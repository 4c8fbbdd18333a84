#pragma once

#include <cstdint>
#include <vector>

#include "nsdelta/factorizations.hpp"
#include "nsdelta/reach_set.hpp"

namespace nsdelta {

// For a support set I: if d_I | x and x >= threshold, some factorization of x
// has support exactly I.
struct SupportProfile {
  std::uint32_t support = 0;  // bit i set for generator i
  Int divisor = 0;            // gcd of the generators in I
  Int threshold = 0;          // d_I (F(<a_i / d_I>) + 1) + sum of a_i over I
};

inline constexpr std::size_t kMaxSupportScanDim = 24;

std::vector<SupportProfile> support_profiles(const NumericalSemigroup& s);

// X0 = max threshold over all nonempty supports; L_0(x) is an interval for
// every x >= X0.
Int delta0_stability_bound(const NumericalSemigroup& s);

// Largest horizon a SupportScanner accepts (two 32-bit words per element
// while building).
inline constexpr Int kMaxScannerHorizon = Int{1} << 28;

// Support sizes of Z(x) for every x up to a horizon, built generator by
// generator in O(k * horizon) time without enumerating factorizations.
class SupportScanner {
 public:
  SupportScanner(const NumericalSemigroup& s, Int horizon);

  Int horizon() const noexcept { return horizon_; }

  // Bit j set iff some z in Z(x) has exactly j nonzero entries.
  std::uint32_t zero_length_mask(Int x) const;
  LengthSet zero_lengths(Int x) const;

 private:
  Int horizon_;
  std::vector<std::uint32_t> table_;
};

struct ZeroDeltaOptions {
  Int max_elements = 20'000'000;
  unsigned threads = 1;
};

struct ZeroDeltaResult {
  DeltaSet delta;
  Int stability_bound = 0;
  Int elements_scanned = 0;
};

ZeroDeltaResult delta0_semigroup_report(const NumericalSemigroup& s,
                                        const ZeroDeltaOptions& options = {});

inline DeltaSet delta0_semigroup(const NumericalSemigroup& s,
                                 const ZeroDeltaOptions& options = {}) {
  return delta0_semigroup_report(s, options).delta;
}

// True iff L_0(x) has no holes.
bool check_L0_interval(const NumericalSemigroup& s, Int x);

DeltaSet delta_of_length_mask(std::uint32_t mask);

}  // namespace nsdelta
