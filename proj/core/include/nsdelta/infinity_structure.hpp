#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "nsdelta/factorizations.hpp"

namespace nsdelta {

struct IndexConstants {
  Int g = 1;                         // gcd of the other generators
  std::vector<Int> quotient;         // minimal generators of S_i
  Int quotient_frobenius = -1;
  Int inverse = 0;                   // a_i' modulo g
  Int B = 0;                         // ceil(g (F(S_i) + 1) / a_i)
};

struct StructureConstants {
  Int A = 0;
  std::vector<IndexConstants> per_index;
  Int period = 0;  // lcm(a_1, g_1 a_2, A)
};

StructureConstants structure_constants(const NumericalSemigroup& s);

// Exact infinity-length data for every element up to a horizon.
//
// For each generator index i we tabulate m_i(r), the least max-coordinate over
// factorizations of r that avoid generator i. Then ell lies in L_inf(x, i) iff
// m_i(x - ell a_i) <= ell, which avoids materializing Z(x).
class InfinityLengths {
 public:
  InfinityLengths(const NumericalSemigroup& s, Int horizon);

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }
  Int horizon() const noexcept { return horizon_; }

  // L_inf(x, i), ascending. Empty when no factorization of x is dominated
  // by coordinate i (in particular when x is not in S).
  std::vector<Int> dominant_lengths(Int x, std::size_t index) const;

  // L_inf(x), ascending.
  std::vector<Int> lengths(Int x) const;

  DeltaSet delta(Int x) const;

 private:
  void check(Int x) const;

  NumericalSemigroup semigroup_;
  Int horizon_;
  std::vector<std::vector<std::int32_t>> min_other_;
};

enum class CertificateMode { theorem_backed, empirical };

std::string_view to_string(CertificateMode mode);

struct PeriodicityCertificate {
  Int start = 0;
  Int period = 0;
  Int window_periods = 0;
  CertificateMode mode = CertificateMode::empirical;
  Int theorem_start = -1;  // -1 when no explicit threshold applies (k = 2)
  Int horizon = 0;         // largest element whose delta set was computed
  bool theorem_check_failed = false;
};

struct InfinityDeltaOptions {
  Int window_periods = 2;
  Int max_elements = 400'000;
  unsigned threads = 1;
};

struct InfinityDeltaResult {
  DeltaSet delta;
  PeriodicityCertificate certificate;
};

// First x from which the explicit shift thresholds and the interval-spacing
// conditions used for periodicity all hold; -1 for two generators.
Int theorem_periodicity_start(const NumericalSemigroup& s, const StructureConstants& c);

InfinityDeltaResult delta_inf_semigroup(const NumericalSemigroup& s,
                                        const InfinityDeltaOptions& options = {});

// Lower and upper bounds on l_inf(x) and each L_inf(x, i).
bool verify_linf_bounds(const InfinityLengths& engine, Int x);
bool verify_linf_bounds(const NumericalSemigroup& s, Int x);

// Both containments of the almost-arithmetic-progression description of
// L_inf(x, i).
bool verify_aap(const InfinityLengths& engine, const StructureConstants& c, Int x,
                std::size_t index);
bool verify_aap(const NumericalSemigroup& s, Int x, std::size_t index);

// Smallest x satisfying x > a_i^2 C + a_i B, C = max over j != i of
// ceil((B + 1) / a_j).
Int index_shift_threshold(const NumericalSemigroup& s, std::size_t index, Int B);
// Smallest x with x > A (A - a_j) B' / a_j for every j.
Int sum_shift_threshold(const NumericalSemigroup& s, Int B_prime);

// Checks both shift identities at x. Throws threshold_not_met when x is
// below either threshold.
bool verify_shift(const InfinityLengths& engine, Int x, std::size_t index, Int B, Int B_prime);
bool verify_shift(const NumericalSemigroup& s, Int x, std::size_t index, Int B, Int B_prime);

// Small gaps [1, min(g_1, g_2)] and g_1 occur in Delta_inf(x), and every
// other gap has an endpoint near x/A, x/a_2 or x/a_1. Requires k >= 3.
bool verify_interval_decomposition(const InfinityLengths& engine, const StructureConstants& c,
                                   Int x);
bool verify_interval_decomposition(const NumericalSemigroup& s, Int x);

// Delta set of {s in <a_2, ..., a_k> : s = j mod a_1, s <= bound}, measured in
// steps of a_1: consecutive members j + q a_1 < j + q' a_1 contribute q' - q.
// This is the scale on which the class matches lengths of L_inf(x) near x/a_1.
DeltaSet residue_class_delta(const NumericalSemigroup& s, Int residue, Int bound);

bool residue_delta_subset(const NumericalSemigroup& s, Int residue, Int bound,
                          const DeltaSet& delta_inf);
bool residue_delta_subset(const NumericalSemigroup& s, Int residue, Int bound);

}  // namespace nsdelta
