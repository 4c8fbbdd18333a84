#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nsdelta/factorizations.hpp"
#include "nsdelta/semigroup.hpp"

namespace nsdelta {

namespace family {

// <a^(k-1), a^(k-2) b, ..., b^(k-1)>
struct Geometric {
  Int a, b, k;
};
// Generators T / p_i with T the product of pairwise coprime p_1 > ... > p_k.
struct Supersymmetric {
  std::vector<Int> p;
};
// <a, a + d, ..., a + kd>
struct Arithmetic {
  Int a, d, k;
};
// <a, ah + d, ..., ah + kd>
struct GeneralizedArithmetic {
  Int a, h, d, k;
};
// An explicitly given maximal-embedding-dimension semigroup.
struct MedCheck {
  std::vector<Int> generators;
};
// <3, 3m + 1, 3m + 2>
struct ThreeGap {
  Int m;
};
// Gluing chain S_i = p_i S_{i-1} + <a_i> seeded by <p_1, p_2>.
struct Interval {
  Int k;
  Int seed1 = 0;  // 0 selects the least primes above k
  Int seed2 = 0;
};
// Doubling chain S_i = 2 S_{i-1} + <2 a_{i-2} + a_{i-1}>, closed by
// 2 S_k + <a_1 + ... + a_k>.
struct Gaps {
  Int k;
};

}  // namespace family

using FamilySpec =
    std::variant<family::Geometric, family::Supersymmetric, family::Arithmetic,
                 family::GeneralizedArithmetic, family::MedCheck, family::ThreeGap,
                 family::Interval, family::Gaps>;

// Parses the canonical text form, e.g. "geometric:a=2,b=3,k=3",
// "supersymmetric:p=5,3,2", "interval:k=3,seeds=5,7".
FamilySpec parse_family(const std::string& text);
std::string format_family(const FamilySpec& spec);

// Throws invalid_argument when the variant's parameter constraints fail.
void validate_family(const FamilySpec& spec);

// Generators in construction order (before sorting), which is the order the
// chain families index their trades by.
std::vector<Int> family_generators(const FamilySpec& spec);

NumericalSemigroup construct_family(const FamilySpec& spec);

// Constraint used when only part of the set is pinned down:
// `required` must be contained in the delta set, and its intersection with
// [window_lo, window_hi] must equal `window_expected`.
struct DeltaConstraint {
  std::vector<Int> required;
  Int window_lo = 0;
  Int window_hi = 0;
  std::vector<Int> window_expected;
  Int asserted_from_k = 0;  // the claim is only asserted for k >= this value

  bool satisfied_by(const DeltaSet& d) const;
};

struct PredictedDelta {
  enum class Kind { exact, constraint, unspecified } kind = Kind::unspecified;
  DeltaSet exact;
  DeltaConstraint constraint;
};

PredictedDelta predicted_delta(const FamilySpec& spec, Norm p);

// S = <m, a_1, ..., a_{m-1}> with m >= 3: embedding dimension equals the
// multiplicity.
bool is_max_embedding_dimension(const NumericalSemigroup& s);

// Checks that t1 S1 + t2 S2 is a gluing: t1 in S2 and t2 in S1, neither a
// minimal generator, and gcd(t1, t2) = 1.
bool is_gluing(Int t1, std::span<const Int> s1, Int t2, std::span<const Int> s2);

struct ChainStep {
  std::vector<Int> previous;  // generators of S_{i-1}, construction order
  Int scale;                  // multiplier applied to S_{i-1}
  Int added;                  // new generator
};

// Successive gluing steps of the interval and gaps constructions.
std::vector<ChainStep> construction_chain(const FamilySpec& spec);

Int least_prime_above(Int n);
bool is_prime(Int n);

}  // namespace nsdelta
