#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "nsdelta/reach_set.hpp"
#include "nsdelta/semigroup.hpp"

namespace nsdelta {

enum class Norm { zero, one, infinity };

std::string_view to_string(Norm p);

// Exponent vector aligned with the generator order of one semigroup.
struct Factorization {
  std::vector<Int> exponents;

  std::size_t support_size() const noexcept;
  Int value(std::span<const Int> generators) const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
  friend auto operator<=>(const Factorization&, const Factorization&) = default;
};

// Checks sum z_i a_i == x.
Factorization make_factorization(const NumericalSemigroup& s, Int x, std::vector<Int> exponents);

Int p_length(std::span<const Int> exponents, Norm p) noexcept;
inline Int p_length(const Factorization& z, Norm p) noexcept { return p_length(z.exponents, p); }

struct LengthSet {
  Norm p = Norm::one;
  std::vector<Int> values;  // strictly increasing
};

// Sorted, deduplicated positive differences.
struct DeltaSet {
  std::vector<Int> values;

  bool empty() const noexcept { return values.empty(); }
  bool contains(Int d) const noexcept;
  void merge(const DeltaSet& other);
  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};

DeltaSet make_delta_set(std::vector<Int> values);

// Successive differences of a strictly increasing list.
DeltaSet delta_of_sorted_set(std::span<const Int> values);

inline constexpr std::size_t kDefaultFactorizationCap = 10'000'000;

// Depth-first factorization enumerator. Recursion descends from the largest
// generator; each partial remainder is pruned against membership tables of
// the remaining generator prefix, so every explored branch yields output.
class Factorizer {
 public:
  explicit Factorizer(NumericalSemigroup s, Int horizon = 0);

  const NumericalSemigroup& semigroup() const noexcept { return semigroup_; }

  // Visits every z in Z(x); the span is only valid during the call.
  void for_each(Int x, const std::function<void(std::span<const Int>)>& visit);

  // Z(x) sorted lexicographically; throws cap_exceeded past `cap` entries.
  std::vector<Factorization> enumerate(Int x, std::size_t cap = kDefaultFactorizationCap);

 private:
  void ensure_horizon(Int x);

  NumericalSemigroup semigroup_;
  Int horizon_ = -1;
  std::vector<ReachSet> prefix_;  // prefix_[t]: monoid of generators 0..t
};

std::vector<Factorization> enumerate_factorizations(const NumericalSemigroup& s, Int x,
                                                    std::size_t cap = kDefaultFactorizationCap);

// L_p(x) by a streaming fold over Z(x); throws not_member when x is not in S.
LengthSet length_set(const NumericalSemigroup& s, Int x, Norm p);
LengthSet length_set(Factorizer& f, Int x, Norm p);

DeltaSet delta_set_of_element(const NumericalSemigroup& s, Int x, Norm p);

struct DominantFactorizations {
  std::vector<Factorization> factorizations;  // Z(x, i)
  LengthSet lengths;                          // L_inf(x, i)
  Int max_length = 0;
  Int min_length = 0;
};

// Factorizations whose i-th coordinate (zero-based) attains the maximum; ties
// count for every maximizing index.
DominantFactorizations dominant_factorizations(const NumericalSemigroup& s, Int x,
                                               std::size_t index);

}  // namespace nsdelta
