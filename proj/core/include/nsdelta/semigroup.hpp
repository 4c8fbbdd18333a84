#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "nsdelta/arith.hpp"

namespace nsdelta {

// Least element of S in each residue class modulo a fixed nonzero element m.
// Unreachable classes (only possible for generator lists with gcd > 1) hold
// kUnreachable.
class AperyTable {
 public:
  static constexpr Int kUnreachable = -1;

  AperyTable(Int modulus, std::vector<Int> entries)
      : modulus_(modulus), entries_(std::move(entries)) {}

  Int modulus() const noexcept { return modulus_; }
  std::span<const Int> entries() const noexcept { return entries_; }
  Int operator[](Int residue) const { return entries_.at(static_cast<std::size_t>(residue)); }

  // x is in the monoid iff x >= w_{x mod m}.
  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    const Int w = entries_[static_cast<std::size_t>(x % modulus_)];
    return w != kUnreachable && x >= w;
  }

  Int max_entry() const noexcept;

 private:
  Int modulus_;
  std::vector<Int> entries_;
};

// Residue-graph shortest paths: nodes are residues mod `modulus`, every
// generator is an arc of that weight. Works for any positive generator list.
AperyTable residue_shortest_paths(std::span<const Int> generators, Int modulus);

// Minimal generating set of the monoid spanned by `raw`, sorted ascending.
// Accepts lists with gcd > 1 and lists containing 1.
std::vector<Int> minimal_generating_set(std::span<const Int> raw);

// Frobenius number of the monoid generated by `generators` (gcd must be 1);
// -1 when 1 is a generator.
Int frobenius_of(std::span<const Int> generators);

class NumericalSemigroup {
 public:
  // Normalizing constructor; throws Error on gcd > 1, zero entries or an
  // empty list.
  explicit NumericalSemigroup(std::span<const Int> raw_generators);
  NumericalSemigroup(std::initializer_list<Int> raw_generators)
      : NumericalSemigroup(std::span<const Int>(raw_generators.begin(), raw_generators.size())) {}

  std::span<const Int> generators() const noexcept { return generators_; }
  Int generator(std::size_t i) const { return generators_.at(i); }
  std::size_t embedding_dim() const noexcept { return generators_.size(); }
  Int multiplicity() const noexcept { return generators_.front(); }
  Int largest_generator() const noexcept { return generators_.back(); }
  Int gen_sum() const noexcept { return gen_sum_; }
  Int frobenius() const noexcept { return frobenius_; }

  // Ap(S; a_1), computed once at construction.
  const AperyTable& multiplicity_apery() const noexcept { return apery_; }

  bool contains(Int x) const noexcept { return apery_.contains(x); }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  Int gen_sum_ = 0;
  Int frobenius_ = -1;
  AperyTable apery_{1, {0}};
};

struct SemigroupBuild {
  NumericalSemigroup semigroup;
  std::vector<Int> removed;  // duplicates and non-minimal inputs, ascending
};

SemigroupBuild make_semigroup(std::span<const Int> raw_generators);

// Ap(S; m) for a nonzero element m of S.
AperyTable apery_set(const NumericalSemigroup& s, Int m);

Int frobenius(const NumericalSemigroup& s);

inline bool contains(const NumericalSemigroup& s, Int x) { return s.contains(x); }

struct QuotientData {
  std::size_t index;  // zero-based
  Int g;              // gcd of the generators other than a_i
  std::vector<Int> quotient_generators;  // minimal generators of S_i
  Int quotient_frobenius;
  Int inverse;  // a_i' in [0, g) with a_i' a_i = 1 mod g; 0 when g = 1
};

QuotientData quotient_data(const NumericalSemigroup& s, std::size_t index);

}  // namespace nsdelta
