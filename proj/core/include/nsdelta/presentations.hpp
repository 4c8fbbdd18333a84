#pragma once

#include <cstddef>
#include <vector>

#include "nsdelta/factorizations.hpp"

namespace nsdelta {

// Two factorizations of the same element with disjoint supports. Stored with
// the lexicographically smaller side on the left.
struct Trade {
  Int element = 0;
  Factorization left;
  Factorization right;

  friend bool operator==(const Trade&, const Trade&) = default;
};

Trade make_trade(const NumericalSemigroup& s, Factorization a, Factorization b);

// Vertices are Z(x); two factorizations are adjacent when their supports meet.
struct FactorizationGraph {
  Int element = 0;
  std::vector<Factorization> nodes;  // sorted
  std::vector<std::size_t> component;
  std::size_t component_count = 0;

  bool connected() const noexcept { return component_count <= 1; }
};

FactorizationGraph factorization_graph(Factorizer& f, Int x);

struct MinimalPresentation {
  std::vector<Trade> trades;  // ordered by element, then by trade
  std::vector<Int> betti;
};

std::vector<Int> betti_elements(const NumericalSemigroup& s);

// Connects the components of each Betti element's factorization graph by a
// star of trades. Each component is represented by its factorization of
// smallest support (ties broken lexicographically).
MinimalPresentation minimal_presentation(const NumericalSemigroup& s);

// True iff some minimal presentation uses only trades between
// singleton-support factorizations.
bool singleton_support_presentation_exists(const NumericalSemigroup& s);

// True iff every pair of factorizations of x is joined by a chain of moves
// along `trades`.
bool trades_connect(const NumericalSemigroup& s, const std::vector<Trade>& trades, Int x);

// S = <a_i> + t'S' with S' two-generated.
struct GluingExpression {
  std::size_t pivot;  // zero-based index of a_i
  Int t_prime;
  std::vector<Int> quotient;  // minimal generators of S'
};

std::vector<GluingExpression> gluing_expressions_3gen(const NumericalSemigroup& s);

// {1} with two or more gluing expressions, {1, 2} otherwise.
DeltaSet delta0_3gen(const NumericalSemigroup& s);

}  // namespace nsdelta
