#include "nsdelta/factorizations.hpp"

#include <algorithm>
#include <string>

namespace nsdelta {

std::string_view to_string(Norm p) {
  switch (p) {
    case Norm::zero: return "0";
    case Norm::one: return "1";
    case Norm::infinity: return "inf";
  }
  return "?";
}

std::size_t Factorization::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exponents.begin(), exponents.end(), [](Int v) { return v != 0; }));
}

Int Factorization::value(std::span<const Int> generators) const {
  Int total = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    total = checked_add(total, checked_mul(exponents[i], generators[i]));
  }
  return total;
}

Factorization make_factorization(const NumericalSemigroup& s, Int x, std::vector<Int> exponents) {
  if (exponents.size() != s.embedding_dim()) {
    throw Error(ErrorCode::invalid_argument, "exponent vector has the wrong length");
  }
  for (Int e : exponents) {
    if (e < 0) throw Error(ErrorCode::invalid_argument, "negative exponent");
  }
  Factorization z{std::move(exponents)};
  if (z.value(s.generators()) != x) {
    throw Error(ErrorCode::invalid_argument,
                "exponents do not factor " + std::to_string(x));
  }
  return z;
}

Int p_length(std::span<const Int> exponents, Norm p) noexcept {
  Int out = 0;
  for (Int e : exponents) {
    switch (p) {
      case Norm::zero: out += e != 0; break;
      case Norm::one: out += e; break;
      case Norm::infinity: out = std::max(out, e); break;
    }
  }
  return out;
}

bool DeltaSet::contains(Int d) const noexcept {
  return std::binary_search(values.begin(), values.end(), d);
}

void DeltaSet::merge(const DeltaSet& other) {
  std::vector<Int> out;
  out.reserve(values.size() + other.values.size());
  std::set_union(values.begin(), values.end(), other.values.begin(), other.values.end(),
                 std::back_inserter(out));
  values = std::move(out);
}

DeltaSet make_delta_set(std::vector<Int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return DeltaSet{std::move(values)};
}

DeltaSet delta_of_sorted_set(std::span<const Int> values) {
  std::vector<Int> diffs;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) {
      throw Error(ErrorCode::invalid_argument, "input is not strictly increasing");
    }
    diffs.push_back(values[i] - values[i - 1]);
  }
  return make_delta_set(std::move(diffs));
}

Factorizer::Factorizer(NumericalSemigroup s, Int horizon) : semigroup_(std::move(s)) {
  ensure_horizon(horizon);
}

void Factorizer::ensure_horizon(Int x) {
  if (x <= horizon_) return;
  const Int limit = std::max(x, horizon_ > 0 ? 2 * horizon_ : Int{64});
  const auto gens = semigroup_.generators();
  prefix_.clear();
  ReachSet acc = ReachSet::origin(limit);
  for (Int g : gens) {
    acc.close_under(g);
    prefix_.push_back(acc);
  }
  horizon_ = limit;
}

void Factorizer::for_each(Int x, const std::function<void(std::span<const Int>)>& visit) {
  if (x < 0) throw Error(ErrorCode::invalid_argument, "negative element");
  ensure_horizon(x);
  const auto gens = semigroup_.generators();
  const std::size_t k = gens.size();
  if (!prefix_[k - 1].test(x)) return;
  std::vector<Int> z(k, 0);

  auto recurse = [&](auto&& self, std::size_t t, Int r) -> void {
    if (t == 0) {
      z[0] = r / gens[0];
      visit(z);
      z[0] = 0;
      return;
    }
    for (Int c = r / gens[t]; c >= 0; --c) {
      const Int rem = r - c * gens[t];
      if (!prefix_[t - 1].test(rem)) continue;
      z[t] = c;
      self(self, t - 1, rem);
    }
    z[t] = 0;
  };
  recurse(recurse, k - 1, x);
}

std::vector<Factorization> Factorizer::enumerate(Int x, std::size_t cap) {
  std::vector<Factorization> out;
  for_each(x, [&](std::span<const Int> z) {
    if (out.size() >= cap) {
      throw Error(ErrorCode::cap_exceeded,
                  "more than " + std::to_string(cap) + " factorizations of " + std::to_string(x));
    }
    out.push_back(Factorization{std::vector<Int>(z.begin(), z.end())});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Factorization> enumerate_factorizations(const NumericalSemigroup& s, Int x,
                                                    std::size_t cap) {
  Factorizer f(s, x);
  return f.enumerate(x, cap);
}

LengthSet length_set(Factorizer& f, Int x, Norm p) {
  if (!f.semigroup().contains(x)) {
    throw Error(ErrorCode::not_member, std::to_string(x) + " is not in the semigroup");
  }
  std::vector<Int> values;
  f.for_each(x, [&](std::span<const Int> z) { values.push_back(p_length(z, p)); });
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return LengthSet{p, std::move(values)};
}

LengthSet length_set(const NumericalSemigroup& s, Int x, Norm p) {
  Factorizer f(s, x);
  return length_set(f, x, p);
}

DeltaSet delta_set_of_element(const NumericalSemigroup& s, Int x, Norm p) {
  const LengthSet lengths = length_set(s, x, p);
  return delta_of_sorted_set(lengths.values);
}

DominantFactorizations dominant_factorizations(const NumericalSemigroup& s, Int x,
                                               std::size_t index) {
  if (index >= s.embedding_dim()) {
    throw Error(ErrorCode::invalid_argument, "generator index out of range");
  }
  if (!s.contains(x)) {
    throw Error(ErrorCode::not_member, std::to_string(x) + " is not in the semigroup");
  }
  DominantFactorizations out;
  out.lengths.p = Norm::infinity;
  Factorizer f(s, x);
  f.for_each(x, [&](std::span<const Int> z) {
    const Int top = p_length(z, Norm::infinity);
    if (z[index] == top) {
      out.factorizations.push_back(Factorization{std::vector<Int>(z.begin(), z.end())});
      out.lengths.values.push_back(top);
    }
  });
  std::sort(out.factorizations.begin(), out.factorizations.end());
  auto& v = out.lengths.values;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (!v.empty()) {
    out.min_length = v.front();
    out.max_length = v.back();
  }
  return out;
}

}  // namespace nsdelta
