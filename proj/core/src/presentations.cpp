#include "nsdelta/presentations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

namespace nsdelta {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

bool supports_disjoint(const Factorization& a, const Factorization& b) {
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    if (a.exponents[i] != 0 && b.exponents[i] != 0) return false;
  }
  return true;
}

std::vector<Int> betti_candidates(const NumericalSemigroup& s) {
  std::vector<Int> out;
  const auto& apery = s.multiplicity_apery();
  for (Int w : apery.entries()) {
    if (w == 0) continue;
    for (Int a : s.generators()) out.push_back(checked_add(w, a));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Per component, the index of its representative node.
std::vector<std::size_t> representatives(const FactorizationGraph& g) {
  std::vector<std::size_t> rep(g.component_count, g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    std::size_t& r = rep[g.component[v]];
    if (r == g.nodes.size()) {
      r = v;
      continue;
    }
    const auto sv = g.nodes[v].support_size();
    const auto sr = g.nodes[r].support_size();
    if (sv < sr) r = v;  // nodes are sorted, so ties keep the smaller one
  }
  return rep;
}

}  // namespace

Trade make_trade(const NumericalSemigroup& s, Factorization a, Factorization b) {
  const Int va = a.value(s.generators());
  if (va != b.value(s.generators())) {
    throw Error(ErrorCode::invalid_argument, "trade sides factor different elements");
  }
  if (a == b || !supports_disjoint(a, b)) {
    throw Error(ErrorCode::invalid_argument, "trade sides must have disjoint supports");
  }
  if (b < a) std::swap(a, b);
  return Trade{va, std::move(a), std::move(b)};
}

FactorizationGraph factorization_graph(Factorizer& f, Int x) {
  FactorizationGraph g;
  g.element = x;
  g.nodes = f.enumerate(x);
  const std::size_t n = g.nodes.size();
  const std::size_t k = f.semigroup().embedding_dim();
  DisjointSets sets(n);
  std::vector<std::size_t> first_with(k, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = 0; i < k; ++i) {
      if (g.nodes[v].exponents[i] == 0) continue;
      if (first_with[i] == n) {
        first_with[i] = v;
      } else {
        sets.unite(v, first_with[i]);
      }
    }
  }
  std::map<std::size_t, std::size_t> label;
  g.component.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = label.try_emplace(sets.find(v), label.size());
    g.component[v] = it->second;
  }
  g.component_count = label.size();
  return g;
}

std::vector<Int> betti_elements(const NumericalSemigroup& s) {
  const std::vector<Int> candidates = betti_candidates(s);
  Factorizer f(s, candidates.empty() ? 0 : candidates.back());
  std::vector<Int> out;
  for (Int b : candidates) {
    if (!factorization_graph(f, b).connected()) out.push_back(b);
  }
  return out;
}

MinimalPresentation minimal_presentation(const NumericalSemigroup& s) {
  const std::vector<Int> candidates = betti_candidates(s);
  Factorizer f(s, candidates.empty() ? 0 : candidates.back());
  MinimalPresentation out;
  for (Int b : candidates) {
    const FactorizationGraph g = factorization_graph(f, b);
    if (g.connected()) continue;
    out.betti.push_back(b);
    const auto rep = representatives(g);
    std::vector<Trade> local;
    for (std::size_t c = 1; c < rep.size(); ++c) {
      local.push_back(make_trade(s, g.nodes[rep[0]], g.nodes[rep[c]]));
    }
    std::sort(local.begin(), local.end(), [](const Trade& a, const Trade& b) {
      return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    out.trades.insert(out.trades.end(), local.begin(), local.end());
  }
  return out;
}

bool singleton_support_presentation_exists(const NumericalSemigroup& s) {
  const std::vector<Int> candidates = betti_candidates(s);
  Factorizer f(s, candidates.empty() ? 0 : candidates.back());
  for (Int b : candidates) {
    const FactorizationGraph g = factorization_graph(f, b);
    if (g.connected()) continue;
    std::vector<bool> has_singleton(g.component_count, false);
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (g.nodes[v].support_size() == 1) has_singleton[g.component[v]] = true;
    }
    if (std::find(has_singleton.begin(), has_singleton.end(), false) != has_singleton.end()) {
      return false;
    }
  }
  return true;
}

bool trades_connect(const NumericalSemigroup& s, const std::vector<Trade>& trades, Int x) {
  const std::vector<Factorization> nodes = enumerate_factorizations(s, x);
  if (nodes.size() <= 1) return true;
  std::map<std::vector<Int>, std::size_t> index;
  for (std::size_t v = 0; v < nodes.size(); ++v) index.emplace(nodes[v].exponents, v);

  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  const std::size_t k = s.embedding_dim();
  auto try_move = [&](const std::vector<Int>& z, const Factorization& from,
                      const Factorization& to) {
    std::vector<Int> next(k);
    for (std::size_t i = 0; i < k; ++i) {
      next[i] = z[i] - from.exponents[i];
      if (next[i] < 0) return;
      next[i] += to.exponents[i];
    }
    auto it = index.find(next);
    if (it != index.end() && !seen[it->second]) {
      seen[it->second] = true;
      ++reached;
      stack.push_back(it->second);
    }
  };
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (const Trade& t : trades) {
      try_move(nodes[v].exponents, t.left, t.right);
      try_move(nodes[v].exponents, t.right, t.left);
    }
  }
  return reached == nodes.size();
}

std::vector<GluingExpression> gluing_expressions_3gen(const NumericalSemigroup& s) {
  if (s.embedding_dim() != 3) {
    throw Error(ErrorCode::invalid_argument, "gluing analysis requires three generators");
  }
  const auto a = s.generators();
  std::vector<GluingExpression> out;
  for (std::size_t i = 0; i < 3; ++i) {
    const Int aj = a[(i + 1) % 3];
    const Int al = a[(i + 2) % 3];
    const Int t = std::gcd(aj, al);
    if (t < 2 || std::gcd(t, a[i]) != 1) continue;
    const std::vector<Int> raw{aj / t, al / t};
    std::vector<Int> quotient = minimal_generating_set(raw);
    if (std::find(quotient.begin(), quotient.end(), a[i]) != quotient.end()) continue;
    const AperyTable table = residue_shortest_paths(quotient, quotient.front());
    if (!table.contains(a[i])) continue;
    out.push_back(GluingExpression{i, t, std::move(quotient)});
  }
  return out;
}

DeltaSet delta0_3gen(const NumericalSemigroup& s) {
  const auto expressions = gluing_expressions_3gen(s);
  if (expressions.size() >= 2) return DeltaSet{{1}};
  return DeltaSet{{1, 2}};
}

}  // namespace nsdelta
