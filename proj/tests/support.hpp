#pragma once

// Brute-force oracles shared by the test binaries. None of these call into the code they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hsl/hsl.hpp"

namespace hsl::test {

// Labeled simple graphs on {0..n-1} as edge bitmasks over the pair list (0,1),(0,2),...
inline std::vector<std::pair<int, int>> pair_list(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

inline bool connected_by_bfs(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return n == 1;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      const int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

// Number of connected labeled graphs on n vertices, by enumerating all edge subsets.
inline std::uint64_t brute_connected_graph_count(int n) {
  const auto pairs = pair_list(n);
  std::uint64_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << pairs.size()); ++pick) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((pick >> i) & 1U) edges.push_back(pairs[i]);
    if (connected_by_bfs(n, edges)) ++count;
  }
  return count;
}

inline std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (Mask e : g.edges) {
    const auto m = members(e);
    out.emplace_back(m[0], m[1]);
  }
  return out;
}

// Orientations checked for cycles by repeated DFS.
inline std::uint64_t brute_acyclic_orientations(const Graph& g) {
  const auto edges = edge_pairs(g);
  std::uint64_t count = 0;
  for (std::uint64_t dir = 0; dir < (std::uint64_t{1} << edges.size()); ++dir) {
    std::map<int, std::vector<int>> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if ((dir >> i) & 1U) std::swap(a, b);
      out[a].push_back(b);
    }
    std::map<int, int> state;  // 0 new, 1 on stack, 2 done
    bool cyclic = false;
    std::function<void(int)> visit = [&](int v) {
      state[v] = 1;
      for (int w : out[v]) {
        if (state[w] == 1) cyclic = true;
        if (state[w] == 0) visit(w);
      }
      state[v] = 2;
    };
    for (int v : g.vertices.labels())
      if (state[v] == 0) visit(v);
    if (!cyclic) ++count;
  }
  return count;
}

// Proper colorings with k colors.
inline std::uint64_t brute_colorings(const Graph& g, int k) {
  const auto labels = g.vertices.labels();
  const auto edges = edge_pairs(g);
  if (labels.empty()) return 1;
  if (k == 0) return 0;
  std::uint64_t count = 0;
  std::vector<int> color(labels.size(), 0);
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  while (true) {
    bool proper = true;
    for (auto [a, b] : edges)
      if (color[index[a]] == color[index[b]]) proper = false;
    if (proper) ++count;
    std::size_t i = 0;
    while (i < color.size() && ++color[i] == k) color[i++] = 0;
    if (i == color.size()) break;
  }
  return count;
}

// Möbius function from the inverse of the zeta matrix (exact Gaussian elimination).
template <class E>
std::vector<std::vector<Rational>> mobius_by_inversion(const PosetView<E>& p, const std::vector<E>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = p.leq(xs[i], xs[j]) ? 1 : 0;
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (a[pivot][c] == 0) ++pivot;
    std::swap(a[pivot], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a[r][c] != 0) {
        const Rational f = a[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
      }
  }
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu[i][j] = a[i][n + j];
  return mu;
}

// A finite poset given by an explicit list and a relation.
template <class E>
PosetView<E> explicit_poset(std::vector<E> elements, std::function<bool(const E&, const E&)> leq,
                            std::function<std::string(const E&)> key) {
  auto up = [elements, leq](const E& x) {
    std::vector<E> out;
    for (const auto& y : elements)
      if (leq(x, y)) out.push_back(y);
    return out;
  };
  return PosetView<E>("explicit", leq, up, key).with_carrier([elements] { return elements; });
}

inline PosetView<int> divisor_poset(int n) {
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  return explicit_poset<int>(
      ds, [](const int& a, const int& b) { return b % a == 0; }, [](const int& a) { return std::to_string(a); });
}

// Graphs whose multiplication adds all cross edges exactly when 0 < |S| < |T|.
struct MutantGraphs : Graphs {
  static constexpr std::string_view tag = "mutant-graphs";
  static Graph mult(const Graph& a, const Graph& b) {
    const int s = a.vertices.size(), t = b.vertices.size();
    return (s > 0 && s < t) ? Graphs::free_mult(a, b) : Graphs::mult(a, b);
  }
};

template <Family F>
std::vector<StructureOf<F>> all_up_to(int n, const Budget& budget = {}) {
  std::vector<StructureOf<F>> out;
  for (int k = 0; k <= n; ++k)
    for (auto& x : F::enumerate(LabelSet::range(k), budget)) out.push_back(std::move(x));
  return out;
}

inline Hypergraph random_hypergraph(std::mt19937& rng, int n) {
  const auto candidates = Hypergraphs::candidate_edges(LabelSet::range(n));
  std::vector<LabelSet> edges;
  std::bernoulli_distribution coin(0.5);
  for (Mask m : candidates)
    if (coin(rng)) edges.emplace_back(m);
  return make_hypergraph(LabelSet::range(n), edges);
}

}  // namespace hsl::test
