#pragma once

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/families/set_system.hpp"
#include "hsl/int_polynomial.hpp"
#include "hsl/label_set.hpp"

namespace hsl {

/// Simple graph on a label set; edges are two-element masks kept sorted ascending.
struct Graph {
  LabelSet vertices;
  std::vector<Mask> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

inline Graph make_graph(LabelSet vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g{vertices, {}};
  for (auto [a, b] : edges) {
    if (a == b || !vertices.contains(a) || !vertices.contains(b))
      throw LabelMismatch("edge " + std::to_string(a) + "-" + std::to_string(b) + " is not a pair of vertices");
    g.edges.push_back(LabelSet::bit(a) | LabelSet::bit(b));
  }
  detail::normalize_sets(g.edges);
  return g;
}

inline std::vector<Mask> all_pairs(LabelSet s) {
  std::vector<Mask> out;
  const auto ls = s.labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j) out.push_back(LabelSet::bit(ls[i]) | LabelSet::bit(ls[j]));
  detail::normalize_sets(out);
  return out;
}

struct Graphs {
  using structure_type = Graph;
  static constexpr std::string_view tag = "graphs";

  static LabelSet labels(const Graph& g) { return g.vertices; }
  static Graph unit() { return {}; }

  static std::vector<Graph> enumerate(LabelSet s, const Budget& budget = {}) {
    std::vector<Graph> out;
    for (auto& edges : detail::all_extensions({}, all_pairs(s), budget, "graphs")) out.push_back(Graph{s, std::move(edges)});
    return out;
  }

  static Graph relabel(const Relabeling& r, const Graph& g) {
    if (r.domain() != g.vertices) throw LabelMismatch("relabeling domain differs from graph vertices");
    return Graph{r.codomain(), detail::relabel_sets(r, g.edges)};
  }

  static Graph mult(const Graph& a, const Graph& b) {
    detail::check_disjoint(a.vertices, b.vertices);
    return Graph{a.vertices | b.vertices, detail::merge_sets(a.edges, b.edges)};
  }

  static Graph restrict(const Graph& g, LabelSet s) { return Graph{s, detail::restrict_sets(g.edges, s)}; }

  static std::pair<Graph, Graph> comult(const Graph& g, LabelSet s, LabelSet t) {
    detail::check_split(g.vertices, s, t);
    return {restrict(g, s), restrict(g, t)};
  }

  // Disjoint union plus every cross edge between the two vertex sets.
  static Graph free_mult(const Graph& a, const Graph& b) {
    Graph g = mult(a, b);
    for (int i : a.vertices.labels())
      for (int j : b.vertices.labels()) g.edges.push_back(LabelSet::bit(i) | LabelSet::bit(j));
    detail::normalize_sets(g.edges);
    return g;
  }

  // Subgraph order on a fixed vertex set.
  static bool native_leq(const Graph& a, const Graph& b) {
    return a.vertices == b.vertices && std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end());
  }

  static std::vector<Graph> native_upset(const Graph& g, const Budget& budget = {}) {
    std::vector<Mask> missing;
    for (Mask p : all_pairs(g.vertices))
      if (!std::binary_search(g.edges.begin(), g.edges.end(), p)) missing.push_back(p);
    std::vector<Graph> out;
    for (auto& edges : detail::all_extensions(g.edges, missing, budget, "graph up-set"))
      out.push_back(Graph{g.vertices, std::move(edges)});
    return out;
  }

  static std::vector<Graph> native_downset(const Graph& g, const Budget& budget = {}) {
    std::vector<Graph> out;
    for (auto& edges : detail::all_extensions({}, g.edges, budget, "graph down-set"))
      out.push_back(Graph{g.vertices, std::move(edges)});
    return out;
  }

  static std::string encode(const Graph& g) {
    std::vector<std::pair<int, int>> pairs;
    for (Mask e : g.edges) pairs.emplace_back(std::countr_zero(e), LabelSet(e).max());
    std::sort(pairs.begin(), pairs.end());
    std::string body;
    for (auto [a, b] : pairs) {
      if (!body.empty()) body += ',';
      body += std::to_string(a) + "-" + std::to_string(b);
    }
    return "G:" + detail::label_header(g.vertices) + ";E=" + body;
  }

  static Graph parse(std::string_view text) {
    const auto parts = detail::split_encoding(text, 'G', "E");
    Graph g{parts.labels, {}};
    if (!parts.body.empty()) {
      for (auto item : detail::split(parts.body, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) throw ParseError("expected 'i-j' edge, got '" + std::string(item) + "'");
        const int a = detail::parse_label(item.substr(0, dash), text);
        const int b = detail::parse_label(item.substr(dash + 1), text);
        if (a == b) throw ParseError("self-loop " + std::string(item) + " in '" + std::string(text) + "'");
        const Mask e = LabelSet::bit(a) | LabelSet::bit(b);
        detail::check_within(e, parts.labels, text);
        if (std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end())
          throw ParseError("repeated edge " + std::string(item) + " in '" + std::string(text) + "'");
        g.edges.push_back(e);
      }
    }
    detail::normalize_sets(g.edges);
    return g;
  }
};

inline Graph graph_free_product(const Graph& a, const Graph& b) { return Graphs::free_mult(a, b); }

inline Graph complement(const Graph& g) {
  Graph c{g.vertices, {}};
  for (Mask p : all_pairs(g.vertices))
    if (!std::binary_search(g.edges.begin(), g.edges.end(), p)) c.edges.push_back(p);
  return c;
}

inline UnorderedSetPartition components(const Graph& g) { return detail::connected_blocks(g.vertices, g.edges); }

inline bool is_connected(const Graph& g) { return components(g).length() == 1; }

// |V| - #components: the size of a spanning forest.
inline int graph_rank(const Graph& g) {
  return g.vertices.size() - static_cast<int>(components(g).length());
}

// H agrees with g on every connected component of H.
inline bool is_flat(const Graph& g, const Graph& h) {
  if (h.vertices != g.vertices) return false;
  if (!Graphs::native_leq(h, g)) return false;
  for (const auto& block : components(h).blocks)
    if (Graphs::restrict(h, block).edges != Graphs::restrict(g, block).edges) return false;
  return true;
}

inline std::vector<Graph> graph_flats(const Graph& g, const Budget& budget = {}) {
  std::vector<Graph> out;
  for (const auto& h : Graphs::native_downset(g, budget))
    if (is_flat(g, h)) out.push_back(h);
  return out;
}

// Quotient by the components of the flat h: one vertex per component (labelled by its
// minimum), simple edges only.
inline Graph contract(const Graph& g, const Graph& h) {
  if (!is_flat(g, h)) throw NotAFlat(Graphs::encode(h) + " is not a flat of " + Graphs::encode(g));
  const auto comps = components(h);
  std::vector<int> rep(kMaxLabels, -1);
  LabelSet quotient_vertices;
  for (const auto& block : comps.blocks) {
    for (int l : block.labels()) rep[static_cast<std::size_t>(l)] = block.min();
    quotient_vertices = quotient_vertices | LabelSet{block.min()};
  }
  Graph q{quotient_vertices, {}};
  for (Mask e : g.edges) {
    const int a = rep[static_cast<std::size_t>(std::countr_zero(e))];
    const int b = rep[static_cast<std::size_t>(LabelSet(e).max())];
    if (a != b) q.edges.push_back(LabelSet::bit(a) | LabelSet::bit(b));
  }
  detail::normalize_sets(q.edges);
  return q;
}

namespace detail {

inline IntPolynomial chromatic_rec(const Graph& g, std::map<std::pair<Mask, std::vector<Mask>>, IntPolynomial>& memo) {
  if (g.edges.empty()) return IntPolynomial::monomial(g.vertices.size());
  const auto key = std::make_pair(g.vertices.bits(), g.edges);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Mask e = g.edges.back();
  const int keep = std::countr_zero(e);
  const int drop = LabelSet(e).max();
  Graph deleted{g.vertices, {g.edges.begin(), g.edges.end() - 1}};
  Graph contracted{g.vertices - LabelSet{drop}, {}};
  for (Mask f : deleted.edges) {
    Mask moved = f;
    if (f & LabelSet::bit(drop)) moved = (f & ~LabelSet::bit(drop)) | LabelSet::bit(keep);
    if (std::popcount(moved) == 2) contracted.edges.push_back(moved);
  }
  normalize_sets(contracted.edges);
  IntPolynomial p = chromatic_rec(deleted, memo) - chromatic_rec(contracted, memo);
  memo.emplace(key, p);
  return p;
}

}  // namespace detail

// Deletion-contraction.
inline IntPolynomial chromatic_polynomial(const Graph& g) {
  std::map<std::pair<Mask, std::vector<Mask>>, IntPolynomial> memo;
  return detail::chromatic_rec(g, memo);
}

// Tries all 2^|E| orientations.
inline std::uint64_t acyclic_orientations_by_enumeration(const Graph& g) {
  const std::size_t m = g.edges.size();
  if (m > 30) throw CarrierOverflow("too many edges to enumerate orientations");
  std::uint64_t count = 0;
  const auto verts = g.vertices.labels();
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::array<Mask, kMaxLabels> out_nbrs{};
    for (std::size_t i = 0; i < m; ++i) {
      int a = std::countr_zero(g.edges[i]), b = LabelSet(g.edges[i]).max();
      if ((pick >> i) & 1U) std::swap(a, b);
      out_nbrs[static_cast<std::size_t>(a)] |= LabelSet::bit(b);
    }
    // Repeatedly strip sinks.
    Mask alive = g.vertices.bits();
    bool progress = true;
    while (alive != 0 && progress) {
      progress = false;
      for (int v : verts) {
        if ((alive & LabelSet::bit(v)) && (out_nbrs[static_cast<std::size_t>(v)] & alive) == 0) {
          alive &= ~LabelSet::bit(v);
          progress = true;
        }
      }
    }
    if (alive == 0) ++count;
  }
  return count;
}

inline std::uint64_t acyclic_orientation_count(const Graph& g) {
  if (g.edges.size() <= 20) return acyclic_orientations_by_enumeration(g);
  const auto v = chromatic_polynomial(g).evaluate(-1);
  return static_cast<std::uint64_t>(v < 0 ? -v : v);
}

}  // namespace hsl
