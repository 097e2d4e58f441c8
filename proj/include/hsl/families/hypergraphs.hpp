#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/families/set_system.hpp"
#include "hsl/label_set.hpp"

namespace hsl {

/// Hypergraph: hyperedges are subsets with at least two members, kept sorted ascending by mask.
struct Hypergraph {
  LabelSet vertices;
  std::vector<Mask> hyperedges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

inline Hypergraph make_hypergraph(LabelSet vertices, std::vector<LabelSet> edges) {
  Hypergraph h{vertices, {}};
  for (auto e : edges) {
    if (e.size() < 2 || !vertices.includes(e))
      throw LabelMismatch("hyperedge {" + e.to_string() + "} is not a subset of size >= 2 of the vertices");
    h.hyperedges.push_back(e.bits());
  }
  detail::normalize_sets(h.hyperedges);
  return h;
}

struct Hypergraphs {
  using structure_type = Hypergraph;
  static constexpr std::string_view tag = "hypergraphs";

  static std::vector<Mask> candidate_edges(LabelSet s) { return detail::subsets_of_size_at_least(s, 2); }

  static LabelSet labels(const Hypergraph& h) { return h.vertices; }
  static Hypergraph unit() { return {}; }

  static std::vector<Hypergraph> enumerate(LabelSet s, const Budget& budget = {}) {
    std::vector<Hypergraph> out;
    for (auto& e : detail::all_extensions({}, candidate_edges(s), budget, "hypergraphs"))
      out.push_back(Hypergraph{s, std::move(e)});
    return out;
  }

  static Hypergraph relabel(const Relabeling& r, const Hypergraph& h) {
    if (r.domain() != h.vertices) throw LabelMismatch("relabeling domain differs from hypergraph vertices");
    return Hypergraph{r.codomain(), detail::relabel_sets(r, h.hyperedges)};
  }

  static Hypergraph mult(const Hypergraph& a, const Hypergraph& b) {
    detail::check_disjoint(a.vertices, b.vertices);
    return Hypergraph{a.vertices | b.vertices, detail::merge_sets(a.hyperedges, b.hyperedges)};
  }

  static Hypergraph restrict(const Hypergraph& h, LabelSet s) {
    return Hypergraph{s, detail::restrict_sets(h.hyperedges, s)};
  }

  static std::pair<Hypergraph, Hypergraph> comult(const Hypergraph& h, LabelSet s, LabelSet t) {
    detail::check_split(h.vertices, s, t);
    return {restrict(h, s), restrict(h, t)};
  }

  // Adds every hyperedge meeting both sides.
  static Hypergraph free_mult(const Hypergraph& a, const Hypergraph& b) {
    Hypergraph h = mult(a, b);
    for (Mask e : candidate_edges(h.vertices))
      if ((e & a.vertices.bits()) != 0 && (e & b.vertices.bits()) != 0) h.hyperedges.push_back(e);
    detail::normalize_sets(h.hyperedges);
    return h;
  }

  static bool native_leq(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices == b.vertices &&
           std::includes(b.hyperedges.begin(), b.hyperedges.end(), a.hyperedges.begin(), a.hyperedges.end());
  }

  static std::vector<Hypergraph> native_upset(const Hypergraph& h, const Budget& budget = {}) {
    std::vector<Mask> missing;
    for (Mask e : candidate_edges(h.vertices))
      if (!std::binary_search(h.hyperedges.begin(), h.hyperedges.end(), e)) missing.push_back(e);
    std::vector<Hypergraph> out;
    for (auto& e : detail::all_extensions(h.hyperedges, missing, budget, "hypergraph up-set"))
      out.push_back(Hypergraph{h.vertices, std::move(e)});
    return out;
  }

  static std::vector<Hypergraph> native_downset(const Hypergraph& h, const Budget& budget = {}) {
    std::vector<Hypergraph> out;
    for (auto& e : detail::all_extensions({}, h.hyperedges, budget, "hypergraph down-set"))
      out.push_back(Hypergraph{h.vertices, std::move(e)});
    return out;
  }

  static std::string encode(const Hypergraph& h) {
    auto edges = h.hyperedges;
    std::sort(edges.begin(), edges.end(), detail::size_lex_less);
    std::string body;
    for (Mask e : edges) {
      if (!body.empty()) body += ';';
      body += detail::braced(e);
    }
    return "H:" + detail::label_header(h.vertices) + ";E=" + body;
  }

  static Hypergraph parse(std::string_view text) {
    const auto parts = detail::split_encoding(text, 'H', "E");
    Hypergraph h{parts.labels, {}};
    if (!parts.body.empty()) {
      for (auto item : detail::split(parts.body, ';')) {
        const Mask e = detail::parse_braced(item, text);
        if (std::popcount(e) < 2) throw ParseError("hyperedge " + std::string(item) + " has fewer than two members");
        detail::check_within(e, parts.labels, text);
        if (std::find(h.hyperedges.begin(), h.hyperedges.end(), e) != h.hyperedges.end())
          throw ParseError("repeated hyperedge " + std::string(item));
        h.hyperedges.push_back(e);
      }
    }
    detail::normalize_sets(h.hyperedges);
    return h;
  }
};

inline Hypergraph hypergraph_free_product(const Hypergraph& a, const Hypergraph& b) {
  return Hypergraphs::free_mult(a, b);
}

// Complement within all subsets of size >= 2.
inline Hypergraph complement(const Hypergraph& h) {
  Hypergraph c{h.vertices, {}};
  for (Mask e : Hypergraphs::candidate_edges(h.vertices))
    if (!std::binary_search(h.hyperedges.begin(), h.hyperedges.end(), e)) c.hyperedges.push_back(e);
  return c;
}

inline UnorderedSetPartition components(const Hypergraph& h) {
  return detail::connected_blocks(h.vertices, h.hyperedges);
}

inline bool is_connected(const Hypergraph& h) { return components(h).length() == 1; }

}  // namespace hsl
