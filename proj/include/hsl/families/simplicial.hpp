#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/families/graphs.hpp"
#include "hsl/families/set_system.hpp"
#include "hsl/label_set.hpp"

namespace hsl {

/// Downward-closed family of subsets of the vertex set. The empty face is always present,
/// singletons are not required. Faces are kept sorted ascending by mask, so faces[0] == 0.
struct SimplicialComplex {
  LabelSet vertices;
  std::vector<Mask> faces{0};

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
};

inline std::vector<Mask> downward_closure(const std::vector<Mask>& generators) {
  std::vector<Mask> out{0};
  for (Mask g : generators)
    for (Mask sub = g; sub != 0; sub = (sub - 1) & g) out.push_back(sub);
  detail::normalize_sets(out);
  return out;
}

inline SimplicialComplex make_complex(LabelSet vertices, const std::vector<LabelSet>& facets) {
  std::vector<Mask> gens;
  for (auto f : facets) {
    if (!vertices.includes(f)) throw LabelMismatch("face {" + f.to_string() + "} outside the vertex set");
    gens.push_back(f.bits());
  }
  return SimplicialComplex{vertices, downward_closure(gens)};
}

inline std::vector<Mask> facets(const SimplicialComplex& c) {
  std::vector<Mask> out;
  for (Mask f : c.faces) {
    bool maximal = true;
    for (Mask g : c.faces)
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), detail::size_lex_less);
  return out;
}

struct SimplicialComplexes {
  using structure_type = SimplicialComplex;
  static constexpr std::string_view tag = "simplicial";

  static LabelSet labels(const SimplicialComplex& c) { return c.vertices; }
  static SimplicialComplex unit() { return {}; }

  // Backtracking over nonempty subsets by increasing size; a subset may be added only
  // when all of its codimension-one faces are present.
  static std::vector<SimplicialComplex> enumerate(LabelSet s, const Budget& budget = {}) {
    std::vector<Mask> candidates = detail::subsets_of_size_at_least(s, 1);
    std::sort(candidates.begin(), candidates.end(), detail::size_lex_less);
    std::vector<SimplicialComplex> out;
    std::vector<Mask> chosen{0};
    auto has = [&](Mask m) { return std::find(chosen.begin(), chosen.end(), m) != chosen.end(); };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == candidates.size()) {
        budget.check(out.size() + 1, "simplicial complexes");
        SimplicialComplex c{s, chosen};
        detail::normalize_sets(c.faces);
        out.push_back(std::move(c));
        return;
      }
      const Mask x = candidates[i];
      self(self, i + 1);
      for (Mask rest = x; rest != 0; rest &= rest - 1)
        if (!has(x & ~(rest & -rest))) return;
      chosen.push_back(x);
      self(self, i + 1);
      chosen.pop_back();
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.faces < b.faces; });
    return out;
  }

  static SimplicialComplex relabel(const Relabeling& r, const SimplicialComplex& c) {
    if (r.domain() != c.vertices) throw LabelMismatch("relabeling domain differs from complex vertices");
    return SimplicialComplex{r.codomain(), detail::relabel_sets(r, c.faces)};
  }

  static SimplicialComplex mult(const SimplicialComplex& a, const SimplicialComplex& b) {
    detail::check_disjoint(a.vertices, b.vertices);
    return SimplicialComplex{a.vertices | b.vertices, detail::merge_sets(a.faces, b.faces)};
  }

  static SimplicialComplex restrict(const SimplicialComplex& c, LabelSet s) {
    return SimplicialComplex{s, detail::restrict_sets(c.faces, s)};
  }

  static std::pair<SimplicialComplex, SimplicialComplex> comult(const SimplicialComplex& c, LabelSet s, LabelSet t) {
    detail::check_split(c.vertices, s, t);
    return {restrict(c, s), restrict(c, t)};
  }

  // Subcomplex order.
  static bool native_leq(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices == b.vertices && std::includes(b.faces.begin(), b.faces.end(), a.faces.begin(), a.faces.end());
  }

  static std::vector<SimplicialComplex> native_upset(const SimplicialComplex& c, const Budget& budget = {}) {
    std::vector<SimplicialComplex> out;
    for (auto& d : enumerate(c.vertices, budget))
      if (native_leq(c, d)) out.push_back(std::move(d));
    return out;
  }

  static std::vector<SimplicialComplex> native_downset(const SimplicialComplex& c, const Budget& budget = {}) {
    std::vector<SimplicialComplex> out;
    for (auto& d : enumerate(c.vertices, budget))
      if (native_leq(d, c)) out.push_back(std::move(d));
    return out;
  }

  static std::string encode(const SimplicialComplex& c) {
    std::string body;
    for (Mask f : facets(c)) {
      if (!body.empty()) body += ';';
      body += detail::braced(f);
    }
    return "S:" + detail::label_header(c.vertices) + ";F=" + body;
  }

  static SimplicialComplex parse(std::string_view text) {
    const auto parts = detail::split_encoding(text, 'S', "F");
    std::vector<Mask> gens;
    if (!parts.body.empty()) {
      for (auto item : detail::split(parts.body, ';')) {
        const Mask f = detail::parse_braced(item, text);
        detail::check_within(f, parts.labels, text);
        gens.push_back(f);
      }
    }
    SimplicialComplex c{parts.labels, downward_closure(gens)};
    // Listed sets must be exactly the facets.
    auto listed = gens;
    detail::normalize_sets(listed);
    listed.erase(std::remove(listed.begin(), listed.end(), Mask{0}), listed.end());
    auto maximal = facets(c);
    maximal.erase(std::remove(maximal.begin(), maximal.end(), Mask{0}), maximal.end());
    detail::normalize_sets(maximal);
    if (listed != maximal) throw ParseError("'" + std::string(text) + "' lists a face that is not maximal");
    return c;
  }
};

inline Graph sc_one_skeleton(const SimplicialComplex& c) {
  Graph g{c.vertices, {}};
  for (Mask f : c.faces)
    if (std::popcount(f) == 2) g.edges.push_back(f);
  return g;
}

inline UnorderedSetPartition components(const SimplicialComplex& c) {
  return detail::connected_blocks(c.vertices, c.faces);
}

inline bool is_connected(const SimplicialComplex& c) { return components(c).length() == 1; }

// Union of the restrictions of c to the components of the flat f.
inline SimplicialComplex sc_gamma_of_flat(const SimplicialComplex& c, const Graph& f) {
  const Graph skeleton = sc_one_skeleton(c);
  if (!is_flat(skeleton, f))
    throw NotAFlat(Graphs::encode(f) + " is not a flat of the 1-skeleton of " + SimplicialComplexes::encode(c));
  SimplicialComplex out{c.vertices, {0}};
  for (const auto& block : components(f).blocks)
    out.faces = detail::merge_sets(out.faces, SimplicialComplexes::restrict(c, block).faces);
  return out;
}

}  // namespace hsl
