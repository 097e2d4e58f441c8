#pragma once

// Family-specific antipode formulas, used as independent oracles for the generic ones.

#include "hsl/families/graphs.hpp"
#include "hsl/families/partitions.hpp"
#include "hsl/families/simplicial.hpp"
#include "hsl/linear.hpp"

namespace hsl {

// Σ over flats H of (−1)^{|I| − rk H} acyc(G/H) H.
inline FreeVector<Graphs> closed_form_antipode_graphs(const Graph& g, const Budget& budget = {}) {
  FreeVector<Graphs> out(g.vertices);
  for (const auto& h : graph_flats(g, budget)) {
    const int exponent = g.vertices.size() - graph_rank(h);
    const auto acyc = static_cast<long long>(acyclic_orientation_count(contract(g, h)));
    out.add(h, Rational(exponent % 2 == 0 ? acyc : -acyc));
  }
  return out;
}

// Σ over refinements τ of (−1)^{ℓ(τ)} ∏ λ_i! τ, λ_i = number of blocks of τ inside B_i.
inline FreeVector<Partitions> closed_form_antipode_partitions(const SetPartition& p, const Budget& budget = {}) {
  FreeVector<Partitions> out(p.vertices);
  for (const auto& tau : Partitions::native_upset(p, budget)) {
    Integer weight = 1;
    for (Mask b : p.blocks) {
      int lambda = 0;
      for (Mask c : tau.blocks)
        if ((c & ~b) == 0) ++lambda;
      for (int i = 2; i <= lambda; ++i) weight *= i;
    }
    if (tau.blocks.size() % 2 == 1) weight = -weight;
    out.add(tau, Rational(weight));
  }
  return out;
}

// Σ over flats F of the 1-skeleton of (−1)^{|I| − rk F} acyc(Γ^(1)/F) Γ(F).
inline FreeVector<SimplicialComplexes> closed_form_antipode_sc(const SimplicialComplex& c, const Budget& budget = {}) {
  FreeVector<SimplicialComplexes> out(c.vertices);
  const Graph skeleton = sc_one_skeleton(c);
  for (const auto& f : graph_flats(skeleton, budget)) {
    const int exponent = c.vertices.size() - graph_rank(f);
    const auto acyc = static_cast<long long>(acyclic_orientation_count(contract(skeleton, f)));
    out.add(sc_gamma_of_flat(c, f), Rational(exponent % 2 == 0 ? acyc : -acyc));
  }
  return out;
}

}  // namespace hsl
