#pragma once

// Which adjunctions each family declares, and which one its primitives come from.

#include <vector>

#include "hsl/families/graphs.hpp"
#include "hsl/families/hypergraphs.hpp"
#include "hsl/families/partitions.hpp"
#include "hsl/families/simplicial.hpp"
#include "hsl/linear.hpp"

namespace hsl {

template <Family F>
struct Catalog;

template <>
struct Catalog<Graphs> {
  static Adjunction<Graphs> primitive_adjunction() { return delta_free_adjunction<Graphs>(); }
  static std::vector<Adjunction<Graphs>> adjunctions() {
    return {delta_free_adjunction<Graphs>(), reassembly_delta_mult_adjunction<Graphs>()};
  }
};

template <>
struct Catalog<Hypergraphs> {
  static Adjunction<Hypergraphs> primitive_adjunction() { return delta_free_adjunction<Hypergraphs>(); }
  static std::vector<Adjunction<Hypergraphs>> adjunctions() { return {delta_free_adjunction<Hypergraphs>()}; }
};

template <>
struct Catalog<Partitions> {
  static Adjunction<Partitions> primitive_adjunction() { return native_delta_mult_adjunction<Partitions>(); }
  static std::vector<Adjunction<Partitions>> adjunctions() { return {native_delta_mult_adjunction<Partitions>()}; }
};

// Δ is the right adjoint here, so ω is taken in the reversed inclusion order.
template <>
struct Catalog<SimplicialComplexes> {
  static Adjunction<SimplicialComplexes> primitive_adjunction() {
    return native_mult_delta_adjunction<SimplicialComplexes>();
  }
  static std::vector<Adjunction<SimplicialComplexes>> adjunctions() {
    return {native_mult_delta_adjunction<SimplicialComplexes>()};
  }
};

}  // namespace hsl
