#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"
#include "hsl/linear.hpp"
#include "hsl/rational.hpp"
#include "hsl/species.hpp"

namespace hsl {

/// Relabeling orbit of a structure, represented by its encoding-minimal member on {0..n-1}.
template <Family F>
struct OrbitClass {
  int degree = 0;
  StructureOf<F> representative;
  std::string encoding;

  friend bool operator==(const OrbitClass& a, const OrbitClass& b) { return a.encoding == b.encoding; }
};

inline constexpr int kMaxOrbitDegree = 7;

template <Family F>
OrbitClass<F> orbit_canonicalize(const StructureOf<F>& x, const Budget& budget = {}) {
  const LabelSet ground = F::labels(x);
  if (ground.size() > kMaxOrbitDegree)
    throw CarrierOverflow("orbit canonicalization is brute force and limited to " + std::to_string(kMaxOrbitDegree) +
                          " labels");
  const auto standard = F::relabel(Relabeling::standardize(ground), x);
  const LabelSet range = LabelSet::range(ground.size());
  OrbitClass<F> best{ground.size(), standard, F::encode(standard)};
  for (const auto& sigma : permutations_of(range, budget)) {
    auto y = F::relabel(sigma, standard);
    auto enc = F::encode(y);
    if (enc < best.encoding) {
      best.representative = std::move(y);
      best.encoding = std::move(enc);
    }
  }
  return best;
}

/// Rational combination of orbit classes.
template <Family F>
struct FockVector {
  std::map<std::string, std::pair<OrbitClass<F>, Rational>> terms;

  void add(const OrbitClass<F>& c, const Rational& r) {
    if (r == 0) return;
    auto it = terms.find(c.encoding);
    if (it == terms.end()) {
      terms.emplace(c.encoding, std::pair{c, r});
    } else {
      it->second.second += r;
      if (it->second.second == 0) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const FockVector& a, const FockVector& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (auto i = a.terms.begin(), j = b.terms.begin(); i != a.terms.end(); ++i, ++j)
      if (i->first != j->first || i->second.second != j->second.second) return false;
    return true;
  }
  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms) {
      if (!out.empty()) out += " + ";
      out += "(" + to_display_string(v.second) + ")[" + k + "]";
    }
    return out;
  }
};

/// Rational combination of pairs of orbit classes.
template <Family F>
struct FockTensor {
  std::map<std::pair<std::string, std::string>, Rational> terms;

  void add(const OrbitClass<F>& a, const OrbitClass<F>& b, const Rational& r) {
    if (r == 0) return;
    auto& slot = terms[{a.encoding, b.encoding}];
    slot += r;
    if (slot == 0) terms.erase({a.encoding, b.encoding});
  }
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const FockTensor&, const FockTensor&) = default;
  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, r] : terms) {
      if (!out.empty()) out += " + ";
      out += "(" + to_display_string(r) + ")[" + k.first + "]⊗[" + k.second + "]";
    }
    return out;
  }
};

template <Family F>
FockVector<F> fock_image(const FreeVector<F>& v, const Budget& budget = {}) {
  FockVector<F> out;
  for (const auto& [k, t] : v.terms()) out.add(orbit_canonicalize<F>(t.structure, budget), t.coefficient);
  return out;
}

/// Σ over all 2^n ordered splits (S,T) of [x|S] ⊗ [x|T]; `reduced` drops S = ∅ and T = ∅.
template <Family F>
FockTensor<F> fock_coproduct(const StructureOf<F>& x, bool reduced = false, const Budget& budget = {}) {
  FockTensor<F> out;
  for (const auto& [s, t] : two_block_splits(F::labels(x))) {
    if (reduced && (s.empty() || t.empty())) continue;
    auto [a, b] = F::comult(x, s, t);
    out.add(orbit_canonicalize<F>(a, budget), orbit_canonicalize<F>(b, budget), 1);
  }
  return out;
}

template <Family F>
FockTensor<F> fock_coproduct(const FockVector<F>& v, bool reduced = false, const Budget& budget = {}) {
  FockTensor<F> out;
  for (const auto& [k, term] : v.terms)
    for (const auto& [pair, r] : fock_coproduct<F>(term.first.representative, reduced, budget).terms) {
      auto& slot = out.terms[pair];
      slot += r * term.second;
      if (slot == 0) out.terms.erase(pair);
    }
  return out;
}

/// Product of orbit classes: the class of the disjoint union after shifting labels apart.
template <Family F>
OrbitClass<F> fock_product(const OrbitClass<F>& a, const OrbitClass<F>& b, const Budget& budget = {}) {
  std::vector<int> shifted;
  for (int i = 0; i < b.degree; ++i) shifted.push_back(a.degree + i);
  const auto moved = F::relabel(Relabeling::from_images(LabelSet::range(b.degree), shifted), b.representative);
  return orbit_canonicalize<F>(F::mult(a.representative, moved), budget);
}

/// The reduced coproduct vanishes. Degree 0 is never primitive.
template <Family F>
bool fock_primitive_check(const FockVector<F>& v, const Budget& budget = {}) {
  for (const auto& [k, term] : v.terms)
    if (term.first.degree == 0) return false;
  return fock_coproduct<F>(v, true, budget).is_zero();
}

}  // namespace hsl
