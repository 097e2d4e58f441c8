#pragma once

#include <concepts>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"
#include "hsl/poset.hpp"

namespace hsl {

/// A connected species of labeled structures with a merge (m) and a split (Delta).
///
/// `mult(x, y)` takes structures on disjoint label sets S and T and returns m_{S,T}(x, y);
/// `comult(x, S, T)` returns Delta_{S,T}(x) for S ⊔ T = labels(x).
template <class F>
concept Family = requires(const typename F::structure_type& x, LabelSet s, const Relabeling& r,
                          std::string_view text, const Budget& budget) {
  typename F::structure_type;
  { F::tag } -> std::convertible_to<std::string_view>;
  { F::labels(x) } -> std::same_as<LabelSet>;
  { F::enumerate(s, budget) } -> std::same_as<std::vector<typename F::structure_type>>;
  { F::unit() } -> std::same_as<typename F::structure_type>;
  { F::relabel(r, x) } -> std::same_as<typename F::structure_type>;
  { F::mult(x, x) } -> std::same_as<typename F::structure_type>;
  { F::comult(x, s, s) } -> std::same_as<std::pair<typename F::structure_type, typename F::structure_type>>;
  { F::encode(x) } -> std::same_as<std::string>;
  { F::parse(text) } -> std::same_as<typename F::structure_type>;
  { x == x } -> std::convertible_to<bool>;
};

template <class F>
concept HasNativeOrder = Family<F> && requires(const typename F::structure_type& x, const Budget& budget) {
  { F::native_leq(x, x) } -> std::convertible_to<bool>;
  { F::native_upset(x, budget) } -> std::same_as<std::vector<typename F::structure_type>>;
  { F::native_downset(x, budget) } -> std::same_as<std::vector<typename F::structure_type>>;
};

template <class F>
concept HasFreeProduct = Family<F> && requires(const typename F::structure_type& x) {
  { F::free_mult(x, x) } -> std::same_as<typename F::structure_type>;
};

template <Family F>
using StructureOf = typename F::structure_type;

template <Family F>
StructureOf<F> compose_mult(const OrderedSetPartition& a, const std::vector<StructureOf<F>>& parts) {
  if (parts.size() != a.blocks.size())
    throw LabelMismatch("compose_mult: " + std::to_string(parts.size()) + " parts for " +
                        std::to_string(a.blocks.size()) + " blocks");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (F::labels(parts[i]) != a.blocks[i])
      throw LabelMismatch("compose_mult: part " + F::encode(parts[i]) + " does not live on block {" +
                          a.blocks[i].to_string() + "}");
  }
  if (parts.empty()) return F::unit();
  StructureOf<F> acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = F::mult(acc, parts[i]);
  return acc;
}

template <Family F>
std::vector<StructureOf<F>> compose_comult(const OrderedSetPartition& a, const StructureOf<F>& x) {
  if (F::labels(x) != a.ambient)
    throw LabelMismatch("compose_comult: " + F::encode(x) + " does not live on {" + a.ambient.to_string() + "}");
  std::vector<StructureOf<F>> out;
  if (a.blocks.empty()) return out;
  StructureOf<F> rest = x;
  LabelSet remaining = a.ambient;
  for (std::size_t i = 0; i + 1 < a.blocks.size(); ++i) {
    remaining = remaining - a.blocks[i];
    auto [head, tail] = F::comult(rest, a.blocks[i], remaining);
    out.push_back(std::move(head));
    rest = std::move(tail);
  }
  out.push_back(std::move(rest));
  return out;
}

// m o Delta over an ordered set partition.
template <Family F>
StructureOf<F> merge_split(const OrderedSetPartition& a, const StructureOf<F>& x) {
  return compose_mult<F>(a, compose_comult<F>(a, x));
}

template <Family F>
StructureOf<F> merge_split(const UnorderedSetPartition& a, const StructureOf<F>& x) {
  return merge_split<F>(OrderedSetPartition{a.ambient, a.blocks}, x);
}

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> witness;

  void record(bool ok, const std::string& what) {
    ++checks;
    if (!ok && passed) {
      passed = false;
      witness = what;
    }
  }
};

struct AxiomReport {
  std::string family;
  int n = 0;
  std::vector<AxiomResult> results;

  AxiomResult& add(std::string axiom) {
    AxiomResult r;
    r.axiom = std::move(axiom);
    results.push_back(std::move(r));
    return results.back();
  }
  const AxiomResult* find(std::string_view axiom) const {
    for (const auto& r : results)
      if (r.axiom == axiom) return &r;
    return nullptr;
  }
  bool passed(std::string_view axiom) const {
    const auto* r = find(axiom);
    return r != nullptr && r->passed;
  }
  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }
  bool commutative() const { return passed("commutativity"); }
  bool cocommutative() const { return passed("cocommutativity"); }
};

namespace detail {

template <Family F>
class EnumerationCache {
 public:
  explicit EnumerationCache(Budget budget) : budget_(budget) {}
  const std::vector<StructureOf<F>>& operator()(LabelSet s) {
    auto it = cache_.find(s.bits());
    if (it == cache_.end()) it = cache_.emplace(s.bits(), F::enumerate(s, budget_)).first;
    return it->second;
  }

 private:
  Budget budget_;
  std::map<Mask, std::vector<StructureOf<F>>> cache_;
};

template <Family F>
std::string pair_text(const StructureOf<F>& a, const StructureOf<F>& b) {
  return "(" + F::encode(a) + ", " + F::encode(b) + ")";
}

// Bijections used for naturality: every permutation of I, plus a shift onto disjoint labels.
inline std::vector<Relabeling> naturality_maps(LabelSet s, const Budget& budget) {
  auto maps = permutations_of(s, budget);
  if (!s.empty() && s.max() + s.size() < kMaxLabels) {
    std::vector<int> shifted;
    for (int l : s.labels()) shifted.push_back(l + s.size());
    maps.push_back(Relabeling::from_images(s, shifted));
  }
  return maps;
}

}  // namespace detail

/// Exhaustive check of the species, monoid, comonoid and Hopf axioms on the label sets
/// {0..k-1}, k <= n.
template <Family F>
AxiomReport verify_axioms(int n, const Budget& budget = {}) {
  using S = StructureOf<F>;
  AxiomReport report;
  report.family = std::string(F::tag);
  report.n = n;
  report.results.reserve(12);
  auto& r_func = report.add("relabeling functoriality");
  auto& r_nat_m = report.add("naturality (m)");
  auto& r_nat_d = report.add("naturality (Delta)");
  auto& r_unit = report.add("unitality");
  auto& r_counit = report.add("counitality");
  auto& r_assoc = report.add("associativity");
  auto& r_coassoc = report.add("coassociativity");
  auto& r_compat = report.add("compatibility");
  auto& r_comm = report.add("commutativity");
  auto& r_cocomm = report.add("cocommutativity");
  [[maybe_unused]] AxiomResult* r_order_m = nullptr;
  [[maybe_unused]] AxiomResult* r_order_d = nullptr;
  if constexpr (HasNativeOrder<F>) {
    r_order_m = &report.add("order preservation (m)");
    r_order_d = &report.add("order preservation (Delta)");
  }

  detail::EnumerationCache<F> structures(budget);
  const S unit = F::unit();
  r_unit.record(F::enumerate(LabelSet{}, budget).size() == 1, "the empty label set must carry exactly one structure");

  for (int k = 0; k <= n; ++k) {
    const LabelSet ground = LabelSet::range(k);
    const auto& xs = structures(ground);
    const auto maps = detail::naturality_maps(ground, budget);
    const auto perms = permutations_of(ground, budget);

    for (const auto& x : xs) {
      r_func.record(F::relabel(Relabeling::identity(ground), x) == x, "identity relabeling moves " + F::encode(x));
      for (const auto& s1 : perms) {
        const S once = F::relabel(s1, x);
        for (const auto& s2 : perms) {
          r_func.record(F::relabel(s1.then(s2), x) == F::relabel(s2, once),
                        "relabeling does not compose on " + F::encode(x));
        }
      }
      r_unit.record(F::mult(x, unit) == x && F::mult(unit, x) == x, "unit does not act trivially on " + F::encode(x));
      r_counit.record(F::comult(x, ground, LabelSet{}) == std::pair{x, unit} &&
                          F::comult(x, LabelSet{}, ground) == std::pair{unit, x},
                      "trivial split does not return (x, 1) on " + F::encode(x));
    }

    for (const auto& [s, t] : two_block_splits(ground)) {
      const auto& ys = structures(s);
      const auto& zs = structures(t);
      for (const auto& x : xs) {
        const auto parts = F::comult(x, s, t);
        const auto swapped = F::comult(x, t, s);
        r_cocomm.record(parts.first == swapped.second && parts.second == swapped.first,
                        "Delta_{S,T} != swap Delta_{T,S} on " + F::encode(x) + " with S={" + s.to_string() + "}");
        for (const auto& sigma : maps) {
          const auto image = F::comult(F::relabel(sigma, x), sigma.apply(s), sigma.apply(t));
          const auto expected = std::pair{F::relabel(sigma.restrict_to(s), parts.first),
                                          F::relabel(sigma.restrict_to(t), parts.second)};
          r_nat_d.record(image == expected, "Delta not natural on " + F::encode(x) + " with S={" + s.to_string() + "}");
        }
        if constexpr (HasNativeOrder<F>) {
          for (const auto& x2 : F::native_upset(x, budget)) {
            const auto parts2 = F::comult(x2, s, t);
            r_order_d->record(F::native_leq(parts.first, parts2.first) && F::native_leq(parts.second, parts2.second),
                        "Delta not monotone on " + F::encode(x) + " <= " + F::encode(x2));
          }
        }
      }
      for (const auto& y : ys) {
        for (const auto& z : zs) {
          const S yz = F::mult(y, z);
          r_comm.record(yz == F::mult(z, y), "m_{S,T}(y,z) != m_{T,S}(z,y) for " + detail::pair_text<F>(y, z));
          for (const auto& sigma : maps) {
            r_nat_m.record(F::relabel(sigma, yz) == F::mult(F::relabel(sigma.restrict_to(s), y),
                                                           F::relabel(sigma.restrict_to(t), z)),
                           "m not natural on " + detail::pair_text<F>(y, z));
          }
          for (const auto& [t1, t2] : two_block_splits(ground)) {
            const auto lhs = F::comult(yz, t1, t2);
            const auto [ya, yb] = F::comult(y, s & t1, s & t2);
            const auto [zc, zd] = F::comult(z, t & t1, t & t2);
            r_compat.record(lhs == std::pair{F::mult(ya, zc), F::mult(yb, zd)},
                            "compatibility fails on " + detail::pair_text<F>(y, z) + " with T1={" + t1.to_string() + "}");
          }
          if constexpr (HasNativeOrder<F>) {
            const auto y_up = F::native_upset(y, budget);
            const auto z_up = F::native_upset(z, budget);
            for (const auto& y2 : y_up)
              for (const auto& z2 : z_up)
                r_order_m->record(F::native_leq(yz, F::mult(y2, z2)),
                            "m not monotone on " + detail::pair_text<F>(y, z) + " <= " + detail::pair_text<F>(y2, z2));
          }
        }
      }
    }

    for (const auto& [s, t, r] : three_block_splits(ground)) {
      for (const auto& x : xs) {
        const auto [st, w] = F::comult(x, s | t, r);
        const auto [y, z] = F::comult(st, s, t);
        const auto [y2, tr] = F::comult(x, s, t | r);
        const auto [z2, w2] = F::comult(tr, t, r);
        r_coassoc.record(y == y2 && z == z2 && w == w2, "coassociativity fails on " + F::encode(x));
      }
      for (const auto& y : structures(s))
        for (const auto& z : structures(t))
          for (const auto& w : structures(r))
            r_assoc.record(F::mult(F::mult(y, z), w) == F::mult(y, F::mult(z, w)),
                           "associativity fails on (" + F::encode(y) + ", " + F::encode(z) + ", " + F::encode(w) + ")");
    }
  }
  return report;
}

/// Commutativity and cocommutativity alone, exhaustive on {0..k-1}, k <= n.
template <Family F>
bool is_commutative_cocommutative(int n, const Budget& budget = {}) {
  detail::EnumerationCache<F> structures(budget);
  for (int k = 0; k <= n; ++k) {
    const LabelSet ground = LabelSet::range(k);
    for (const auto& [s, t] : two_block_splits(ground)) {
      for (const auto& x : structures(ground)) {
        const auto a = F::comult(x, s, t);
        const auto b = F::comult(x, t, s);
        if (!(a.first == b.second && a.second == b.first)) return false;
      }
      for (const auto& y : structures(s))
        for (const auto& z : structures(t))
          if (!(F::mult(y, z) == F::mult(z, y))) return false;
    }
  }
  return true;
}

struct IdentityCheck {
  bool holds = true;
  std::size_t checks = 0;
  std::optional<std::string> witness;
};

/// Delta_{S,T}(m_{S,T}(x, y)) = (x, y) for every split of {0..k-1}, k <= n.
template <Family F>
IdentityCheck verify_delta_after_mult_identity(int n, const Budget& budget = {}) {
  IdentityCheck result;
  detail::EnumerationCache<F> structures(budget);
  for (int k = 0; k <= n; ++k) {
    for (const auto& [s, t] : two_block_splits(LabelSet::range(k))) {
      for (const auto& y : structures(s)) {
        for (const auto& z : structures(t)) {
          ++result.checks;
          if (!(F::comult(F::mult(y, z), s, t) == std::pair{y, z})) {
            result.holds = false;
            result.witness = detail::pair_text<F>(y, z);
            return result;
          }
        }
      }
    }
  }
  return result;
}

}  // namespace hsl
