#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"
#include "hsl/poset.hpp"
#include "hsl/species.hpp"

namespace hsl {

/// Unordered factorization into m-indecomposables; factors[i] lives on partition.blocks[i].
template <Family F>
struct Factorization {
  UnorderedSetPartition partition;
  std::vector<StructureOf<F>> factors;

  std::size_t length() const { return factors.size(); }
};

namespace detail {

// Proper bipartitions (S, T) with min(I) in S, S ascending by mask.
inline std::vector<std::pair<LabelSet, LabelSet>> proper_bipartitions(LabelSet ground) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  if (ground.size() < 2) return out;
  const Mask anchor = LabelSet::bit(ground.min());
  const Mask rest = ground.bits() & ~anchor;
  for (Mask sub = rest; sub != 0; sub = (sub - 1) & rest) {
    const Mask s = anchor | (rest & ~sub);
    out.emplace_back(LabelSet(s), LabelSet(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <Family F>
void factor_blocks(const StructureOf<F>& x, bool ascending, std::vector<Mask>& blocks) {
  const LabelSet ground = F::labels(x);
  if (ground.empty()) return;
  auto splits = proper_bipartitions(ground);
  if (!ascending) std::reverse(splits.begin(), splits.end());
  for (const auto& [s, t] : splits) {
    auto [a, b] = F::comult(x, s, t);
    if (F::mult(a, b) == x) {
      factor_blocks<F>(a, ascending, blocks);
      factor_blocks<F>(b, ascending, blocks);
      return;
    }
  }
  blocks.push_back(ground.bits());
}

}  // namespace detail

/// Splits along any proper bipartition with m(Δ(x)) = x and recurses. Runs the search
/// twice with opposite candidate orders and insists both agree.
template <Family F>
Factorization<F> factorize(const StructureOf<F>& x) {
  std::vector<Mask> up, down;
  detail::factor_blocks<F>(x, true, up);
  detail::factor_blocks<F>(x, false, down);
  auto by_min = [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); };
  std::sort(up.begin(), up.end(), by_min);
  std::sort(down.begin(), down.end(), by_min);
  if (up != down) throw NonUniqueFactorization("two factorization sweeps disagree on " + F::encode(x));
  Factorization<F> f;
  f.partition.ambient = F::labels(x);
  for (Mask b : up) {
    f.partition.blocks.emplace_back(b);
    f.factors.push_back(F::comult(x, LabelSet(b), F::labels(x) - LabelSet(b)).first);
  }
  return f;
}

template <Family F>
int ell(const StructureOf<F>& x) {
  return static_cast<int>(factorize<F>(x).length());
}

/// { m_A(Δ_A(x)) : A a set partition of the labels of x }.
template <Family F>
std::vector<StructureOf<F>> reassembly_upset(const StructureOf<F>& x, const Budget& budget = {}) {
  std::map<std::string, StructureOf<F>> seen;
  for (const auto& a : set_partitions(F::labels(x), budget)) {
    auto y = merge_split<F>(a, x);
    seen.try_emplace(F::encode(y), std::move(y));
  }
  std::vector<StructureOf<F>> out;
  out.reserve(seen.size());
  for (auto& [k, v] : seen) out.push_back(std::move(v));
  return out;
}

namespace detail {

// Factorization partitions by encoding, shared between copies of a reassembly view.
class FactorCache {
 public:
  template <Family F>
  UnorderedSetPartition blocks_of(const StructureOf<F>& y) {
    auto key = F::encode(y);
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    auto p = factorize<F>(y).partition;
    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), p);
    return p;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::string, UnorderedSetPartition> cache_;
};

}  // namespace detail

/// x <=_r y iff y = m_A Δ_A x for some set partition A. Because Δ∘m is the identity, it is
/// enough to try A = the factorization partition of y.
template <Family F>
bool reassembly_leq(const StructureOf<F>& x, const StructureOf<F>& y) {
  if (F::labels(x) != F::labels(y)) return false;
  return merge_split<F>(factorize<F>(y).partition, x) == y;
}

template <Family F>
PosetView<StructureOf<F>> reassembly_poset(LabelSet ground, const Budget& budget = {}) {
  using S = StructureOf<F>;
  auto cache = std::make_shared<detail::FactorCache>();
  PosetView<S> p(
      std::string(F::tag) + " reassembly order on {" + ground.to_string() + "}",
      [cache](const S& x, const S& y) {
        if (F::labels(x) != F::labels(y)) return false;
        return merge_split<F>(cache->template blocks_of<F>(y), x) == y;
      },
      [budget](const S& x) { return reassembly_upset<F>(x, budget); },
      [](const S& x) { return F::encode(x); }, budget);
  return p.with_carrier([ground, budget] { return F::enumerate(ground, budget); });
}

}  // namespace hsl
