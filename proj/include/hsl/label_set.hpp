#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hsl/error.hpp"

namespace hsl {

using Mask = std::uint32_t;
inline constexpr int kMaxLabels = 32;

/// A finite set of labels drawn from {0, ..., 31}, stored as a bitmask.
class LabelSet {
 public:
  constexpr LabelSet() = default;
  constexpr explicit LabelSet(Mask bits) : bits_(bits) {}
  LabelSet(std::initializer_list<int> labels) {
    for (int l : labels) bits_ |= bit(l);
  }

  static constexpr LabelSet range(int n) {
    return LabelSet(n >= kMaxLabels ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr Mask bit(int label) { return Mask{1} << label; }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ >> label) & 1U; }
  constexpr bool includes(LabelSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool disjoint(LabelSet other) const { return (bits_ & other.bits_) == 0; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return kMaxLabels - 1 - std::countl_zero(bits_); }
  constexpr bool is_range() const { return bits_ == range(size()).bits_; }

  std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr LabelSet operator|(LabelSet a, LabelSet b) { return LabelSet(a.bits_ | b.bits_); }
  friend constexpr LabelSet operator&(LabelSet a, LabelSet b) { return LabelSet(a.bits_ & b.bits_); }
  friend constexpr LabelSet operator-(LabelSet a, LabelSet b) { return LabelSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(LabelSet, LabelSet) = default;

  // "0,1,4"
  std::string to_string() const {
    std::string out;
    for (int l : labels()) {
      if (!out.empty()) out += ',';
      out += std::to_string(l);
    }
    return out;
  }

 private:
  Mask bits_ = 0;
};

inline std::vector<int> members(Mask m) { return LabelSet(m).labels(); }

/// A bijection between two label sets.
class Relabeling {
 public:
  Relabeling() { image_.fill(-1); }

  // Sends the i-th smallest label of `from` to `to[i]`.
  static Relabeling from_images(LabelSet from, const std::vector<int>& to) {
    const auto src = from.labels();
    if (src.size() != to.size()) throw LabelMismatch("relabeling: domain and image sizes differ");
    Relabeling r;
    r.domain_ = from;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (to[i] < 0 || to[i] >= kMaxLabels || r.codomain_.contains(to[i]))
        throw LabelMismatch("relabeling is not a bijection");
      r.image_[static_cast<std::size_t>(src[i])] = static_cast<std::int8_t>(to[i]);
      r.codomain_ = r.codomain_ | LabelSet{to[i]};
    }
    return r;
  }

  static Relabeling identity(LabelSet s) { return from_images(s, s.labels()); }

  // Order-preserving bijection onto {0, ..., |s|-1}.
  static Relabeling standardize(LabelSet s) {
    std::vector<int> to(static_cast<std::size_t>(s.size()));
    for (std::size_t i = 0; i < to.size(); ++i) to[i] = static_cast<int>(i);
    return from_images(s, to);
  }

  LabelSet domain() const { return domain_; }
  LabelSet codomain() const { return codomain_; }

  int operator()(int label) const {
    if (!domain_.contains(label)) throw LabelMismatch("label " + std::to_string(label) + " outside relabeling domain");
    return image_[static_cast<std::size_t>(label)];
  }

  Mask apply(Mask m) const {
    Mask out = 0;
    for (; m != 0; m &= m - 1) out |= LabelSet::bit((*this)(std::countr_zero(m)));
    return out;
  }
  LabelSet apply(LabelSet s) const { return LabelSet(apply(s.bits())); }

  Relabeling restrict_to(LabelSet s) const {
    if (!domain_.includes(s)) throw LabelMismatch("relabeling restriction outside domain");
    std::vector<int> to;
    for (int l : s.labels()) to.push_back((*this)(l));
    return from_images(s, to);
  }

  // (g after f)
  Relabeling then(const Relabeling& g) const {
    if (g.domain_ != codomain_) throw LabelMismatch("relabelings do not compose");
    std::vector<int> to;
    for (int l : domain_.labels()) to.push_back(g((*this)(l)));
    return from_images(domain_, to);
  }

  Relabeling inverse() const {
    Relabeling r;
    r.domain_ = codomain_;
    r.codomain_ = domain_;
    for (int l : domain_.labels()) r.image_[static_cast<std::size_t>((*this)(l))] = static_cast<std::int8_t>(l);
    return r;
  }

  friend bool operator==(const Relabeling& a, const Relabeling& b) {
    if (a.domain_ != b.domain_) return false;
    for (int l : a.domain_.labels())
      if (a(l) != b(l)) return false;
    return true;
  }

 private:
  std::array<std::int8_t, kMaxLabels> image_{};
  LabelSet domain_;
  LabelSet codomain_;
};

// Every bijection of `s` onto itself, in lexicographic order of image sequences.
inline std::vector<Relabeling> permutations_of(LabelSet s, const Budget& budget = {}) {
  long double count = 1;
  for (int i = 2; i <= s.size(); ++i) count *= i;
  budget.check_estimate(count, "permutations of a label set");
  auto images = s.labels();
  std::vector<Relabeling> out;
  do {
    out.push_back(Relabeling::from_images(s, images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

/// Unordered decomposition of a label set into nonempty blocks, blocks sorted by minimum.
struct UnorderedSetPartition {
  LabelSet ambient;
  std::vector<LabelSet> blocks;

  std::size_t length() const { return blocks.size(); }
  friend bool operator==(const UnorderedSetPartition&, const UnorderedSetPartition&) = default;

  // "01|2"-style rendering with comma separators between members.
  std::string to_string() const {
    std::string out;
    for (const auto& b : blocks) {
      if (!out.empty()) out += '|';
      out += b.to_string();
    }
    return out;
  }
};

/// Ordered decomposition of a label set into nonempty blocks.
struct OrderedSetPartition {
  LabelSet ambient;
  std::vector<LabelSet> blocks;

  std::size_t length() const { return blocks.size(); }
  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

  static OrderedSetPartition make(LabelSet ambient, std::vector<LabelSet> blocks) {
    LabelSet seen;
    for (const auto& b : blocks) {
      if (b.empty()) throw LabelMismatch("ordered set partition has an empty block");
      if (!seen.disjoint(b)) throw LabelMismatch("ordered set partition blocks overlap");
      seen = seen | b;
    }
    if (seen != ambient) throw LabelMismatch("ordered set partition blocks do not cover the ambient set");
    return OrderedSetPartition{ambient, std::move(blocks)};
  }
};

inline std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

inline std::uint64_t fubini_number(int n) {
  // a(n) = sum_k C(n,k) a(n-k)
  std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::uint64_t binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * static_cast<std::uint64_t>(m - k + 1) / static_cast<std::uint64_t>(k);
      a[static_cast<std::size_t>(m)] += binom * a[static_cast<std::size_t>(m - k)];
    }
  }
  return a[static_cast<std::size_t>(n)];
}

// Restricted-growth-string enumeration; blocks come out sorted by minimum.
inline std::vector<UnorderedSetPartition> set_partitions(LabelSet s, const Budget& budget = {}) {
  budget.check(bell_number(s.size()), "set partitions");
  const auto labels = s.labels();
  const std::size_t n = labels.size();
  std::vector<UnorderedSetPartition> out;
  if (n == 0) {
    out.push_back(UnorderedSetPartition{s, {}});
    return out;
  }
  std::vector<std::size_t> rgs(n, 0), maxes(n, 0);
  while (true) {
    std::size_t k = 0;
    for (auto v : rgs) k = std::max(k, v + 1);
    std::vector<Mask> blocks(k, 0);
    for (std::size_t i = 0; i < n; ++i) blocks[rgs[i]] |= LabelSet::bit(labels[i]);
    UnorderedSetPartition p{s, {}};
    for (auto b : blocks) p.blocks.emplace_back(b);
    out.push_back(std::move(p));

    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > maxes[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
    for (std::size_t j = i; j < n; ++j) maxes[j] = std::max(maxes[j - 1], rgs[j]);
  }
  return out;
}

// Ordered set partitions, sorted lexicographically by the sequence of block minima
// (ties broken by block bitmasks).
inline std::vector<OrderedSetPartition> ordered_set_partitions(LabelSet s, const Budget& budget = {}) {
  budget.check(fubini_number(s.size()), "ordered set partitions");
  std::vector<OrderedSetPartition> out;
  for (const auto& p : set_partitions(s, budget)) {
    std::vector<std::size_t> order(p.blocks.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    do {
      OrderedSetPartition o{s, {}};
      for (auto i : order) o.blocks.push_back(p.blocks[i]);
      out.push_back(std::move(o));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  auto sort_key = [](const OrderedSetPartition& o) {
    std::vector<int> key;
    for (const auto& b : o.blocks) key.push_back(b.min());
    for (const auto& b : o.blocks) key.push_back(static_cast<int>(b.bits()));
    return key;
  };
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return sort_key(a) < sort_key(b); });
  return out;
}

// All 2^|s| ordered pairs (S, T) with S ⊔ T = s, trivial ones included, S ascending by mask.
inline std::vector<std::pair<LabelSet, LabelSet>> two_block_splits(LabelSet s) {
  std::vector<std::pair<LabelSet, LabelSet>> out;
  const Mask all = s.bits();
  Mask sub = 0;
  do {
    out.emplace_back(LabelSet(sub), LabelSet(all & ~sub));
    sub = (sub - all) & all;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Ordered triples (S, T, R) with S ⊔ T ⊔ R = s, empty blocks allowed.
inline std::vector<std::array<LabelSet, 3>> three_block_splits(LabelSet s) {
  std::vector<std::array<LabelSet, 3>> out;
  for (const auto& [first, rest] : two_block_splits(s))
    for (const auto& [second, third] : two_block_splits(rest)) out.push_back({first, second, third});
  return out;
}

}  // namespace hsl
