#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/families/set_system.hpp"
#include "hsl/label_set.hpp"

namespace hsl {

/// Set partition of its label set; blocks sorted by minimum.
struct SetPartition {
  LabelSet vertices;
  std::vector<Mask> blocks;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

namespace detail {

inline void sort_blocks(std::vector<Mask>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](Mask a, Mask b) { return std::countr_zero(a) < std::countr_zero(b); });
}

}  // namespace detail

inline SetPartition make_partition(LabelSet vertices, const std::vector<LabelSet>& blocks) {
  SetPartition p{vertices, {}};
  LabelSet seen;
  for (auto b : blocks) {
    if (b.empty() || !seen.disjoint(b)) throw LabelMismatch("partition blocks must be nonempty and disjoint");
    seen = seen | b;
    p.blocks.push_back(b.bits());
  }
  if (seen != vertices) throw LabelMismatch("partition blocks do not cover {" + vertices.to_string() + "}");
  detail::sort_blocks(p.blocks);
  return p;
}

inline SetPartition from_unordered(const UnorderedSetPartition& u) {
  SetPartition p{u.ambient, {}};
  for (auto b : u.blocks) p.blocks.push_back(b.bits());
  detail::sort_blocks(p.blocks);
  return p;
}

struct Partitions {
  using structure_type = SetPartition;
  static constexpr std::string_view tag = "partitions";

  static LabelSet labels(const SetPartition& p) { return p.vertices; }
  static SetPartition unit() { return {}; }

  static std::vector<SetPartition> enumerate(LabelSet s, const Budget& budget = {}) {
    std::vector<SetPartition> out;
    for (const auto& u : set_partitions(s, budget)) out.push_back(from_unordered(u));
    return out;
  }

  static SetPartition relabel(const Relabeling& r, const SetPartition& p) {
    if (r.domain() != p.vertices) throw LabelMismatch("relabeling domain differs from partition labels");
    SetPartition out{r.codomain(), {}};
    for (Mask b : p.blocks) out.blocks.push_back(r.apply(b));
    detail::sort_blocks(out.blocks);
    return out;
  }

  static SetPartition mult(const SetPartition& a, const SetPartition& b) {
    detail::check_disjoint(a.vertices, b.vertices);
    SetPartition out{a.vertices | b.vertices, a.blocks};
    out.blocks.insert(out.blocks.end(), b.blocks.begin(), b.blocks.end());
    detail::sort_blocks(out.blocks);
    return out;
  }

  static SetPartition restrict(const SetPartition& p, LabelSet s) {
    SetPartition out{s, {}};
    for (Mask b : p.blocks)
      if (const Mask m = b & s.bits(); m != 0) out.blocks.push_back(m);
    detail::sort_blocks(out.blocks);
    return out;
  }

  static std::pair<SetPartition, SetPartition> comult(const SetPartition& p, LabelSet s, LabelSet t) {
    detail::check_split(p.vertices, s, t);
    return {restrict(p, s), restrict(p, t)};
  }

  // a <= b when b refines a.
  static bool native_leq(const SetPartition& a, const SetPartition& b) {
    if (a.vertices != b.vertices) return false;
    for (Mask fine : b.blocks) {
      bool inside = false;
      for (Mask coarse : a.blocks)
        if ((fine & ~coarse) == 0) {
          inside = true;
          break;
        }
      if (!inside) return false;
    }
    return true;
  }

  // Refinements: a set partition of every block.
  static std::vector<SetPartition> native_upset(const SetPartition& p, const Budget& budget = {}) {
    long double estimate = 1;
    for (Mask b : p.blocks) estimate *= static_cast<long double>(bell_number(std::popcount(b)));
    budget.check_estimate(estimate, "partition refinements");
    std::vector<SetPartition> out{SetPartition{p.vertices, {}}};
    for (Mask b : p.blocks) {
      const auto pieces = set_partitions(LabelSet(b), budget);
      std::vector<SetPartition> next;
      for (const auto& partial : out)
        for (const auto& piece : pieces) {
          SetPartition q = partial;
          for (auto blk : piece.blocks) q.blocks.push_back(blk.bits());
          next.push_back(std::move(q));
        }
      out = std::move(next);
    }
    for (auto& q : out) detail::sort_blocks(q.blocks);
    return out;
  }

  // Coarsenings: a set partition of the block indices.
  static std::vector<SetPartition> native_downset(const SetPartition& p, const Budget& budget = {}) {
    std::vector<SetPartition> out;
    const LabelSet indices = LabelSet::range(static_cast<int>(p.blocks.size()));
    for (const auto& grouping : set_partitions(indices, budget)) {
      SetPartition q{p.vertices, {}};
      for (auto g : grouping.blocks) {
        Mask merged = 0;
        for (int i : g.labels()) merged |= p.blocks[static_cast<std::size_t>(i)];
        q.blocks.push_back(merged);
      }
      detail::sort_blocks(q.blocks);
      out.push_back(std::move(q));
    }
    return out;
  }

  // Blocks as digit strings ("01|2"); comma-separated members once any label exceeds 9.
  static std::string encode(const SetPartition& p) {
    const bool wide = !p.vertices.empty() && p.vertices.max() >= 10;
    std::string body;
    for (Mask b : p.blocks) {
      if (!body.empty()) body += '|';
      if (wide) {
        body += LabelSet(b).to_string();
      } else {
        for (int l : members(b)) body += std::to_string(l);
      }
    }
    return "P:" + detail::label_header(p.vertices) + ";B=" + body;
  }

  static SetPartition parse(std::string_view text) {
    const auto parts = detail::split_encoding(text, 'P', "B");
    std::vector<LabelSet> blocks;
    if (!parts.body.empty()) {
      for (auto item : detail::split(parts.body, '|')) {
        Mask b = 0;
        if (item.find(',') != std::string_view::npos) {
          b = detail::parse_label_list(item, text);
        } else {
          for (char ch : item) {
            const int l = detail::parse_label(std::string_view(&ch, 1), text);
            if (b & LabelSet::bit(l)) throw ParseError("repeated label in '" + std::string(text) + "'");
            b |= LabelSet::bit(l);
          }
        }
        if (b == 0) throw ParseError("empty block in '" + std::string(text) + "'");
        blocks.emplace_back(b);
      }
    }
    try {
      return make_partition(parts.labels, blocks);
    } catch (const LabelMismatch& e) {
      throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
  }
};

inline UnorderedSetPartition components(const SetPartition& p) {
  UnorderedSetPartition u{p.vertices, {}};
  for (Mask b : p.blocks) u.blocks.emplace_back(b);
  return u;
}

inline bool is_connected(const SetPartition& p) { return p.blocks.size() == 1; }

}  // namespace hsl
