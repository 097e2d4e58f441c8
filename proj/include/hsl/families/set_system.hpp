#pragma once

// Helpers shared by families whose structures are families of subsets of the label set.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"

namespace hsl::detail {

inline void normalize_sets(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

inline std::vector<Mask> restrict_sets(const std::vector<Mask>& sets, LabelSet s) {
  std::vector<Mask> out;
  for (Mask m : sets)
    if ((m & ~s.bits()) == 0) out.push_back(m);
  return out;
}

inline std::vector<Mask> relabel_sets(const Relabeling& r, const std::vector<Mask>& sets) {
  std::vector<Mask> out;
  out.reserve(sets.size());
  for (Mask m : sets) out.push_back(r.apply(m));
  normalize_sets(out);
  return out;
}

inline std::vector<Mask> merge_sets(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::vector<Mask> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Nonempty subsets of `ground` with at least `min_size` members, ascending by mask.
inline std::vector<Mask> subsets_of_size_at_least(LabelSet ground, int min_size) {
  std::vector<Mask> out;
  const Mask all = ground.bits();
  for (Mask sub = all; sub != 0; sub = (sub - 1) & all)
    if (std::popcount(sub) >= min_size) out.push_back(sub);
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_split(LabelSet whole, LabelSet s, LabelSet t) {
  if (!s.disjoint(t) || (s | t) != whole)
    throw LabelMismatch("split {" + s.to_string() + "} | {" + t.to_string() + "} is not a decomposition of {" +
                        whole.to_string() + "}");
}

inline void check_disjoint(LabelSet s, LabelSet t) {
  if (!s.disjoint(t))
    throw LabelOverlap("label sets {" + s.to_string() + "} and {" + t.to_string() + "} overlap");
}

// Every superset of `base` obtained by adding some of `candidates` (disjoint from base).
inline std::vector<std::vector<Mask>> all_extensions(const std::vector<Mask>& base, const std::vector<Mask>& candidates,
                                                     const Budget& budget, std::string_view what) {
  budget.check_estimate(std::ldexp(1.0L, static_cast<int>(candidates.size())), what);
  std::vector<std::vector<Mask>> out;
  const std::uint64_t total = std::uint64_t{1} << candidates.size();
  out.reserve(total);
  for (std::uint64_t pick = 0; pick < total; ++pick) {
    std::vector<Mask> sets = base;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if ((pick >> i) & 1U) sets.push_back(candidates[i]);
    normalize_sets(sets);
    out.push_back(std::move(sets));
  }
  return out;
}

// Order used by the canonical encodings: by size, then lexicographically by members.
inline bool size_lex_less(Mask a, Mask b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return members(a) < members(b);
}

inline std::string braced(Mask m) { return "{" + LabelSet(m).to_string() + "}"; }

// "n=3" for {0,1,2}, otherwise "V=1,4".
inline std::string label_header(LabelSet s) {
  if (s.is_range()) return "n=" + std::to_string(s.size());
  return "V=" + s.to_string();
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline int parse_label(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad label '" + std::string(s) + "' in " + std::string(context));
  const int v = std::stoi(std::string(s));
  if (v >= kMaxLabels) throw ParseError("label " + std::string(s) + " out of range in " + std::string(context));
  return v;
}

inline Mask parse_label_list(std::string_view s, std::string_view context) {
  Mask m = 0;
  s = trim(s);
  if (s.empty()) return 0;
  for (auto part : split(s, ',')) {
    const int l = parse_label(part, context);
    if (m & LabelSet::bit(l)) throw ParseError("repeated label in " + std::string(context));
    m |= LabelSet::bit(l);
  }
  return m;
}

inline Mask parse_braced(std::string_view s, std::string_view context) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw ParseError("expected '{...}' in " + std::string(context) + ", got '" + std::string(s) + "'");
  return parse_label_list(s.substr(1, s.size() - 2), context);
}

struct EncodingParts {
  LabelSet labels;
  std::string_view body;
};

// Splits "<prefix>:n=<k>;<field>=<body>" (or "V=<labels>" in place of "n=<k>").
inline EncodingParts split_encoding(std::string_view text, char prefix, std::string_view field) {
  const std::string context(text);
  text = trim(text);
  if (text.size() < 2 || text[0] != prefix || text[1] != ':')
    throw ParseError("expected encoding starting with '" + std::string(1, prefix) + ":', got '" + context + "'");
  text.remove_prefix(2);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("missing ';' in '" + context + "'");
  const auto header = trim(text.substr(0, semi));
  auto rest = trim(text.substr(semi + 1));
  EncodingParts parts;
  if (header.substr(0, 2) == "n=") {
    const auto digits = header.substr(2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad label count in '" + context + "'");
    const int n = std::stoi(std::string(digits));
    if (n > kMaxLabels) throw ParseError("too many labels in '" + context + "'");
    parts.labels = LabelSet::range(n);
  } else if (header.substr(0, 2) == "V=") {
    parts.labels = LabelSet(parse_label_list(header.substr(2), context));
  } else {
    throw ParseError("expected 'n=' or 'V=' in '" + context + "'");
  }
  const std::string expected = std::string(field) + "=";
  if (rest.substr(0, expected.size()) != expected)
    throw ParseError("expected '" + expected + "' in '" + context + "'");
  parts.body = trim(rest.substr(expected.size()));
  return parts;
}

inline void check_within(Mask set, LabelSet labels, std::string_view context) {
  if ((set & ~labels.bits()) != 0)
    throw ParseError("set " + braced(set) + " uses labels outside {" + labels.to_string() + "} in " + std::string(context));
}

// Union-find over the labels of `ground`, joining the members of every set.
inline UnorderedSetPartition connected_blocks(LabelSet ground, const std::vector<Mask>& sets) {
  std::vector<int> parent(kMaxLabels);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  };
  for (Mask m : sets) {
    if (m == 0) continue;
    const int root = find(std::countr_zero(m));
    for (Mask rest = m & (m - 1); rest != 0; rest &= rest - 1) {
      const int r = find(std::countr_zero(rest));
      if (r != root) parent[static_cast<std::size_t>(r)] = root;
    }
  }
  std::vector<Mask> by_root(kMaxLabels, 0);
  for (int l : ground.labels()) by_root[static_cast<std::size_t>(find(l))] |= LabelSet::bit(l);
  UnorderedSetPartition p{ground, {}};
  for (Mask b : by_root)
    if (b != 0) p.blocks.emplace_back(b);
  std::sort(p.blocks.begin(), p.blocks.end(), [](LabelSet a, LabelSet b) { return a.min() < b.min(); });
  return p;
}

}  // namespace hsl::detail
