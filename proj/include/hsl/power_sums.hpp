#pragma once

// Set partitions, their Fock algebra, and symmetric functions.

#include <optional>
#include <string>
#include <vector>

#include "hsl/families/partitions.hpp"
#include "hsl/fock.hpp"
#include "hsl/int_polynomial.hpp"
#include "hsl/poset.hpp"
#include "hsl/reassembly.hpp"
#include "hsl/symfunc.hpp"

namespace hsl {

// Block sizes, largest first.
inline IntegerPartition partition_type(const SetPartition& p) {
  IntegerPartition lambda;
  for (Mask b : p.blocks) lambda.push_back(std::popcount(b));
  std::sort(lambda.rbegin(), lambda.rend());
  return lambda;
}

// Consecutive blocks of sizes λ_1, λ_2, ... on {0..|λ|-1}.
inline SetPartition partition_of_type(const IntegerPartition& lambda) {
  std::vector<LabelSet> blocks;
  int next = 0;
  for (int part : lambda) {
    Mask b = 0;
    for (int i = 0; i < part; ++i) b |= LabelSet::bit(next++);
    blocks.emplace_back(b);
  }
  return make_partition(LabelSet::range(next), blocks);
}

inline SetPartition one_block(int n) {
  return n == 0 ? SetPartition{} : make_partition(LabelSet::range(n), {LabelSet::range(n)});
}

inline SetPartition finest(int n) {
  std::vector<LabelSet> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back(LabelSet{i});
  return make_partition(LabelSet::range(n), blocks);
}

/// Image of a rational combination of partitions under the Fock map followed by the bridge.
inline SymFunc bridge_image(const FreeVector<Partitions>& v, BridgeScaling scaling = BridgeScaling::factorial) {
  std::map<IntegerPartition, Rational> by_type;
  for (const auto& [k, t] : v.terms()) by_type[partition_type(t.structure)] += t.coefficient;
  SymFunc out;
  for (const auto& [lambda, c] : by_type) out = out + c * symfunc_bridge(lambda, scaling);
  return out;
}

enum class Proportionality { exact, proportional, neither };

inline std::string to_string(Proportionality p) {
  switch (p) {
    case Proportionality::exact: return "exact";
    case Proportionality::proportional: return "proportional";
    case Proportionality::neither: return "neither";
  }
  return "neither";
}

struct ProportionalityResult {
  Proportionality verdict = Proportionality::neither;
  std::optional<Rational> scalar;
};

inline ProportionalityResult compare_to(const SymFunc& f, const SymFunc& target) {
  ProportionalityResult r;
  if (target.is_zero() || f.is_zero()) return r;
  const auto& [lambda, tc] = *target.terms().begin();
  const Rational scalar = f.coefficient(lambda) / tc;
  if (scalar != 0 && f == scalar * target) {
    r.scalar = scalar;
    r.verdict = scalar == 1 ? Proportionality::exact : Proportionality::proportional;
  }
  return r;
}

struct DoubiletReading {
  std::string reading;
  SymFunc value;
  ProportionalityResult match;
};

struct PowerSumReport {
  int n = 0;
  SymFunc image;                  // bridge([ω_{π_I}])
  SymFunc power_sum;              // p_n = m_(n)
  bool newton_agrees = false;     // p_n from Newton's identities equals m_(n)
  ProportionalityResult match;    // image against p_n
  std::vector<DoubiletReading> doubilet;

  bool proportional() const { return match.verdict != Proportionality::neither; }
};

inline PowerSumReport power_sum_identity_check(int n, const Budget& budget = {}) {
  if (n < 1 || n > 6) throw CarrierOverflow("power_sum_identity_check supports 1 <= n <= 6");
  PowerSumReport r;
  r.n = n;
  const LabelSet ground = LabelSet::range(n);
  const auto order = reassembly_poset<Partitions>(ground, budget);
  const auto top = one_block(n);
  const auto bottom = finest(n);
  r.image = bridge_image(inverted_basis<Partitions>(order, top));
  r.power_sum = SymFunc::p(n);
  r.newton_agrees = power_sum_via_newton(n) == r.power_sum;
  r.match = compare_to(r.image, r.power_sum);

  // Σ_Φ μ(0̂,Φ) h_λ(Φ) / μ(0̂,1̂), with 0̂ read two ways.
  const auto carrier = order.carrier();
  const auto m = mobius_matrix(order, carrier);
  const auto ti = *m.index_of(Partitions::encode(top));
  const auto bi = *m.index_of(Partitions::encode(bottom));
  auto reading = [&](std::string name, bool finest_is_zero) {
    SymFunc sum;
    for (std::size_t j = 0; j < m.elements.size(); ++j) {
      const long long mu = finest_is_zero ? m.mu[j][bi] : m.mu[ti][j];
      if (mu != 0) sum = sum + Rational(mu) * SymFunc::h(partition_type(m.elements[j]));
    }
    const Rational norm = Rational(m.mu[ti][bi]);
    DoubiletReading d{std::move(name), Rational(1) / norm * sum, {}};
    d.match = compare_to(d.value, r.power_sum);
    return d;
  };
  r.doubilet.push_back(reading("0 = finest partition (refinement lattice)", true));
  r.doubilet.push_back(reading("0 = one-block partition (reassembly order)", false));
  return r;
}

struct CharPolyRow {
  MobiusSide side = MobiusSide::upper;
  std::string exponent;  // "l", "l-1" or "n-l"
  IntPolynomial polynomial;
  long long value_at_minus_one = 0;
  bool matches_polynomial = false;
  bool matches_value = false;
};

struct CharPolyReport {
  int n = 0;
  IntPolynomial expected;         // t(t−1)⋯(t−n+1)
  long long expected_value = 0;   // (−1)^n n!
  std::vector<CharPolyRow> rows;
  std::optional<std::size_t> matching_row;

  bool passes() const { return matching_row.has_value(); }
};

/// Σ_τ μ · t^{e(τ)} over Π_n for both Möbius sides and three exponent conventions.
inline CharPolyReport partition_char_poly_check(int n, const Budget& budget = {}) {
  if (n < 1 || n > 7) throw CarrierOverflow("partition_char_poly_check supports 1 <= n <= 7");
  CharPolyReport r;
  r.n = n;
  r.expected = IntPolynomial::falling_factorial(n);
  r.expected_value = r.expected.evaluate(-1);
  const auto order = reassembly_poset<Partitions>(LabelSet::range(n), budget);
  const auto top = one_block(n);
  const auto bottom = finest(n);
  const std::vector<std::pair<std::string, std::function<int(const SetPartition&)>>> exponents{
      {"l", [](const SetPartition& p) { return static_cast<int>(p.blocks.size()); }},
      {"l-1", [](const SetPartition& p) { return static_cast<int>(p.blocks.size()) - 1; }},
      {"n-l", [n](const SetPartition& p) { return n - static_cast<int>(p.blocks.size()); }},
  };
  for (auto side : {MobiusSide::upper, MobiusSide::lower})
    for (const auto& [name, grading] : exponents) {
      CharPolyRow row;
      row.side = side;
      row.exponent = name;
      row.polynomial = graded_char_poly(order, top, bottom, grading, side);
      row.value_at_minus_one = row.polynomial.evaluate(-1);
      row.matches_polynomial = row.polynomial == r.expected;
      row.matches_value = row.value_at_minus_one == r.expected_value;
      if (row.matches_polynomial && row.matches_value && !r.matching_row) r.matching_row = r.rows.size();
      r.rows.push_back(std::move(row));
    }
  return r;
}

struct BridgeMorphismReport {
  bool algebra = true;
  bool coalgebra = true;
  std::optional<std::string> witness;
};

/// Checks multiplicativity and Δ∘φ = (φ⊗φ)∘Δ on Par basis elements of degree <= max_degree,
/// with the Fock coproduct computed from actual set partitions.
inline BridgeMorphismReport bridge_morphism_check(int max_degree, BridgeScaling scaling, const Budget& budget = {}) {
  BridgeMorphismReport r;
  for (int d = 0; d <= max_degree; ++d)
    for (const auto& lambda : integer_partitions(d)) {
      const auto rep = partition_of_type(lambda);
      SymTensor via_fock;
      for (const auto& [pair, c] : fock_coproduct<Partitions>(rep, false, budget).terms) {
        const auto left = partition_type(Partitions::parse(pair.first));
        const auto right = partition_type(Partitions::parse(pair.second));
        accumulate(via_fock, tensor(symfunc_bridge(left, scaling), symfunc_bridge(right, scaling)), c);
      }
      if (via_fock != symfunc_bridge(lambda, scaling).coproduct() && r.coalgebra) {
        r.coalgebra = false;
        r.witness = "coproduct of (" + partition_string(lambda) + ") is not preserved";
      }
      for (int e = 0; d + e <= max_degree; ++e)
        for (const auto& mu : integer_partitions(e)) {
          const auto product = fock_product<Partitions>(orbit_canonicalize<Partitions>(rep, budget),
                                                        orbit_canonicalize<Partitions>(partition_of_type(mu), budget), budget);
          const auto merged = partition_type(product.representative);
          if (symfunc_bridge(merged, scaling) != symfunc_bridge(lambda, scaling) * symfunc_bridge(mu, scaling) &&
              r.algebra) {
            r.algebra = false;
            r.witness = "product of (" + partition_string(lambda) + ") and (" + partition_string(mu) + ") is not preserved";
          }
        }
    }
  return r;
}

}  // namespace hsl
