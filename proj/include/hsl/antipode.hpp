#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"
#include "hsl/linear.hpp"
#include "hsl/parallel.hpp"
#include "hsl/poset.hpp"
#include "hsl/reassembly.hpp"
#include "hsl/species.hpp"

namespace hsl {

enum class AntipodeMethod { takeuchi, closed };

/// Σ over ordered set partitions (S_1..S_k) of (−1)^k m∘Δ(x). Chunks of compositions are
/// summed on separate threads with exact integers and merged afterwards.
template <Family F>
FreeVector<F> takeuchi_antipode(const StructureOf<F>& x, const Budget& budget = {}, unsigned jobs = default_jobs()) {
  using S = StructureOf<F>;
  const LabelSet ground = F::labels(x);
  FreeVector<F> out(ground);
  if (ground.empty()) {
    out.add(x, 1);
    return out;
  }
  const auto compositions = ordered_set_partitions(ground, budget);
  const std::size_t chunks = std::min<std::size_t>(compositions.size(), std::max(1U, jobs) * 4);
  std::vector<std::map<std::string, std::pair<S, long long>>> partial(chunks);
  parallel_for(
      chunks,
      [&](std::size_t c) {
        auto& acc = partial[c];
        for (std::size_t i = c; i < compositions.size(); i += chunks) {
          const auto& a = compositions[i];
          auto y = merge_split<F>(a, x);
          const long long sign = a.length() % 2 == 0 ? 1 : -1;
          auto key = F::encode(y);
          auto it = acc.find(key);
          if (it == acc.end()) {
            acc.emplace(std::move(key), std::pair<S, long long>{std::move(y), sign});
          } else {
            it->second.second += sign;
          }
        }
      },
      jobs);
  std::map<std::string, std::pair<S, long long>> total;
  for (auto& acc : partial)
    for (auto& [k, v] : acc) {
      auto it = total.find(k);
      if (it == total.end()) {
        total.emplace(k, std::move(v));
      } else {
        it->second.second += v.second;
      }
    }
  for (const auto& [k, v] : total) out.add(v.first, Rational(v.second));
  return out;
}

namespace detail {

template <Family F>
bool self_adjoint_up_to(int n, const Budget& budget) {
  static std::mutex mutex;
  static std::map<int, bool> known;
  {
    std::lock_guard lock(mutex);
    if (auto it = known.find(n); it != known.end()) return it->second;
  }
  const bool ok = is_commutative_cocommutative<F>(n, budget);
  std::lock_guard lock(mutex);
  known[n] = ok;
  return ok;
}

}  // namespace detail

template <Family F>
struct ClosedFormAntipode {
  FreeVector<F> upper;          // Σ_{x<=z<=y} (−1)^ℓ(z) μ(z,y): the normative form
  FreeVector<F> lower_literal;  // Σ_{x<=z<=y} μ(x,z) (−1)^ℓ(z): the formula as printed
};

/// Coefficient of y is p_[x,y](−1) with p read two ways; both sums run over the
/// reassembly up-set of x, which contains every interval [z, y] needed.
template <Family F>
ClosedFormAntipode<F> closed_form_antipode_both(const StructureOf<F>& x, const Budget& budget = {}) {
  const LabelSet ground = F::labels(x);
  if (!detail::self_adjoint_up_to<F>(ground.size(), budget))
    throw NotSelfAdjoint(std::string(F::tag) + " is not commutative and cocommutative up to size " +
                         std::to_string(ground.size()));
  const auto p = reassembly_poset<F>(ground, budget);
  const auto m = mobius_matrix(p, p.upset(x));
  const std::size_t n = m.elements.size();
  std::vector<int> sign(n);
  for (std::size_t z = 0; z < n; ++z) sign[z] = ell<F>(m.elements[z]) % 2 == 0 ? 1 : -1;
  const std::size_t xi = *m.index_of(F::encode(x));
  ClosedFormAntipode<F> out{FreeVector<F>(ground), FreeVector<F>(ground)};
  for (std::size_t y = 0; y < n; ++y) {
    long long upper = 0, lower = 0;
    for (std::size_t z = 0; z < n; ++z) {
      if (!m.leq[z][y] || !m.leq[xi][z]) continue;
      upper += sign[z] * m.mu[z][y];
      lower += sign[z] * m.mu[xi][z];
    }
    out.upper.add(m.elements[y], Rational(upper));
    out.lower_literal.add(m.elements[y], Rational(lower));
  }
  return out;
}

template <Family F>
FreeVector<F> closed_form_antipode(const StructureOf<F>& x, const Budget& budget = {}) {
  return closed_form_antipode_both<F>(x, budget).upper;
}

template <Family F>
FreeVector<F> antipode(const StructureOf<F>& x, AntipodeMethod method, const Budget& budget = {},
                       unsigned jobs = default_jobs()) {
  return method == AntipodeMethod::takeuchi ? takeuchi_antipode<F>(x, budget, jobs)
                                            : closed_form_antipode<F>(x, budget);
}

template <Family F>
struct EigenCheck {
  bool holds = false;
  int ell = 0;
  FreeVector<F> lhs;  // S(ω_x)
  FreeVector<F> rhs;  // (−1)^ℓ(x) ω_x
};

/// S(ω_x) = (−1)^ℓ(x) ω_x with ω in the reassembly order and S by Takeuchi.
template <Family F>
EigenCheck<F> antipode_on_inverted_check(const StructureOf<F>& x, const Budget& budget = {},
                                         unsigned jobs = default_jobs()) {
  const auto p = reassembly_poset<F>(F::labels(x), budget);
  const auto omega = inverted_basis<F>(p, x);
  EigenCheck<F> out;
  out.ell = ell<F>(x);
  out.lhs = linear_apply(omega, [&](const StructureOf<F>& y) { return takeuchi_antipode<F>(y, budget, jobs); });
  out.rhs = omega;
  out.rhs *= Rational(out.ell % 2 == 0 ? 1 : -1);
  out.holds = out.lhs == out.rhs;
  return out;
}

/// m∘(S⊗id)∘Δ and m∘(id⊗S)∘Δ, summed over all splits, vanish off ∅ and fix the unit.
template <Family F>
CheckReport antipode_axiom_check(int n, AntipodeMethod method, const Budget& budget = {},
                                 unsigned jobs = default_jobs()) {
  CheckReport report;
  for (int k = 0; k <= n; ++k) {
    const LabelSet ground = LabelSet::range(k);
    for (const auto& x : F::enumerate(ground, budget)) {
      FreeVector<F> left(ground), right(ground);
      for (const auto& [s, t] : two_block_splits(ground)) {
        const auto [a, b] = F::comult(x, s, t);
        left += linear_mult(antipode<F>(a, method, budget, jobs), FreeVector<F>::basis(b));
        right += linear_mult(FreeVector<F>::basis(a), antipode<F>(b, method, budget, jobs));
      }
      const FreeVector<F> expected = k == 0 ? FreeVector<F>::basis(F::unit()) : FreeVector<F>(ground);
      report.record(left == expected && right == expected, [&] {
        return "convolution identity fails on " + F::encode(x) + ": m(S⊗id)Δ = " + left.to_string() +
               ", m(id⊗S)Δ = " + right.to_string();
      });
    }
  }
  return report;
}

/// S(S(x)) = x for every structure on {0..k-1}, k <= n.
template <Family F>
CheckReport antipode_involution_check(int n, const Budget& budget = {}, unsigned jobs = default_jobs()) {
  CheckReport report;
  for (int k = 0; k <= n; ++k)
    for (const auto& x : F::enumerate(LabelSet::range(k), budget)) {
      const auto twice = linear_apply(takeuchi_antipode<F>(x, budget, jobs),
                                      [&](const StructureOf<F>& y) { return takeuchi_antipode<F>(y, budget, jobs); });
      report.record(twice == FreeVector<F>::basis(x), [&] { return F::encode(x) + " -> " + twice.to_string(); });
    }
  return report;
}

/// True when the structure is not box(y, z) for any proper split. Relies on Δ∘box = id.
template <Family F, class Box>
bool is_box_indecomposable(const StructureOf<F>& x, Box&& box) {
  const LabelSet ground = F::labels(x);
  if (ground.empty()) return false;
  for (const auto& [s, t] : two_block_splits(ground)) {
    if (s.empty() || t.empty()) continue;
    const auto [a, b] = F::comult(x, s, t);
    if (box(a, b) == x) return false;
  }
  return true;
}

/// Δ_{S,T}(v) = 0 for every split with S and T nonempty.
template <Family F>
bool is_primitive(const FreeVector<F>& v) {
  for (const auto& [s, t] : two_block_splits(v.ambient())) {
    if (s.empty() || t.empty()) continue;
    if (!linear_comult(v, s, t).is_zero()) return false;
  }
  return true;
}

template <Family F>
struct PrimitiveElement {
  StructureOf<F> structure;
  FreeVector<F> omega;
};

/// {ω_x : x box-indecomposable}, ω in the order where Δ is the left adjoint.
template <Family F>
std::vector<PrimitiveElement<F>> primitives_basis(const VerifiedAdjunction<F>& adj, LabelSet ground,
                                                  const Budget& budget = {}) {
  if (!adj.holds()) throw AdjunctionUnverified("adjunction " + adj.adjunction.name + " failed verification");
  if (ground.size() > adj.n)
    throw AdjunctionUnverified("adjunction " + adj.adjunction.name + " was verified only up to size " +
                               std::to_string(adj.n));
  const auto p = adj.adjunction.omega_order(ground, budget);
  std::vector<PrimitiveElement<F>> out;
  for (const auto& x : F::enumerate(ground, budget))
    if (is_box_indecomposable<F>(x, adj.adjunction.box)) out.push_back({x, inverted_basis<F>(p, x)});
  return out;
}

}  // namespace hsl
