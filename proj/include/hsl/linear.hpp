#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/label_set.hpp"
#include "hsl/orders.hpp"
#include "hsl/poset.hpp"
#include "hsl/rational.hpp"
#include "hsl/reassembly.hpp"
#include "hsl/species.hpp"

namespace hsl {

/// Finite rational combination of structures on one label set, keyed by canonical encoding.
template <Family F>
class FreeVector {
 public:
  using S = StructureOf<F>;
  struct Term {
    S structure;
    Rational coefficient;
  };

  FreeVector() = default;
  explicit FreeVector(LabelSet ambient) : ambient_(ambient) {}

  static FreeVector basis(const S& x, const Rational& c = 1) {
    FreeVector v(F::labels(x));
    v.add(x, c);
    return v;
  }

  LabelSet ambient() const { return ambient_; }
  std::string ambient_name() const { return hsl::ambient_name<F>(ambient_); }
  const std::map<std::string, Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add(const S& x, const Rational& c) {
    if (F::labels(x) != ambient_)
      throw AmbientMismatch(F::encode(x) + " does not live on {" + ambient_.to_string() + "}");
    if (c == 0) return;
    auto key = F::encode(x);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{x, c});
    } else {
      it->second.coefficient += c;
      if (it->second.coefficient == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const S& x) const { return coefficient(F::encode(x)); }
  Rational coefficient(const std::string& encoding) const {
    auto it = terms_.find(encoding);
    return it == terms_.end() ? Rational(0) : it->second.coefficient;
  }

  FreeVector& operator+=(const FreeVector& o) {
    require_same(o);
    for (const auto& [k, t] : o.terms_) add(t.structure, t.coefficient);
    return *this;
  }
  FreeVector& operator-=(const FreeVector& o) {
    require_same(o);
    for (const auto& [k, t] : o.terms_) add(t.structure, -t.coefficient);
    return *this;
  }
  FreeVector& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, t] : terms_) t.coefficient *= c;
    return *this;
  }
  friend FreeVector operator+(FreeVector a, const FreeVector& b) { return a += b; }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) { return a -= b; }
  friend FreeVector operator*(const Rational& c, FreeVector v) { return v *= c; }

  friend bool operator==(const FreeVector& a, const FreeVector& b) {
    if (a.ambient_ != b.ambient_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (i->first != j->first || i->second.coefficient != j->second.coefficient) return false;
    return true;
  }

  // "-[G:n=2;E=0-1] + 2[G:n=2;E=]"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, t] : terms_) {
      const bool negative = t.coefficient < 0;
      const Rational mag = negative ? Rational(-t.coefficient) : t.coefficient;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) out += to_display_string(mag);
      out += "[" + k + "]";
    }
    return out;
  }

 private:
  void require_same(const FreeVector& o) const {
    if (o.ambient_ != ambient_)
      throw AmbientMismatch("vectors on {" + ambient_.to_string() + "} and {" + o.ambient_.to_string() + "}");
  }

  LabelSet ambient_;
  std::map<std::string, Term> terms_;
};

/// Element of kF[S] ⊗ kF[T].
template <Family F>
class TensorVector {
 public:
  using S = StructureOf<F>;
  struct Term {
    S first;
    S second;
    Rational coefficient;
  };

  TensorVector() = default;
  TensorVector(LabelSet s, LabelSet t) : left_(s), right_(t) {}

  LabelSet left() const { return left_; }
  LabelSet right() const { return right_; }
  const std::map<std::pair<std::string, std::string>, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const S& a, const S& b, const Rational& c) {
    if (F::labels(a) != left_ || F::labels(b) != right_)
      throw AmbientMismatch("tensor factor " + F::encode(a) + " ⊗ " + F::encode(b) + " does not live on {" +
                            left_.to_string() + "} ⊗ {" + right_.to_string() + "}");
    if (c == 0) return;
    std::pair<std::string, std::string> key{F::encode(a), F::encode(b)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{a, b, c});
    } else {
      it->second.coefficient += c;
      if (it->second.coefficient == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const TensorVector& a, const TensorVector& b) {
    if (a.left_ != b.left_ || a.right_ != b.right_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (i->first != j->first || i->second.coefficient != j->second.coefficient) return false;
    return true;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, t] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + to_display_string(t.coefficient) + ")[" + k.first + "]⊗[" + k.second + "]";
    }
    return out;
  }

 private:
  LabelSet left_;
  LabelSet right_;
  std::map<std::pair<std::string, std::string>, Term> terms_;
};

template <Family F>
TensorVector<F> tensor(const FreeVector<F>& a, const FreeVector<F>& b) {
  TensorVector<F> out(a.ambient(), b.ambient());
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms()) out.add(ta.structure, tb.structure, ta.coefficient * tb.coefficient);
  return out;
}

template <Family F>
FreeVector<F> linear_mult(const FreeVector<F>& a, const FreeVector<F>& b) {
  FreeVector<F> out(a.ambient() | b.ambient());
  detail::check_disjoint(a.ambient(), b.ambient());
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms()) out.add(F::mult(ta.structure, tb.structure), ta.coefficient * tb.coefficient);
  return out;
}

template <Family F>
FreeVector<F> linear_mult(const TensorVector<F>& t) {
  FreeVector<F> out(t.left() | t.right());
  for (const auto& [k, term] : t.terms()) out.add(F::mult(term.first, term.second), term.coefficient);
  return out;
}

template <Family F>
TensorVector<F> linear_comult(const FreeVector<F>& v, LabelSet s, LabelSet t) {
  detail::check_split(v.ambient(), s, t);
  TensorVector<F> out(s, t);
  for (const auto& [k, term] : v.terms()) {
    auto [a, b] = F::comult(term.structure, s, t);
    out.add(a, b, term.coefficient);
  }
  return out;
}

/// Linear extension of a map on structures.
template <Family F, class Map>
FreeVector<F> linear_apply(const FreeVector<F>& v, Map&& map) {
  std::optional<FreeVector<F>> out;
  for (const auto& [k, term] : v.terms()) {
    FreeVector<F> image = map(term.structure);
    image *= term.coefficient;
    if (!out) {
      out = std::move(image);
    } else {
      *out += image;
    }
  }
  return out ? *out : FreeVector<F>(v.ambient());
}

/// ω_x = Σ_{x<=y} μ(x,y) y.
template <Family F>
FreeVector<F> inverted_basis(const PosetView<StructureOf<F>>& p, const StructureOf<F>& x) {
  FreeVector<F> out(F::labels(x));
  for (const auto& [y, mu] : mobius_row(p, x)) out.add(y, Rational(mu));
  return out;
}

/// Bilinear extension of ζ(a,b) = [a <= b].
template <Family F>
Rational zeta_pairing(const FreeVector<F>& a, const FreeVector<F>& b, const PosetView<StructureOf<F>>& p) {
  if (a.ambient() != b.ambient())
    throw AmbientMismatch("zeta pairing of vectors on {" + a.ambient().to_string() + "} and {" +
                          b.ambient().to_string() + "}");
  Rational total = 0;
  for (const auto& [ka, ta] : a.terms())
    for (const auto& [kb, tb] : b.terms())
      if (p.leq(ta.structure, tb.structure)) total += ta.coefficient * tb.coefficient;
  return total;
}

// ---------------------------------------------------------------------------------------
// Adjunctions between Δ and a multiplication.

/// Which way round the Galois connection holds in the stated order.
enum class AdjointSide {
  delta_left,   // Δ ⊣ box
  delta_right,  // box ⊣ Δ
};

template <Family F>
struct Adjunction {
  using S = StructureOf<F>;
  std::string name;
  AdjointSide side = AdjointSide::delta_left;
  std::function<PosetView<S>(LabelSet, const Budget&)> order;
  std::function<S(const S&, const S&)> box;

  // Order in which Δ is the left adjoint: the stated order, reversed for box ⊣ Δ.
  PosetView<S> omega_order(LabelSet ground, const Budget& budget = {}) const {
    auto p = order(ground, budget);
    return side == AdjointSide::delta_left ? p : p.reversed();
  }
};

template <HasFreeProduct F>
  requires HasNativeOrder<F>
Adjunction<F> delta_free_adjunction() {
  return {"Δ ⊣ □ (native order)", AdjointSide::delta_left,
          [](LabelSet s, const Budget& b) { return native_poset<F>(s, b); },
          [](const StructureOf<F>& a, const StructureOf<F>& c) { return F::free_mult(a, c); }};
}

template <HasNativeOrder F>
Adjunction<F> native_delta_mult_adjunction() {
  return {"Δ ⊣ m (native order)", AdjointSide::delta_left,
          [](LabelSet s, const Budget& b) { return native_poset<F>(s, b); },
          [](const StructureOf<F>& a, const StructureOf<F>& c) { return F::mult(a, c); }};
}

template <HasNativeOrder F>
Adjunction<F> native_mult_delta_adjunction() {
  return {"m ⊣ Δ (native order)", AdjointSide::delta_right,
          [](LabelSet s, const Budget& b) { return native_poset<F>(s, b); },
          [](const StructureOf<F>& a, const StructureOf<F>& c) { return F::mult(a, c); }};
}

template <Family F>
Adjunction<F> reassembly_delta_mult_adjunction() {
  return {"Δ ⊣ m (reassembly order)", AdjointSide::delta_left,
          [](LabelSet s, const Budget& b) { return reassembly_poset<F>(s, b); },
          [](const StructureOf<F>& a, const StructureOf<F>& c) { return F::mult(a, c); }};
}

/// Result of an exhaustive Galois and Rota check of an adjunction up to size n.
template <Family F>
struct VerifiedAdjunction {
  Adjunction<F> adjunction;
  int n = -1;
  bool galois = true;
  bool rota = true;
  std::size_t galois_pairs = 0;
  std::size_t rota_pairs = 0;
  std::optional<std::string> witness;

  bool holds() const { return galois && rota; }
};

/// For every I = {0..k-1}, k <= n, and every split (S,T) of I: check_galois in the stated
/// order and rota_transfer_sweep over all (x, b) pairs.
template <Family F>
VerifiedAdjunction<F> verify_adjunction(const Adjunction<F>& adj, int n, const Budget& budget = {}) {
  using S = StructureOf<F>;
  using Pair = std::pair<S, S>;
  VerifiedAdjunction<F> v;
  v.adjunction = adj;
  v.n = n;
  for (int k = 0; k <= n && v.holds(); ++k) {
    const LabelSet ground = LabelSet::range(k);
    const auto whole = adj.order(ground, budget);
    for (const auto& [s, t] : two_block_splits(ground)) {
      const auto parts = product(adj.order(s, budget), adj.order(t, budget));
      auto delta = [s = s, t = t](const S& x) { return F::comult(x, s, t); };
      auto box = [&adj](const Pair& y) { return adj.box(y.first, y.second); };
      const std::string where = " [" + adj.name + ", split {" + s.to_string() + "}|{" + t.to_string() + "}]";
      GaloisReport g;
      RotaSweep r;
      if (adj.side == AdjointSide::delta_left) {
        g = check_galois(whole, parts, delta, box);
        r = rota_transfer_sweep(whole, parts, delta, box);
      } else {
        g = check_galois(parts, whole, box, delta);
        r = rota_transfer_sweep(parts, whole, box, delta);
      }
      v.galois_pairs += g.pairs_checked;
      v.rota_pairs += r.pairs_checked;
      if (!g.holds) {
        v.galois = false;
        v.witness = g.witness->to_string() + where;
        break;
      }
      if (!r.holds) {
        v.rota = false;
        v.witness = r.witness->to_string() + where;
        break;
      }
    }
  }
  return v;
}

template <Family F>
struct TensorComparison {
  bool equal = false;
  TensorVector<F> lhs;
  TensorVector<F> rhs;
};

/// Δ_{S,T}(ω_x) against Σ_{x1 □ x2 = x} ω_{x1} ⊗ ω_{x2}, with ω taken in the order where
/// Δ is the left adjoint.
template <Family F>
TensorComparison<F> delta_on_inverted_check(const VerifiedAdjunction<F>& adj, const StructureOf<F>& x, LabelSet s,
                                            LabelSet t, const Budget& budget = {}) {
  if (!adj.holds()) throw AdjunctionUnverified("adjunction " + adj.adjunction.name + " failed verification");
  if (F::labels(x).size() > adj.n)
    throw AdjunctionUnverified("adjunction " + adj.adjunction.name + " was verified only up to size " +
                               std::to_string(adj.n));
  const auto& a = adj.adjunction;
  const auto pi = a.omega_order(F::labels(x), budget);
  const auto ps = a.omega_order(s, budget);
  const auto pt = a.omega_order(t, budget);
  TensorComparison<F> out{false, linear_comult(inverted_basis<F>(pi, x), s, t), TensorVector<F>(s, t)};
  const auto xs = F::enumerate(s, budget);
  const auto ys = F::enumerate(t, budget);
  for (const auto& x1 : xs)
    for (const auto& x2 : ys)
      if (a.box(x1, x2) == x) {
        const auto prod = tensor(inverted_basis<F>(ps, x1), inverted_basis<F>(pt, x2));
        for (const auto& [k, term] : prod.terms()) out.rhs.add(term.first, term.second, term.coefficient);
      }
  out.equal = out.lhs == out.rhs;
  return out;
}

struct CheckReport {
  bool holds = true;
  std::size_t checks = 0;
  std::optional<std::string> witness;

  void record(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && holds) {
      holds = false;
      witness = what();
    }
  }
};

/// ⟨Δ_{S,T}(x), y ⊗ z⟩ = ⟨x, y □ z⟩ for every x, y, z and split on label sets of size <= n.
/// The tensor pairing is the product of the factor pairings.
template <Family F>
CheckReport duality_pairing_check(const Adjunction<F>& adj, int n, const Budget& budget = {}) {
  CheckReport report;
  for (int k = 0; k <= n; ++k) {
    const LabelSet ground = LabelSet::range(k);
    const auto pi = adj.omega_order(ground, budget);
    const auto carrier = F::enumerate(ground, budget);
    for (const auto& [s, t] : two_block_splits(ground)) {
      const auto ps = adj.omega_order(s, budget);
      const auto pt = adj.omega_order(t, budget);
      const auto ys = F::enumerate(s, budget);
      const auto zs = F::enumerate(t, budget);
      budget.check(carrier.size() * ys.size() * zs.size(), "duality pairing triples");
      for (const auto& x : carrier) {
        const auto [xs, xt] = F::comult(x, s, t);
        for (const auto& y : ys)
          for (const auto& z : zs) {
            const bool left = ps.leq(xs, y) && pt.leq(xt, z);
            const bool right = pi.leq(x, adj.box(y, z));
            report.record(left == right, [&] {
              return "<Δ(" + F::encode(x) + "), " + F::encode(y) + " ⊗ " + F::encode(z) + "> = " +
                     (left ? "1" : "0") + " but <x, y □ z> = " + (right ? "1" : "0");
            });
            if (!report.holds) return report;
          }
      }
    }
  }
  return report;
}

/// ⟨ω_x, y⟩ = [x = y] for all pairs on `ground`.
template <Family F>
CheckReport kronecker_check(const PosetView<StructureOf<F>>& p, LabelSet ground, const Budget& budget = {}) {
  CheckReport report;
  const auto carrier = F::enumerate(ground, budget);
  for (const auto& x : carrier) {
    const auto w = inverted_basis<F>(p, x);
    for (const auto& y : carrier) {
      const Rational value = zeta_pairing(w, FreeVector<F>::basis(y), p);
      const Rational expected = F::encode(x) == F::encode(y) ? 1 : 0;
      report.record(value == expected, [&] {
        return "<ω_" + F::encode(x) + ", " + F::encode(y) + "> = " + to_display_string(value);
      });
    }
  }
  return report;
}

/// x = Σ_{x<=y} ω_y: rewriting each basis element in the ω basis and back is the identity.
template <Family F>
CheckReport basis_round_trip_check(const PosetView<StructureOf<F>>& p, LabelSet ground, const Budget& budget = {}) {
  CheckReport report;
  for (const auto& x : F::enumerate(ground, budget)) {
    FreeVector<F> back(ground);
    for (const auto& y : p.upset(x)) back += inverted_basis<F>(p, y);
    report.record(back == FreeVector<F>::basis(x), [&] { return F::encode(x) + " -> " + back.to_string(); });
  }
  return report;
}

/// ω_x · ω_y = ω_{x·y}; `order` builds the (self-adjoint) order on each label set.
template <Family F, class OrderFn>
bool product_of_inverted_check(OrderFn&& order, const StructureOf<F>& x, const StructureOf<F>& y,
                               const Budget& budget = {}) {
  const auto lhs = linear_mult(inverted_basis<F>(order(F::labels(x), budget), x),
                               inverted_basis<F>(order(F::labels(y), budget), y));
  const auto xy = F::mult(x, y);
  return lhs == inverted_basis<F>(order(F::labels(xy), budget), xy);
}

}  // namespace hsl
