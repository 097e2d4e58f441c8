#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/int_polynomial.hpp"

namespace hsl {

/// A partial order over some element type, given by oracles rather than a stored relation.
///
/// Elements are identified by their canonical key; every comparison, deduplication and
/// cache lookup goes through `key`. The Möbius cache is shared between copies of a view
/// (copies describe the same order) and is never observable from the outside.
template <class E>
class PosetView {
 public:
  using element_type = E;
  using Leq = std::function<bool(const E&, const E&)>;
  using Elements = std::function<std::vector<E>(const E&)>;
  using Carrier = std::function<std::vector<E>()>;
  using Key = std::function<std::string(const E&)>;

  PosetView(std::string name, Leq leq, Elements upset, Key key, Budget budget = {})
      : name_(std::move(name)),
        leq_(std::move(leq)),
        upset_(std::move(upset)),
        key_(std::move(key)),
        budget_(budget),
        cache_(std::make_shared<MobiusCache>()) {}

  PosetView with_downset(Elements downset) const {
    PosetView copy = *this;
    copy.downset_ = std::move(downset);
    return copy;
  }
  PosetView with_carrier(Carrier carrier) const {
    PosetView copy = *this;
    copy.carrier_ = std::move(carrier);
    return copy;
  }

  const std::string& name() const { return name_; }
  const Budget& budget() const { return budget_; }
  std::string key(const E& x) const { return key_(x); }
  bool leq(const E& x, const E& y) const { return leq_(x, y); }
  bool less(const E& x, const E& y) const { return leq_(x, y) && key_(x) != key_(y); }

  std::vector<E> upset(const E& x) const { return normalize(upset_(x), "up-set"); }

  std::vector<E> downset(const E& x) const {
    if (downset_) return normalize(downset_(x), "down-set");
    if (carrier_) {
      std::vector<E> out;
      for (auto& y : carrier()) {
        if (leq_(y, x)) out.push_back(std::move(y));
      }
      return out;
    }
    throw std::logic_error("poset '" + name_ + "' has neither a down-set oracle nor a carrier");
  }

  bool has_carrier() const { return static_cast<bool>(carrier_); }
  std::vector<E> carrier() const {
    if (!carrier_) throw std::logic_error("poset '" + name_ + "' has no enumerable carrier");
    return normalize(carrier_(), "carrier");
  }

  PosetView reversed() const {
    PosetView r(name_ + " (reversed)",
                [leq = leq_](const E& a, const E& b) { return leq(b, a); },
                Elements{}, key_, budget_);
    if (downset_) {
      r.upset_ = downset_;
    } else {
      auto self = *this;
      r.upset_ = [self](const E& x) { return self.downset(x); };
    }
    r.downset_ = upset_;
    r.carrier_ = carrier_;
    return r;
  }

  std::optional<long long> cached_mobius(const std::string& pair_key) const {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->values.find(pair_key);
    if (it == cache_->values.end()) return std::nullopt;
    return it->second;
  }
  void store_mobius(std::string pair_key, long long value) const {
    std::unique_lock lock(cache_->mutex);
    cache_->values.emplace(std::move(pair_key), value);
  }
  std::string pair_key(const E& x, const E& y) const { return key_(x) + '\x1f' + key_(y); }

 private:
  struct MobiusCache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, long long> values;
  };

  // Deduplicate by key and sort by key so enumeration order never depends on the oracle.
  std::vector<E> normalize(std::vector<E> items, const char* what) const {
    budget_.check(items.size(), name_ + " " + what);
    std::map<std::string, E> by_key;
    for (auto& item : items) by_key.try_emplace(key_(item), std::move(item));
    std::vector<E> out;
    out.reserve(by_key.size());
    for (auto& [k, v] : by_key) out.push_back(std::move(v));
    return out;
  }

  std::string name_;
  Leq leq_;
  Elements upset_;
  Elements downset_;
  Carrier carrier_;
  Key key_;
  Budget budget_;
  std::shared_ptr<MobiusCache> cache_;
};

/// A finite family of elements in linear-extension order, with its order matrix and
/// the Möbius function of every comparable pair. Intervals between members must lie
/// inside the family (true for up-sets, down-sets and intervals).
template <class E>
struct MobiusMatrix {
  std::vector<E> elements;
  std::vector<std::string> keys;
  std::vector<std::vector<char>> leq;
  std::vector<std::vector<long long>> mu;

  std::optional<std::size_t> index_of(const std::string& k) const {
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (keys[i] == k) return i;
    return std::nullopt;
  }
};

template <class E>
MobiusMatrix<E> mobius_matrix(const PosetView<E>& p, std::vector<E> elements) {
  const std::size_t n = elements.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = (i == j) || p.leq(elements[i], elements[j]);

  // Linear extension: fewer elements below comes first; ties by key.
  std::vector<std::size_t> below(n, 0);
  std::vector<std::string> keys(n);
  for (std::size_t j = 0; j < n; ++j) {
    keys[j] = p.key(elements[j]);
    for (std::size_t i = 0; i < n; ++i) below[j] += rel[i][j] ? 1 : 0;
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return below[a] != below[b] ? below[a] < below[b] : keys[a] < keys[b];
  });

  MobiusMatrix<E> m;
  m.elements.reserve(n);
  for (auto i : order) {
    m.elements.push_back(std::move(elements[i]));
    m.keys.push_back(keys[i]);
  }
  m.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.leq[a][b] = rel[order[a]][order[b]];

  m.mu.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m.mu[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!m.leq[i][j]) continue;
      long long sum = 0;
      for (std::size_t k = i; k < j; ++k)
        if (m.leq[i][k] && m.leq[k][j]) sum += m.mu[i][k];
      m.mu[i][j] = -sum;
    }
  }
  return m;
}

template <class E>
std::vector<E> interval(const PosetView<E>& p, const E& x, const E& y) {
  if (!p.leq(x, y))
    throw NotComparable("interval: " + p.key(x) + " is not below " + p.key(y) + " in " + p.name());
  std::vector<E> out;
  for (auto& z : p.upset(x)) {
    if (p.leq(z, y)) out.push_back(std::move(z));
  }
  return out;
}

/// Möbius function by the recursion mu(x,x) = 1, mu(x,y) = -sum_{x<=z<y} mu(x,z).
template <class E>
long long mobius(const PosetView<E>& p, const E& x, const E& y) {
  const auto k = p.pair_key(x, y);
  if (auto hit = p.cached_mobius(k)) return *hit;
  auto m = mobius_matrix(p, interval(p, x, y));
  // Row of x covers every [x, z] inside the interval.
  const auto xi = *m.index_of(p.key(x));
  long long result = 0;
  const auto yk = p.key(y);
  for (std::size_t j = 0; j < m.elements.size(); ++j) {
    if (!m.leq[xi][j]) continue;
    p.store_mobius(p.pair_key(x, m.elements[j]), m.mu[xi][j]);
    if (m.keys[j] == yk) result = m.mu[xi][j];
  }
  return result;
}

/// mu(x, y) for every y in the up-set of x, in linear-extension order.
template <class E>
std::vector<std::pair<E, long long>> mobius_row(const PosetView<E>& p, const E& x) {
  auto m = mobius_matrix(p, p.upset(x));
  const auto xi = *m.index_of(p.key(x));
  std::vector<std::pair<E, long long>> row;
  for (std::size_t j = 0; j < m.elements.size(); ++j) {
    if (!m.leq[xi][j]) continue;
    p.store_mobius(p.pair_key(x, m.elements[j]), m.mu[xi][j]);
    row.emplace_back(m.elements[j], m.mu[xi][j]);
  }
  return row;
}

/// Product order on pairs.
template <class A, class B>
PosetView<std::pair<A, B>> product(const PosetView<A>& p, const PosetView<B>& q) {
  using E = std::pair<A, B>;
  auto cartesian = [](const std::vector<A>& as, const std::vector<B>& bs) {
    std::vector<E> out;
    out.reserve(as.size() * bs.size());
    for (const auto& a : as)
      for (const auto& b : bs) out.emplace_back(a, b);
    return out;
  };
  PosetView<E> r(
      p.name() + " x " + q.name(),
      [p, q](const E& a, const E& b) { return p.leq(a.first, b.first) && q.leq(a.second, b.second); },
      [p, q, cartesian](const E& x) {
        auto a = p.upset(x.first);
        auto b = q.upset(x.second);
        p.budget().check(a.size() * b.size(), "product up-set");
        return cartesian(a, b);
      },
      [p, q](const E& x) { return "(" + p.key(x.first) + " , " + q.key(x.second) + ")"; },
      p.budget());
  r = r.with_downset([p, q, cartesian](const E& x) {
    auto a = p.downset(x.first);
    auto b = q.downset(x.second);
    p.budget().check(a.size() * b.size(), "product down-set");
    return cartesian(a, b);
  });
  if (p.has_carrier() && q.has_carrier()) {
    r = r.with_carrier([p, q, cartesian]() {
      auto a = p.carrier();
      auto b = q.carrier();
      p.budget().check(a.size() * b.size(), "product carrier");
      return cartesian(a, b);
    });
  }
  return r;
}

struct Witness {
  std::string property;
  std::string first;
  std::string second;

  std::string to_string() const { return property + ": " + first + " ; " + second; }
};

struct GaloisReport {
  bool holds = true;
  std::optional<Witness> witness;
  std::size_t pairs_checked = 0;
};

/// Checks that f: P -> Q and g: Q -> P are order-preserving and that
/// f(x) <= y  <=>  x <= g(y) for every x in P and y in Q.
template <class P, class Q, class F, class G>
GaloisReport check_galois(const PosetView<P>& p, const PosetView<Q>& q, F&& f, G&& g) {
  GaloisReport report;
  const auto ps = p.carrier();
  const auto qs = q.carrier();
  for (const auto& x : ps) {
    const auto fx = f(x);
    for (const auto& x2 : p.upset(x)) {
      if (!q.leq(fx, f(x2))) {
        report.holds = false;
        report.witness = Witness{"left map not order-preserving", p.key(x), p.key(x2)};
        return report;
      }
    }
  }
  for (const auto& y : qs) {
    const auto gy = g(y);
    for (const auto& y2 : q.upset(y)) {
      if (!p.leq(gy, g(y2))) {
        report.holds = false;
        report.witness = Witness{"right map not order-preserving", q.key(y), q.key(y2)};
        return report;
      }
    }
  }
  for (const auto& x : ps) {
    const auto fx = f(x);
    for (const auto& y : qs) {
      ++report.pairs_checked;
      if (q.leq(fx, y) != p.leq(x, g(y))) {
        report.holds = false;
        report.witness = Witness{"adjunction biconditional fails", p.key(x), q.key(y)};
        return report;
      }
    }
  }
  return report;
}

struct RotaSums {
  long long left = 0;   // sum over x <= y with f(y) = b of mu_P(x, y)
  long long right = 0;  // sum over a <= b with g(a) = x of mu_Q(a, b)
  bool equal() const { return left == right; }
};

template <class P, class Q, class F, class G>
RotaSums rota_transfer_check(const PosetView<P>& p, const PosetView<Q>& q, F&& f, G&& g, const P& x,
                             const Q& b) {
  RotaSums sums;
  const auto bk = q.key(b);
  for (const auto& [y, mu] : mobius_row(p, x))
    if (q.key(f(y)) == bk) sums.left += mu;
  const auto xk = p.key(x);
  for (const auto& a : q.downset(b))
    if (p.key(g(a)) == xk) sums.right += mobius(q, a, b);
  return sums;
}

struct RotaSweep {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::optional<Witness> witness;
};

/// rota_transfer_check over every (x, b) in P x Q, sharing Möbius rows between pairs.
template <class P, class Q, class F, class G>
RotaSweep rota_transfer_sweep(const PosetView<P>& p, const PosetView<Q>& q, F&& f, G&& g) {
  std::map<std::pair<std::string, std::string>, long long> left, right;
  const auto ps = p.carrier();
  const auto qs = q.carrier();
  for (const auto& x : ps) {
    const auto xk = p.key(x);
    for (const auto& [y, mu] : mobius_row(p, x)) left[{xk, q.key(f(y))}] += mu;
  }
  for (const auto& a : qs) {
    const auto gk = p.key(g(a));
    for (const auto& [b, mu] : mobius_row(q, a)) right[{gk, q.key(b)}] += mu;
  }
  RotaSweep sweep;
  for (const auto& x : ps) {
    const auto xk = p.key(x);
    for (const auto& b : qs) {
      ++sweep.pairs_checked;
      const std::pair<std::string, std::string> k{xk, q.key(b)};
      const auto l = left.count(k) ? left[k] : 0;
      const auto r = right.count(k) ? right[k] : 0;
      if (l != r) {
        sweep.holds = false;
        sweep.witness = Witness{"Rota transfer sums differ (" + std::to_string(l) + " vs " +
                                    std::to_string(r) + ")",
                                k.first, k.second};
        return sweep;
      }
    }
  }
  return sweep;
}

enum class MobiusSide { lower, upper };

namespace detail {
inline long long signed_power(long long t, int e) {
  if (e < 0) {
    if (t == 1) return 1;
    if (t == -1) return (e % 2 == 0) ? 1 : -1;
    throw std::domain_error("negative grading exponent needs t = +-1");
  }
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= t;
  return r;
}
}  // namespace detail

/// lower: sum_{x<=z<=y} mu(x,z) t^grading(z);  upper: sum_{x<=z<=y} mu(z,y) t^grading(z).
template <class E, class Grading>
IntPolynomial graded_char_poly(const PosetView<E>& p, const E& x, const E& y, Grading&& grading,
                               MobiusSide side) {
  auto m = mobius_matrix(p, interval(p, x, y));
  const auto xi = *m.index_of(p.key(x));
  const auto yi = *m.index_of(p.key(y));
  IntPolynomial poly;
  for (std::size_t z = 0; z < m.elements.size(); ++z) {
    const long long mu = side == MobiusSide::lower ? m.mu[xi][z] : m.mu[z][yi];
    poly.add_term(static_cast<int>(grading(m.elements[z])), mu);
  }
  return poly;
}

template <class E, class Grading>
long long graded_char_eval(const PosetView<E>& p, const E& x, const E& y, Grading&& grading,
                           MobiusSide side, long long t) {
  auto m = mobius_matrix(p, interval(p, x, y));
  const auto xi = *m.index_of(p.key(x));
  const auto yi = *m.index_of(p.key(y));
  long long total = 0;
  for (std::size_t z = 0; z < m.elements.size(); ++z) {
    const long long mu = side == MobiusSide::lower ? m.mu[xi][z] : m.mu[z][yi];
    total += mu * detail::signed_power(t, static_cast<int>(grading(m.elements[z])));
  }
  return total;
}

struct PartialOrderReport {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  std::optional<Witness> witness;
  bool holds() const { return reflexive && antisymmetric && transitive; }
};

/// Exhaustive partial-order axioms over the carrier, plus agreement of the up-set oracle
/// with leq.
template <class E>
PartialOrderReport check_partial_order(const PosetView<E>& p) {
  PartialOrderReport r;
  const auto xs = p.carrier();
  const std::size_t n = xs.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  std::vector<std::string> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = p.key(xs[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = p.leq(xs[i], xs[j]);
  for (std::size_t i = 0; i < n && r.holds(); ++i) {
    if (!rel[i][i]) {
      r.reflexive = false;
      r.witness = Witness{"not reflexive", keys[i], keys[i]};
    }
    std::unordered_set<std::string> up;
    for (const auto& y : p.upset(xs[i])) up.insert(p.key(y));
    for (std::size_t j = 0; j < n && r.holds(); ++j) {
      if (static_cast<bool>(up.count(keys[j])) != static_cast<bool>(rel[i][j])) {
        r.transitive = false;
        r.witness = Witness{"up-set oracle disagrees with leq", keys[i], keys[j]};
      } else if (i != j && rel[i][j] && rel[j][i]) {
        r.antisymmetric = false;
        r.witness = Witness{"not antisymmetric", keys[i], keys[j]};
      }
      for (std::size_t k = 0; k < n && r.holds() && rel[i][j]; ++k) {
        if (rel[j][k] && !rel[i][k]) {
          r.transitive = false;
          r.witness = Witness{"not transitive", keys[i], keys[k]};
        }
      }
    }
  }
  return r;
}

}  // namespace hsl
