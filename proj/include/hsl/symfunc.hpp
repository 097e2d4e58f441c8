#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hsl/error.hpp"
#include "hsl/rational.hpp"

namespace hsl {

/// Weakly decreasing positive parts; the empty partition indexes the constant 1.
using IntegerPartition = std::vector<int>;

inline int partition_size(const IntegerPartition& lambda) {
  int n = 0;
  for (int part : lambda) n += part;
  return n;
}

// Largest parts first: (n), (n-1,1), ..., (1^n).
inline std::vector<IntegerPartition> integer_partitions(int n) {
  std::vector<IntegerPartition> out;
  IntegerPartition current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// "3+2+1"; the empty partition is "0".
inline std::string partition_string(const IntegerPartition& lambda) {
  if (lambda.empty()) return "0";
  std::string out;
  for (int part : lambda) {
    if (!out.empty()) out += '+';
    out += std::to_string(part);
  }
  return out;
}

inline IntegerPartition parse_partition(std::string_view text) {
  IntegerPartition out;
  if (text == "0") return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    const auto piece = text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad integer partition '" + std::string(text) + "'");
    out.push_back(std::stoi(std::string(piece)));
    if (out.back() == 0) throw ParseError("zero part in '" + std::string(text) + "'");
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (!std::is_sorted(out.rbegin(), out.rend())) throw ParseError("parts not weakly decreasing in '" + std::string(text) + "'");
  return out;
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Polynomial over Q in a fixed number of commuting variables.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int variables = 0) : variables_(variables) {}

  static Polynomial constant(int variables, const Rational& c) {
    Polynomial p(variables);
    p.add(Exponents(static_cast<std::size_t>(variables), 0), c);
    return p;
  }

  int variables() const { return variables_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out(a.variables_);
    Exponents e(static_cast<std::size_t>(a.variables_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    for (const auto& [e, c] : b.terms_) a.add(e, c);
    return a;
  }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int variables_;
  std::map<Exponents, Rational> terms_;
};

/// m_λ in `variables` variables: every distinct arrangement of the parts (padded with zeros).
inline Polynomial monomial_symmetric_polynomial(const IntegerPartition& lambda, int variables) {
  Polynomial p(variables);
  if (static_cast<int>(lambda.size()) > variables) return p;
  Polynomial::Exponents e(static_cast<std::size_t>(variables), 0);
  std::copy(lambda.begin(), lambda.end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    p.add(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

class SymFunc;

/// Element of Λ ⊗ Λ in the basis m_λ ⊗ m_μ.
using SymTensor = std::map<std::pair<IntegerPartition, IntegerPartition>, Rational>;

/// Symmetric function stored in the monomial basis, which is the normal form.
class SymFunc {
 public:
  static constexpr int kDefaultVariables = 8;

  SymFunc() = default;

  static SymFunc one() { return m({}); }
  static SymFunc m(const IntegerPartition& lambda, const Rational& c = 1) {
    SymFunc f;
    f.add(lambda, c);
    return f;
  }
  // h_n = Σ_{λ ⊢ n} m_λ
  static SymFunc h(int n) {
    SymFunc f;
    for (const auto& lambda : integer_partitions(n)) f.add(lambda, 1);
    return f;
  }
  // p_n = m_(n)
  static SymFunc p(int n) { return n == 0 ? one() : m({n}); }
  static SymFunc h(const IntegerPartition& lambda) {
    SymFunc f = one();
    for (int part : lambda) f = f * h(part);
    return f;
  }
  static SymFunc p(const IntegerPartition& lambda) {
    SymFunc f = one();
    for (int part : lambda) f = f * p(part);
    return f;
  }

  const std::map<IntegerPartition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const IntegerPartition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  int degree() const {
    int d = 0;
    for (const auto& [lambda, c] : terms_) d = std::max(d, partition_size(lambda));
    return d;
  }
  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = partition_size(terms_.begin()->first);
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return partition_size(t.first) == d; });
  }

  void add(const IntegerPartition& lambda, const Rational& c) {
    if (c == 0) return;
    auto& slot = terms_[lambda];
    slot += c;
    if (slot == 0) terms_.erase(lambda);
  }

  /// Expansion in `variables` variables; faithful when variables >= degree.
  Polynomial to_polynomial(int variables) const {
    Polynomial out(variables);
    for (const auto& [lambda, c] : terms_) {
      const auto m_lambda = monomial_symmetric_polynomial(lambda, variables);
      for (const auto& [e, unit] : m_lambda.terms()) out.add(e, c * unit);
    }
    return out;
  }

  /// Reads off m-coefficients from the weakly decreasing exponent vectors.
  static SymFunc from_polynomial(const Polynomial& poly) {
    SymFunc f;
    for (const auto& [e, c] : poly.terms()) {
      if (!std::is_sorted(e.rbegin(), e.rend())) continue;
      IntegerPartition lambda;
      for (int x : e)
        if (x > 0) lambda.push_back(x);
      f.add(lambda, c);
    }
    return f;
  }

  friend SymFunc operator+(SymFunc a, const SymFunc& b) {
    for (const auto& [lambda, c] : b.terms_) a.add(lambda, c);
    return a;
  }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) {
    for (const auto& [lambda, c] : b.terms_) a.add(lambda, -c);
    return a;
  }
  friend SymFunc operator*(const Rational& r, SymFunc a) {
    if (r == 0) return {};
    for (auto& [lambda, c] : a.terms_) c *= r;
    return a;
  }
  // Coefficient of m_ν in a·b is Σ_e a[x^e]·b[x^(ν−e)], and b[x^d] is the m-coefficient of
  // sort(d); only the dominant monomials x^ν of the product are ever formed.
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const int variables = std::max(kDefaultVariables, a.degree() + b.degree());
    const Polynomial pa = a.to_polynomial(variables);
    std::vector<int> sizes;
    for (const auto& [la, ca] : a.terms_)
      for (const auto& [lb, cb] : b.terms_) sizes.push_back(partition_size(la) + partition_size(lb));
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    SymFunc out;
    IntegerPartition mu;
    for (int d : sizes)
      for (const auto& nu : integer_partitions(d)) {
        if (static_cast<int>(nu.size()) > variables) continue;
        Polynomial::Exponents target(static_cast<std::size_t>(variables), 0);
        std::copy(nu.begin(), nu.end(), target.begin());
        Rational c = 0;
        for (const auto& [e, ce] : pa.terms()) {
          mu.clear();
          bool fits = true;
          for (std::size_t i = 0; i < target.size(); ++i) {
            if (e[i] > target[i]) {
              fits = false;
              break;
            }
            if (target[i] > e[i]) mu.push_back(target[i] - e[i]);
          }
          if (!fits) continue;
          std::sort(mu.rbegin(), mu.rend());
          if (auto it = b.terms_.find(mu); it != b.terms_.end()) c += ce * it->second;
        }
        out.add(nu, c);
      }
    return out;
  }
  friend bool operator==(const SymFunc&, const SymFunc&) = default;

  /// Δ(m_ν) = Σ m_λ ⊗ m_μ over ways to split the parts of ν into two sub-multisets.
  SymTensor coproduct() const {
    SymTensor out;
    for (const auto& [nu, c] : terms_) {
      // Parts grouped by value with multiplicities; choose how many of each go left.
      std::vector<std::pair<int, int>> groups;
      for (int part : nu) {
        if (!groups.empty() && groups.back().first == part) {
          ++groups.back().second;
        } else {
          groups.emplace_back(part, 1);
        }
      }
      std::vector<int> take(groups.size(), 0);
      while (true) {
        IntegerPartition left, right;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          left.insert(left.end(), static_cast<std::size_t>(take[g]), groups[g].first);
          right.insert(right.end(), static_cast<std::size_t>(groups[g].second - take[g]), groups[g].first);
        }
        auto& slot = out[{left, right}];
        slot += c;
        if (slot == 0) out.erase({left, right});
        std::size_t g = 0;
        while (g < groups.size() && take[g] == groups[g].second) take[g++] = 0;
        if (g == groups.size()) break;
        ++take[g];
      }
    }
    return out;
  }

  // "2m[2] - m[1+1]"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [lambda, c] = *it;
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (out.empty()) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) out += to_display_string(mag);
      out += "m[" + partition_string(lambda) + "]";
    }
    return out;
  }

 private:
  std::map<IntegerPartition, Rational> terms_;
};

inline SymTensor tensor(const SymFunc& a, const SymFunc& b) {
  SymTensor out;
  for (const auto& [la, ca] : a.terms())
    for (const auto& [lb, cb] : b.terms()) out[{la, lb}] += ca * cb;
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

inline void accumulate(SymTensor& into, const SymTensor& from, const Rational& scale = 1) {
  for (const auto& [k, c] : from) {
    auto& slot = into[k];
    slot += c * scale;
    if (slot == 0) into.erase(k);
  }
}

/// Newton's identities: p_n = n h_n − Σ_{k=1}^{n−1} p_k h_{n−k}.
inline SymFunc power_sum_via_newton(int n) {
  std::vector<SymFunc> p(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    SymFunc value = Rational(m) * SymFunc::h(m);
    for (int k = 1; k < m; ++k) value = value - p[static_cast<std::size_t>(k)] * SymFunc::h(m - k);
    p[static_cast<std::size_t>(m)] = value;
  }
  return n == 0 ? SymFunc::one() : p[static_cast<std::size_t>(n)];
}

/// How a generator (n) of the partition Fock algebra is sent to Λ.
enum class BridgeScaling {
  factorial,          // (n) ↦ n!·h_n
  inverse_factorial,  // (n) ↦ h_n / n!
};

/// Algebra map on the Par basis: λ ↦ ∏ c(λ_i)·h_{λ_i}.
inline SymFunc symfunc_bridge(const IntegerPartition& lambda, BridgeScaling scaling = BridgeScaling::factorial) {
  Rational scale = 1;
  for (int part : lambda) {
    const Rational f(factorial(part));
    scale *= scaling == BridgeScaling::factorial ? f : Rational(1) / f;
  }
  return scale * SymFunc::h(lambda);
}

}  // namespace hsl
