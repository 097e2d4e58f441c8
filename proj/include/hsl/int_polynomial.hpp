#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace hsl {

/// Polynomial in one variable t with integer coefficients; zero coefficients are never stored.
class IntPolynomial {
 public:
  using Coefficient = std::int64_t;

  IntPolynomial() = default;

  static IntPolynomial monomial(int exponent, Coefficient c = 1) {
    IntPolynomial p;
    p.add_term(exponent, c);
    return p;
  }

  // t (t-1) ... (t-n+1)
  static IntPolynomial falling_factorial(int n) {
    IntPolynomial p = monomial(0, 1);
    for (int i = 0; i < n; ++i) p = p * (monomial(1, 1) - monomial(0, i));
    return p;
  }

  void add_term(int exponent, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = coefficients_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coefficients_.erase(it);
    }
  }

  Coefficient coefficient(int exponent) const {
    auto it = coefficients_.find(exponent);
    return it == coefficients_.end() ? 0 : it->second;
  }

  const std::map<int, Coefficient>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  int degree() const { return coefficients_.empty() ? -1 : coefficients_.rbegin()->first; }

  Coefficient evaluate(Coefficient t) const {
    Coefficient total = 0;
    for (const auto& [e, c] : coefficients_) {
      Coefficient power = 1;
      for (int i = 0; i < e; ++i) power *= t;
      total += c * power;
    }
    return total;
  }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    for (const auto& [e, c] : b.coefficients_) a.add_term(e, c);
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    for (const auto& [e, c] : b.coefficients_) a.add_term(e, -c);
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial out;
    for (const auto& [ea, ca] : a.coefficients_)
      for (const auto& [eb, cb] : b.coefficients_) out.add_term(ea + eb, ca * cb);
    return out;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // "t^3 - 3t^2 + 2t"
  std::string to_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
      const auto [e, c] = *it;
      const Coefficient mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || e == 0) out += std::to_string(mag);
      if (e >= 1) out += "t";
      if (e >= 2) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<int, Coefficient> coefficients_;
};

}  // namespace hsl
