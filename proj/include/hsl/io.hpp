#pragma once

// JSON forms of free vectors, symmetric functions and integer polynomials.

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "hsl/error.hpp"
#include "hsl/families/set_system.hpp"
#include "hsl/int_polynomial.hpp"
#include "hsl/linear.hpp"
#include "hsl/rational.hpp"
#include "hsl/symfunc.hpp"

namespace hsl {

using Json = nlohmann::json;

namespace detail {

inline const Json& require_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(what) + " JSON lacks field '" + key + "'");
  return j.at(key);
}

inline Rational fraction_field(const Json& v) {
  if (!v.is_string()) throw ParseError("coefficient must be a \"p/q\" string, got " + v.dump());
  return parse_fraction(v.get<std::string>());
}

// "n=3" or "V=1,4"
inline LabelSet parse_label_header(std::string_view header) {
  header = trim(header);
  if (header.substr(0, 2) == "n=") {
    const auto digits = header.substr(2);
    if (digits.empty() || digits.size() > 2 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad label count '" + std::string(header) + "'");
    const int n = std::stoi(std::string(digits));
    if (n > kMaxLabels) throw ParseError("too many labels in '" + std::string(header) + "'");
    return LabelSet::range(n);
  }
  if (header.substr(0, 2) == "V=") return LabelSet(parse_label_list(header.substr(2), header));
  throw ParseError("expected 'n=' or 'V=' in '" + std::string(header) + "'");
}

}  // namespace detail

template <Family F>
Json to_json(const FreeVector<F>& v) {
  Json terms = Json::object();
  for (const auto& [k, t] : v.terms()) terms[k] = to_fraction_string(t.coefficient);
  return Json{{"ambient", v.ambient_name()}, {"terms", terms}};
}

template <Family F>
FreeVector<F> free_vector_from_json(const Json& j) {
  const auto name = detail::require_field(j, "ambient", "FreeVector").template get<std::string>();
  const std::string prefix = std::string(F::tag) + ":";
  if (name.rfind(prefix, 0) != 0) throw ParseError("ambient '" + name + "' is not a " + std::string(F::tag) + " ambient");
  FreeVector<F> v(detail::parse_label_header(std::string_view(name).substr(prefix.size())));
  for (const auto& [k, c] : detail::require_field(j, "terms", "FreeVector").items()) {
    auto x = F::parse(k);
    if (F::encode(x) != k) throw ParseError("term key '" + k + "' is not canonical");
    if (F::labels(x) != v.ambient()) throw AmbientMismatch("term '" + k + "' does not live on " + name);
    v.add(x, detail::fraction_field(c));
  }
  return v;
}

inline Json to_json(const SymFunc& f) {
  Json terms = Json::object();
  for (const auto& [lambda, c] : f.terms()) terms[partition_string(lambda)] = to_fraction_string(c);
  return Json{{"basis", "m"}, {"degree", f.is_zero() ? 0 : f.degree()}, {"terms", terms}};
}

inline SymFunc symfunc_from_json(const Json& j) {
  if (detail::require_field(j, "basis", "SymFunc") != "m") throw ParseError("only the monomial basis 'm' is supported");
  SymFunc out;
  for (const auto& [k, c] : detail::require_field(j, "terms", "SymFunc").items())
    out = out + SymFunc::m(parse_partition(k), detail::fraction_field(c));
  return out;
}

inline Json to_json(const IntPolynomial& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.coefficients()) out[std::to_string(e)] = c;
  return out;
}

inline IntPolynomial int_polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("IntPolynomial JSON must be an object");
  IntPolynomial p;
  for (const auto& [k, c] : j.items()) {
    if (!c.is_number_integer()) throw ParseError("coefficient of t^" + k + " must be an integer");
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size() || e < 0) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad exponent key '" + k + "'");
    }
    p.add_term(e, c.get<IntPolynomial::Coefficient>());
  }
  return p;
}

}  // namespace hsl
