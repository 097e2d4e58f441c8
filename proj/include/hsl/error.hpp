#pragma once

#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hsl {

enum class ErrorKind {
  not_comparable,
  carrier_overflow,
  label_mismatch,
  label_overlap,
  parse_error,
  not_a_flat,
  non_unique_factorization,
  ambient_mismatch,
  adjunction_unverified,
  not_self_adjoint,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define HSL_DEFINE_ERROR(Name, kind_value)                                   \
  class Name : public Error {                                                \
   public:                                                                   \
    explicit Name(const std::string& what) : Error(ErrorKind::kind_value, what) {} \
  }

HSL_DEFINE_ERROR(NotComparable, not_comparable);
HSL_DEFINE_ERROR(CarrierOverflow, carrier_overflow);
HSL_DEFINE_ERROR(LabelMismatch, label_mismatch);
HSL_DEFINE_ERROR(LabelOverlap, label_overlap);
HSL_DEFINE_ERROR(ParseError, parse_error);
HSL_DEFINE_ERROR(NotAFlat, not_a_flat);
HSL_DEFINE_ERROR(NonUniqueFactorization, non_unique_factorization);
HSL_DEFINE_ERROR(AmbientMismatch, ambient_mismatch);
HSL_DEFINE_ERROR(AdjunctionUnverified, adjunction_unverified);
HSL_DEFINE_ERROR(NotSelfAdjoint, not_self_adjoint);

#undef HSL_DEFINE_ERROR

inline constexpr std::size_t kDefaultElementBudget = 200000;

/// Upper bound on the number of elements any single enumeration may produce.
struct Budget {
  std::size_t elements = kDefaultElementBudget;

  void check(std::size_t count, std::string_view what) const {
    if (count > elements) {
      throw CarrierOverflow(std::string(what) + ": " + std::to_string(count) +
                            " elements exceed the budget of " + std::to_string(elements));
    }
  }

  // Saturating check for counts computed in floating point (2^k style growth).
  void check_estimate(long double count, std::string_view what) const {
    if (count > static_cast<long double>(elements)) {
      throw CarrierOverflow(std::string(what) + ": about " +
                            std::to_string(static_cast<long double>(count)) +
                            " elements exceed the budget of " + std::to_string(elements));
    }
  }

  static Budget from_env() {
    Budget b;
    if (const char* env = std::getenv("HSL_BUDGET"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) b.elements = static_cast<std::size_t>(v);
    }
    return b;
  }
};

}  // namespace hsl
