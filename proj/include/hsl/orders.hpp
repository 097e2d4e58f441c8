#pragma once

#include <string>

#include "hsl/families/set_system.hpp"
#include "hsl/label_set.hpp"
#include "hsl/poset.hpp"
#include "hsl/species.hpp"

namespace hsl {

/// The family's own order on F[I], with the full carrier attached.
template <HasNativeOrder F>
PosetView<StructureOf<F>> native_poset(LabelSet ground, const Budget& budget = {}) {
  using S = StructureOf<F>;
  PosetView<S> p(
      std::string(F::tag) + " native order on {" + ground.to_string() + "}",
      [](const S& a, const S& b) { return F::native_leq(a, b); },
      [budget](const S& x) { return F::native_upset(x, budget); },
      [](const S& x) { return F::encode(x); }, budget);
  return p.with_downset([budget](const S& x) { return F::native_downset(x, budget); })
      .with_carrier([ground, budget] { return F::enumerate(ground, budget); });
}

// "graphs:n=2"
template <Family F>
std::string ambient_name(LabelSet ground) {
  return std::string(F::tag) + ":" + detail::label_header(ground);
}

}  // namespace hsl
