#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace hsl;
using namespace hsl::test;

TEMPLATE_TEST_CASE("Hopf monoid axioms, n <= 3", "", Graphs, Hypergraphs, SimplicialComplexes, Partitions) {
  const auto report = verify_axioms<TestType>(3);
  for (const auto& r : report.results) {
    INFO(r.axiom << ": " << r.witness.value_or(""));
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
  CHECK(report.commutative());
  CHECK(report.cocommutative());
  CHECK(is_commutative_cocommutative<TestType>(3));
}

TEMPLATE_TEST_CASE("Hopf monoid axioms, n = 4", "", Graphs, Partitions) {
  const auto report = verify_axioms<TestType>(4);
  CHECK(report.all_passed());
}

TEST_CASE("a corrupted multiplication is caught") {
  const auto report = verify_axioms<MutantGraphs>(3);
  CHECK_FALSE(report.all_passed());
  const bool assoc_or_natural = !report.passed("associativity") || !report.passed("naturality (m)");
  CHECK(assoc_or_natural);
  const auto* assoc = report.find("associativity");
  REQUIRE(assoc != nullptr);
  if (!assoc->passed) CHECK(assoc->witness.has_value());
  CHECK_FALSE(report.commutative());
}

TEMPLATE_TEST_CASE("Δ after m is the identity", "", Graphs, Hypergraphs, SimplicialComplexes, Partitions) {
  const auto r = verify_delta_after_mult_identity<TestType>(3);
  CHECK(r.holds);
  CHECK(r.checks > 0);
}

TEMPLATE_TEST_CASE("split-then-merge is idempotent, n <= 4", "", Graphs, Hypergraphs, SimplicialComplexes, Partitions) {
  using F = TestType;
  const int top = std::is_same_v<F, Hypergraphs> ? 3 : 4;
  for (int n = 0; n <= top; ++n) {
    const LabelSet ground = LabelSet::range(n);
    const auto compositions = ordered_set_partitions(ground);
    for (const auto& x : F::enumerate(ground))
      for (const auto& a : compositions) {
        const auto once = merge_split<F>(a, x);
        REQUIRE(merge_split<F>(a, once) == once);
      }
  }
}

TEMPLATE_TEST_CASE("comultiplying along a refinement", "", Graphs, Hypergraphs, SimplicialComplexes, Partitions) {
  using F = TestType;
  for (int n = 0; n <= 3; ++n) {
    const LabelSet ground = LabelSet::range(n);
    for (const auto& x : F::enumerate(ground))
      for (const auto& a : ordered_set_partitions(ground)) {
        const auto coarse = compose_comult<F>(a, x);
        // Refine each block into two pieces where possible.
        std::vector<LabelSet> fine_blocks;
        std::vector<StructureOf<F>> expected;
        for (std::size_t i = 0; i < a.blocks.size(); ++i) {
          const LabelSet b = a.blocks[i];
          if (b.size() >= 2) {
            const LabelSet first{b.min()};
            const auto [p, q] = F::comult(coarse[i], first, b - first);
            fine_blocks.push_back(first);
            fine_blocks.push_back(b - first);
            expected.push_back(p);
            expected.push_back(q);
          } else {
            fine_blocks.push_back(b);
            expected.push_back(coarse[i]);
          }
        }
        REQUIRE(compose_comult<F>(OrderedSetPartition::make(ground, fine_blocks), x) == expected);
      }
  }
}

TEST_CASE("k-ary operations") {
  const auto one = compose_mult<Graphs>(OrderedSetPartition::make(LabelSet::range(2), {LabelSet::range(2)}),
                                        {Graphs::parse("G:n=2;E=0-1")});
  CHECK(Graphs::encode(one) == "G:n=2;E=0-1");
  const auto two = compose_mult<Graphs>(OrderedSetPartition::make(LabelSet::range(2), {LabelSet{0}, LabelSet{1}}),
                                        {Graphs::parse("G:V=0;E="), Graphs::parse("G:V=1;E=")});
  CHECK(Graphs::encode(two) == "G:n=2;E=");
  const auto x = Graphs::parse("G:n=3;E=0-1,1-2");
  CHECK(compose_comult<Graphs>(OrderedSetPartition::make(LabelSet::range(3), {LabelSet::range(3)}), x) ==
        std::vector<Graph>{x});
}

// ---------------------------------------------------------------------------------------
// Reassembly order

TEST_CASE("factorization examples") {
  CHECK(ell<Graphs>(Graphs::parse("G:n=3;E=0-1,1-2")) == 1);
  const auto f = factorize<Graphs>(Graphs::parse("G:n=3;E=0-1"));
  REQUIRE(f.length() == 2);
  CHECK(Graphs::encode(f.factors[0]) == "G:n=2;E=0-1");
  CHECK(Graphs::encode(f.factors[1]) == "G:V=2;E=");
  CHECK(ell<Graphs>(Graphs::parse("G:n=4;E=")) == 4);
  CHECK(ell<Partitions>(Partitions::parse("P:n=4;B=01|23")) == 2);
  CHECK(ell<SimplicialComplexes>(SimplicialComplexes::parse("S:n=3;F={0,1};{2}")) == 2);
  CHECK(ell<Graphs>(Graphs::unit()) == 0);
}

TEMPLATE_TEST_CASE("factors are the connected components, n <= 4", "", Graphs, Hypergraphs, SimplicialComplexes,
                   Partitions) {
  using F = TestType;
  for (const auto& x : all_up_to<F>(4)) {
    const auto f = factorize<F>(x);
    REQUIRE(f.partition == components(x));
    REQUIRE(merge_split<F>(f.partition, x) == x);
    for (const auto& factor : f.factors) REQUIRE(factorize<F>(factor).length() == 1);
  }
}

TEST_CASE("reassembly up-sets") {
  CHECK(reassembly_upset<Graphs>(Graphs::parse("G:n=1;E=")).size() == 1);
  CHECK(reassembly_upset<Graphs>(Graphs::parse("G:n=2;E=0-1")).size() == 2);
  CHECK(reassembly_upset<Partitions>(Partitions::parse("P:n=3;B=012")).size() == 5);
}

TEMPLATE_TEST_CASE("ℓ grades the reassembly order, n <= 4", "", Graphs, SimplicialComplexes, Partitions) {
  using F = TestType;
  for (int n = 0; n <= 4; ++n) {
    const auto p = reassembly_poset<F>(LabelSet::range(n));
    for (const auto& x : p.carrier()) {
      const auto up = p.upset(x);
      for (const auto& y : up) {
        REQUIRE(ell<F>(x) <= ell<F>(y));
        if (p.less(x, y)) {
          bool covers = true;
          for (const auto& z : up)
            if (p.less(x, z) && p.less(z, y)) covers = false;
          if (covers) REQUIRE(ell<F>(y) == ell<F>(x) + 1);
        }
      }
    }
  }
}

TEMPLATE_TEST_CASE("reassembly order is self-adjoint with Δ ⊣ m, n <= 3", "", Graphs, Hypergraphs,
                   SimplicialComplexes, Partitions) {
  const auto v = verify_adjunction(reassembly_delta_mult_adjunction<TestType>(), 3);
  INFO(v.witness.value_or(""));
  CHECK(v.holds());
  CHECK(v.galois_pairs > 0);
}

TEST_CASE("reassembly order on partitions is refinement") {
  for (int n = 0; n <= 4; ++n) {
    const LabelSet ground = LabelSet::range(n);
    for (const auto& a : Partitions::enumerate(ground))
      for (const auto& b : Partitions::enumerate(ground))
        REQUIRE(reassembly_leq<Partitions>(a, b) == Partitions::native_leq(a, b));
  }
}
