#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace hsl;
using namespace hsl::test;

namespace {

Graph g_(const char* text) { return Graphs::parse(text); }
Hypergraph h_(const char* text) { return Hypergraphs::parse(text); }
SimplicialComplex s_(const char* text) { return SimplicialComplexes::parse(text); }

template <Family F>
void round_trip_all(int n) {
  for (const auto& x : all_up_to<F>(n)) {
    const auto text = F::encode(x);
    REQUIRE(F::encode(F::parse(text)) == text);
    REQUIRE(F::parse(text) == x);
  }
}

// Downward-closed families of subsets of {0..n-1} containing ∅, by brute force over all families.
std::size_t brute_complex_count(int n, bool singletons_required) {
  std::vector<Mask> nonempty;
  for (Mask m = 1; m < (Mask{1} << n); ++m) nonempty.push_back(m);
  std::size_t count = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << nonempty.size()); ++pick) {
    std::vector<Mask> faces{0};
    for (std::size_t i = 0; i < nonempty.size(); ++i)
      if ((pick >> i) & 1U) faces.push_back(nonempty[i]);
    auto has = [&](Mask f) { return std::find(faces.begin(), faces.end(), f) != faces.end(); };
    bool closed = true;
    for (Mask f : faces)
      for (Mask sub = f; sub != 0; sub = (sub - 1) & f)
        if (!has(sub)) closed = false;
    if (singletons_required)
      for (int v = 0; v < n; ++v)
        if (!has(LabelSet::bit(v))) closed = false;
    if (closed) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("carrier sizes") {
  const std::vector<std::size_t> graphs{1, 1, 2, 8, 64, 1024};
  for (int n = 0; n <= 5; ++n) CHECK(Graphs::enumerate(LabelSet::range(n)).size() == graphs[static_cast<std::size_t>(n)]);
  CHECK(Hypergraphs::enumerate(LabelSet::range(3)).size() == 16);
  CHECK(Hypergraphs::enumerate(LabelSet::range(4)).size() == 2048);
  for (int n = 0; n <= 6; ++n) CHECK(Partitions::enumerate(LabelSet::range(n)).size() == bell_number(n));
  for (int n = 0; n <= 3; ++n)
    CHECK(SimplicialComplexes::enumerate(LabelSet::range(n)).size() == brute_complex_count(n, false));
  CHECK(SimplicialComplexes::enumerate(LabelSet::range(3)).size() == 19);
}

TEST_CASE("simplicial carrier with every vertex a face would be smaller") {
  std::size_t with_all_vertices = 0;
  for (const auto& c : SimplicialComplexes::enumerate(LabelSet::range(3))) {
    bool all = true;
    for (int v = 0; v < 3; ++v)
      if (std::find(c.faces.begin(), c.faces.end(), LabelSet::bit(v)) == c.faces.end()) all = false;
    if (all) ++with_all_vertices;
  }
  CHECK(with_all_vertices == 9);
  CHECK(brute_complex_count(3, true) == 9);
}

TEST_CASE("encodings are canonical") {
  CHECK(Graphs::encode(make_graph(LabelSet::range(3), {{1, 2}, {0, 2}})) == "G:n=3;E=0-2,1-2");
  CHECK(Hypergraphs::encode(h_("H:n=3;E={0,1,2};{1,2}")) == "H:n=3;E={1,2};{0,1,2}");
  CHECK(SimplicialComplexes::encode(s_("S:n=3;F={2};{0,1}")) == "S:n=3;F={2};{0,1}");
  CHECK(SimplicialComplexes::encode(SimplicialComplex{LabelSet::range(2), {0}}) == "S:n=2;F={}");
  CHECK(Partitions::encode(Partitions::parse("P:n=3;B=2|10")) == "P:n=3;B=01|2");
  CHECK(Graphs::encode(Graphs::unit()) == "G:n=0;E=");
  CHECK(Graphs::encode(Graphs::restrict(g_("G:n=3;E=0-1,1-2"), LabelSet{1, 2})) == "G:V=1,2;E=1-2");
  round_trip_all<Graphs>(4);
  round_trip_all<Hypergraphs>(3);
  round_trip_all<SimplicialComplexes>(3);
  round_trip_all<Partitions>(5);
}

TEST_CASE("two-digit labels") {
  const auto p = Partitions::parse("P:n=12;B=0,11|1,2,3,4,5,6,7,8,9,10");
  CHECK(Partitions::encode(p) == "P:n=12;B=0,11|1,2,3,4,5,6,7,8,9,10");
  CHECK(Graphs::encode(g_("G:n=11;E=3-10")) == "G:n=11;E=3-10");
}

TEST_CASE("malformed encodings are rejected") {
  CHECK_THROWS_AS(g_("G:n=2;E=0-"), ParseError);
  CHECK_THROWS_AS(g_("G:n=2;E=0-0"), ParseError);
  CHECK_THROWS_AS(g_("G:n=2;E=0-2"), ParseError);
  CHECK_THROWS_AS(g_("G:n=2;E=0-1,0-1"), ParseError);
  CHECK_THROWS_AS(g_("H:n=2;E="), ParseError);
  CHECK_THROWS_AS(g_("G:k=2;E="), ParseError);
  CHECK_THROWS_AS(h_("H:n=3;E={0}"), ParseError);
  CHECK_THROWS_AS(h_("H:n=3;E={0,1"), ParseError);
  CHECK_THROWS_AS(s_("S:n=3;F={0,1};{0}"), ParseError);
  CHECK_THROWS_AS(Partitions::parse("P:n=3;B=01"), ParseError);
  CHECK_THROWS_AS(Partitions::parse("P:n=3;B=01|12"), ParseError);
}

TEST_CASE("multiplication and comultiplication") {
  SECTION("graphs") {
    const auto tri = g_("G:n=3;E=0-1,0-2,1-2");
    const auto [a, b] = Graphs::comult(tri, LabelSet{0, 1}, LabelSet{2});
    CHECK(Graphs::encode(a) == "G:n=2;E=0-1");
    CHECK(Graphs::encode(b) == "G:V=2;E=");
    CHECK(Graphs::encode(Graphs::mult(g_("G:V=0;E="), g_("G:V=1;E="))) == "G:n=2;E=");
    CHECK_THROWS_AS(Graphs::mult(g_("G:n=2;E="), g_("G:V=1;E=")), LabelOverlap);
    CHECK_THROWS_AS(Graphs::comult(tri, LabelSet{0}, LabelSet{2}), LabelMismatch);
  }
  SECTION("partitions") {
    CHECK(Partitions::encode(Partitions::mult(Partitions::parse("P:n=2;B=01"), Partitions::parse("P:V=2;B=2"))) ==
          "P:n=3;B=01|2");
    const auto parts = compose_comult<Partitions>(
        OrderedSetPartition::make(LabelSet::range(3), {LabelSet{0}, LabelSet{1}, LabelSet{2}}),
        Partitions::parse("P:n=3;B=012"));
    REQUIRE(parts.size() == 3);
    for (const auto& q : parts) CHECK(q.blocks.size() == 1);
  }
}

TEST_CASE("free products") {
  CHECK(Graphs::encode(graph_free_product(g_("G:V=0;E="), g_("G:V=1;E="))) == "G:n=2;E=0-1");
  CHECK(Graphs::encode(graph_free_product(g_("G:n=2;E=0-1"), g_("G:V=2;E="))) == "G:n=3;E=0-1,0-2,1-2");
  CHECK(graph_free_product(Graphs::unit(), g_("G:n=2;E=0-1")) == g_("G:n=2;E=0-1"));
  CHECK(Hypergraphs::encode(hypergraph_free_product(h_("H:V=0;E="), h_("H:V=1,2;E="))) ==
        "H:n=3;E={0,1};{0,2};{0,1,2}");
  CHECK(hypergraph_free_product(Hypergraphs::unit(), h_("H:n=3;E={0,1}")) == h_("H:n=3;E={0,1}"));
}

TEMPLATE_TEST_CASE("complement identities", "", Graphs, Hypergraphs) {
  using F = TestType;
  for (const auto& x : all_up_to<F>(4)) {
    REQUIRE(complement(complement(x)) == x);
    const LabelSet ground = F::labels(x);
    bool decomposable = false;
    for (const auto& [s, t] : two_block_splits(ground)) {
      const auto [a, b] = F::comult(x, s, t);
      REQUIRE(complement(F::free_mult(complement(a), complement(b))) == F::mult(a, b));
      if (!s.empty() && !t.empty() && F::free_mult(a, b) == x) decomposable = true;
    }
    if (!ground.empty()) REQUIRE(decomposable == !is_connected(complement(x)));
  }
}

TEST_CASE("flats") {
  CHECK(graph_flats(g_("G:n=3;E=")).size() == 1);
  CHECK(graph_flats(g_("G:n=2;E=0-1")).size() == 2);
  const auto tri = graph_flats(g_("G:n=3;E=0-1,0-2,1-2"));
  std::set<std::string> names;
  for (const auto& f : tri) names.insert(Graphs::encode(f));
  CHECK(names == std::set<std::string>{"G:n=3;E=", "G:n=3;E=0-1", "G:n=3;E=0-2", "G:n=3;E=1-2",
                                       "G:n=3;E=0-1,0-2,1-2"});
  CHECK_FALSE(is_flat(g_("G:n=3;E=0-1,0-2,1-2"), g_("G:n=3;E=0-1,0-2")));
}

TEST_CASE("flats are the reassembly up-set, graphs n <= 4") {
  for (const auto& g : all_up_to<Graphs>(4)) {
    std::set<std::string> flats, upset;
    for (const auto& f : graph_flats(g)) flats.insert(Graphs::encode(f));
    for (const auto& y : reassembly_upset<Graphs>(g)) upset.insert(Graphs::encode(y));
    REQUIRE(flats == upset);
  }
}

TEST_CASE("rank and contraction") {
  CHECK(graph_rank(g_("G:n=4;E=0-1,2-3")) == 2);
  CHECK(graph_rank(g_("G:n=3;E=0-1,0-2,1-2")) == 2);
  const auto tri = g_("G:n=3;E=0-1,0-2,1-2");
  CHECK(Graphs::encode(contract(tri, g_("G:n=3;E=0-1"))) == "G:V=0,2;E=0-2");
  CHECK(Graphs::encode(contract(tri, tri)) == "G:n=1;E=");
  const auto path = g_("G:n=3;E=0-1,1-2");
  CHECK(contract(path, g_("G:n=3;E=")) == path);
  CHECK_THROWS_AS(contract(tri, g_("G:n=3;E=0-1,1-2")), NotAFlat);
}

TEST_CASE("acyclic orientations") {
  CHECK(acyclic_orientation_count(g_("G:n=2;E=0-1")) == 2);
  CHECK(acyclic_orientation_count(g_("G:n=3;E=0-1,0-2,1-2")) == 6);
  CHECK(acyclic_orientation_count(g_("G:n=3;E=0-1,1-2")) == 4);
  for (const auto& g : all_up_to<Graphs>(4)) REQUIRE(acyclic_orientation_count(g) == brute_acyclic_orientations(g));
}

TEST_CASE("chromatic polynomial against brute-force colorings, n <= 4") {
  for (const auto& g : all_up_to<Graphs>(4)) {
    const auto chi = chromatic_polynomial(g);
    for (int k = 0; k <= g.vertices.size() + 1; ++k)
      REQUIRE(chi.evaluate(k) == static_cast<IntPolynomial::Coefficient>(brute_colorings(g, k)));
  }
}

TEST_CASE("Zaslavsky count, n <= 5") {
  for (const auto& g : all_up_to<Graphs>(5)) {
    const auto at_minus_one = chromatic_polynomial(g).evaluate(-1);
    const auto magnitude = static_cast<std::uint64_t>(at_minus_one < 0 ? -at_minus_one : at_minus_one);
    REQUIRE(acyclic_orientations_by_enumeration(g) == magnitude);
  }
  // Edge-heavy graphs go through the polynomial route.
  const auto k7 = complement(make_graph(LabelSet::range(7), {}));
  CHECK(acyclic_orientation_count(k7) == 5040);
}

TEST_CASE("simplicial skeleton and gamma") {
  CHECK(Graphs::encode(sc_one_skeleton(s_("S:n=3;F={0,1,2}"))) == "G:n=3;E=0-1,0-2,1-2");
  CHECK(Graphs::encode(sc_one_skeleton(s_("S:n=3;F={0,1};{0,2}"))) == "G:n=3;E=0-1,0-2");
  CHECK(Graphs::encode(sc_one_skeleton(s_("S:n=3;F={0};{1};{2}"))) == "G:n=3;E=");
  const auto full = s_("S:n=3;F={0,1,2}");
  CHECK(sc_gamma_of_flat(full, sc_one_skeleton(full)) == full);
  CHECK(SimplicialComplexes::encode(sc_gamma_of_flat(full, g_("G:n=3;E="))) == "S:n=3;F={0};{1};{2}");
  CHECK(SimplicialComplexes::encode(sc_gamma_of_flat(full, g_("G:n=3;E=0-1"))) == "S:n=3;F={2};{0,1}");
  CHECK_THROWS_AS(sc_gamma_of_flat(full, g_("G:n=3;E=0-1,0-2")), NotAFlat);
}

TEST_CASE("simplicial reassembly up-set is gamma of the skeleton flats, n <= 4") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& c : SimplicialComplexes::enumerate(LabelSet::range(n))) {
      std::set<std::string> gamma, upset;
      for (const auto& f : graph_flats(sc_one_skeleton(c))) gamma.insert(SimplicialComplexes::encode(sc_gamma_of_flat(c, f)));
      for (const auto& y : reassembly_upset<SimplicialComplexes>(c)) upset.insert(SimplicialComplexes::encode(y));
      REQUIRE(gamma == upset);
    }
}

TEST_CASE("relabeling is an isomorphism of the native orders") {
  auto check = []<class F>(F, int n) {
    const LabelSet ground = LabelSet::range(n);
    const auto xs = F::enumerate(ground);
    for (const auto& sigma : permutations_of(ground))
      for (const auto& x : xs)
        for (const auto& y : xs)
          REQUIRE(F::native_leq(x, y) == F::native_leq(F::relabel(sigma, x), F::relabel(sigma, y)));
  };
  for (int n = 0; n <= 4; ++n) {
    check(Graphs{}, n);
    check(Partitions{}, n);
  }
  check(Hypergraphs{}, 3);
  check(SimplicialComplexes{}, 3);
}

TEST_CASE("native orders") {
  CHECK(Graphs::native_leq(g_("G:n=3;E=0-1"), g_("G:n=3;E=0-1,1-2")));
  CHECK_FALSE(Graphs::native_leq(g_("G:n=3;E=0-1,1-2"), g_("G:n=3;E=0-1")));
  // A partition lies below its refinements.
  CHECK(Partitions::native_leq(Partitions::parse("P:n=3;B=012"), Partitions::parse("P:n=3;B=01|2")));
  CHECK_FALSE(Partitions::native_leq(Partitions::parse("P:n=3;B=01|2"), Partitions::parse("P:n=3;B=02|1")));
  CHECK(Partitions::native_upset(Partitions::parse("P:n=3;B=012")).size() == 5);
  CHECK(SimplicialComplexes::native_leq(s_("S:n=3;F={0,1}"), s_("S:n=3;F={0,1};{1,2}")));
}
