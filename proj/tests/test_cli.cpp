#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "support.hpp"

using namespace hsl;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" HSL_CLI_PATH "\" " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Json run_json(const std::string& args) {
  const auto r = run(args);
  INFO(args << "\n" << r.out);
  REQUIRE(r.status == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: antipode of K2 with both methods") {
  const auto j = run_json("antipode --family graphs --object \"G:n=2;E=0-1\" --method both");
  CHECK(j["agree"] == true);
  REQUIRE(j["results"].size() == 3);
  const auto takeuchi = free_vector_from_json<Graphs>(j["results"][0]);
  CHECK(j["results"][0]["method"] == "takeuchi");
  CHECK(takeuchi == takeuchi_antipode<Graphs>(Graphs::parse("G:n=2;E=0-1")));
  CHECK(free_vector_from_json<Graphs>(j["results"][1]) == takeuchi);
  CHECK(j["results"][2]["method"] == "closed-lower-paper-literal");
  CHECK(free_vector_from_json<Graphs>(j["results"][2]) != takeuchi);
}

TEST_CASE("cli: antipode of the two-block partition") {
  const auto j = run_json("antipode --family partitions --object \"P:n=2;B=01\" --method takeuchi");
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["terms"]["P:n=2;B=01"] == "-1/1");
  CHECK(j["results"][0]["terms"]["P:n=2;B=0|1"] == "2/1");
  const auto text = run("antipode --family partitions --object \"P:n=2;B=01\" --format text");
  CHECK(text.out.find("-[P:n=2;B=01] + 2[P:n=2;B=0|1]") != std::string::npos);
}

TEST_CASE("cli: antipode of the unit") {
  const auto j = run_json("antipode --family graphs --object \"G:n=0;E=\" --method both");
  CHECK(j["agree"] == true);
  for (const auto& r : j["results"]) CHECK(free_vector_from_json<Graphs>(r) == FreeVector<Graphs>::basis(Graphs::unit()));
}

TEST_CASE("cli: primitives") {
  CHECK(run_json("primitives --family graphs --n 2")["count"] == 1);
  const auto three = run_json("primitives --family graphs --n 3");
  CHECK(three["count"] == 4);
  for (const auto& p : three["primitives"]) {
    const auto omega = free_vector_from_json<Graphs>(p["omega"]);
    CHECK(is_primitive(omega));
  }
  CHECK(run_json("primitives --family partitions --n 3")["count"] == 1);
}

TEST_CASE("cli: verify") {
  for (const char* family : {"graphs", "hypergraphs", "simplicial", "partitions"}) {
    const auto j = run_json(std::string("verify --family ") + family + " --n 3");
    INFO(family);
    CHECK(j["passed"] == true);
    for (const auto& c : j["checks"]) CHECK(c["passed"] == true);
  }
  const auto sc = run_json("verify --family simplicial --n 3");
  CHECK(sc["adjunctions"][0]["name"].get<std::string>().starts_with("m ⊣ Δ"));
  CHECK(run_json("verify --family hypergraphs --n 3")["carrier_sizes"][3] == 16);
}

TEST_CASE("cli: fock") {
  CHECK(run_json("fock --family partitions --n 1")["power_sum"]["scalar"] == "1/1");
  const auto two = run_json("fock --family partitions --n 2");
  CHECK(two["power_sum"]["scalar"] == "1/1");
  CHECK(two["power_sum"]["verdict"] == "exact");
  CHECK(symfunc_from_json(two["power_sum"]["p_n"]) == SymFunc::p(2));
  CHECK(symfunc_from_json(two["power_sum"]["image"]) == SymFunc::p(2));
  const auto three = run_json("fock --family partitions --n 3");
  CHECK(three["power_sum"]["scalar"] == "2/1");
  CHECK(three["passed"] == true);
  CHECK(int_polynomial_from_json(three["char_poly"]["expected"]) == IntPolynomial::falling_factorial(3));
}

TEST_CASE("cli: exit codes") {
  CHECK(run("antipode --family graphs --object \"G:n=2;E=0-7\"").status == 2);
  CHECK(run("antipode --family trees --object \"G:n=2;E=\"").status == 2);
  CHECK(run("antipode --family graphs").status == 2);
  CHECK(run("fock --family graphs --n 2").status == 2);
  CHECK(run("verify --family graphs --n 4 --budget 10").status == 3);
  CHECK(run("verify --family graphs --n 4", "HSL_BUDGET=10").status == 3);
  CHECK(run("verify --family graphs --n 2 --budget 100000", "HSL_BUDGET=10").status == 0);
  CHECK(run("fock --family partitions --n 9").status == 3);
}

TEST_CASE("cli: output does not depend on --jobs") {
  const std::string base = "antipode --family graphs --object \"G:n=5;E=0-1,1-2,2-3,3-4,0-4\" --method both";
  const auto one = run(base + " --jobs 1");
  REQUIRE(one.status == 0);
  CHECK(run(base + " --jobs 4").out == one.out);
  CHECK(run(base + " --jobs 0").out == one.out);
  const auto v = run("verify --family partitions --n 3 --jobs 1");
  CHECK(run("verify --family partitions --n 3 --jobs 3").out == v.out);
  CHECK(run(base + " --jobs 1").out == one.out);
}
