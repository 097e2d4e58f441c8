// hsl: antipodes, primitives, verification reports and Fock-space checks from the command line.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hsl/hsl.hpp"

namespace {

using namespace hsl;

enum ExitCode { kOk = 0, kOtherError = 1, kParseError = 2, kBudgetExceeded = 3, kVerificationFailed = 4 };

struct RunConfig {
  std::string command;
  std::string family;
  std::string object;
  std::string method = "takeuchi";
  int n = -1;
  std::string format = "json";
  Budget budget;
  unsigned jobs = 0;
};

struct Output {
  Json json;
  std::string text;
  bool ok = true;
};

Json witness_json(const std::optional<std::string>& w) { return w ? Json(*w) : Json(nullptr); }

std::string pass_word(bool ok) { return ok ? "pass" : "FAIL"; }

// ---------------------------------------------------------------------------------------
// antipode

template <Family F>
Json method_json(const FreeVector<F>& v, const char* method) {
  Json j = to_json(v);
  j["method"] = method;
  return j;
}

template <Family F>
Output cmd_antipode(const RunConfig& cfg) {
  const auto x = F::parse(cfg.object);
  Output out;
  std::ostringstream text;
  Json results = Json::array();
  std::optional<FreeVector<F>> takeuchi;
  std::optional<ClosedFormAntipode<F>> closed;
  if (cfg.method != "closed") takeuchi = takeuchi_antipode<F>(x, cfg.budget, cfg.jobs);
  if (cfg.method != "takeuchi") closed = closed_form_antipode_both<F>(x, cfg.budget);
  if (takeuchi) {
    results.push_back(method_json(*takeuchi, "takeuchi"));
    text << "takeuchi: " << takeuchi->to_string() << "\n";
  }
  if (closed) {
    results.push_back(method_json(closed->upper, "closed-upper"));
    results.push_back(method_json(closed->lower_literal, "closed-lower-paper-literal"));
    text << "closed-upper: " << closed->upper.to_string() << "\n";
    text << "closed-lower-paper-literal: " << closed->lower_literal.to_string() << "\n";
  }
  out.json = Json{{"command", "antipode"},
                  {"family", std::string(F::tag)},
                  {"object", F::encode(x)},
                  {"results", results}};
  if (takeuchi && closed) {
    const bool agree = *takeuchi == closed->upper;
    out.json["agree"] = agree;
    out.ok = agree;
    text << "agree: " << (agree ? "true" : "false") << "\n";
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------------------
// primitives

template <Family F>
Output cmd_primitives(const RunConfig& cfg) {
  const auto adj = verify_adjunction(Catalog<F>::primitive_adjunction(), cfg.n, cfg.budget);
  Output out;
  std::ostringstream text;
  text << "adjunction: " << adj.adjunction.name << " (" << pass_word(adj.holds()) << ")\n";
  out.json = Json{{"command", "primitives"},
                  {"family", std::string(F::tag)},
                  {"n", cfg.n},
                  {"adjunction", adj.adjunction.name},
                  {"adjunction_verified", adj.holds()}};
  if (!adj.holds()) {
    out.ok = false;
    out.json["witness"] = witness_json(adj.witness);
    text << "witness: " << adj.witness.value_or("") << "\n";
    out.text = text.str();
    return out;
  }
  Json list = Json::array();
  const auto basis = primitives_basis(adj, LabelSet::range(cfg.n), cfg.budget);
  for (const auto& p : basis) {
    const bool primitive = is_primitive(p.omega);
    out.ok = out.ok && primitive;
    list.push_back(Json{{"structure", F::encode(p.structure)}, {"omega", to_json(p.omega)}, {"primitive", primitive}});
    text << F::encode(p.structure) << "  ω = " << p.omega.to_string() << (primitive ? "" : "  [NOT PRIMITIVE]")
         << "\n";
  }
  out.json["count"] = basis.size();
  out.json["primitives"] = list;
  text << "count: " << basis.size() << "\n";
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------------------
// verify

struct CheckLine {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<std::string> witness;
};

template <Family F>
std::vector<CheckLine> run_verification(const RunConfig& cfg, Json& adjunctions) {
  std::vector<CheckLine> lines;
  const int n = cfg.n;
  const std::string upto = " (n <= " + std::to_string(n) + ")";

  const auto axioms = verify_axioms<F>(n, cfg.budget);
  for (const auto& r : axioms.results) lines.push_back({"axiom: " + r.axiom, r.passed, r.checks, r.witness});

  const auto identity = verify_delta_after_mult_identity<F>(n, cfg.budget);
  lines.push_back({"Δ∘m = id", identity.holds, identity.checks, identity.witness});

  for (const auto& adj : Catalog<F>::adjunctions()) {
    const auto v = verify_adjunction(adj, n, cfg.budget);
    lines.push_back({"galois: " + adj.name, v.galois, v.galois_pairs, v.galois ? std::nullopt : v.witness});
    lines.push_back({"rota transfer: " + adj.name, v.rota, v.rota_pairs, v.rota ? std::nullopt : v.witness});
    const auto duality = duality_pairing_check(adj, n, cfg.budget);
    lines.push_back({"duality pairing: " + adj.name, duality.holds, duality.checks, duality.witness});
    CheckReport kron, round;
    for (int k = 0; k <= n; ++k) {
      const LabelSet ground = LabelSet::range(k);
      const auto order = adj.omega_order(ground, cfg.budget);
      const auto a = kronecker_check<F>(order, ground, cfg.budget);
      const auto b = basis_round_trip_check<F>(order, ground, cfg.budget);
      kron.record(a.holds, [&] { return *a.witness; });
      round.record(b.holds, [&] { return *b.witness; });
      kron.checks += a.checks - 1;
      round.checks += b.checks - 1;
    }
    lines.push_back({"<ω_x, y> = [x = y]: " + adj.name, kron.holds, kron.checks, kron.witness});
    lines.push_back({"basis round trip: " + adj.name, round.holds, round.checks, round.witness});
    adjunctions.push_back(
        Json{{"name", adj.name}, {"side", adj.side == AdjointSide::delta_left ? "delta-left" : "delta-right"},
             {"verified", v.holds()}});
  }

  CheckLine order{"reassembly order is a partial order" + upto, true, 0, std::nullopt};
  CheckLine factorization{"unique factorization" + upto, true, 0, std::nullopt};
  for (int k = 0; k <= n; ++k) {
    const auto p = reassembly_poset<F>(LabelSet::range(k), cfg.budget);
    const auto r = check_partial_order(p);
    ++order.checks;
    if (!r.holds() && order.passed) {
      order.passed = false;
      order.witness = r.witness->to_string();
    }
    for (const auto& x : F::enumerate(LabelSet::range(k), cfg.budget)) {
      ++factorization.checks;
      try {
        const auto f = factorize<F>(x);
        if (!(compose_mult<F>(OrderedSetPartition{f.partition.ambient, f.partition.blocks}, f.factors) == x))
          throw NonUniqueFactorization("factors of " + F::encode(x) + " do not multiply back");
        for (const auto& factor : f.factors)
          if (factorize<F>(factor).length() != 1)
            throw NonUniqueFactorization("factor " + F::encode(factor) + " of " + F::encode(x) + " splits further");
      } catch (const NonUniqueFactorization& e) {
        if (factorization.passed) {
          factorization.passed = false;
          factorization.witness = e.what();
        }
      }
    }
  }
  lines.push_back(order);
  lines.push_back(factorization);
  return lines;
}

template <Family F>
Output cmd_verify(const RunConfig& cfg) {
  Output out;
  Json adjunctions = Json::array();
  const auto lines = run_verification<F>(cfg, adjunctions);
  std::ostringstream text;
  Json checks = Json::array();
  for (const auto& l : lines) {
    out.ok = out.ok && l.passed;
    checks.push_back(Json{{"name", l.name}, {"passed", l.passed}, {"checks", l.checks}, {"witness", witness_json(l.witness)}});
    text << pass_word(l.passed) << "  " << l.name << "  [" << l.checks << "]";
    if (l.witness) text << "  " << *l.witness;
    text << "\n";
  }
  Json carrier = Json::array();
  for (int k = 0; k <= cfg.n; ++k) carrier.push_back(F::enumerate(LabelSet::range(k), cfg.budget).size());
  text << "carrier sizes:";
  for (const auto& c : carrier) text << " " << c.get<std::size_t>();
  text << "\n";
  for (const auto& a : adjunctions) text << "adjunction: " << a["name"].get<std::string>() << "\n";
  text << (out.ok ? "all checks passed" : "verification FAILED") << "\n";
  out.json = Json{{"command", "verify"},
                  {"family", std::string(F::tag)},
                  {"n", cfg.n},
                  {"carrier_sizes", carrier},
                  {"adjunctions", adjunctions},
                  {"checks", checks},
                  {"passed", out.ok}};
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------------------
// fock

Json scalar_json(const ProportionalityResult& r) {
  return r.scalar ? Json(to_fraction_string(*r.scalar)) : Json(nullptr);
}

std::string scalar_text(const ProportionalityResult& r) { return r.scalar ? to_display_string(*r.scalar) : "-"; }

Output cmd_fock(const RunConfig& cfg) {
  const auto ps = power_sum_identity_check(cfg.n, cfg.budget);
  const auto cp = partition_char_poly_check(cfg.n, cfg.budget);
  Output out;
  out.ok = ps.proportional() && ps.newton_agrees && cp.passes();
  std::ostringstream text;

  Json doubilet = Json::array();
  for (const auto& d : ps.doubilet)
    doubilet.push_back(Json{{"reading", d.reading},
                            {"value", to_json(d.value)},
                            {"verdict", to_string(d.match.verdict)},
                            {"scalar", scalar_json(d.match)}});
  Json rows = Json::array();
  for (const auto& r : cp.rows)
    rows.push_back(Json{{"side", r.side == MobiusSide::upper ? "upper" : "lower"},
                        {"exponent", r.exponent},
                        {"polynomial", to_json(r.polynomial)},
                        {"value_at_minus_one", r.value_at_minus_one},
                        {"matches", r.matches_polynomial && r.matches_value}});
  Json convention = nullptr;
  if (cp.matching_row) {
    const auto& r = cp.rows[*cp.matching_row];
    convention = Json{{"side", r.side == MobiusSide::upper ? "upper" : "lower"}, {"exponent", r.exponent}};
  }
  out.json = Json{{"command", "fock"},
                  {"n", cfg.n},
                  {"power_sum",
                   Json{{"image", to_json(ps.image)},
                        {"p_n", to_json(ps.power_sum)},
                        {"verdict", to_string(ps.match.verdict)},
                        {"scalar", scalar_json(ps.match)},
                        {"newton_agrees", ps.newton_agrees},
                        {"doubilet_as_printed", doubilet}}},
                  {"char_poly",
                   Json{{"expected", to_json(cp.expected)},
                        {"expected_value_at_minus_one", cp.expected_value},
                        {"rows", rows},
                        {"convention", convention}}},
                  {"passed", out.ok}};

  text << "bridge image of ω_{π_I}: " << ps.image.to_string() << "\n";
  text << "p_" << cfg.n << " = " << ps.power_sum.to_string() << "  (Newton " << (ps.newton_agrees ? "agrees" : "DISAGREES")
       << ")\n";
  text << "verdict: " << to_string(ps.match.verdict) << ", scalar " << scalar_text(ps.match) << "\n";
  for (const auto& d : ps.doubilet)
    text << "doubilet as printed [" << d.reading << "]: " << to_string(d.match.verdict) << ", scalar "
         << scalar_text(d.match) << "\n";
  text << "expected characteristic polynomial: " << cp.expected.to_string() << ", value at -1: " << cp.expected_value
       << "\n";
  for (const auto& r : cp.rows)
    text << "  " << (r.side == MobiusSide::upper ? "upper" : "lower") << " t^(" << r.exponent
         << "): " << r.polynomial.to_string() << ", value " << r.value_at_minus_one
         << ((r.matches_polynomial && r.matches_value) ? "  <- matches" : "") << "\n";
  if (!cp.passes()) text << "no exponent convention reproduces the falling factorial\n";
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------------------

template <Family F>
Output dispatch_family(const RunConfig& cfg) {
  if (cfg.command == "antipode") return cmd_antipode<F>(cfg);
  if (cfg.command == "primitives") return cmd_primitives<F>(cfg);
  return cmd_verify<F>(cfg);
}

Output dispatch(const RunConfig& cfg) {
  if (cfg.command == "fock") {
    if (cfg.family != "partitions")
      throw ParseError("fock works on set partitions; got --family " + cfg.family);
    return cmd_fock(cfg);
  }
  if (cfg.family == "graphs") return dispatch_family<Graphs>(cfg);
  if (cfg.family == "hypergraphs") return dispatch_family<Hypergraphs>(cfg);
  if (cfg.family == "simplicial") return dispatch_family<SimplicialComplexes>(cfg);
  return dispatch_family<Partitions>(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Antipodes and primitives of poset Hopf monoids"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::size_t> budget;

  const std::vector<std::string> families{"graphs", "hypergraphs", "simplicial", "partitions"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--budget", budget, "element budget (default $HSL_BUDGET or 200000)")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", cfg.jobs, "worker threads (0 = all cores)");
  };

  auto* antipode_cmd = app.add_subcommand("antipode", "antipode of one structure");
  antipode_cmd->add_option("--family", cfg.family)->required()->check(CLI::IsMember(families));
  antipode_cmd->add_option("--object", cfg.object, "canonical encoding, e.g. G:n=2;E=0-1")->required();
  antipode_cmd->add_option("--method", cfg.method)->check(CLI::IsMember({"takeuchi", "closed", "both"}));
  common(antipode_cmd);

  auto* primitives_cmd = app.add_subcommand("primitives", "basis of primitives on {0..n-1}");
  primitives_cmd->add_option("--family", cfg.family)->required()->check(CLI::IsMember(families));
  primitives_cmd->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
  common(primitives_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "axioms, adjunctions, duality and reassembly checks up to n");
  verify_cmd->add_option("--family", cfg.family)->required()->check(CLI::IsMember(families));
  verify_cmd->add_option("--n", cfg.n)->required()->check(CLI::NonNegativeNumber);
  common(verify_cmd);

  cfg.family = "partitions";
  auto* fock_cmd = app.add_subcommand("fock", "power sums and characteristic polynomials over set partitions");
  fock_cmd->add_option("--family", cfg.family, "must be partitions")->check(CLI::IsMember(families));
  fock_cmd->add_option("--n", cfg.n)->required();
  common(fock_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.budget = Budget::from_env();
  if (budget) cfg.budget.elements = *budget;
  set_default_jobs(cfg.jobs);
  cfg.jobs = default_jobs();

  try {
    const Output out = dispatch(cfg);
    if (cfg.format == "json")
      std::cout << out.json.dump(2) << "\n";
    else
      std::cout << out.text;
    return out.ok ? kOk : kVerificationFailed;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const CarrierOverflow& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOtherError;
  }
}
