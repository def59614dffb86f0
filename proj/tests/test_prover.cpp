#include <catch2/catch_amalgamated.hpp>

#include "rado/oracle.hpp"
#include "rado/spec_io.hpp"
#include "test_paths.hpp"

using namespace rado;

namespace {

SolverConfig liveConfig(double timeout = 60) {
  SolverConfig cfg;
  const char* env = std::getenv("RADO_SMT_COMMAND");
  cfg.command = env ? env : std::string("node ") + RADO_SOLVER_DIR + "/z3smt.js {script}";
  cfg.timeoutSeconds = timeout;
  return cfg;
}

ColoringSpec loadSpec(const char* which) {
  return loadColoringSpec(std::string(RADO_SPEC_DIR) + "/" + which);
}

}  // namespace

TEST_CASE("case enumeration counts and coverage") {
  SmtBridge bridge(liveConfig());
  // 4/2/1 member sets with a 3-variable equation: 64 + 8 + 1 = 73.
  {
    Prover p(loadSpec("prop1.json"), bridge);
    auto cases = p.enumerateCases();
    CHECK(cases.size() == 73);
    // Every ordered tuple appears exactly once.
    std::set<std::string> labels;
    for (const auto& c : cases) labels.insert(c.label);
    CHECK(labels.size() == 73);
  }
  {
    Prover p(loadSpec("thm3.json"), bridge);
    CHECK(p.enumerateCases().size() == 8 + 27 + 8);
  }
  {
    Prover p(loadSpec("thm4.json"), bridge);
    auto cases = p.enumerateCases();
    CHECK(cases.size() == 1 + 64 + 64);
    size_t gray = 0, red = 0, blue = 0;
    for (const auto& c : cases) {
      if (c.classIndex == 0) ++gray;
      if (c.classIndex == 1) ++red;
      if (c.classIndex == 2) ++blue;
    }
    CHECK(gray == 1);
    CHECK(red == 64);
    CHECK(blue == 64);
  }
  // Single class, single set: one case.
  {
    ColoringSpec tiny;
    tiny.equation.lhsCoeffs = {parseExpr("1"), parseExpr("1")};
    tiny.equation.rhsCoeff = parseExpr("1");
    tiny.domainBound = parseExpr("4");
    tiny.classes.push_back({"only", {MemberSet{IntervalSet{parseExpr("1"), parseExpr("4"), {}, {}}}}});
    Prover p(tiny, bridge);
    CHECK(p.enumerateCases().size() == 1);
  }
}

TEST_CASE("live: overlapping sets fail disjointness with a witness") {
  SmtBridge bridge(liveConfig(30));
  ColoringSpec broken;
  broken.name = "overlap";
  broken.equation.lhsCoeffs = {parseExpr("1"), parseExpr("1")};
  broken.equation.rhsCoeff = parseExpr("1");
  broken.assumptions.setLowerBound("a", 2);
  broken.domainBound = parseExpr("2*a");
  broken.classes.push_back({"c0", {MemberSet{IntervalSet{parseExpr("1"), parseExpr("a"), {}, {}}},
                                   MemberSet{IntervalSet{parseExpr("1"), parseExpr("a"), {}, {}}}}});
  Prover p(broken, bridge);
  auto rep = p.verifyPartition();
  REQUIRE(rep.disjointChecks.size() == 1);
  CHECK(rep.disjointChecks[0].verdict == Verdict3::Refuted);
  CHECK(rep.disjointChecks[0].witness.at("v") >= 1);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("live: single case checks") {
  SmtBridge bridge(liveConfig(60));
  // prop1 x, y, z in P0 = [1, a]: a*x + y = z forces z > a.
  Prover p(loadSpec("prop1.json"), bridge);
  auto cases = p.enumerateCases();
  // color0[0,0,0] is the first case.
  REQUIRE(cases[0].label == "color0[0,0,0]");
  auto rep = p.verifyCase(cases[0]);
  CHECK(rep.status == SolverStatus::Unsat);
}

TEST_CASE("live: deliberately broken coloring yields a replayable witness") {
  SmtBridge bridge(liveConfig(60));
  // Take the prop1 spec and widen color1's first interval to [a, a^2+2a]
  // so it overlaps P0 and admits a monochromatic solution in color1 via
  // a*a + a = a^2 + a... more directly the partition disjointness fails;
  // and the case x=y=a, z = a^2+a in color1 becomes satisfiable.
  ColoringSpec spec = loadSpec("prop1.json");
  auto& color1 = spec.classes[1];
  std::get<IntervalSet>(color1.members[0]).lower = parseExpr("a");
  Prover p(spec, bridge, {1, 30, 30});
  auto cases = p.enumerateCases();
  // find case color1[0,0,0]
  size_t idx = SIZE_MAX;
  for (size_t i = 0; i < cases.size(); ++i)
    if (cases[i].label == "color1[0,0,0]") idx = i;
  REQUIRE(idx != SIZE_MAX);
  auto rep = p.verifyCase(cases[idx]);
  REQUIRE(rep.status == SolverStatus::Sat);
  // The bridge replays models before returning them; re-check here.
  Bindings model = rep.counterexample;
  Int a = model.at("a"), x1 = model.at("x1"), x2 = model.at("x2"), x3 = model.at("x3");
  CHECK(a * x1 + x2 == x3);
  CHECK(x1 >= a);
  CHECK(x3 <= a * a + 2 * a);
}

TEST_CASE("live: partition verification of the seven-interval spec") {
  SmtBridge bridge(liveConfig(60));
  Prover p(loadSpec("prop1.json"), bridge, {2, 60, 60});
  auto rep = p.verifyPartition();
  CHECK(rep.assumptionsSatisfiable.passed());
  for (const auto& c : rep.subsetChecks) {
    INFO(c.name);
    CHECK(c.passed());
  }
  for (const auto& c : rep.disjointChecks) {
    INFO(c.name);
    CHECK(c.passed());
  }
  INFO(rep.sizeCheck.detail);
  CHECK(rep.sizeCheck.passed());
}

TEST_CASE("concrete cross-check: instantiated specs are oracle-clean") {
  // Symbolic pass must never contradict the concrete oracle: instantiate
  // each shipped spec on a small grid and check for monochromatic solutions.
  auto checkSpec = [](const ColoringSpec& spec, const Bindings& b) {
    Int n = spec.domainBound.eval(b);
    std::vector<Int> coloring(n + 1, -1);
    for (size_t ci = 0; ci < spec.classes.size(); ++ci) {
      for (Int v : instantiateClass(spec.classes[ci], b)) {
        REQUIRE(v >= 1);
        REQUIRE(v <= n);
        REQUIRE(coloring[v] == -1);
        coloring[v] = static_cast<Int>(ci);
      }
    }
    for (Int v = 1; v <= n; ++v) REQUIRE(coloring[v] != -1);
    LinearEquation eq(
        {spec.equation.lhsCoeffs[0].eval(b), spec.equation.lhsCoeffs[1].eval(b)},
        spec.equation.rhsCoeff.eval(b));
    CHECK(oracle::checkColoringConcrete(coloring, eq).empty());
  };

  ColoringSpec prop1 = loadSpec("prop1.json");
  for (Int a : {1, 2, 3, 5}) checkSpec(prop1, {{"a", a}});

  ColoringSpec thm3 = loadSpec("thm3.json");
  checkSpec(thm3, {{"a", 4}, {"b", 3}});
  checkSpec(thm3, {{"a", 5}, {"b", 3}});
  checkSpec(thm3, {{"a", 7}, {"b", 4}});

  ColoringSpec thm4 = loadSpec("thm4.json");
  checkSpec(thm4, {{"a", 7}});
}
