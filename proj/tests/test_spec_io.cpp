#include <catch2/catch_amalgamated.hpp>

#include "rado/eqtext.hpp"
#include "rado/spec_io.hpp"
#include "test_paths.hpp"

using namespace rado;

TEST_CASE("shipped specs parse") {
  ColoringSpec prop1 = loadColoringSpec(std::string(RADO_SPEC_DIR) + "/prop1.json");
  CHECK(prop1.classes.size() == 3);
  CHECK(prop1.classes[0].members.size() == 4);
  CHECK(prop1.classes[1].members.size() == 2);
  CHECK(prop1.classes[2].members.size() == 1);
  CHECK(prop1.equation.numVars() == 3);
  CHECK(prop1.domainBound.eval({{"a", 4}}) == 172);

  ColoringSpec thm3 = loadColoringSpec(std::string(RADO_SPEC_DIR) + "/thm3.json");
  CHECK(thm3.classes.size() == 3);
  CHECK(thm3.assumptions.coprimePairs().size() == 1);
  CHECK(thm3.assumptions.polyConstraints().size() == 2);
  CHECK(thm3.domainBound.eval({{"a", 4}, {"b", 3}}) == 108);

  ColoringSpec thm4 = loadColoringSpec(std::string(RADO_SPEC_DIR) + "/thm4.json");
  CHECK(thm4.classes.size() == 3);
  CHECK(thm4.classes[0].members.size() == 1);
  CHECK(thm4.classes[1].members.size() == 4);
  CHECK(thm4.classes[2].members.size() == 4);
  CHECK(thm4.assumptions.parityOf("a").has_value());
  CHECK(thm4.domainBound.eval({{"a", 7}}) == 2743);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(parseColoringSpec(json::object()), SpecParseError);
  json j = {{"equation", {{"lhsCoeffs", {"a"}}, {"rhsCoeff", "1"}}},
            {"N", "a"},
            {"classes", json::array()}};
  CHECK_THROWS_AS(parseColoringSpec(j), SpecParseError);
}

TEST_CASE("equation text forms") {
  LinearEquation e1 = parseEquationText("1*x + 1*y = 1*z");
  CHECK(e1.lhsCoeffs == std::vector<Int>{1, 1});
  CHECK(e1.rhsCoeff == 1);

  LinearEquation e2 = parseEquationText("E(3,0;4,3,3)");
  CHECK(e2.lhsCoeffs == std::vector<Int>{4, 3});
  CHECK(e2.rhsCoeff == 3);
  CHECK(e2.constant == 0);

  LinearEquation e3 = parseEquationText("2*x + y + 5 = 3*z");
  CHECK(e3.lhsCoeffs == std::vector<Int>{2, 1});
  CHECK(e3.rhsCoeff == 3);
  CHECK(e3.constant == 5);

  LinearEquation e4 = parseEquationText("E(4,1;1,1,1,2)");
  CHECK(e4.lhsCoeffs == std::vector<Int>{1, 1, 1});
  CHECK(e4.rhsCoeff == 2);
  CHECK(e4.constant == 1);

  CHECK_THROWS_AS(parseEquationText("x + y"), ParseError);
  CHECK_THROWS_AS(parseEquationText("x = y + z"), ParseError);
  CHECK_THROWS_AS(parseEquationText("E(3,0;1,1)"), ParseError);
}

TEST_CASE("report JSON is schema-stable") {
  VerificationReport rep;
  rep.partition.assumptionsSatisfiable = {"assumptions satisfiable", Verdict3::Proven, "", {{"a", 7}}, 0.1};
  CaseReport cr;
  cr.descriptor.label = "red[0,0,0]";
  cr.status = SolverStatus::Unsat;
  cr.seconds = 0.5;
  rep.cases.push_back(cr);
  rep.passed = false;
  rep.claimedBound = parseExpr("a^3+1");

  ColoringSpec spec;
  spec.name = "test";
  spec.equation.lhsCoeffs = {parseExpr("a"), parseExpr("1")};
  spec.equation.rhsCoeff = parseExpr("1");
  spec.domainBound = parseExpr("a^3");

  json j = toJson(rep, spec);
  CHECK(j.contains("partition"));
  CHECK(j.contains("cases"));
  CHECK(j["cases"][0]["status"] == "unsat");
  CHECK(j["passed"] == false);
  std::string text = renderReportText(rep, spec);
  CHECK(text.find("NOT VERIFIED") != std::string::npos);
}
