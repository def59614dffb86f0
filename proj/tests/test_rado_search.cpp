#include <catch2/catch_amalgamated.hpp>

#include "rado/oracle.hpp"
#include "rado/rado_search.hpp"
#include "test_paths.hpp"

using namespace rado;

namespace {

SatSolverConfig liveSat(double timeout = 120) {
  SatSolverConfig cfg;
  const char* env = std::getenv("RADO_SAT_COMMAND");
  cfg.command = env ? env : std::string("node ") + RADO_SOLVER_DIR + "/z3dimacs.js {cnf}";
  cfg.timeoutSeconds = timeout;
  return cfg;
}

}  // namespace

TEST_CASE("regularity check") {
  // Schur's equation: subset {1, -1} sums to zero.
  auto r = regularityCheck(LinearEquation({1, 1}, 1));
  CHECK(r.regular);
  CHECK(r.homogeneous);

  // a*x + b*y = b*z: {b, -b} cancels for any coefficients.
  for (Int a = 1; a <= 5; ++a)
    for (Int b = 1; b <= 5; ++b) CHECK(regularityCheck(LinearEquation({a, b}, b)).regular);

  // 2x + 2y = z: subsets of {2, 2, -1} never sum to zero.
  auto nr = regularityCheck(LinearEquation({2, 2}, 1));
  CHECK_FALSE(nr.regular);
  CHECK(nr.zeroSubset.empty());

  // Nonhomogeneous: x + y + c = z has signed sum 1, ratio -c... regular for
  // c <= 0 shape; with c = 3: coefficients (1,1,-1) sum 1, constant -3, so
  // c/s = -3 with regular homogeneous part: regular.
  auto nh = regularityCheck(LinearEquation({1, 1}, 1, 3));
  CHECK(nh.regular);
  CHECK_FALSE(nh.homogeneous);
}

TEST_CASE("live: solveAt boundary for Schur 3 colors") {
  LinearEquation schur({1, 1}, 1);
  auto cfg = liveSat();
  auto sat = solveAt(schur, 3, 13, cfg);
  REQUIRE(sat.status == SolverStatus::Sat);
  CHECK(oracle::checkColoringConcrete(sat.coloring, schur).empty());

  auto unsat = solveAt(schur, 3, 14, cfg);
  CHECK(unsat.status == SolverStatus::Unsat);

  // Trivial n below the first solution: satisfiable.
  auto tiny = solveAt(LinearEquation({3, 3}, 1), 3, 4, cfg);
  CHECK(tiny.status == SolverStatus::Sat);
}

TEST_CASE("live: computeRado strategies agree") {
  LinearEquation schur({1, 1}, 1);
  auto cfg = liveSat();
  auto lin = computeRado(schur, 3, SearchStrategy::Linear, 100, cfg);
  auto geo = computeRado(schur, 3, SearchStrategy::Geometric, 100, cfg);
  REQUIRE(lin.kind == RadoResult::Kind::Value);
  REQUIRE(geo.kind == RadoResult::Kind::Value);
  CHECK(lin.value == 14);
  CHECK(geo.value == lin.value);

  // Monotone probe structure in the geometric search: every Sat probe below
  // every Unsat probe.
  Int maxSat = 0, minUnsat = 1 << 20;
  for (const auto& p : geo.probes) {
    if (p.status == SolverStatus::Sat) maxSat = std::max(maxSat, p.n);
    if (p.status == SolverStatus::Unsat) minUnsat = std::min(minUnsat, p.n);
  }
  CHECK(maxSat < minUnsat);
  CHECK(minUnsat == geo.value);
}

TEST_CASE("live: SAT verdicts agree with the backtracking oracle") {
  auto cfg = liveSat();
  for (auto [a, b, c] : {std::array<Int, 3>{1, 1, 1}, {2, 1, 1}, {1, 1, 2}, {2, 2, 3}}) {
    LinearEquation eq({a, b}, c);
    for (Int k = 2; k <= 3; ++k) {
      for (Int n : {3, 6, 9, 12}) {
        bool oracleSays = oracle::colorableAt(eq, k, n);
        auto solver = solveAt(eq, k, n, cfg);
        REQUIRE(solver.status != SolverStatus::Timeout);
        CHECK((solver.status == SolverStatus::Sat) == oracleSays);
      }
    }
  }
}

TEST_CASE("live: symmetry breaking preserves satisfiability") {
  auto cfg = liveSat();
  for (auto [a, b, c] : {std::array<Int, 3>{1, 1, 1}, {3, 2, 2}, {1, 1, 3}}) {
    LinearEquation eq({a, b}, c);
    for (Int n = 2; n <= 10; n += 2) {
      auto with = solveAt(eq, 3, n, cfg, true);
      auto without = solveAt(eq, 3, n, cfg, false);
      CHECK(with.status == without.status);
    }
  }
}
