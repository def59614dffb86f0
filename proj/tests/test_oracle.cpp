#include <catch2/catch_amalgamated.hpp>

#include "rado/oracle.hpp"

using namespace rado;

TEST_CASE("checkColoringConcrete finds monochromatic solutions") {
  LinearEquation schur({1, 1}, 1);
  std::vector<Int> allSame(6, 0);  // [1,5] all color 0
  auto bad = oracle::checkColoringConcrete(allSame, schur);
  REQUIRE(!bad.empty());
  bool has112 = false;
  for (const auto& s : bad)
    if (s == std::vector<Int>{1, 1, 2}) has112 = true;
  CHECK(has112);

  // The classic Schur 2-coloring of [1,4]: {1,4} vs {2,3}.
  std::vector<Int> schur4 = {-1, 0, 1, 1, 0};
  CHECK(oracle::checkColoringConcrete(schur4, schur).empty());
}

TEST_CASE("bruteRado small values") {
  LinearEquation schur({1, 1}, 1);
  // 2-color Schur: R = 5.
  auto r = oracle::bruteRado(schur, 2, 10);
  REQUIRE(r.has_value());
  CHECK(*r == 5);

  // x + y = 2z with the trivial solution x=y=z=1: R = 1 for any k.
  LinearEquation dbl({1, 1}, 2);
  auto r1 = oracle::bruteRado(dbl, 3, 4);
  REQUIRE(r1.has_value());
  CHECK(*r1 == 1);

  // 3-color Schur: R_3 = 14.
  auto r3 = oracle::bruteRado(schur, 3, 14);
  REQUIRE(r3.has_value());
  CHECK(*r3 == 14);

  // Cap exceeded.
  CHECK_FALSE(oracle::bruteRado(schur, 3, 5).has_value());
}

TEST_CASE("colorableAt agrees with bruteRado boundary") {
  LinearEquation schur({1, 1}, 1);
  CHECK(oracle::colorableAt(schur, 3, 13));
  CHECK_FALSE(oracle::colorableAt(schur, 3, 14));

  LinearEquation e211({2, 1}, 1);
  CHECK(oracle::colorableAt(e211, 2, 10));  // R_2(E(3,0;2,1,1)) = 11
  CHECK_FALSE(oracle::colorableAt(e211, 2, 11));
}
