#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rado/diophantine.hpp"

using namespace rado;

namespace {

// Independent oracle: plain triple loop.
std::vector<Triple> bruteTriples(const LinearEquation& eq, Int n) {
  std::vector<Triple> out;
  for (Int x = 1; x <= n; ++x)
    for (Int y = 1; y <= n; ++y)
      for (Int z = 1; z <= n; ++z)
        if (eq.satisfied({x, y, z})) out.push_back({x, y, z});
  return out;
}

}  // namespace

TEST_CASE("extendedGcd identity") {
  auto r = extendedGcd(4, 3);
  CHECK(r.g == 1);
  CHECK(4 * r.u + 3 * r.v == 1);

  r = extendedGcd(7, 8);
  CHECK(r.g == 1);
  CHECK(7 * r.u + 8 * r.v == 1);

  for (Int a = 1; a <= 12; ++a) {
    auto s = extendedGcd(a, a);
    CHECK(s.g == a);
    CHECK(a * s.u + a * s.v == a);
  }
  // Negative operands still give positive gcd.
  auto t = extendedGcd(-6, 4);
  CHECK(t.g == 2);
  CHECK(-6 * t.u + 4 * t.v == 2);
}

TEST_CASE("enumerateSolutions small cases") {
  LinearEquation schur({1, 1}, 1);
  auto sols = enumerateSolutions(schur, 4);
  std::vector<Triple> expected = {{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {2, 1, 3}, {2, 2, 4}, {3, 1, 4}};
  std::sort(expected.begin(), expected.end());
  CHECK(sols == expected);

  // 4x + 3y = 3z: x must be a multiple of 3.
  LinearEquation e433({4, 3}, 3);
  auto s2 = enumerateSolutions(e433, 10);
  std::vector<Triple> expected2;
  for (Int y = 1; y <= 6; ++y) expected2.push_back({3, y, y + 4});
  for (Int y = 1; y <= 2; ++y) expected2.push_back({6, y, y + 8});
  std::sort(expected2.begin(), expected2.end());
  CHECK(s2 == expected2);

  CHECK_THROWS_AS(enumerateSolutions(schur, 0), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random equations") {
  std::mt19937 rng(999);
  std::uniform_int_distribution<Int> coeff(1, 10), size(1, 60);
  for (int iter = 0; iter < 200; ++iter) {
    LinearEquation eq({coeff(rng), coeff(rng)}, coeff(rng));
    Int n = size(rng);
    auto fast = enumerateSolutions(eq, n);
    auto slow = bruteTriples(eq, n);
    REQUIRE(fast == slow);
    CHECK(countSolutions(eq, n) == static_cast<Int>(slow.size()));
  }
}

TEST_CASE("membership and dedup") {
  LinearEquation eq({2, 3}, 4);
  auto sols = enumerateSolutions(eq, 30);
  for (size_t i = 0; i < sols.size(); ++i) {
    CHECK(eq.satisfied({sols[i][0], sols[i][1], sols[i][2]}));
    for (Int v : sols[i]) {
      CHECK(v >= 1);
      CHECK(v <= 30);
    }
    if (i) CHECK(sols[i - 1] < sols[i]);
  }
}

TEST_CASE("countSolutions properties") {
  LinearEquation schur({1, 1}, 1);
  CHECK(countSolutions(schur, 4) == 6);
  CHECK(countSolutions(schur, 1) == 0);

  LinearEquation e778({7, 7}, 8);
  Int n = 56;
  CHECK(countSolutions(e778, n) == static_cast<Int>(bruteTriples(e778, n).size()));
  CHECK(countSolutions(e778, n) <= n * n);

  // Nonzero constant and the general Iverson path (m = 4).
  LinearEquation withConst({1, 1}, 1, 2);
  Int direct = 0;
  for (Int x = 1; x <= 9; ++x)
    for (Int y = 1; y <= 9; ++y)
      if (x + y + 2 <= 9) ++direct;
  CHECK(countSolutions(withConst, 9) == direct);

  LinearEquation four({1, 1, 1}, 2);
  Int brute4 = 0;
  for (Int x = 1; x <= 8; ++x)
    for (Int y = 1; y <= 8; ++y)
      for (Int z = 1; z <= 8; ++z)
        if ((x + y + z) % 2 == 0 && (x + y + z) / 2 <= 8) ++brute4;
  CHECK(countSolutions(four, 8) == brute4);
}
