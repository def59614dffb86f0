#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rado/symexpr.hpp"

using namespace rado;

namespace {

SymExpr a() { return SymExpr::symbol("a"); }
SymExpr b() { return SymExpr::symbol("b"); }

// Random expression trees over {a, b} for round-trip properties.
SymExpr randomExpr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0: return SymExpr::constant(std::uniform_int_distribution<Int>(-9, 9)(rng));
    case 1: return std::uniform_int_distribution<int>(0, 1)(rng) ? a() : b();
    case 2:
    case 3: {
      std::vector<SymExpr> args;
      int n = std::uniform_int_distribution<int>(2, 3)(rng);
      for (int i = 0; i < n; ++i) args.push_back(randomExpr(rng, depth - 1));
      return pick(rng) % 2 ? SymExpr::sum(args) : SymExpr::product(args);
    }
    case 4: return SymExpr::pow(randomExpr(rng, depth - 1), std::uniform_int_distribution<Int>(0, 2)(rng));
    case 5: {
      // Keep denominators nonzero on the sampled domain: 1 + square.
      SymExpr d = SymExpr::pow(randomExpr(rng, depth - 1), 2) + 1;
      return SymExpr::floorDiv(randomExpr(rng, depth - 1), d);
    }
    default: return SymExpr::lcmOf({randomExpr(rng, depth - 1) * randomExpr(rng, depth - 1) + 1,
                                    SymExpr::constant(std::uniform_int_distribution<Int>(1, 6)(rng))});
  }
}

}  // namespace

TEST_CASE("eval basics") {
  SymExpr e = parseExpr("a^3 + 5*a^2 + 7*a");
  CHECK(e.eval({{"a", 4}}) == 172);
  CHECK(parseExpr("a").eval({{"a", -3}}) == -3);
  CHECK(parseExpr("floor(-1, 3)").eval({}) == -1);
  CHECK(parseExpr("floor(7, 2)").eval({}) == 3);
  CHECK(parseExpr("floor(-7, 2)").eval({}) == -4);
  CHECK(parseExpr("lcm(4, 6)").eval({}) == 12);
  CHECK_THROWS_AS(parseExpr("floor(1, a)").eval({{"a", 0}}), DivisionUndefined);
  CHECK_THROWS_AS(parseExpr("a + c").eval({{"a", 1}}), UnboundSymbol);
}

TEST_CASE("substitute") {
  SymExpr e = parseExpr("a^3 + 5*a^2 + 7*a");
  SymExpr r = e.substitute({{"a", 4}});
  REQUIRE(r.kind() == ExprKind::Constant);
  CHECK(r.value() == 172);

  CHECK(a().substitute({}).structurallyEqual(a()));

  SymExpr l = parseExpr("lcm(b, b^2)");
  CHECK(l.substitute({{"b", 3}}).value() == 9);

  // Partial bindings leave free symbols intact.
  SymExpr p = parseExpr("a*b + b").substitute({{"a", 2}});
  CHECK(p.eval({{"b", 5}}) == 15);
}

TEST_CASE("simplify collects and expands polynomials") {
  AssumptionSet asm_;
  SymExpr e = parseExpr("2*a*(a+1) + a*(a^2 + 3*a + 1) + 4*a");
  SymExpr s = simplify(e, asm_);
  CHECK(s.structurallyEqual(simplify(parseExpr("a^3 + 5*a^2 + 7*a"), asm_)));
  CHECK(s.toString() == "a^3 + 5*a^2 + 7*a");

  CHECK(simplify(parseExpr("x + 0"), asm_).structurallyEqual(SymExpr::symbol("x")));
  CHECK(simplify(parseExpr("(a+1)*(a-1)"), asm_).toString() == "a^2 - 1");

  // The derived example: evaluate both sides over a grid.
  for (Int v = -3; v <= 3; ++v) {
    CHECK(parseExpr("(a+1)*(a-1)").eval({{"a", v}}) == parseExpr("a^2-1").eval({{"a", v}}));
  }
}

TEST_CASE("simplify is idempotent and value-preserving on random trees") {
  std::mt19937 rng(12345);
  AssumptionSet asm_;
  asm_.setLowerBound("a", -6);
  asm_.setLowerBound("b", -6);
  int checked = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    SymExpr e = randomExpr(rng, 6);
    SymExpr s1, s2;
    try {
      s1 = simplify(e, asm_);
      s2 = simplify(s1, asm_);
    } catch (const OverflowError&) {
      continue;
    }
    CHECK(s1.structurallyEqual(s2));
    for (Int va = -6; va <= 6; va += 3) {
      for (Int vb = -6; vb <= 6; vb += 4) {
        Bindings bind{{"a", va}, {"b", vb}};
        Int v0, v1;
        try {
          v0 = e.eval(bind);
          v1 = s1.eval(bind);
        } catch (const std::exception&) {
          continue;
        }
        ++checked;
        REQUIRE(v0 == v1);
      }
    }
  }
  CHECK(checked > 2000);
}

TEST_CASE("floorSimplify paper rules") {
  AssumptionSet asm1;
  asm1.setLowerBound("a", 1);
  auto r = floorSimplify(parseExpr("-1"), a(), asm1);
  CHECK(r.status == FloorStatus::ConstantRule);
  CHECK(r.expr.isConstant(-1));

  AssumptionSet asm2;
  asm2.setLowerBound("a", 2);
  r = floorSimplify(parseExpr("a^2+1"), parseExpr("a^3"), asm2);
  CHECK(r.status == FloorStatus::ConstantRule);
  CHECK(r.expr.isConstant(0));

  r = floorSimplify(parseExpr("a^2"), a(), AssumptionSet{});
  CHECK(r.status == FloorStatus::ExactQuotient);
  CHECK(r.expr.structurallyEqual(a()));

  // floor((a+1)/a) = 1 needs a >= 2 (the value is 2 at a = 1); the guard
  // refuses both the unbounded case and the too-weak bound a >= 1.
  AssumptionSet none;
  r = floorSimplify(parseExpr("a+1"), a(), none);
  CHECK(r.status == FloorStatus::Unchanged);
  r = floorSimplify(parseExpr("a+1"), a(), asm1);
  CHECK(r.status == FloorStatus::Unchanged);
  r = floorSimplify(parseExpr("a+1"), a(), asm2);
  CHECK(r.expr.isConstant(1));

  AssumptionSet asm3;
  asm3.setLowerBound("a", 3);
  r = floorSimplify(parseExpr("-(a+5)"), parseExpr("a^2"), asm3);
  CHECK(r.expr.isConstant(-1));

  // Quotient-with-remainder: floor((a^4+a^3-1)/a) = a^3+a^2-1 for a >= 1.
  r = floorSimplify(parseExpr("a^4+a^3-1"), a(), asm1);
  CHECK(r.expr.toString() == "a^3 + a^2 - 1");
  r = floorSimplify(parseExpr("a^4+a^3-1"), parseExpr("a^2"), asm1);
  CHECK(r.expr.toString() == "a^2 + a - 1");
}

TEST_CASE("floorSimplify never fires without a proven guard: sampling check") {
  AssumptionSet asm_;
  asm_.setLowerBound("a", 2);
  struct Case {
    const char* num;
    const char* den;
  } cases[] = {{"a^2+1", "a^3"}, {"-1", "a"}, {"a+1", "a"}, {"-(a+5)", "a^2"}, {"a^4+a^3-1", "a"}};
  for (const auto& c : cases) {
    auto r = floorSimplify(parseExpr(c.num), parseExpr(c.den), asm_);
    if (r.status == FloorStatus::Unchanged) continue;
    for (Int v = 2; v < 52; ++v) {
      Bindings bind{{"a", v}};
      CHECK(r.expr.eval(bind) == floorDivInt(parseExpr(c.num).eval(bind), parseExpr(c.den).eval(bind)));
    }
  }
}

TEST_CASE("floor with constant denominator under parity assumptions") {
  // (a-1)/2 for odd a is exact but has no integer-coefficient polynomial
  // form, so the node stays; exactness is recovered by the rational route.
  AssumptionSet odd;
  odd.setLowerBound("a", 7);
  odd.setParity("a", Parity::Odd);
  auto r = floorSimplify(parseExpr("a-1"), SymExpr::constant(2), odd);
  CHECK(r.status == FloorStatus::Unchanged);
  auto rf = exactRationalForm(SymExpr::floorDiv(parseExpr("a-1"), SymExpr::constant(2)), odd);
  REQUIRE(rf.has_value());
  auto doubled = *rf + *rf;
  auto ip = doubled.asIntegerPoly();
  REQUIRE(ip.has_value());
  CHECK(ip->toExpr().toString() == "a - 1");

  // Even numerator: floor((a^2+a)/2) collapses nowhere as a polynomial but
  // is absorbed exactly; floor(2*a, 2) does collapse.
  AssumptionSet plain;
  plain.setLowerBound("a", 7);
  auto r2 = floorSimplify(a(), SymExpr::constant(2), plain);
  CHECK(r2.status == FloorStatus::Unchanged);
  auto r3 = floorSimplify(parseExpr("2*a"), SymExpr::constant(2), plain);
  CHECK(r3.status == FloorStatus::ExactQuotient);
  CHECK(r3.expr.structurallyEqual(a()));
  CHECK_FALSE(exactRationalForm(SymExpr::floorDiv(a(), SymExpr::constant(2)), plain).has_value());
}

TEST_CASE("lcm simplification") {
  AssumptionSet asm_;
  asm_.setLowerBound("b", 1);
  SymExpr e = simplify(parseExpr("lcm(b, b^2)"), asm_);
  CHECK(e.toString() == "b^2");
  AssumptionSet pos;
  pos.setLowerBound("a", 1);
  CHECK(simplify(parseExpr("lcm(a)"), pos).structurallyEqual(a()));
  // Sign unknown: the node must stay, since lcm(e) = |e|.
  CHECK(simplify(parseExpr("lcm(a)"), AssumptionSet{}).kind() == ExprKind::Lcm);
  CHECK(simplify(parseExpr("lcm(2, 3)"), asm_).isConstant(6));
  // Opaque when no divisibility relation holds.
  SymExpr kept = simplify(parseExpr("lcm(a, b)"), asm_);
  CHECK(kept.kind() == ExprKind::Lcm);
}

TEST_CASE("proveEq polynomial routes") {
  AssumptionSet asm_;
  asm_.setLowerBound("a", 1);
  asm_.setLowerBound("b", 1);
  auto v = proveEqPolynomial(parseExpr("b*a"), parseExpr("a*(b-1) + a"), asm_);
  CHECK(v.verdict == Verdict3::Proven);

  AssumptionSet asm2;
  asm2.setLowerBound("a", 2);
  v = proveEqPolynomial(parseExpr("a^2"), parseExpr("a^3"), asm2);
  REQUIRE(v.verdict == Verdict3::Refuted);
  CHECK(v.counterexample.at("a") == 2);

  // Exact floor absorption: a(a+1)/2 written as floor((a^2+a)/2).
  v = proveEqPolynomial(parseExpr("floor(a^2+a, 2) + floor(a^2+a, 2)"), parseExpr("a^2+a"), asm_);
  CHECK(v.verdict == Verdict3::Proven);

  // Under oddness, (a-1)/2 + (a+1)/2 = a.
  AssumptionSet odd;
  odd.setLowerBound("a", 7);
  odd.setParity("a", Parity::Odd);
  v = proveEqPolynomial(parseExpr("floor(a-1, 2) + floor(a+1, 2)"), a(), odd);
  CHECK(v.verdict == Verdict3::Proven);
}

TEST_CASE("telescoping interval sizes sum to the span") {
  // Sizes of consecutive intervals [l_i, l_{i+1} - 1] sum to l_k - l_0.
  AssumptionSet asm_;
  asm_.setLowerBound("a", 1);
  const char* bounds[] = {"1",
                          "a+1",
                          "a^2+2*a+1",
                          "a^2+3*a+1",
                          "a^3+4*a^2+4*a+1",
                          "a^3+4*a^2+5*a+1",
                          "a^3+5*a^2+6*a+1",
                          "a^3+5*a^2+7*a+1"};
  std::vector<SymExpr> sizes;
  for (int i = 0; i + 1 < 8; ++i)
    sizes.push_back(parseExpr(bounds[i + 1]) - parseExpr(bounds[i]));
  auto v = proveEqPolynomial(SymExpr::sum(sizes), parseExpr("a^3+5*a^2+7*a"), asm_);
  CHECK(v.verdict == Verdict3::Proven);
  for (Int va = 1; va <= 10; ++va) {
    Int total = 0;
    for (const auto& s : sizes) total += s.eval({{"a", va}});
    CHECK(total == parseExpr("a^3+5*a^2+7*a").eval({{"a", va}}));
  }
}

TEST_CASE("assumption sets") {
  AssumptionSet asm_;
  asm_.setLowerBound("a", 7);
  asm_.setParity("a", Parity::Odd);
  asm_.setLowerBound("b", 3);
  asm_.setCoprime("a", "b");
  auto w = asm_.findWitness();
  REQUIRE(w.has_value());
  CHECK(asm_.satisfiedBy(*w));
  CHECK((*w)["a"] >= 7);
  CHECK((*w)["a"] % 2 == 1);

  CHECK_FALSE(asm_.satisfiedBy({{"a", 8}, {"b", 3}}));
  CHECK_FALSE(asm_.satisfiedBy({{"a", 9}, {"b", 3}}));
  CHECK(asm_.satisfiedBy({{"a", 7}, {"b", 3}}));

  // Relational constraint: a > b as a - b - 1 >= 0.
  AssumptionSet rel;
  rel.setLowerBound("a", 1);
  rel.setLowerBound("b", 3);
  rel.addConstraint(parseExpr("a - b - 1"));
  auto w2 = rel.findWitness();
  REQUIRE(w2.has_value());
  CHECK((*w2)["a"] > (*w2)["b"]);
}

TEST_CASE("nonnegativity proving by shifted coefficients") {
  AssumptionSet asm_;
  asm_.setLowerBound("a", 2);
  CHECK(provePolyNonnegative(*polyFromExpr(parseExpr("a^3 - a^2 - 2")), asm_));
  CHECK_FALSE(provePolyNonnegative(*polyFromExpr(parseExpr("a^2 - a^3")), asm_));

  AssumptionSet odd;
  odd.setLowerBound("a", 7);
  odd.setParity("a", Parity::Odd);
  // a^2 - 1 divisible by 2 only for odd a... (a^2-1)/2 - 3*a >= 0 for a >= 7.
  CHECK(provePolyNonnegative(*polyFromExpr(parseExpr("a^2 - 1 - 6*a + 35")), odd));
}

TEST_CASE("parser round trips through toString") {
  const char* samples[] = {"a^3 + 5*a^2 + 7*a", "floor(a^2+1, a^3)", "lcm(b, b^2, 6)",
                           "a*b - 3*b + 2", "-a + 4"};
  for (const char* s : samples) {
    SymExpr e = parseExpr(s);
    SymExpr re = parseExpr(e.toString());
    for (Int va = 1; va <= 5; ++va)
      for (Int vb = 1; vb <= 4; ++vb)
        CHECK(e.eval({{"a", va}, {"b", vb}}) == re.eval({{"a", va}, {"b", vb}}));
  }
  CHECK_THROWS_AS(parseExpr("a +"), ParseError);
  CHECK_THROWS_AS(parseExpr("floor(a)"), ParseError);
  CHECK_THROWS_AS(parseExpr("(a"), ParseError);
}
