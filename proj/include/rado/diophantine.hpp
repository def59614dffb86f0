#pragma once

// Enumeration and counting of positive solutions of linear equations
// a1*x1 + ... + a_{m-1}*x_{m-1} + c = a_m*x_m inside [1, n].

#include <array>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "rado/symexpr.hpp"

namespace rado {

struct LinearEquation {
  std::vector<Int> lhsCoeffs;  // a1 .. a_{m-1}, all >= 1
  Int rhsCoeff = 1;            // a_m >= 1
  Int constant = 0;            // c

  LinearEquation() = default;
  LinearEquation(std::vector<Int> lhs, Int rhs, Int c = 0)
      : lhsCoeffs(std::move(lhs)), rhsCoeff(rhs), constant(c) {
    if (lhsCoeffs.size() < 2) throw std::invalid_argument("equation needs at least 3 terms");
    for (Int a : lhsCoeffs)
      if (a < 1) throw std::invalid_argument("lhs coefficients must be positive");
    if (rhsCoeff < 1) throw std::invalid_argument("rhs coefficient must be positive");
  }

  size_t numVars() const { return lhsCoeffs.size() + 1; }

  bool satisfied(const std::vector<Int>& x) const {
    Int lhs = constant;
    for (size_t i = 0; i < lhsCoeffs.size(); ++i) lhs = checkedAdd(lhs, checkedMul(lhsCoeffs[i], x[i]));
    return lhs == checkedMul(rhsCoeff, x.back());
  }

  std::string toString() const {
    std::string s;
    const char* names3[] = {"x", "y", "z"};
    for (size_t i = 0; i < lhsCoeffs.size(); ++i) {
      if (i) s += " + ";
      s += std::to_string(lhsCoeffs[i]) + "*" +
           (numVars() == 3 ? names3[i] : "x" + std::to_string(i + 1));
    }
    if (constant != 0) s += " + " + std::to_string(constant);
    s += " = " + std::to_string(rhsCoeff) + "*" +
         (numVars() == 3 ? "z" : "x" + std::to_string(numVars()));
    return s;
  }
};

struct ExtendedGcd {
  Int g, u, v;  // a*u + b*v = g, g = gcd(a, b) > 0
};

inline ExtendedGcd extendedGcd(Int a, Int b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) undefined");
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_u - q * u;
    old_u = u;
    u = t;
    t = old_v - q * v;
    old_v = v;
    v = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

using Triple = std::array<Int, 3>;

namespace detail {

// All (u, v) in [1, n]^2 with alpha*u + beta*v = gamma, walked along the
// solution line from one extended-Euclid particular solution.
inline void solveTwoVar(Int alpha, Int beta, Int gamma, Int n, std::vector<std::pair<Int, Int>>& out) {
  auto [g, s, t] = extendedGcd(alpha, beta);
  if (gamma % g != 0) return;
  Int u0 = checkedMul(s, gamma / g);
  Int v0 = checkedMul(t, gamma / g);
  Int du = beta / g;   // u = u0 + du*k
  Int dv = -alpha / g;  // v = v0 + dv*k
  // k ranges forced by 1 <= u0 + du*k <= n and 1 <= v0 + dv*k <= n.
  auto ceilDiv = [](Int p, Int q) { return -floorDivInt(-p, q); };
  Int lo = std::numeric_limits<Int>::min() / 4, hi = std::numeric_limits<Int>::max() / 4;
  auto clamp = [&](Int base, Int step) {
    if (step == 0) {
      if (base < 1 || base > n) lo = 1, hi = 0;
      return;
    }
    // 1 - base <= step*k <= n - base
    Int kl = step > 0 ? ceilDiv(1 - base, step) : ceilDiv(n - base, step);
    Int kh = step > 0 ? floorDivInt(n - base, step) : floorDivInt(1 - base, step);
    lo = std::max(lo, kl);
    hi = std::min(hi, kh);
  };
  clamp(u0, du);
  clamp(v0, dv);
  for (Int k = lo; k <= hi; ++k) {
    Int u = u0 + du * k, v = v0 + dv * k;
    if (u >= 1 && u <= n && v >= 1 && v <= n) out.push_back({u, v});
  }
}

}  // namespace detail

// Exact solution set of a*x + b*y + c0 = c*z over [1, n]^3, via the
// three-sweep method: fix each variable in turn and solve the residual
// two-variable linear Diophantine equation.
inline std::vector<Triple> enumerateSolutions(const LinearEquation& eq, Int n) {
  if (eq.numVars() != 3) throw std::invalid_argument("enumerateSolutions expects a 3-variable equation");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  Int a = eq.lhsCoeffs[0], b = eq.lhsCoeffs[1], c = eq.rhsCoeff, c0 = eq.constant;
  std::set<Triple> found;
  std::vector<std::pair<Int, Int>> pairs;
  for (Int i = 1; i <= n; ++i) {
    // z = i: a*x + b*y = c*i - c0.
    pairs.clear();
    detail::solveTwoVar(a, b, checkedSub(checkedMul(c, i), c0), n, pairs);
    for (auto [x, y] : pairs) found.insert({x, y, i});
    // x = i: b*y - c*z = -a*i - c0.
    pairs.clear();
    detail::solveTwoVar(b, -c, checkedSub(checkedMul(-a, i), c0), n, pairs);
    for (auto [y, z] : pairs) found.insert({i, y, z});
    // y = i: a*x - c*z = -b*i - c0.
    pairs.clear();
    detail::solveTwoVar(a, -c, checkedSub(checkedMul(-b, i), c0), n, pairs);
    for (auto [x, z] : pairs) found.insert({x, i, z});
  }
  return {found.begin(), found.end()};
}

// Solution count; exact enumeration for 3-variable equations, Iverson-sum
// iteration over the first m-1 variables in general.
inline Int countSolutions(const LinearEquation& eq, Int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (eq.numVars() == 3) return static_cast<Int>(enumerateSolutions(eq, n).size());
  size_t m1 = eq.lhsCoeffs.size();
  std::vector<Int> x(m1, 1);
  Int count = 0;
  while (true) {
    Int lhs = eq.constant;
    for (size_t i = 0; i < m1; ++i) lhs = checkedAdd(lhs, checkedMul(eq.lhsCoeffs[i], x[i]));
    if (lhs % eq.rhsCoeff == 0) {
      Int z = lhs / eq.rhsCoeff;
      if (z >= 1 && z <= n) ++count;
    }
    size_t i = 0;
    while (i < m1 && ++x[i] > n) x[i++] = 1;
    if (i == m1) break;
  }
  return count;
}

}  // namespace rado
