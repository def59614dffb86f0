#pragma once

// Brute-force ground truth, kept independent of the SAT encoding and the
// extended-Euclid enumeration: solutions come from plain nested loops and
// colorings are searched by backtracking.

#include <optional>
#include <vector>

#include "rado/diophantine.hpp"

namespace rado {
namespace oracle {

// Every monochromatic solution of the equation under the coloring
// c[1..n] (index 0 unused).  Nested loops over the lhs variables.
inline std::vector<std::vector<Int>> checkColoringConcrete(const std::vector<Int>& coloring,
                                                           const LinearEquation& eq) {
  Int n = static_cast<Int>(coloring.size()) - 1;
  std::vector<std::vector<Int>> bad;
  size_t m1 = eq.lhsCoeffs.size();
  std::vector<Int> x(m1, 1);
  if (n < 1) return bad;
  while (true) {
    Int lhs = eq.constant;
    for (size_t i = 0; i < m1; ++i) lhs += eq.lhsCoeffs[i] * x[i];
    if (lhs % eq.rhsCoeff == 0) {
      Int z = lhs / eq.rhsCoeff;
      if (z >= 1 && z <= n) {
        bool mono = true;
        for (size_t i = 0; i + 1 < m1 && mono; ++i) mono = coloring[x[i]] == coloring[x[i + 1]];
        mono = mono && coloring[x[0]] == coloring[z];
        if (mono) {
          std::vector<Int> sol(x);
          sol.push_back(z);
          bad.push_back(std::move(sol));
        }
      }
    }
    size_t i = 0;
    while (i < m1 && ++x[i] > n) x[i++] = 1;
    if (i == m1) break;
  }
  return bad;
}

namespace detail {

// Is there a k-coloring of [1,n] avoiding monochromatic solutions?
// Backtracking with forward checking: when integer t receives a color, only
// solutions whose maximum entry is t need rechecking.
inline bool colorable(const LinearEquation& eq, Int k, Int n, std::vector<Int>& color) {
  Int t = static_cast<Int>(color.size()) + 1;  // the integer being colored
  if (t > n) return true;
  size_t m1 = eq.lhsCoeffs.size();
  // Color symmetry: integer 1 gets color 0; first unseen color only +1 deep.
  Int maxUsed = -1;
  for (Int c : color) maxUsed = std::max(maxUsed, c);
  Int limit = std::min<Int>(k - 1, maxUsed + 1);
  for (Int c = 0; c <= limit; ++c) {
    color.push_back(c);
    bool ok = true;
    // Check solutions with max entry == t, all entries colored c.
    std::vector<Int> x(m1, 1);
    while (ok) {
      Int mx = 0;
      for (Int v : x) mx = std::max(mx, v);
      if (mx <= t) {
        Int lhs = eq.constant;
        for (size_t i = 0; i < m1; ++i) lhs += eq.lhsCoeffs[i] * x[i];
        if (lhs % eq.rhsCoeff == 0) {
          Int z = lhs / eq.rhsCoeff;
          if (z >= 1 && z <= t && std::max(mx, z) == t) {
            bool mono = color[z - 1] == c;
            for (size_t i = 0; i < m1 && mono; ++i) mono = color[x[i] - 1] == c;
            if (mono) ok = false;
          }
        }
      }
      size_t i = 0;
      while (i < m1 && ++x[i] > t) x[i++] = 1;
      if (i == m1) break;
    }
    if (ok && colorable(eq, k, n, color)) return true;
    color.pop_back();
  }
  return false;
}

}  // namespace detail

// Smallest n such that every k-coloring of [1,n] has a monochromatic
// solution; nullopt when the search exceeds the cap.
inline std::optional<Int> bruteRado(const LinearEquation& eq, Int k, Int nCap) {
  for (Int n = 1; n <= nCap; ++n) {
    std::vector<Int> color;
    if (!detail::colorable(eq, k, n, color)) return n;
  }
  return std::nullopt;
}

// Is [1,n] colorable with k colors avoiding the equation?
inline bool colorableAt(const LinearEquation& eq, Int k, Int n) {
  std::vector<Int> color;
  return detail::colorable(eq, k, n, color);
}

}  // namespace oracle
}  // namespace rado
