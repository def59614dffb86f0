#pragma once

// CNF encoding of "there is a k-coloring of [1,n] with no monochromatic
// solution of the equation", with color-symmetry breaking bounded by the
// 1-color threshold, and DIMACS serialization.

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rado/diophantine.hpp"

namespace rado {

struct CnfInstance {
  Int n = 0;
  Int k = 0;
  std::vector<std::vector<Int>> clauses;

  Int numVars() const { return n * k; }
  // Variable layout: id = (j-1)*k + 1 + i for color i in [0,k), integer j in [1,n].
  Int varIndex(Int color, Int j) const { return (j - 1) * k + 1 + color; }
};

struct InvalidModel : std::runtime_error {
  explicit InvalidModel(const std::string& m) : std::runtime_error("invalid model: " + m) {}
};
struct Unbounded : std::runtime_error {
  explicit Unbounded(const std::string& m) : std::runtime_error(m) {}
};

// The 1-color threshold R_1(E): the least n such that [1,n] contains a
// solution.  Closed forms cover the coprime shapes; anything else falls back
// to incremental counting.
inline Int r1Value(const LinearEquation& eq, Int cap = 1 << 20) {
  if (eq.numVars() == 3 && eq.constant == 0) {
    Int a1 = eq.lhsCoeffs[0], a2 = eq.lhsCoeffs[1], a3 = eq.rhsCoeff;
    if (a2 == a3 && std::gcd(a1, a2) == 1) {
      // a*x + b*y = b*z: minimal solution (b, 1, a+1).
      return std::max(a1 + 1, a2);
    }
    if (a1 == a2 && a3 == 1) return 2 * a1;
    if (a1 == a2 && a3 > 1 && std::gcd(a1, a3) == 1) {
      return std::max(a1, (a3 + 1) / 2);
    }
  }
  for (Int n = 1; n <= cap; ++n) {
    if (countSolutions(eq, n) >= 1) return n;
  }
  throw Unbounded("no solution found below cap; the equation may be 1-irregular");
}

inline CnfInstance encodeCnf(const LinearEquation& eq, Int n, Int k, bool symBreak = true) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  CnfInstance inst;
  inst.n = n;
  inst.k = k;

  // At least one color per integer.
  for (Int j = 1; j <= n; ++j) {
    std::vector<Int> cl;
    for (Int i = 0; i < k; ++i) cl.push_back(inst.varIndex(i, j));
    inst.clauses.push_back(std::move(cl));
  }
  // At most one color per integer.
  for (Int j = 1; j <= n; ++j)
    for (Int i1 = 0; i1 < k; ++i1)
      for (Int i2 = i1 + 1; i2 < k; ++i2)
        inst.clauses.push_back({-inst.varIndex(i1, j), -inst.varIndex(i2, j)});
  // No monochromatic solution; duplicate literals within a clause collapse.
  auto sols = enumerateSolutions(eq, n);
  for (Int i = 0; i < k; ++i) {
    for (const auto& s : sols) {
      std::vector<Int> lits;
      for (Int v : s) lits.push_back(-inst.varIndex(i, v));
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      inst.clauses.push_back(std::move(lits));
    }
  }
  // Colors appear in ascending first-use order: v_{0,1}, and color 2 cannot
  // immediately follow an all-color-0 prefix, for j up to R_1(E).
  if (symBreak) {
    inst.clauses.push_back({inst.varIndex(0, 1)});
    Int r1 = std::min<Int>(r1Value(eq), n);
    for (Int j = 2; j <= r1; ++j) {
      std::vector<Int> cl;
      for (Int i = 1; i < j; ++i) cl.push_back(-inst.varIndex(0, i));
      cl.push_back(-inst.varIndex(2, j));
      inst.clauses.push_back(std::move(cl));
    }
  }
  return inst;
}

inline std::string emitDimacs(const CnfInstance& inst) {
  std::ostringstream os;
  os << "p cnf " << inst.numVars() << " " << inst.clauses.size() << "\n";
  for (const auto& cl : inst.clauses) {
    for (Int lit : cl) os << lit << " ";
    os << "0\n";
  }
  return os.str();
}

inline CnfInstance parseDimacs(const std::string& text, Int n = 0, Int k = 0) {
  CnfInstance inst;
  inst.n = n;
  inst.k = k;
  std::istringstream is(text);
  std::string line;
  std::vector<Int> cur;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == 'p') continue;
    std::istringstream ls(line);
    Int lit;
    while (ls >> lit) {
      if (lit == 0) {
        inst.clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(lit);
      }
    }
  }
  return inst;
}

// Decode a satisfying assignment into a coloring c[1..n]; the returned
// vector is 1-indexed (c[0] unused).  Requires exactly one color per value.
inline std::vector<Int> decodeCertificate(const CnfInstance& inst, const std::vector<bool>& model) {
  if (static_cast<Int>(model.size()) < inst.numVars() + 1)
    throw InvalidModel("model does not assign all variables");
  std::vector<Int> coloring(inst.n + 1, -1);
  for (Int j = 1; j <= inst.n; ++j) {
    for (Int i = 0; i < inst.k; ++i) {
      if (model[inst.varIndex(i, j)]) {
        if (coloring[j] != -1) throw InvalidModel("two colors on " + std::to_string(j));
        coloring[j] = i;
      }
    }
    if (coloring[j] == -1) throw InvalidModel("no color on " + std::to_string(j));
  }
  return coloring;
}

}  // namespace rado
