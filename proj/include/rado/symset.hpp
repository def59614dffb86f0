#pragma once

// Symbolic subsets of an integer interval: interval sets with divisibility
// filters, format-expression sets with bounded index variables, symbolic
// cardinality via inclusion-exclusion and nested power-sum summation, and
// concrete instantiation.

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rado/constraint.hpp"
#include "rado/symexpr.hpp"

namespace rado {

struct IntervalSet {
  SymExpr lower, upper;
  std::vector<SymExpr> requiredDivisors;  // D
  std::vector<SymExpr> excludedDivisors;  // ND
};

enum class InjectivityStatus { Proven, Declared, Unknown, Refuted };

struct IndexVar {
  std::string name;
  SymExpr lower, upper;  // bounds may reference earlier index symbols
};

struct ResidueFilter {
  SymExpr divisor;  // parameter expression
  SymExpr expr;     // linear in index symbols
};

struct ExcludedElement {
  SymExpr expr;
  // Witness index assignment proving membership (index name -> parameter
  // expression); empty means the element must be proven a non-member.
  std::map<std::string, SymExpr> witness;
};

struct FormatSet {
  std::vector<IndexVar> indexVars;
  SymExpr formatExpr;
  std::vector<SymExpr> requiredDivisors;  // declared facts, verified elsewhere
  std::vector<SymExpr> excludedDivisors;
  std::optional<ResidueFilter> residueFilter;
  std::vector<ExcludedElement> excludedElements;
  InjectivityStatus injectivity = InjectivityStatus::Unknown;
};

using MemberSet = std::variant<IntervalSet, FormatSet>;

struct ColorClass {
  std::string name;
  std::vector<MemberSet> members;
};

struct SizeError : std::runtime_error {
  enum Kind { UnsimplifiableSize, InjectivityUnknown, ExclusionUndecided };
  Kind kind;
  SizeError(Kind k, const std::string& m) : std::runtime_error(m), kind(k) {}
};

// Proves nonnegativity of an expression over a box of index ranges; the
// default uses shifted-coefficient reasoning, the prover installs an
// SMT-backed one.
class BoxProver {
 public:
  virtual ~BoxProver() = default;
  virtual Verdict3 proveNonnegInBox(const SymExpr& e, const std::vector<IndexVar>& box,
                                    const AssumptionSet& asm_) const = 0;
};

class PolyBoxProver : public BoxProver {
 public:
  Verdict3 proveNonnegInBox(const SymExpr& e, const std::vector<IndexVar>& box,
                            const AssumptionSet& asm_) const override {
    AssumptionSet extended = asm_;
    for (const auto& iv : box) {
      // Only constant lower bounds strengthen the polynomial prover.
      auto lp = polyFromExpr(iv.lower);
      if (lp && lp->isConstant())
        extended.setLowerBound(iv.name, lp->constantValue());
      else
        extended.declare(iv.name);
    }
    // Exact rational forms reduce to an integer polynomial with a positive
    // denominator: floor((a+1)/2) >= 0 iff a+1 >= 0.
    if (auto rf = exactRationalForm(e, extended)) {
      auto [scaled, d] = rf->scaledToInteger();
      if (d >= 1 && provePolyNonnegative(scaled, extended)) return Verdict3::Proven;
    }
    auto p = polyFromExpr(e);
    if (p && provePolyNonnegative(*p, extended)) return Verdict3::Proven;
    return Verdict3::Unknown;
  }
};

inline const BoxProver& defaultBoxProver() {
  static PolyBoxProver p;
  return p;
}

namespace sumdetail {

// Power sums S_p(n) = sum_{u=0}^{n} u^p as rational polynomials in n,
// via Bernoulli numbers (B1 = +1/2 convention).
inline RationalPoly powerSum(Int p, const RationalPoly& n) {
  static const std::vector<Rational> bern = {
      {1, 1}, {1, 2}, {1, 6}, {0, 1}, {-1, 30}, {0, 1}, {1, 42}, {0, 1}, {-1, 30}, {0, 1}, {5, 66}};
  if (p + 1 >= static_cast<Int>(bern.size())) throw SizeError(SizeError::UnsimplifiableSize, "power sum degree too large");
  auto binom = [](Int n_, Int k_) {
    Int r = 1;
    for (Int i = 1; i <= k_; ++i) r = r * (n_ - i + 1) / i;
    return r;
  };
  RationalPoly out;
  for (Int j = 0; j <= p; ++j) {
    Rational coef = Rational(binom(p + 1, j), p + 1) * bern[j];
    if (coef.isZero()) continue;
    out += RationalPoly::constant(coef) * n.powed(p + 1 - j);
  }
  return out;
}

// Sum of a polynomial in u over u = lo..hi (valid whenever hi >= lo-1).
inline RationalPoly sumOverRange(const RationalPoly& poly, const std::string& u, const RationalPoly& lo,
                                 const RationalPoly& hi) {
  RationalPoly result;
  RationalPoly loMinus1 = lo - RationalPoly::constant(Rational(1));
  for (const auto& [m, c] : poly.terms()) {
    Int d = m.degreeIn(u);
    Monomial rest;
    for (const auto& [s, e] : m.factors)
      if (s != u) rest.factors.push_back({s, e});
    RationalPoly coef;
    coef.addTerm(rest, c);
    RationalPoly contrib = powerSum(d, hi) - powerSum(d, loMinus1);
    result += coef * contrib;
  }
  return result;
}

}  // namespace sumdetail

// ---------------------------------------------------------------------------
// Summation engine: rational polynomials over parameters, index symbols and
// opaque floor atoms floor(linear/const).
// ---------------------------------------------------------------------------

class SummationEngine {
 public:
  SummationEngine(const AssumptionSet& asm_, const BoxProver& box = defaultBoxProver())
      : asm_(asm_), box_(box) {}

  struct FloorAtom {
    Poly numerator;  // integer polynomial over params/indices/other atoms
    Int modulus;
  };

  // Count the format image: nested summation of 1 over the index ranges.
  // Requires per-level count nonnegativity proofs.
  SymExpr countImage(const FormatSet& fs) {
    std::vector<IndexVar> box = fs.indexVars;
    std::optional<ResidueFilter> filter = fs.residueFilter;
    if (filter) reparameterizeFilter(box, *filter);
    RationalPoly count = RationalPoly::constant(Rational(1));
    for (Int level = static_cast<Int>(box.size()) - 1; level >= 0; --level) {
      count = sumLevel(count, box, level);
    }
    SymExpr raw = emit(count);
    // Excluded elements with a membership witness subtract one each; the
    // witness (and non-membership of the others) is verified by the prover.
    Int excluded = 0;
    for (const auto& ee : fs.excludedElements)
      if (!ee.witness.empty()) ++excluded;
    if (excluded) raw = simplify(raw - SymExpr::constant(excluded), asm_);
    return raw;
  }

  // Exact rational form of an expression; floor(p/c) nodes become atoms
  // unless resolvable exactly under the assumptions.
  RationalPoly toSumPoly(const SymExpr& e) {
    switch (e.kind()) {
      case ExprKind::Constant: return RationalPoly::constant(Rational(e.value()));
      case ExprKind::Symbol: return RationalPoly::var(e.name());
      case ExprKind::Sum: {
        RationalPoly r;
        for (const auto& a : e.args()) r += toSumPoly(a);
        return r;
      }
      case ExprKind::Product: {
        RationalPoly r = RationalPoly::constant(Rational(1));
        for (const auto& a : e.args()) r = r * toSumPoly(a);
        return r;
      }
      case ExprKind::Power: return toSumPoly(e.args()[0]).powed(e.value());
      case ExprKind::FloorDiv: {
        RationalPoly num = toSumPoly(e.args()[0]);
        RationalPoly den = toSumPoly(e.args()[1]);
        auto dInt = den.asIntegerPoly();
        if (!dInt || !dInt->isConstant() || dInt->constantValue() < 1)
          throw SizeError(SizeError::UnsimplifiableSize,
                          "floor with non-constant denominator in summation: " + e.toString());
        Int c = dInt->constantValue();
        auto [scaled, d] = num.scaledToInteger();
        // Exact under assumptions?
        if (auto rho = polyConstResidueExt(scaled, d * c)) {
          RationalPoly r;
          Poly shifted = scaled - Poly::constant(*rho);
          for (const auto& [m, cc] : shifted.terms()) r.addTerm(m, Rational(cc, d * c));
          return r;
        }
        if (d != 1)
          throw SizeError(SizeError::UnsimplifiableSize, "floor of non-integer numerator: " + e.toString());
        return atomFor(scaled, c);
      }
      default:
        throw SizeError(SizeError::UnsimplifiableSize, "unsupported node in summation: " + e.toString());
    }
  }

  SymExpr emit(const RationalPoly& p) {
    // Replace atom symbols by floor expressions, then scale rationals into
    // an exact floor-division representation.
    auto [scaled, d] = p.scaledToInteger();
    SymExpr raw = polyToExprWithAtoms(scaled);
    if (d == 1) return raw;
    return SymExpr::floorDiv(raw, SymExpr::constant(d));
  }

  const AssumptionSet& assumptions() const { return asm_; }

 private:
  AssumptionSet asm_;
  const BoxProver& box_;
  std::vector<FloorAtom> atoms_;
  std::map<std::string, size_t> atomByKey_;

  RationalPoly atomFor(const Poly& numerator, Int modulus) {
    std::string key = numerator.toExpr().toString() + "/" + std::to_string(modulus);
    auto it = atomByKey_.find(key);
    size_t idx;
    if (it != atomByKey_.end()) {
      idx = it->second;
    } else {
      idx = atoms_.size();
      atoms_.push_back({numerator, modulus});
      atomByKey_[key] = idx;
    }
    return RationalPoly::var(atomName(idx));
  }
  static std::string atomName(size_t idx) { return "_fl" + std::to_string(idx); }
  std::optional<size_t> atomIndex(const std::string& name) const {
    if (name.rfind("_fl", 0) != 0) return std::nullopt;
    return std::stoul(name.substr(3));
  }

  // Residue analysis that treats atom symbols opaquely (they block the
  // analysis; only pure parameter/index polynomials resolve).
  std::optional<Int> polyConstResidueExt(const Poly& p, Int m) {
    for (const auto& s : p.symbols())
      if (atomIndex(s)) return std::nullopt;
    return polyConstResidue(p, m, asm_);
  }

  SymExpr polyToExprWithAtoms(const Poly& p) {
    SymExpr e = p.toExpr();
    // Repeated textual substitution is fragile; rebuild instead.
    std::function<SymExpr(const SymExpr&)> rebuild = [&](const SymExpr& x) -> SymExpr {
      if (x.kind() == ExprKind::Symbol) {
        if (auto idx = atomIndex(x.name())) {
          const FloorAtom& at = atoms_[*idx];
          return SymExpr::floorDiv(polyToExprWithAtoms(at.numerator), SymExpr::constant(at.modulus));
        }
        return x;
      }
      if (x.args().empty()) return x;
      std::vector<SymExpr> args;
      for (const auto& a : x.args()) args.push_back(rebuild(a));
      switch (x.kind()) {
        case ExprKind::Sum: return SymExpr::sum(std::move(args));
        case ExprKind::Product: return SymExpr::product(std::move(args));
        case ExprKind::Power: return SymExpr::pow(args[0], x.value());
        case ExprKind::FloorDiv: return SymExpr::floorDiv(args[0], args[1]);
        case ExprKind::Lcm: return SymExpr::lcmOf(std::move(args));
        default: return x;
      }
    };
    return rebuild(e);
  }

  // Eliminate a residue filter d | g(indices) by re-parameterizing an index
  // with unit coefficient in g.
  void reparameterizeFilter(std::vector<IndexVar>& box, const ResidueFilter& filter) {
    auto dp = polyFromExpr(filter.divisor);
    auto gp = polyFromExpr(filter.expr);
    if (!dp || !gp) throw SizeError(SizeError::UnsimplifiableSize, "unsupported residue filter");
    // Find an index with coefficient +-1 in g.
    for (size_t vi = box.size(); vi-- > 0;) {
      const std::string& v = box[vi].name;
      Poly coeff;
      bool linear = true;
      for (const auto& [m, c] : gp->terms()) {
        Int d = m.degreeIn(v);
        if (d == 0) continue;
        if (d > 1) linear = false;
        Monomial rest;
        for (const auto& [s, e] : m.factors)
          if (s != v) rest.factors.push_back({s, e});
        if (!rest.factors.empty()) linear = false;
        coeff.addTerm(Monomial::unit(), c);
      }
      if (!linear || !coeff.isConstant()) continue;
      Int cv = coeff.constantValue();
      if (cv != 1 && cv != -1) continue;
      // g = cv*v + rest; d | g  <=>  v = cv*(d*t - rest).
      Poly rest = gp->substituted(v, Poly::constant(0));
      SymExpr dE = filter.divisor;
      SymExpr restE = rest.toExpr();
      std::string t = "_rp_" + v;
      SymExpr vDef = SymExpr::constant(cv) * (SymExpr::symbol(t) * dE - restE);
      // New bounds for t: lower <= vDef <= upper.
      //   cv=+1: (lower + rest)/d <= t <= (upper + rest)/d
      //   cv=-1: (-upper + rest)/d <= t <= (-lower + rest)/d
      SymExpr loNum = (cv == 1) ? (box[vi].lower + restE) : (restE - box[vi].upper);
      SymExpr hiNum = (cv == 1) ? (box[vi].upper + restE) : (restE - box[vi].lower);
      SymExpr tLo = ceilDivExact(loNum, dE);
      SymExpr tHi = floorDivExact(hiNum, dE);
      // Later bounds may reference the re-parameterized index.
      for (size_t later = vi + 1; later < box.size(); ++later) {
        box[later].lower = substituteSymbol(box[later].lower, v, vDef);
        box[later].upper = substituteSymbol(box[later].upper, v, vDef);
      }
      box[vi] = IndexVar{t, tLo, tHi};
      return;
    }
    throw SizeError(SizeError::UnsimplifiableSize, "residue filter has no unit-coefficient index");
  }

  static SymExpr substituteSymbol(const SymExpr& e, const std::string& name, const SymExpr& repl) {
    if (e.kind() == ExprKind::Symbol) return e.name() == name ? repl : e;
    if (e.args().empty()) return e;
    std::vector<SymExpr> args;
    for (const auto& a : e.args()) args.push_back(substituteSymbol(a, name, repl));
    switch (e.kind()) {
      case ExprKind::Sum: return SymExpr::sum(std::move(args));
      case ExprKind::Product: return SymExpr::product(std::move(args));
      case ExprKind::Power: return SymExpr::pow(args[0], e.value());
      case ExprKind::FloorDiv: return SymExpr::floorDiv(args[0], args[1]);
      case ExprKind::Lcm: return SymExpr::lcmOf(std::move(args));
      default: return e;
    }
  }

  // Exact symbolic floor/ceil against a parameter expression; throws when
  // not resolvable (callers report UnsimplifiableSize).
  SymExpr floorDivExact(const SymExpr& num, const SymExpr& den) {
    FloorResult r = floorSimplify(num, den, asm_);
    if (r.status == FloorStatus::Unchanged) {
      // Constant denominator may still be exact-resolvable into a rational
      // form handled downstream.
      auto rf = exactRationalForm(SymExpr::floorDiv(num, den), asm_);
      if (rf) return emit(*rf);
      throw SizeError(SizeError::UnsimplifiableSize,
                      "cannot resolve floor(" + num.toString() + ", " + den.toString() + ")");
    }
    return r.expr;
  }
  SymExpr ceilDivExact(const SymExpr& num, const SymExpr& den) {
    // ceil(p/q) = floor((p + q - 1)/q) for q >= 1.
    return floorDivExact(num + den - SymExpr::constant(1), den);
  }

  // Sum the running count over index `level`, splitting by residues when
  // floor atoms mention the variable.
  RationalPoly sumLevel(const RationalPoly& count, const std::vector<IndexVar>& box, Int level) {
    const IndexVar& iv = box[static_cast<size_t>(level)];
    const std::string& v = iv.name;
    RationalPoly lo = toSumPoly(iv.lower);
    RationalPoly hi = toSumPoly(iv.upper);

    // Prove the count nonnegative over the enclosing box (required for the
    // closed form to equal the true count even when inner ranges are empty).
    std::vector<IndexVar> outer(box.begin(), box.begin() + static_cast<size_t>(level) + 1);
    SymExpr countE = emit(count);
    if (box_.proveNonnegInBox(countE, outer, asm_) != Verdict3::Proven)
      throw SizeError(SizeError::UnsimplifiableSize,
                      "cannot prove count nonnegative at level " + v + ": " + countE.toString());

    // Collect atom moduli mentioning v (in the count or in the bounds' atoms
    // -- bounds of the current variable cannot mention it).
    Int L = 1;
    for (size_t i = 0; i < atoms_.size(); ++i) {
      if (count.degreeIn(atomName(i)) > 0 && atoms_[i].numerator.degreeIn(v) > 0)
        L = std::lcm(L, atoms_[i].modulus);
    }
    if (L == 1) {
      // No floor atoms mention this variable: direct power-sum.
      return sumdetail::sumOverRange(count, v, lo, hi);
    }

    // Residue split: v = L*u + r for r in [0, L).
    RationalPoly total;
    for (Int r = 0; r < L; ++r) {
      RationalPoly branch = substituteResidue(count, v, L, r);
      // u-range: ceil((lo - r)/L) .. floor((hi - r)/L).
      RationalPoly uLo = exactCeil(lo - RationalPoly::constant(Rational(r)), L);
      RationalPoly uHi = exactFloor(hi - RationalPoly::constant(Rational(r)), L);
      // Nonnegativity of the branch count: (uHi - uLo + 1) can dip to zero;
      // sumOverRange handles hi = lo - 1 exactly, but must not go below.
      SymExpr widthE = emit(uHi - uLo + RationalPoly::constant(Rational(1)));
      std::vector<IndexVar> enclosing(box.begin(), box.begin() + static_cast<size_t>(level));
      if (box_.proveNonnegInBox(widthE, enclosing, asm_) != Verdict3::Proven)
        throw SizeError(SizeError::UnsimplifiableSize,
                        "cannot prove residue branch nonempty-or-empty: " + widthE.toString());
      total += sumdetail::sumOverRange(branch, "_u", uLo, uHi);
    }
    return total;
  }

  // Substitute v = L*u + r into a sum-poly, resolving atoms of v.
  RationalPoly substituteResidue(const RationalPoly& p, const std::string& v, Int L, Int r) {
    // First resolve atoms mentioning v.
    RationalPoly cur = p;
    size_t atomCount = atoms_.size();
    for (size_t i = 0; i < atomCount; ++i) {
      if (cur.degreeIn(atomName(i)) == 0) continue;
      const FloorAtom at = atoms_[i];  // by value: atomFor may grow atoms_
      if (at.numerator.degreeIn(v) == 0) continue;
      // atom = floor((alpha*v + beta)/c) with v = L*u + r:
      //   alpha*L*u/c must be integral; remainder floor((alpha*r + beta)/c).
      Poly alpha, beta;
      for (const auto& [m, c] : at.numerator.terms()) {
        Int d = m.degreeIn(v);
        if (d == 0) {
          beta.addTerm(m, c);
        } else if (d == 1) {
          Monomial rest;
          for (const auto& [s, e] : m.factors)
            if (s != v) rest.factors.push_back({s, e});
          alpha.addTerm(rest, c);
        } else {
          throw SizeError(SizeError::UnsimplifiableSize, "nonlinear index inside floor");
        }
      }
      if (!alpha.isConstant())
        throw SizeError(SizeError::UnsimplifiableSize, "non-constant index coefficient inside floor");
      Int ac = alpha.constantValue();
      if ((ac * L) % at.modulus != 0)
        throw SizeError(SizeError::UnsimplifiableSize, "residue split does not clear the floor");
      Poly inner = beta + Poly::constant(ac * r);
      // floor(inner/c) + (ac*L/c)*u
      RationalPoly replacement;
      auto rho = polyConstResidueExt(inner, at.modulus);
      if (rho) {
        Poly shifted = inner - Poly::constant(*rho);
        for (const auto& [m, c] : shifted.terms()) replacement.addTerm(m, Rational(c, at.modulus));
      } else {
        replacement = atomFor(inner, at.modulus);
      }
      replacement += RationalPoly::constant(Rational(ac * L / at.modulus, 1)) * RationalPoly::var("_u");
      cur = cur.substituted(atomName(i), replacement);
    }
    // Then the plain occurrences of v.
    RationalPoly vRepl = RationalPoly::constant(Rational(L)) * RationalPoly::var("_u") +
                         RationalPoly::constant(Rational(r));
    return cur.substituted(v, vRepl);
  }

  // Exact (p - rho)/L when p has constant residue rho mod L; atoms block it.
  RationalPoly exactFloor(const RationalPoly& p, Int L) {
    auto [scaled, d] = p.scaledToInteger();
    if (auto rho = polyConstResidueExt(scaled, d * L)) {
      RationalPoly out;
      Poly shifted = scaled - Poly::constant(*rho);
      for (const auto& [m, c] : shifted.terms()) out.addTerm(m, Rational(c, d * L));
      return out;
    }
    throw SizeError(SizeError::UnsimplifiableSize, "range endpoint floor not exact");
  }
  RationalPoly exactCeil(const RationalPoly& p, Int L) {
    return exactFloor(p + RationalPoly::constant(Rational(L - 1)), L);
  }
};

// ---------------------------------------------------------------------------
// Size computation
// ---------------------------------------------------------------------------

struct SizeResult {
  SymExpr size;
  bool nonnegativeProven = false;
};

inline SymExpr sizeOfInterval(const IntervalSet& s, const AssumptionSet& asm_,
                              const GuardProver& guard = defaultGuardProver()) {
  const auto& nd = s.excludedDivisors;
  if (nd.size() > 16) throw SizeError(SizeError::UnsimplifiableSize, "too many excluded divisors");
  std::vector<SymExpr> parts;
  for (size_t mask = 0; mask < (size_t{1} << nd.size()); ++mask) {
    std::vector<SymExpr> divs = s.requiredDivisors;
    for (size_t i = 0; i < nd.size(); ++i)
      if (mask & (size_t{1} << i)) divs.push_back(nd[i]);
    SymExpr lcm = simplify(SymExpr::lcmOf(divs), asm_, guard);
    SymExpr hiTerm = SymExpr::floorDiv(s.upper, lcm);
    SymExpr loTerm = SymExpr::floorDiv(s.lower - 1, lcm);
    SymExpr term = hiTerm - loTerm;
    bool negative = __builtin_popcountll(mask) % 2 == 1;
    parts.push_back(negative ? -term : term);
  }
  SymExpr total = simplify(SymExpr::sum(std::move(parts)), asm_, guard);
  return total;
}

inline SymExpr sizeOfFormat(const FormatSet& s, const AssumptionSet& asm_,
                            const BoxProver& box = defaultBoxProver()) {
  if (s.injectivity != InjectivityStatus::Proven && s.injectivity != InjectivityStatus::Declared)
    throw SizeError(SizeError::InjectivityUnknown, "format size requires injectivity Proven or Declared");
  SummationEngine engine(asm_, box);
  return engine.countImage(s);
}

inline SymExpr sizeOf(const MemberSet& s, const AssumptionSet& asm_,
                      const GuardProver& guard = defaultGuardProver(),
                      const BoxProver& box = defaultBoxProver()) {
  if (std::holds_alternative<IntervalSet>(s)) return sizeOfInterval(std::get<IntervalSet>(s), asm_, guard);
  return sizeOfFormat(std::get<FormatSet>(s), asm_, box);
}

// ---------------------------------------------------------------------------
// Membership constraints
// ---------------------------------------------------------------------------

// Conjunction of atoms characterizing "v in s"; format index symbols are
// renamed with the given fresh prefix so constraints never collide.
inline Constraint membershipConstraints(const MemberSet& s, const SymExpr& v,
                                        const std::string& freshPrefix) {
  std::vector<Constraint> atoms;
  if (std::holds_alternative<IntervalSet>(s)) {
    const auto& is = std::get<IntervalSet>(s);
    atoms.push_back(Constraint::ge(v, is.lower));
    atoms.push_back(Constraint::le(v, is.upper));
    for (const auto& d : is.requiredDivisors) atoms.push_back(Constraint::divides(d, v));
    for (const auto& d : is.excludedDivisors) atoms.push_back(Constraint::notDivides(d, v));
    return Constraint::conj(std::move(atoms));
  }
  const auto& fs = std::get<FormatSet>(s);
  auto rename = [&](const SymExpr& e) {
    SymExpr cur = e;
    for (const auto& iv : fs.indexVars) {
      // Textual symbol substitution by rebuilding.
      std::function<SymExpr(const SymExpr&)> rec = [&](const SymExpr& x) -> SymExpr {
        if (x.kind() == ExprKind::Symbol)
          return x.name() == iv.name ? SymExpr::symbol(freshPrefix + iv.name) : x;
        if (x.args().empty()) return x;
        std::vector<SymExpr> args;
        for (const auto& a : x.args()) args.push_back(rec(a));
        switch (x.kind()) {
          case ExprKind::Sum: return SymExpr::sum(std::move(args));
          case ExprKind::Product: return SymExpr::product(std::move(args));
          case ExprKind::Power: return SymExpr::pow(args[0], x.value());
          case ExprKind::FloorDiv: return SymExpr::floorDiv(args[0], args[1]);
          case ExprKind::Lcm: return SymExpr::lcmOf(std::move(args));
          default: return x;
        }
      };
      cur = rec(cur);
    }
    return cur;
  };
  atoms.push_back(Constraint::eq(v, rename(fs.formatExpr)));
  for (const auto& iv : fs.indexVars) {
    SymExpr ivSym = SymExpr::symbol(freshPrefix + iv.name);
    atoms.push_back(Constraint::ge(ivSym, rename(iv.lower)));
    atoms.push_back(Constraint::le(ivSym, rename(iv.upper)));
  }
  if (fs.residueFilter)
    atoms.push_back(Constraint::divides(fs.residueFilter->divisor, rename(fs.residueFilter->expr)));
  for (const auto& d : fs.requiredDivisors) atoms.push_back(Constraint::divides(d, v));
  for (const auto& d : fs.excludedDivisors) atoms.push_back(Constraint::notDivides(d, v));
  for (const auto& ee : fs.excludedElements) atoms.push_back(Constraint::ne(v, ee.expr));
  return Constraint::conj(std::move(atoms));
}

// Declared divisor facts of a format set that must be verified before the
// set participates in a proof: each is implied by format + ranges.
inline std::vector<Constraint> factObligations(const FormatSet& fs, const SymExpr& v,
                                               const std::string& freshPrefix) {
  std::vector<Constraint> out;
  FormatSet bare = fs;
  bare.requiredDivisors.clear();
  bare.excludedDivisors.clear();
  bare.excludedElements.clear();
  Constraint base = membershipConstraints(bare, v, freshPrefix);
  for (const auto& d : fs.requiredDivisors)
    out.push_back(Constraint::disj({Constraint::negate(base), Constraint::divides(d, v)}));
  for (const auto& d : fs.excludedDivisors)
    out.push_back(Constraint::disj({Constraint::negate(base), Constraint::notDivides(d, v)}));
  return out;
}

// ---------------------------------------------------------------------------
// Concrete instantiation
// ---------------------------------------------------------------------------

inline std::vector<Int> instantiate(const MemberSet& s, const Bindings& b) {
  std::set<Int> out;
  if (std::holds_alternative<IntervalSet>(s)) {
    const auto& is = std::get<IntervalSet>(s);
    Int lo = is.lower.eval(b), hi = is.upper.eval(b);
    std::vector<Int> reqs, excl;
    for (const auto& d : is.requiredDivisors) reqs.push_back(d.eval(b));
    for (const auto& d : is.excludedDivisors) excl.push_back(d.eval(b));
    for (Int x = lo; x <= hi; ++x) {
      bool ok = true;
      for (Int d : reqs)
        if (d == 0 || x % d != 0) ok = false;
      for (Int d : excl)
        if (d == 0 || x % d == 0) ok = false;
      if (ok) out.insert(x);
    }
  } else {
    const auto& fs = std::get<FormatSet>(s);
    std::vector<Int> reqs, excl, excludedVals;
    for (const auto& d : fs.requiredDivisors) reqs.push_back(d.eval(b));
    for (const auto& d : fs.excludedDivisors) excl.push_back(d.eval(b));
    for (const auto& ee : fs.excludedElements) excludedVals.push_back(ee.expr.eval(b));
    Int filterDiv = fs.residueFilter ? fs.residueFilter->divisor.eval(b) : 0;

    std::function<void(size_t, Bindings&)> rec = [&](size_t level, Bindings& cur) {
      if (level == fs.indexVars.size()) {
        if (fs.residueFilter) {
          Int g = fs.residueFilter->expr.eval(cur);
          if (filterDiv == 0 || g % filterDiv != 0) return;
        }
        Int x = fs.formatExpr.eval(cur);
        for (Int d : reqs)
          if (d == 0 || x % d != 0) return;
        for (Int d : excl)
          if (d == 0 || x % d == 0) return;
        for (Int ev : excludedVals)
          if (x == ev) return;
        out.insert(x);
        return;
      }
      const auto& iv = fs.indexVars[level];
      Int lo = iv.lower.eval(cur), hi = iv.upper.eval(cur);
      for (Int val = lo; val <= hi; ++val) {
        cur[iv.name] = val;
        rec(level + 1, cur);
      }
      cur.erase(iv.name);
    };
    Bindings cur = b;
    rec(0, cur);
  }
  return {out.begin(), out.end()};
}

inline std::vector<Int> instantiateClass(const ColorClass& cls, const Bindings& b) {
  std::set<Int> out;
  for (const auto& m : cls.members) {
    for (Int v : instantiate(m, b)) out.insert(v);
  }
  return {out.begin(), out.end()};
}

}  // namespace rado
