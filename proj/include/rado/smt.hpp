#pragma once

// SMT-LIB2 encoding of constraint systems over integer parameters and
// variables, external solver execution, and verdict parsing.
//
// The encoder works on relations that are linear in the variables with
// polynomial (parameter-only) coefficients.  Beyond the direct translation
// it performs three solver-guiding steps, each of which only ever adds
// definitions or consequences verified by polynomial identity:
//   - defined variables (formats, divisibility witnesses) are eliminated by
//     substitution and relations are divided by their provably-positive
//     monomial content;
//   - every equality is closed under "mod-d rearrangement": the terms whose
//     coefficients d does not divide equal d times a fresh witness, with a
//     Bezout strengthening when a single term remains;
//   - products d*w receive scaling lemmas (w >= k => d*w >= k*d, etc.) and
//     coefficient*variable terms receive interval-transfer lemmas.
// Nonlinear integer queries that are hopeless for solvers in raw form become
// routine with these rails; every rung of the retry ladder stays sound.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rado/constraint.hpp"
#include "rado/process.hpp"
#include "rado/symexpr.hpp"

namespace rado {

enum class SolverStatus { Sat, Unsat, Unknown, Timeout };

struct SolverVerdict {
  SolverStatus status = SolverStatus::Unknown;
  Bindings model;  // populated on Sat (parameters, variables, witnesses)
  std::string reason;
  double wallTime = 0;
};

struct ProtocolError : std::runtime_error {
  explicit ProtocolError(const std::string& m) : std::runtime_error("solver protocol error: " + m) {}
};
struct EncodeError : std::runtime_error {
  explicit EncodeError(const std::string& m) : std::runtime_error("encoding error: " + m) {}
};

struct SolverConfig {
  std::string command;  // shell template; {script} is replaced by the file path
  double timeoutSeconds = 60;
  bool keepArtifacts = false;
  std::string artifactDir;  // where kept scripts go; empty = temp dir
};

struct EncodeOptions {
  bool eliminate = true;
  bool hints = true;
  bool elaborations = true;
  bool keepSubstitutedBounds = true;
  int maxHintRelations = 96;
  int maxHintGeneration = 3;
};

namespace detail {

// Linear expression: sum of coeff(params) * var plus constant(params).
struct LinExpr {
  std::map<std::string, Poly> coeffs;
  Poly constant;

  void add(const std::string& v, const Poly& c) {
    auto it = coeffs.find(v);
    if (it == coeffs.end()) {
      if (!c.isZero()) coeffs[v] = c;
    } else {
      it->second += c;
      if (it->second.isZero()) coeffs.erase(it);
    }
  }
  LinExpr& operator+=(const LinExpr& o) {
    for (const auto& [v, c] : o.coeffs) add(v, c);
    constant += o.constant;
    return *this;
  }
  LinExpr scaled(const Poly& f) const {
    LinExpr r;
    for (const auto& [v, c] : coeffs) r.coeffs[v] = c * f;
    r.constant = constant * f;
    return r;
  }
  LinExpr negated() const { return scaled(Poly::constant(-1)); }
  bool isZero() const { return coeffs.empty() && constant.isZero(); }

  std::string key() const {
    std::ostringstream os;
    for (const auto& [v, c] : coeffs) os << v << ":" << c.toExpr().toString() << ";";
    os << "#" << constant.toExpr().toString();
    return os.str();
  }
};

struct LinRel {
  LinExpr expr;
  bool isEq = true;  // expr == 0, else expr <= 0
  int generation = 0;
  bool droppableBound = false;
  bool touchedByElimination = false;
};

}  // namespace detail

class SmtEncoder {
 public:
  SmtEncoder(const AssumptionSet& asm_, EncodeOptions opts = {}) : asm_(asm_), opts_(opts) {
    for (const auto& s : asm_.symbols()) params_.insert(s);
    encodeAssumptions();
  }

  // Interval bounds the retry ladder may drop once their variable has been
  // substituted away (they are implied by the index ranges).
  void addDroppableBound(const Constraint& c) { addConstraint(c, true); }

  void addConstraint(const Constraint& c, bool droppable = false) {
    originals_.push_back(c);
    addNnf(c.toNnf(), droppable);
  }

  // Runs elimination, content reduction and hint closure, then renders the
  // deterministic script text.
  std::string finish() {
    if (opts_.eliminate) eliminateDefined();
    for (auto& r : rels_) contentReduce(r);
    if (opts_.hints) hintClosure();
    return render();
  }

  const std::vector<std::pair<std::string, SymExpr>>& eliminationDefs() const { return defs_; }
  const std::vector<Constraint>& originalConstraints() const { return originals_; }
  const std::set<std::string>& parameters() const { return params_; }

  std::string freshVar(const std::string& stem) {
    std::string name = "_" + stem + std::to_string(freshCounter_++);
    declareVar(name);
    return name;
  }

 private:
  AssumptionSet asm_;
  EncodeOptions opts_;
  std::set<std::string> params_;
  std::vector<std::string> varOrder_;
  std::set<std::string> varSet_;
  std::vector<detail::LinRel> rels_;
  std::vector<std::string> raws_;
  std::set<std::string> rawVars_;
  std::vector<std::pair<Poly, std::string>> products_;  // d * w pairs
  std::vector<std::pair<std::string, SymExpr>> defs_;   // elimination order
  std::vector<Constraint> originals_;
  std::set<std::string> hintKeys_;
  int freshCounter_ = 0;

  void declareVar(const std::string& v) {
    if (params_.count(v) || varSet_.count(v)) return;
    varSet_.insert(v);
    varOrder_.push_back(v);
  }

  // ---- assumptions ----

  void encodeAssumptions() {
    for (const auto& s : asm_.symbols()) {
      if (auto lb = asm_.lowerBound(s)) {
        detail::LinRel r;  // lb - s <= 0   (s stays in the constant polynomial)
        r.isEq = false;
        r.expr.constant = Poly::constant(*lb) - Poly::var(s);
        pushRel(std::move(r));
      }
      if (auto p = asm_.parityOf(s)) {
        std::string t = "_t_" + s;
        declareVar(t);
        detail::LinRel def;  // s - 2t - r0 == 0
        Int r0 = (*p == Parity::Odd) ? 1 : 0;
        def.expr.constant = Poly::var(s) - Poly::constant(r0);
        def.expr.add(t, Poly::constant(-2));
        pushRel(std::move(def));
        Int lb = asm_.lowerBound(s).value_or(r0);
        Int tlb = floorDivInt(lb - r0 + 1, 2);  // ceil((lb - r0)/2)
        detail::LinRel bound;
        bound.isEq = false;
        bound.expr.add(t, Poly::constant(-1));
        bound.expr.constant = Poly::constant(tlb);
        pushRel(std::move(bound));
      }
    }
    for (const auto& [x, y] : asm_.coprimePairs()) {
      std::string u = "_bzu_" + x + "_" + y, v = "_bzv_" + x + "_" + y;
      declareVar(u);
      declareVar(v);
      detail::LinRel r;  // x*u + y*v - 1 == 0
      r.expr.add(u, Poly::var(x));
      r.expr.add(v, Poly::var(y));
      r.expr.constant = Poly::constant(-1);
      pushRel(std::move(r));
      bezout_[{x, y}] = {u, v};
    }
    for (const auto& e : asm_.polyConstraints()) {
      // e >= 0  ->  -e <= 0
      auto le = toLin(-e);
      if (!le) throw EncodeError("assumption constraint is not linear in variables: " + e.toString());
      detail::LinRel r;
      r.isEq = false;
      r.expr = *le;
      pushRel(std::move(r));
    }
  }

  std::map<std::pair<std::string, std::string>, std::pair<std::string, std::string>> bezout_;

  void pushRel(detail::LinRel r) {
    for (const auto& [v, c] : r.expr.coeffs) declareVar(v);
    rels_.push_back(std::move(r));
  }

  // ---- constraint translation ----

  void addNnf(const Constraint& c, bool droppable) {
    switch (c.kind()) {
      case ConstraintKind::And:
        for (const auto& ch : c.children()) addNnf(ch, droppable);
        return;
      case ConstraintKind::True: return;
      case ConstraintKind::False: {
        detail::LinRel r;  // 1 <= 0
        r.isEq = false;
        r.expr.constant = Poly::constant(1);
        pushRel(std::move(r));
        return;
      }
      case ConstraintKind::Cmp: {
        if (c.op() == CmpOp::Ne) {
          rawAssert("(not (= " + smtTerm(rewriteFloors(c.lhs())) + " " + smtTerm(rewriteFloors(c.rhs())) +
                    "))");
          return;
        }
        SymExpr diff;
        switch (c.op()) {
          case CmpOp::Le: diff = c.lhs() - c.rhs(); break;
          case CmpOp::Lt: diff = c.lhs() - c.rhs() + 1; break;
          case CmpOp::Ge: diff = c.rhs() - c.lhs(); break;
          case CmpOp::Gt: diff = c.rhs() - c.lhs() + 1; break;
          default: diff = c.lhs() - c.rhs(); break;
        }
        auto le = toLin(rewriteFloors(diff));
        if (!le) {
          rawAssertCmp(c);
          return;
        }
        detail::LinRel r;
        r.isEq = c.op() == CmpOp::Eq;
        r.expr = *le;
        r.droppableBound = droppable;
        pushRel(std::move(r));
        return;
      }
      case ConstraintKind::Divides: {
        SymExpr d = rewriteFloors(c.lhs()), e = rewriteFloors(c.rhs());
        auto dp = polyFromExpr(d);
        auto ep = toLin(e);
        if (dp && ep && isParamOnly(*dp)) {
          std::string q = freshVar("q");
          detail::LinRel r;  // e - d*q == 0
          r.expr = *ep;
          r.expr.add(q, *dp * Poly::constant(-1));
          pushRel(std::move(r));
          products_.push_back({*dp, q});
        } else {
          std::string q = freshVar("q");
          rawAssert("(= " + smtTerm(e) + " (* " + smtTerm(d) + " " + q + "))");
        }
        return;
      }
      case ConstraintKind::NotDivides: {
        SymExpr d = rewriteFloors(c.lhs()), e = rewriteFloors(c.rhs());
        auto dp = polyFromExpr(d);
        auto ep = toLin(e);
        if (dp && ep && isParamOnly(*dp)) {
          std::string q = freshVar("q"), r = freshVar("r");
          detail::LinRel def;  // e - d*q - r == 0
          def.expr = *ep;
          def.expr.add(q, *dp * Poly::constant(-1));
          def.expr.add(r, Poly::constant(-1));
          pushRel(std::move(def));
          detail::LinRel lo;  // 1 - r <= 0
          lo.isEq = false;
          lo.expr.add(r, Poly::constant(-1));
          lo.expr.constant = Poly::constant(1);
          pushRel(std::move(lo));
          detail::LinRel hi;  // r - (d - 1) <= 0
          hi.isEq = false;
          hi.expr.add(r, Poly::constant(1));
          hi.expr.constant = *dp * Poly::constant(-1) + Poly::constant(1);
          pushRel(std::move(hi));
          products_.push_back({*dp, q});
        } else {
          std::string q = freshVar("q"), r = freshVar("r");
          std::string dT = smtTerm(d), eT = smtTerm(e);
          rawAssert("(and (= " + eT + " (+ (* " + dT + " " + q + ") " + r + ")) (<= 1 " + r +
                    ") (<= " + r + " (- " + dT + " 1)))");
        }
        return;
      }
      case ConstraintKind::Or: {
        std::string s = "(or";
        for (const auto& ch : c.children()) s += " " + rawFormula(ch);
        rawAssert(s + ")");
        return;
      }
      case ConstraintKind::Not: {
        rawAssert("(not " + rawFormula(c.children()[0]) + ")");
        return;
      }
    }
  }

  void rawAssertCmp(const Constraint& c) { rawAssert(rawFormula(c)); }

  std::string rawFormula(const Constraint& c) {
    switch (c.kind()) {
      case ConstraintKind::Cmp: {
        const char* ops[] = {"<=", "<", "=", "distinct", ">=", ">"};
        return "(" + std::string(ops[static_cast<int>(c.op())]) + " " + smtTerm(rewriteFloors(c.lhs())) +
               " " + smtTerm(rewriteFloors(c.rhs())) + ")";
      }
      case ConstraintKind::Divides: {
        std::string q = freshVar("q");
        return "(= " + smtTerm(rewriteFloors(c.rhs())) + " (* " + smtTerm(rewriteFloors(c.lhs())) + " " +
               q + "))";
      }
      case ConstraintKind::NotDivides: {
        std::string q = freshVar("q"), r = freshVar("r");
        std::string dT = smtTerm(rewriteFloors(c.lhs())), eT = smtTerm(rewriteFloors(c.rhs()));
        return "(and (= " + eT + " (+ (* " + dT + " " + q + ") " + r + ")) (<= 1 " + r + ") (<= " + r +
               " (- " + dT + " 1)))";
      }
      case ConstraintKind::And: {
        std::string s = "(and";
        for (const auto& ch : c.children()) s += " " + rawFormula(ch);
        return s + ")";
      }
      case ConstraintKind::Or: {
        std::string s = "(or";
        for (const auto& ch : c.children()) s += " " + rawFormula(ch);
        return s + ")";
      }
      case ConstraintKind::Not: return "(not " + rawFormula(c.children()[0]) + ")";
      case ConstraintKind::True: return "true";
      case ConstraintKind::False: return "false";
      default: throw EncodeError("unsupported raw constraint");
    }
  }

  bool isParamOnly(const Poly& p) const {
    for (const auto& s : p.symbols())
      if (!params_.count(s)) return false;
    return true;
  }

  // Replace floor(num, den) by a fresh variable f with num = den*f + r,
  // 0 <= r < den.  Requires den >= 1 provable.
  SymExpr rewriteFloors(const SymExpr& e) {
    switch (e.kind()) {
      case ExprKind::Constant:
      case ExprKind::Symbol: return e;
      case ExprKind::FloorDiv: {
        SymExpr num = rewriteFloors(e.args()[0]);
        SymExpr den = rewriteFloors(e.args()[1]);
        auto dp = polyFromExpr(den);
        if (!dp || !isParamOnly(*dp) || !provePolyPositive(*dp, asm_))
          throw EncodeError("floor denominator not provably positive: " + den.toString());
        auto np = toLin(num);
        if (!np) throw EncodeError("floor numerator not linear in variables: " + num.toString());
        std::string f = freshVar("f"), r = freshVar("r");
        detail::LinRel def;  // num - den*f - r == 0
        def.expr = *np;
        def.expr.add(f, *dp * Poly::constant(-1));
        def.expr.add(r, Poly::constant(-1));
        pushRel(std::move(def));
        detail::LinRel lo;  // -r <= 0
        lo.isEq = false;
        lo.expr.add(r, Poly::constant(-1));
        pushRel(std::move(lo));
        detail::LinRel hi;  // r - den + 1 <= 0
        hi.isEq = false;
        hi.expr.add(r, Poly::constant(1));
        hi.expr.constant = *dp * Poly::constant(-1) + Poly::constant(1);
        pushRel(std::move(hi));
        products_.push_back({*dp, f});
        return SymExpr::symbol(f);
      }
      default: {
        std::vector<SymExpr> args;
        for (const auto& a : e.args()) args.push_back(rewriteFloors(a));
        switch (e.kind()) {
          case ExprKind::Sum: return SymExpr::sum(std::move(args));
          case ExprKind::Product: return SymExpr::product(std::move(args));
          case ExprKind::Power: return SymExpr::pow(args[0], e.value());
          case ExprKind::Lcm: throw EncodeError("lcm cannot appear in constraints");
          default: throw EncodeError("unexpected node");
        }
      }
    }
  }

  // Expression -> linear form over variables; nullopt when a variable
  // product appears.
  std::optional<detail::LinExpr> toLin(const SymExpr& e) {
    auto p = polyFromExpr(e);
    if (!p) return std::nullopt;
    detail::LinExpr le;
    for (const auto& [m, c] : p->terms()) {
      Monomial paramPart;
      std::string var;
      Int varDeg = 0;
      for (const auto& [s, exp] : m.factors) {
        if (params_.count(s)) {
          paramPart.factors.push_back({s, exp});
        } else {
          varDeg += exp;
          var = s;
          if (exp > 1) varDeg = 2;
        }
      }
      if (varDeg > 1) return std::nullopt;
      if (varDeg == 0)
        le.constant += Poly::term(c, m);
      else
        le.add(var, Poly::term(c, paramPart));
    }
    for (const auto& [v, c] : le.coeffs) declareVar(v);
    return le;
  }

  void rawAssert(const std::string& s) {
    raws_.push_back(s);
    // Conservatively protect all current variables mentioned in raw text
    // from elimination is handled by scanning at elimination time.
  }

  std::string smtTerm(const SymExpr& e) {
    switch (e.kind()) {
      case ExprKind::Constant:
        return e.value() < 0 ? "(- " + std::to_string(-e.value()) + ")" : std::to_string(e.value());
      case ExprKind::Symbol: declareVar(e.name()); return e.name();
      case ExprKind::Sum: {
        std::string s = "(+";
        for (const auto& a : e.args()) s += " " + smtTerm(a);
        return s + ")";
      }
      case ExprKind::Product: {
        std::string s = "(*";
        for (const auto& a : e.args()) s += " " + smtTerm(a);
        return s + ")";
      }
      case ExprKind::Power: {
        std::string b = smtTerm(e.args()[0]);
        std::string s = "(*";
        for (Int i = 0; i < e.value(); ++i) s += " " + b;
        return s + ")";
      }
      default: throw EncodeError("cannot render node to SMT: " + e.toString());
    }
  }

  std::string smtPoly(const Poly& p) {
    if (p.isZero()) return "0";
    std::vector<std::string> parts;
    for (const auto& [m, c] : p.terms()) {
      std::string t;
      bool needsMul = !m.factors.empty();
      std::string cstr = c < 0 ? "(- " + std::to_string(-c) + ")" : std::to_string(c);
      if (!needsMul) {
        parts.push_back(cstr);
        continue;
      }
      t = "(*";
      if (c != 1) t += " " + cstr;
      int f = 0;
      for (const auto& [s, exp] : m.factors)
        for (Int i = 0; i < exp; ++i) {
          t += " " + s;
          ++f;
        }
      t += ")";
      if (c == 1 && f == 1) t = m.factors[0].first;
      parts.push_back(t);
    }
    if (parts.size() == 1) return parts[0];
    std::string s = "(+";
    for (const auto& p2 : parts) s += " " + p2;
    return s + ")";
  }

  std::string smtLin(const detail::LinExpr& le) {
    std::vector<std::string> parts;
    for (const auto& [v, c] : le.coeffs) {
      if (c.isConstant() && c.constantValue() == 1) {
        parts.push_back(v);
      } else {
        parts.push_back("(* " + smtPoly(c) + " " + v + ")");
      }
    }
    if (!le.constant.isZero() || parts.empty()) parts.push_back(smtPoly(le.constant));
    if (parts.size() == 1) return parts[0];
    std::string s = "(+";
    for (const auto& p : parts) s += " " + p;
    return s + ")";
  }

  // ---- elimination ----

  std::set<std::string> rawMentionedVars() const {
    std::set<std::string> out;
    for (const auto& s : raws_) {
      size_t i = 0;
      while (i < s.size()) {
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
          size_t j = i;
          while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
          std::string tok = s.substr(i, j - i);
          if (varSet_.count(tok)) out.insert(tok);
          i = j;
        } else {
          ++i;
        }
      }
    }
    return out;
  }

  void eliminateDefined() {
    std::set<std::string> protectedVars = rawMentionedVars();
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t ri = 0; ri < rels_.size(); ++ri) {
        if (!rels_[ri].isEq) continue;
        const auto& coeffs = rels_[ri].expr.coeffs;
        std::string victim;
        Int sign = 0;
        for (const auto& [v, c] : coeffs) {
          if (protectedVars.count(v) || params_.count(v)) continue;
          if (c.isConstant() && (c.constantValue() == 1 || c.constantValue() == -1)) {
            victim = v;
            sign = c.constantValue();
            break;
          }
        }
        if (victim.empty()) continue;
        // victim = -sign * (rest)
        detail::LinExpr rest = rels_[ri].expr;
        rest.coeffs.erase(victim);
        detail::LinExpr defLin = rest.scaled(Poly::constant(-sign));
        SymExpr defExpr = linToExpr(defLin);
        defs_.push_back({victim, defExpr});
        rels_.erase(rels_.begin() + static_cast<long>(ri));
        for (auto& r : rels_) {
          auto it = r.expr.coeffs.find(victim);
          if (it == r.expr.coeffs.end()) continue;
          Poly c = it->second;
          r.expr.coeffs.erase(it);
          r.expr += defLin.scaled(c);
          r.touchedByElimination = true;
        }
        changed = true;
        break;
      }
    }
  }

  SymExpr linToExpr(const detail::LinExpr& le) const {
    std::vector<SymExpr> parts;
    for (const auto& [v, c] : le.coeffs) parts.push_back(c.toExpr() * SymExpr::symbol(v));
    if (!le.constant.isZero()) parts.push_back(le.constant.toExpr());
    return SymExpr::sum(std::move(parts));
  }

  // ---- content reduction ----

  void contentReduce(detail::LinRel& r) {
    Int g = 0;
    std::optional<Monomial> common;
    auto meet = [&](const Poly& p) {
      if (p.isZero()) return;
      auto [pg, pm] = p.content();
      g = std::gcd(g, pg);
      if (!common)
        common = pm;
      else {
        Monomial next;
        for (const auto& [s, e] : common->factors) {
          Int d = pm.degreeIn(s);
          if (d > 0) next.factors.push_back({s, std::min(e, d)});
        }
        common = next;
      }
    };
    for (const auto& [v, c] : r.expr.coeffs) meet(c);
    meet(r.expr.constant);
    if (g == 0) return;
    if (g == 1 && (!common || common->factors.empty())) return;
    Poly divisor = Poly::term(g, common ? *common : Monomial::unit());
    if (!provePolyPositive(divisor, asm_)) {
      // Try the plain integer part only.
      if (g == 1) return;
      divisor = Poly::constant(g);
    }
    auto [dg, dm] = divisor.content();
    detail::LinExpr reduced;
    for (const auto& [v, c] : r.expr.coeffs) {
      auto q = c.dividedBy(dg, dm);
      if (!q) return;
      reduced.coeffs[v] = *q;
    }
    if (auto q = r.expr.constant.dividedBy(dg, dm))
      reduced.constant = *q;
    else
      return;
    r.expr = std::move(reduced);
  }

  // ---- hint closure ----

  void hintClosure() {
    size_t head = 0;
    std::vector<size_t> queue;
    for (size_t i = 0; i < rels_.size(); ++i) queue.push_back(i);
    while (head < queue.size() && rels_.size() < static_cast<size_t>(opts_.maxHintRelations)) {
      detail::LinRel rel = rels_[queue[head++]];  // copy; rels_ may grow
      if (rel.generation > opts_.maxHintGeneration) continue;
      if (rel.expr.coeffs.empty()) continue;
      for (const auto& d : divisorCandidates(rel)) {
        applyRearrangement(rel, d, queue);
        if (rels_.size() >= static_cast<size_t>(opts_.maxHintRelations)) break;
      }
    }
  }

  std::vector<Poly> divisorCandidates(const detail::LinRel& rel) const {
    std::map<std::string, Int> maxDeg;
    auto scan = [&](const Poly& p) {
      for (const auto& [m, c] : p.terms())
        for (const auto& [s, e] : m.factors)
          if (params_.count(s)) maxDeg[s] = std::max(maxDeg[s], e);
    };
    for (const auto& [v, c] : rel.expr.coeffs) scan(c);
    scan(rel.expr.constant);
    std::vector<Poly> out;
    for (const auto& [s, dmax] : maxDeg)
      for (Int e = 1; e <= std::min<Int>(dmax, 3); ++e) out.push_back(Poly::term(1, Monomial::var(s, e)));
    // Nonconstant coefficient polynomials (a+1 and friends) are divisor
    // candidates too: normalize sign, drop integer content.
    auto addPoly = [&](Poly c) {
      if (c.totalDegree() < 1 || c.terms().size() < 2) return;
      auto [g, m] = c.content();
      if (g > 1) {
        if (auto q = c.dividedBy(g, Monomial::unit())) c = *q;
      }
      if (!c.terms().empty() && c.terms().rbegin()->second < 0) c = c * Poly::constant(-1);
      for (const auto& seen : out)
        if (seen == c) return;
      out.push_back(c);
    };
    for (const auto& [v, c] : rel.expr.coeffs) addPoly(c);
    return out;
  }

  void applyRearrangement(const detail::LinRel& rel, const Poly& dPoly, std::vector<size_t>& queue) {
    detail::LinExpr divPart, nonPart;
    for (const auto& [v, c] : rel.expr.coeffs) {
      if (c.dividedByPoly(dPoly))
        divPart.coeffs[v] = c;
      else
        nonPart.coeffs[v] = c;
    }
    {
      // Per-monomial split of the constant against monomial divisors; whole
      // constant otherwise.
      if (dPoly.terms().size() == 1) {
        const auto& [dm, dc] = *dPoly.terms().begin();
        Poly rest;
        for (const auto& [m, c] : rel.expr.constant.terms()) {
          if (m.dividedBy(dm) && c % dc == 0)
            divPart.constant.addTerm(m, c);
          else
            rest.addTerm(m, c);
        }
        nonPart.constant = rest;
      } else if (rel.expr.constant.dividedByPoly(dPoly)) {
        divPart.constant = rel.expr.constant;
      } else {
        nonPart.constant = rel.expr.constant;
      }
    }
    if (divPart.isZero() || nonPart.isZero()) return;
    // Inequalities only benefit from the bounded-product pattern: every
    // variable coefficient divisible, constant-only remainder.
    if (!rel.isEq && !nonPart.coeffs.empty()) return;
    if (nonPart.coeffs.size() > 3) return;
    std::string key = dPoly.toExpr().toString() + "|" + nonPart.key();
    if (hintKeys_.count(key)) return;
    hintKeys_.insert(key);

    // w := divPart / d;  new relations  (A) nonPart + d*w == 0,
    // (Wdef) divPart/d - w == 0.  Identity: A + d*Wdef == rel.
    detail::LinExpr quotient;
    for (const auto& [v, c] : divPart.coeffs) quotient.coeffs[v] = *c.dividedByPoly(dPoly);
    quotient.constant = *divPart.constant.dividedByPoly(dPoly);

    std::string w = freshVar("w");

    detail::LinRel wdef;  // always an exact integer definition
    wdef.expr = quotient;
    wdef.expr.add(w, Poly::constant(-1));
    wdef.generation = rel.generation + 1;

    detail::LinRel main;  // inherits the relation type of the source
    main.isEq = rel.isEq;
    main.expr = nonPart;
    main.expr.add(w, dPoly);
    main.generation = rel.generation + 1;

    // Verify the polynomial identity main + d*wdef == rel (modulo the fresh
    // w, whose coefficients cancel: d*1 + d*(-1)).
    {
      detail::LinExpr check = main.expr;
      check += wdef.expr.scaled(dPoly);
      check += rel.expr.negated();
      if (!check.isZero()) throw std::logic_error("rearrangement identity failed");
    }

    products_.push_back({dPoly, w});
    size_t base = rels_.size();
    pushRel(wdef);
    pushRel(main);
    queue.push_back(base);
    queue.push_back(base + 1);

    // Bezout strengthening: single non-divisible term c*v with constant 0
    // and a certificate U*c + V*d == 1 (exactly, or modulo a declared
    // coprimality relation) gives v == d*w2.
    if (rel.isEq && nonPart.coeffs.size() == 1 && nonPart.constant.isZero()) {
      const auto& [v, c] = *nonPart.coeffs.begin();
      auto cert = coprimeCertificate(c, dPoly);
      if (cert) {
        const Poly& U = cert->U;
        const Poly& V = cert->V;
        std::string w2 = freshVar("w");
        // main: c*v + d*w == 0  =>  v = d*(V*v - U*w)
        detail::LinRel b2;  // V*v - U*w - w2 == 0
        b2.expr.add(v, V);
        b2.expr.add(w, U * Poly::constant(-1));
        b2.expr.add(w2, Poly::constant(-1));
        b2.generation = rel.generation + 1;
        detail::LinRel b1;  // v - d*w2 == 0
        b1.expr.add(v, Poly::constant(1));
        b1.expr.add(w2, dPoly * Poly::constant(-1));
        b1.generation = rel.generation + 1;
        // Identity: b1 - d*b2 - U*main == -v * defect, where the defect
        // U*c + V*d - 1 was verified at certificate construction to be a
        // multiple of the asserted coprimality relation.
        {
          detail::LinExpr check = b1.expr;
          check += b2.expr.scaled(dPoly).negated();
          check += main.expr.scaled(U).negated();
          detail::LinExpr expected;
          expected.add(v, cert->defect * Poly::constant(-1));
          check += expected.negated();
          if (!check.isZero()) throw std::logic_error("bezout identity failed");
        }
        products_.push_back({dPoly, w2});
        size_t base2 = rels_.size();
        pushRel(b2);
        pushRel(b1);
        queue.push_back(base2);
        queue.push_back(base2 + 1);
      }
    }
  }

  // Bezout certificate U*c + V*d == 1 for a coefficient polynomial and a
  // parameter monomial.  The defect U*c + V*d - 1 is zero for the
  // polynomial-euclid source and a verified multiple of the coprimality
  // witness relation (u*x + v*y - 1) for the declared-pair source.
  struct Certificate {
    Poly U, V;
    Poly defect;
  };
  std::optional<Certificate> coprimeCertificate(const Poly& c, const Poly& d) {
    auto dSyms = d.symbols();
    if (dSyms.size() != 1) return std::nullopt;
    std::string p = *dSyms.begin();
    auto cSyms = c.symbols();
    // Case 1: c is a polynomial in the same single parameter.
    if (cSyms.empty() || (cSyms.size() == 1 && *cSyms.begin() == p)) {
      auto uv = polyBezout(c, d, p);
      if (!uv) return std::nullopt;
      Poly defect = uv->first * c + uv->second * d - Poly::constant(1);
      if (!defect.isZero()) return std::nullopt;
      return Certificate{uv->first, uv->second, Poly()};
    }
    // Case 2: c = +-q^j, d = p^k for a declared coprime pair (p, q).
    if (cSyms.size() == 1 && d.terms().size() == 1) {
      std::string q = *cSyms.begin();
      std::string x = std::min(p, q), y = std::max(p, q);
      auto it = bezout_.find({x, y});
      if (it == bezout_.end()) return std::nullopt;
      if (c.terms().size() != 1) return std::nullopt;
      const auto& [cm, cc] = *c.terms().begin();
      if (cc != 1 && cc != -1) return std::nullopt;
      Int j = cm.degreeIn(q);
      Int k = d.terms().begin()->first.degreeIn(p);
      if (d.terms().begin()->second != 1) return std::nullopt;
      // (u*q + v*p)^(j+k-1) == 1 splits into U*q^j + V*p^k.
      const auto& [uName, vName] = orientedWitness(it->second, q, p, x);
      Poly base = Poly::var(uName) * Poly::var(q) + Poly::var(vName) * Poly::var(p);
      Poly expanded = base.powed(j + k - 1);
      Poly U, V;
      Monomial qj = Monomial::var(q, j), pk = Monomial::var(p, k);
      for (const auto& [m, coef] : expanded.terms()) {
        if (auto rest = m.dividedBy(qj))
          U.addTerm(*rest, coef);
        else if (auto rest2 = m.dividedBy(pk))
          V.addTerm(*rest2, coef);
        else
          return std::nullopt;
      }
      // Verify U*q^j + V*p^k == (u*q+v*p)^(j+k-1) exactly, and that the
      // defect (that power minus 1) is a multiple of the witness relation.
      Poly check = U * Poly::term(1, qj) + V * Poly::term(1, pk) - expanded;
      if (!check.isZero()) return std::nullopt;
      Poly relation = base - Poly::constant(1);
      Poly defect = expanded - Poly::constant(1);
      if (!defect.isZero() && !defect.dividedByPoly(relation)) return std::nullopt;
      if (cc == -1) U = U * Poly::constant(-1);
      return Certificate{U, V, defect};
    }
    return std::nullopt;
  }

  // Matches (u, v) of the stored pair u*x + v*y == 1 to the roles (q, p).
  std::pair<std::string, std::string> orientedWitness(const std::pair<std::string, std::string>& uv,
                                                      const std::string& q, const std::string& p,
                                                      const std::string& storedFirst) const {
    // Stored relation: u*storedFirst + v*storedSecond == 1.
    if (q == storedFirst) return {uv.first, uv.second};
    return {uv.second, uv.first};
  }

  // Extended Euclid over Q[p], scaled back to an integer identity when the
  // content works out to 1.
  std::optional<std::pair<Poly, Poly>> polyBezout(const Poly& c, const Poly& d, const std::string& p) {
    // Univariate rational-coefficient Euclid.
    using RPoly = std::vector<Rational>;  // index = degree
    auto toR = [&](const Poly& poly) {
      RPoly r(std::max<Int>(poly.degreeIn(p) + 1, 1), Rational(0));
      for (const auto& [m, coef] : poly.terms()) r[m.degreeIn(p)] = Rational(coef);
      return r;
    };
    auto deg = [](const RPoly& r) {
      for (Int i = static_cast<Int>(r.size()) - 1; i >= 0; --i)
        if (!r[i].isZero()) return i;
      return Int(-1);
    };
    auto sub = [](const RPoly& a, const RPoly& b) {
      RPoly r(std::max(a.size(), b.size()), Rational(0));
      for (size_t i = 0; i < r.size(); ++i) {
        Rational av = i < a.size() ? a[i] : Rational(0);
        Rational bv = i < b.size() ? b[i] : Rational(0);
        r[i] = av - bv;
      }
      return r;
    };
    auto mul = [](const RPoly& a, const RPoly& b) {
      RPoly r(a.size() + b.size(), Rational(0));
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
      return r;
    };
    auto divmod = [&](const RPoly& a, const RPoly& b) {
      RPoly rem = a, quot(a.size() + 1, Rational(0));
      Int db = deg(b);
      while (deg(rem) >= db && db >= 0) {
        Int dr = deg(rem);
        Rational f = rem[dr] * Rational(b[db].den, b[db].num);
        RPoly t(dr - db + 1, Rational(0));
        t[dr - db] = f;
        quot[dr - db] = quot[dr - db] + f;
        rem = sub(rem, mul(t, b));
      }
      return std::make_pair(quot, rem);
    };
    RPoly r0 = toR(c), r1 = toR(d);
    if (deg(r0) < 0 || deg(r1) < 0) return std::nullopt;
    RPoly u0{Rational(1)}, u1{Rational(0)};
    RPoly v0{Rational(0)}, v1{Rational(1)};
    int guard = 0;
    while (deg(r1) > 0) {
      if (++guard > 64) return std::nullopt;
      auto [q, rem] = divmod(r0, r1);
      RPoly nu = sub(u0, mul(q, u1));
      RPoly nv = sub(v0, mul(q, v1));
      r0 = r1;
      r1 = rem;
      u0 = u1;
      u1 = nu;
      v0 = v1;
      v1 = nv;
      if (deg(r1) < 0) return std::nullopt;  // common factor of positive degree
    }
    // r1 is a nonzero rational constant g: (u1*c + v1*d) == g.
    Rational g = r1[0];
    if (g.isZero()) return std::nullopt;
    // Scale: U = u1/g, V = v1/g; accept only integer results.
    auto scale = [&](const RPoly& r) -> std::optional<Poly> {
      Poly out;
      for (size_t i = 0; i < r.size(); ++i) {
        if (r[i].isZero()) continue;
        Rational s = r[i] * Rational(g.den, g.num);
        if (!s.isInteger()) return std::nullopt;
        out.addTerm(Monomial::var(p, static_cast<Int>(i)), s.num);
      }
      return out;
    };
    auto U = scale(u1);
    auto V = scale(v1);
    if (!U || !V) return std::nullopt;
    Poly check = *U * c + *V * d - Poly::constant(1);
    if (!check.isZero()) return std::nullopt;
    return std::make_pair(*U, *V);
  }

  // ---- rendering ----

  std::string render() {
    std::ostringstream os;
    std::vector<std::string> decls;
    for (const auto& s : params_) decls.push_back(s);
    std::set<std::string> eliminated;
    for (const auto& [v, d] : defs_) eliminated.insert(v);
    for (const auto& v : varOrder_)
      if (!eliminated.count(v)) decls.push_back(v);
    for (const auto& d : decls) os << "(declare-const " << d << " Int)\n";

    for (const auto& r : rels_) {
      if (!opts_.keepSubstitutedBounds && r.droppableBound && r.touchedByElimination) continue;
      os << "(assert (" << (r.isEq ? "=" : "<=") << " " << smtLin(r.expr) << " 0))\n";
    }
    for (const auto& s : raws_) os << "(assert " << s << ")\n";

    if (opts_.elaborations) {
      // Scaling lemmas for witness products, valid since each d >= 1.
      for (const auto& [d, w] : products_) {
        if (eliminated.count(w)) continue;
        if (!provePolyPositive(d, asm_)) continue;
        std::string dT = smtPoly(d);
        std::string prod = "(* " + dT + " " + w + ")";
        for (Int k = -2; k <= 3; ++k) {
          std::string kT = k < 0 ? "(- " + std::to_string(-k) + ")" : std::to_string(k);
          std::string kd = k == 1 ? dT : "(* " + kT + " " + dT + ")";
          os << "(assert (=> (>= " << w << " " << kT << ") (>= " << prod << " " << kd << ")))\n";
          os << "(assert (=> (<= " << w << " " << kT << ") (<= " << prod << " " << kd << ")))\n";
        }
      }
      emitBoundTransfers(os, eliminated);
    }

    os << "(check-sat)\n";
    std::vector<std::string> vals = decls;
    if (!vals.empty()) {
      os << "(get-value (";
      for (size_t i = 0; i < vals.size(); ++i) os << (i ? " " : "") << vals[i];
      os << "))\n";
    }
    return os.str();
  }

  // For each product coefficient*variable appearing in a relation, transfer
  // the variable's single-variable bounds: c >= 0 and lo <= v <= hi give
  // c*lo <= c*v <= c*hi.
  void emitBoundTransfers(std::ostringstream& os, const std::set<std::string>& eliminated) {
    // Collect single-variable bounds v <= hi / v >= lo from <=-relations.
    std::map<std::string, std::vector<std::pair<bool, Poly>>> bounds;  // var -> (isUpper, poly)
    for (const auto& r : rels_) {
      if (r.isEq || r.expr.coeffs.size() != 1) continue;
      const auto& [v, c] = *r.expr.coeffs.begin();
      if (!c.isConstant()) continue;
      Int cc = c.constantValue();
      if (cc == 1) {
        bounds[v].push_back({true, r.expr.constant * Poly::constant(-1)});  // v <= -const
      } else if (cc == -1) {
        bounds[v].push_back({false, r.expr.constant});  // v >= const
      }
    }
    std::set<std::string> done;
    for (const auto& r : rels_) {
      for (const auto& [v, c] : r.expr.coeffs) {
        if (c.isConstant() || eliminated.count(v)) continue;
        std::string key = v + "#" + smtPoly(c);
        if (done.count(key)) continue;
        done.insert(key);
        auto it = bounds.find(v);
        if (it == bounds.end()) continue;
        Poly cpos = c;
        bool neg = false;
        if (!provePolyNonnegative(cpos, asm_)) {
          cpos = c * Poly::constant(-1);
          neg = true;
          if (!provePolyNonnegative(cpos, asm_)) continue;
        }
        std::string cT = smtPoly(c);
        std::string prod = "(* " + cT + " " + v + ")";
        int emitted = 0;
        for (const auto& [isUpper, b] : it->second) {
          if (++emitted > 4) break;
          std::string bT = smtPoly(b);
          std::string cb = "(* " + cT + " " + bT + ")";
          bool upperForProd = isUpper != neg;
          os << "(assert (" << (upperForProd ? "<=" : ">=") << " " << prod << " " << cb << "))\n";
        }
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Solver execution
// ---------------------------------------------------------------------------

inline SolverVerdict runSolverScript(const std::string& script, const SolverConfig& cfg) {
  namespace fs = std::filesystem;
  SolverVerdict out;
  std::string cmd = cfg.command;
  std::string path;
  bool viaFile = cmd.find("{script}") != std::string::npos;
  if (viaFile) {
    fs::path dir = cfg.artifactDir.empty() ? fs::temp_directory_path() : fs::path(cfg.artifactDir);
    fs::create_directories(dir);
    static std::atomic<unsigned> counter{0};
    path = (dir / ("rado_query_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".smt2"))
               .string();
    FILE* f = fopen(path.c_str(), "w");
    if (!f) throw SolverLaunchFailure("cannot write " + path);
    fwrite(script.data(), 1, script.size(), f);
    fclose(f);
    size_t pos;
    while ((pos = cmd.find("{script}")) != std::string::npos) cmd.replace(pos, 8, path);
  }
  ProcessResult pr = runProcess(cmd, viaFile ? "" : script, cfg.timeoutSeconds);
  if (viaFile && !cfg.keepArtifacts) std::remove(path.c_str());
  out.wallTime = pr.seconds;
  if (pr.timedOut) {
    out.status = SolverStatus::Timeout;
    out.reason = "timeout after " + std::to_string(cfg.timeoutSeconds) + "s";
    return out;
  }
  // First status token wins.
  std::istringstream is(pr.output);
  std::string line, status;
  while (std::getline(is, line)) {
    if (line == "sat" || line == "unsat" || line == "unknown") {
      status = line;
      break;
    }
  }
  if (status.empty()) {
    if (pr.exitCode == 127) throw SolverLaunchFailure("command not found: " + cfg.command);
    throw ProtocolError("no sat/unsat/unknown in solver output (exit " + std::to_string(pr.exitCode) +
                        "): " + pr.output.substr(0, 400));
  }
  if (status == "unsat") {
    out.status = SolverStatus::Unsat;
    return out;
  }
  if (status == "unknown") {
    out.status = SolverStatus::Unknown;
    out.reason = "solver reported unknown";
    return out;
  }
  out.status = SolverStatus::Sat;
  // Parse ((name value) ...) pairs; values are INT or (- INT).
  std::string rest;
  std::getline(is, rest, '\0');
  size_t i = 0;
  auto skipWs = [&]() {
    while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
  };
  while (i < rest.size()) {
    if (rest[i] == '(' || rest[i] == ')') {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(rest[i])) || rest[i] == '_') {
      size_t j = i;
      while (j < rest.size() && (std::isalnum(static_cast<unsigned char>(rest[j])) || rest[j] == '_')) ++j;
      std::string name = rest.substr(i, j - i);
      i = j;
      skipWs();
      bool negParen = false;
      if (i < rest.size() && rest[i] == '(') {
        ++i;
        skipWs();
        if (i < rest.size() && rest[i] == '-') {
          negParen = true;
          ++i;
        }
        skipWs();
      }
      bool neg = negParen;
      if (i < rest.size() && rest[i] == '-') {
        neg = true;
        ++i;
      }
      if (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
        size_t k = i;
        while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
        Int v = std::stoll(rest.substr(i, k - i));
        out.model[name] = neg ? -v : v;
        i = k;
      }
    } else {
      ++i;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// High-level bridge with the retry ladder and Sat-model replay.
// ---------------------------------------------------------------------------

class SmtBridge {
 public:
  explicit SmtBridge(SolverConfig cfg) : cfg_(std::move(cfg)) {}

  const SolverConfig& config() const { return cfg_; }

  // Deterministic script for a constraint system (primary encoding).
  static std::string encode(const std::vector<Constraint>& cs, const AssumptionSet& asm_,
                            EncodeOptions opts = {}) {
    SmtEncoder enc(asm_, opts);
    for (const auto& c : cs) enc.addConstraint(c);
    return enc.finish();
  }

  SolverVerdict checkSat(const std::string& script, double timeoutOverride = -1) const {
    SolverConfig cfg = cfg_;
    if (timeoutOverride > 0) cfg.timeoutSeconds = timeoutOverride;
    return runSolverScript(script, cfg);
  }

  // Ladder: primary encoding, then the witness-substituted-light variant
  // (substituted interval bounds dropped), then the plain non-eliminated
  // form.  Unsat from any rung is sound; Sat must replay against the
  // original constraints to count.
  SolverVerdict query(const std::vector<Constraint>& cs, const AssumptionSet& asm_,
                      double timeoutOverride = -1,
                      const std::vector<Constraint>& droppableBounds = {}) const {
    struct Rung {
      EncodeOptions opts;
      bool fullFidelity;
    };
    auto mkOpts = [](bool eliminate, bool keepBounds) {
      EncodeOptions o;
      o.eliminate = eliminate;
      o.keepSubstitutedBounds = keepBounds;
      return o;
    };
    std::vector<Rung> rungs = {
        {mkOpts(true, true), true},
        {mkOpts(true, false), false},
        {mkOpts(false, true), true},
    };
    SolverVerdict last;
    for (const auto& rung : rungs) {
      SmtEncoder enc(asm_, rung.opts);
      for (const auto& c : cs) enc.addConstraint(c);
      for (const auto& c : droppableBounds) enc.addDroppableBound(c);
      std::string script;
      try {
        script = enc.finish();
      } catch (const EncodeError& e) {
        last.status = SolverStatus::Unknown;
        last.reason = e.what();
        continue;
      }
      SolverVerdict v = checkSat(script, timeoutOverride);
      if (v.status == SolverStatus::Unsat) return v;
      if (v.status == SolverStatus::Sat) {
        if (replayModel(enc, cs, droppableBounds, asm_, v.model)) return v;
        if (rung.fullFidelity)
          throw ProtocolError("sat model failed replay against original constraints");
        v.status = SolverStatus::Unknown;
        v.reason = "abstraction satisfiable; model does not replay";
      }
      last = v;
    }
    return last;
  }

  // Validity: phi holds under the assumptions and context iff
  // context && !phi is unsatisfiable.
  struct ValidityResult {
    Verdict3 verdict;
    Bindings counterexample;
    std::string reason;
  };
  ValidityResult proveValid(const Constraint& phi, const std::vector<Constraint>& context,
                            const AssumptionSet& asm_, double timeoutOverride = -1) const {
    std::vector<Constraint> cs = context;
    cs.push_back(Constraint::negate(phi));
    SolverVerdict v = query(cs, asm_, timeoutOverride);
    switch (v.status) {
      case SolverStatus::Unsat: return {Verdict3::Proven, {}, {}};
      case SolverStatus::Sat: return {Verdict3::Refuted, v.model, {}};
      default: return {Verdict3::Unknown, {}, v.reason};
    }
  }

 private:
  SolverConfig cfg_;

  // Reconstruct eliminated variables and re-check every original constraint
  // plus the assumptions concretely.
  static bool replayModel(const SmtEncoder& enc, const std::vector<Constraint>& cs,
                          const std::vector<Constraint>& droppable, const AssumptionSet& asm_,
                          Bindings& model) {
    const auto& defs = enc.eliminationDefs();
    for (auto it = defs.rbegin(); it != defs.rend(); ++it) {
      try {
        model[it->first] = it->second.eval(model);
      } catch (const std::exception&) {
        return false;
      }
    }
    Bindings paramPart;
    for (const auto& s : asm_.symbols()) {
      auto f = model.find(s);
      if (f == model.end()) return false;
      paramPart[s] = f->second;
    }
    if (!asm_.satisfiedBy(paramPart)) return false;
    auto checkAll = [&](const std::vector<Constraint>& list) {
      for (const auto& c : list) {
        try {
          if (!c.eval(model)) return false;
        } catch (const std::exception&) {
          return false;
        }
      }
      return true;
    };
    return checkAll(cs) && checkAll(droppable);
  }
};

// SMT-backed guard prover for floorSimplify, layered over the polynomial one.
class SmtGuardProver : public GuardProver {
 public:
  explicit SmtGuardProver(const SmtBridge& bridge, double timeout = 10) : bridge_(bridge), timeout_(timeout) {}
  Verdict3 proveNonnegative(const SymExpr& e, const AssumptionSet& asm_) const override {
    if (auto p = polyFromExpr(e)) {
      if (provePolyNonnegative(*p, asm_)) return Verdict3::Proven;
    }
    auto r = bridge_.proveValid(Constraint::ge(e, SymExpr::constant(0)), {}, asm_, timeout_);
    return r.verdict;
  }

 private:
  const SmtBridge& bridge_;
  double timeout_;
};

}  // namespace rado
