#pragma once

// Immutable symbolic integer expressions over named parameters: polynomials,
// floor division and lcm nodes, with assumption-aware simplification.
// Values are exact 64-bit integers; arithmetic overflow throws.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rado {

using Int = long long;
using Bindings = std::map<std::string, Int>;

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in symbolic arithmetic") {}
};
struct DivisionUndefined : std::runtime_error {
  DivisionUndefined() : std::runtime_error("denominator evaluates to zero") {}
};
struct UnboundSymbol : std::runtime_error {
  explicit UnboundSymbol(const std::string& s) : std::runtime_error("unbound symbol: " + s) {}
};
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error("parse error: " + m) {}
};

inline Int checkedAdd(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline Int checkedSub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
  return r;
}
inline Int checkedMul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

// Floor division rounding toward negative infinity.
inline Int floorDivInt(Int num, Int den) {
  if (den == 0) throw DivisionUndefined();
  Int q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}
inline Int floorModInt(Int num, Int den) { return checkedSub(num, checkedMul(floorDivInt(num, den), den)); }

enum class ExprKind { Constant, Symbol, Sum, Product, Power, FloorDiv, Lcm };

class SymExpr {
  struct Node;
  struct FromNode {};
  SymExpr(FromNode, std::shared_ptr<const Node> n) : node_(std::move(n)) {}

 public:
  SymExpr() : SymExpr(constant(0)) {}

  static SymExpr constant(Int v) {
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Constant, v, {}, {}})};
  }
  static SymExpr symbol(std::string name) {
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Symbol, 0, std::move(name), {}})};
  }
  static SymExpr sum(std::vector<SymExpr> args) {
    if (args.empty()) return constant(0);
    if (args.size() == 1) return args.front();
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Sum, 0, {}, std::move(args)})};
  }
  static SymExpr product(std::vector<SymExpr> args) {
    if (args.empty()) return constant(1);
    if (args.size() == 1) return args.front();
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Product, 0, {}, std::move(args)})};
  }
  // Nonnegative integer power.
  static SymExpr pow(SymExpr base, Int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent == 0) return constant(1);
    if (exponent == 1) return base;
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Power, exponent, {}, {std::move(base)}})};
  }
  static SymExpr floorDiv(SymExpr num, SymExpr den) {
    return {FromNode{},
            std::make_shared<Node>(Node{ExprKind::FloorDiv, 0, {}, {std::move(num), std::move(den)}})};
  }
  // lcm over values is always positive; a single-argument node means |e|.
  static SymExpr lcmOf(std::vector<SymExpr> args) {
    if (args.empty()) return constant(1);
    return {FromNode{}, std::make_shared<Node>(Node{ExprKind::Lcm, 0, {}, std::move(args)})};
  }

  ExprKind kind() const { return node_->kind; }
  Int value() const { return node_->value; }
  const std::string& name() const { return node_->symbol; }
  const std::vector<SymExpr>& args() const { return node_->args; }

  bool isConstant(Int v) const { return kind() == ExprKind::Constant && value() == v; }

  Int eval(const Bindings& b) const {
    switch (kind()) {
      case ExprKind::Constant: return value();
      case ExprKind::Symbol: {
        auto it = b.find(name());
        if (it == b.end()) throw UnboundSymbol(name());
        return it->second;
      }
      case ExprKind::Sum: {
        Int acc = 0;
        for (const auto& a : args()) acc = checkedAdd(acc, a.eval(b));
        return acc;
      }
      case ExprKind::Product: {
        Int acc = 1;
        for (const auto& a : args()) acc = checkedMul(acc, a.eval(b));
        return acc;
      }
      case ExprKind::Power: {
        Int base = args()[0].eval(b), acc = 1;
        for (Int i = 0; i < value(); ++i) acc = checkedMul(acc, base);
        return acc;
      }
      case ExprKind::FloorDiv: return floorDivInt(args()[0].eval(b), args()[1].eval(b));
      case ExprKind::Lcm: {
        Int acc = 1;
        for (const auto& a : args()) {
          Int v = a.eval(b);
          if (v == 0) throw DivisionUndefined();
          acc = std::lcm(acc, std::abs(v));
        }
        return acc;
      }
    }
    throw std::logic_error("bad expr kind");
  }

  void collectSymbols(std::set<std::string>& out) const {
    if (kind() == ExprKind::Symbol) {
      out.insert(name());
      return;
    }
    for (const auto& a : args()) a.collectSymbols(out);
  }
  std::set<std::string> symbols() const {
    std::set<std::string> s;
    collectSymbols(s);
    return s;
  }

  // Partial substitution; fully bound subtrees collapse to constants.
  SymExpr substitute(const Bindings& b) const;

  bool structurallyEqual(const SymExpr& o) const {
    if (node_ == o.node_) return true;
    if (kind() != o.kind() || value() != o.value() || name() != o.name()) return false;
    if (args().size() != o.args().size()) return false;
    for (size_t i = 0; i < args().size(); ++i)
      if (!args()[i].structurallyEqual(o.args()[i])) return false;
    return true;
  }

  std::string toString() const;

 private:
  struct Node {
    ExprKind kind;
    Int value;
    std::string symbol;
    std::vector<SymExpr> args;
  };
  std::shared_ptr<const Node> node_;
};

inline SymExpr operator+(const SymExpr& a, const SymExpr& b) { return SymExpr::sum({a, b}); }
inline SymExpr operator*(const SymExpr& a, const SymExpr& b) { return SymExpr::product({a, b}); }
inline SymExpr operator-(const SymExpr& a, const SymExpr& b) {
  return SymExpr::sum({a, SymExpr::product({SymExpr::constant(-1), b})});
}
inline SymExpr operator-(const SymExpr& a) { return SymExpr::product({SymExpr::constant(-1), a}); }
inline SymExpr operator+(const SymExpr& a, Int b) { return a + SymExpr::constant(b); }
inline SymExpr operator-(const SymExpr& a, Int b) { return a - SymExpr::constant(b); }
inline SymExpr operator*(Int a, const SymExpr& b) { return SymExpr::constant(a) * b; }

// ---------------------------------------------------------------------------
// Canonical multivariate polynomials with integer coefficients.
// Term order: graded lexicographic by symbol name.
// ---------------------------------------------------------------------------

struct Monomial {
  // Sorted by symbol name, exponents >= 1. Empty = constant term.
  std::vector<std::pair<std::string, Int>> factors;

  Int degree() const {
    Int d = 0;
    for (const auto& [s, e] : factors) d += e;
    return d;
  }
  Int degreeIn(const std::string& s) const {
    for (const auto& [n, e] : factors)
      if (n == s) return e;
    return 0;
  }
  bool operator==(const Monomial& o) const { return factors == o.factors; }

  static Monomial unit() { return {}; }
  static Monomial var(const std::string& s, Int e = 1) {
    Monomial m;
    if (e > 0) m.factors.push_back({s, e});
    return m;
  }
  Monomial times(const Monomial& o) const {
    Monomial r;
    auto i = factors.begin();
    auto j = o.factors.begin();
    while (i != factors.end() || j != o.factors.end()) {
      if (j == o.factors.end() || (i != factors.end() && i->first < j->first))
        r.factors.push_back(*i++);
      else if (i == factors.end() || j->first < i->first)
        r.factors.push_back(*j++);
      else {
        r.factors.push_back({i->first, checkedAdd(i->second, j->second)});
        ++i;
        ++j;
      }
    }
    return r;
  }
  // Divide by o; nullopt when not divisible.
  std::optional<Monomial> dividedBy(const Monomial& o) const {
    Monomial r;
    auto i = factors.begin();
    for (const auto& [s, e] : o.factors) {
      while (i != factors.end() && i->first < s) r.factors.push_back(*i++);
      if (i == factors.end() || i->first != s || i->second < e) return std::nullopt;
      if (i->second > e) r.factors.push_back({s, i->second - e});
      ++i;
    }
    while (i != factors.end()) r.factors.push_back(*i++);
    return r;
  }
  Int evalAt(const Bindings& b) const {
    Int acc = 1;
    for (const auto& [s, e] : factors) {
      auto it = b.find(s);
      if (it == b.end()) throw UnboundSymbol(s);
      for (Int k = 0; k < e; ++k) acc = checkedMul(acc, it->second);
    }
    return acc;
  }
};

struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.factors < b.factors;
  }
};

class Poly {
 public:
  Poly() = default;
  static Poly constant(Int c) {
    Poly p;
    if (c != 0) p.terms_[Monomial::unit()] = c;
    return p;
  }
  static Poly var(const std::string& s) {
    Poly p;
    p.terms_[Monomial::var(s)] = 1;
    return p;
  }
  static Poly term(Int c, Monomial m) {
    Poly p;
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  const std::map<Monomial, Int, GradedLex>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
  }
  Int constantValue() const { return terms_.empty() ? 0 : terms_.begin()->second; }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, checkedMul(c, -1));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.addTerm(ma.times(mb), checkedMul(ca, cb));
    return r;
  }
  Poly powed(Int e) const {
    Poly r = Poly::constant(1);
    for (Int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  void addTerm(const Monomial& m, Int c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_[m] = c;
    else {
      it->second = checkedAdd(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int totalDegree() const {
    Int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }
  Int degreeIn(const std::string& s) const {
    Int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degreeIn(s));
    return d;
  }
  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.factors) out.insert(s);
    return out;
  }
  Int evalAt(const Bindings& b) const {
    Int acc = 0;
    for (const auto& [m, c] : terms_) acc = checkedAdd(acc, checkedMul(c, m.evalAt(b)));
    return acc;
  }
  // Substitute a polynomial for a symbol.
  Poly substituted(const std::string& s, const Poly& repl) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
      Poly t = Poly::constant(c);
      Monomial rest;
      Int e = 0;
      for (const auto& [n, k] : m.factors) {
        if (n == s)
          e = k;
        else
          rest.factors.push_back({n, k});
      }
      t = t * Poly::term(1, rest);
      if (e > 0) t = t * repl.powed(e);
      r += t;
    }
    return r;
  }

  // Greatest common monomial factor together with integer content (gcd of
  // coefficients, sign of the leading term preserved as positive content).
  std::pair<Int, Monomial> content() const {
    if (terms_.empty()) return {0, Monomial::unit()};
    Int g = 0;
    for (const auto& [m, c] : terms_) g = std::gcd(g, std::abs(c));
    Monomial common = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      Monomial next;
      for (const auto& [s, e] : common.factors) {
        Int d = m.degreeIn(s);
        if (d > 0) next.factors.push_back({s, std::min(e, d)});
      }
      common = next;
      if (common.factors.empty()) break;
    }
    return {g, common};
  }
  // Exact division by c * m; nullopt if any term fails.
  std::optional<Poly> dividedBy(Int c, const Monomial& m) const {
    if (c == 0) return std::nullopt;
    Poly r;
    for (const auto& [mm, cc] : terms_) {
      if (cc % c != 0) return std::nullopt;
      auto q = mm.dividedBy(m);
      if (!q) return std::nullopt;
      r.addTerm(*q, cc / c);
    }
    return r;
  }
  // Exact multivariate division by an arbitrary polynomial (single-divisor
  // reduction in graded-lex order); nullopt when the remainder is nonzero.
  std::optional<Poly> dividedByPoly(const Poly& d) const {
    if (d.isZero()) return std::nullopt;
    if (d.terms_.size() == 1) {
      const auto& [m, c] = *d.terms_.begin();
      return dividedBy(c, m);
    }
    if (terms_.size() > 256 || d.terms_.size() > 64) return std::nullopt;
    Poly rem = *this, quot;
    auto lead = [](const Poly& p) { return std::prev(p.terms_.end()); };
    const auto dl = lead(d);
    int guard = 0;
    while (!rem.isZero()) {
      if (++guard > 4096) return std::nullopt;
      auto rl = lead(rem);
      auto qm = rl->first.dividedBy(dl->first);
      if (!qm || rl->second % dl->second != 0) return std::nullopt;
      Int qc = rl->second / dl->second;
      Poly t = Poly::term(qc, *qm);
      quot += t;
      rem -= t * d;
    }
    return quot;
  }

  SymExpr toExpr() const {
    if (terms_.empty()) return SymExpr::constant(0);
    std::vector<SymExpr> parts;
    // Emit highest-order terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::vector<SymExpr> factors;
      if (c != 1 || m.factors.empty()) factors.push_back(SymExpr::constant(c));
      for (const auto& [s, e] : m.factors) factors.push_back(SymExpr::pow(SymExpr::symbol(s), e));
      parts.push_back(SymExpr::product(std::move(factors)));
    }
    return SymExpr::sum(std::move(parts));
  }

 private:
  std::map<Monomial, Int, GradedLex> terms_;
};

// Conversion from an expression tree; nullopt when floor/lcm nodes remain or
// the expansion exceeds the term budget (left opaque, never approximated).
inline std::optional<Poly> polyFromExpr(const SymExpr& e, size_t maxTerms = 2000) {
  switch (e.kind()) {
    case ExprKind::Constant: return Poly::constant(e.value());
    case ExprKind::Symbol: return Poly::var(e.name());
    case ExprKind::Sum: {
      Poly r;
      for (const auto& a : e.args()) {
        auto p = polyFromExpr(a, maxTerms);
        if (!p) return std::nullopt;
        r += *p;
        if (r.terms().size() > maxTerms) return std::nullopt;
      }
      return r;
    }
    case ExprKind::Product: {
      Poly r = Poly::constant(1);
      for (const auto& a : e.args()) {
        auto p = polyFromExpr(a, maxTerms);
        if (!p) return std::nullopt;
        if (r.terms().size() * std::max<size_t>(p->terms().size(), 1) > maxTerms * 32) return std::nullopt;
        r = r * *p;
        if (r.terms().size() > maxTerms) return std::nullopt;
      }
      return r;
    }
    case ExprKind::Power: {
      auto p = polyFromExpr(e.args()[0], maxTerms);
      if (!p) return std::nullopt;
      Poly r = Poly::constant(1);
      for (Int i = 0; i < e.value(); ++i) {
        if (r.terms().size() * std::max<size_t>(p->terms().size(), 1) > maxTerms * 32) return std::nullopt;
        r = r * *p;
        if (r.terms().size() > maxTerms) return std::nullopt;
      }
      return r;
    }
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// Rational-coefficient polynomials.  Used internally by summation formulas;
// results are emitted back as exact floor-division expressions.
// ---------------------------------------------------------------------------

struct Rational {
  Int num = 0, den = 1;
  Rational() = default;
  Rational(Int n) : num(n), den(1) {}
  Rational(Int n, Int d) : num(n), den(d) { normalize(); }
  void normalize() {
    if (den == 0) throw DivisionUndefined();
    if (den < 0) {
      num = checkedMul(num, -1);
      den = checkedMul(den, -1);
    }
    Int g = std::gcd(std::abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  friend Rational operator+(Rational a, Rational b) {
    return Rational(checkedAdd(checkedMul(a.num, b.den), checkedMul(b.num, a.den)), checkedMul(a.den, b.den));
  }
  friend Rational operator-(Rational a, Rational b) { return a + Rational(checkedMul(b.num, -1), b.den); }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(checkedMul(a.num, b.num), checkedMul(a.den, b.den));
  }
  bool isZero() const { return num == 0; }
  bool isInteger() const { return den == 1; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

class RationalPoly {
 public:
  RationalPoly() = default;
  static RationalPoly constant(Rational c) {
    RationalPoly p;
    if (!c.isZero()) p.terms_[Monomial::unit()] = c;
    return p;
  }
  static RationalPoly fromPoly(const Poly& p) {
    RationalPoly r;
    for (const auto& [m, c] : p.terms()) r.terms_[m] = Rational(c);
    return r;
  }
  static RationalPoly var(const std::string& s) {
    RationalPoly p;
    p.terms_[Monomial::var(s)] = Rational(1);
    return p;
  }

  const std::map<Monomial, Rational, GradedLex>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  void addTerm(const Monomial& m, Rational c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end())
      terms_[m] = c;
    else {
      it->second = it->second + c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  RationalPoly& operator+=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  RationalPoly& operator-=(const RationalPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, Rational(checkedMul(c.num, -1), c.den));
    return *this;
  }
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.addTerm(ma.times(mb), ca * cb);
    return r;
  }
  RationalPoly powed(Int e) const {
    RationalPoly r = RationalPoly::constant(Rational(1));
    for (Int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }
  bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

  RationalPoly substituted(const std::string& s, const RationalPoly& repl) const {
    RationalPoly r;
    for (const auto& [m, c] : terms_) {
      RationalPoly t = RationalPoly::constant(c);
      Monomial rest;
      Int e = 0;
      for (const auto& [n, k] : m.factors) {
        if (n == s)
          e = k;
        else
          rest.factors.push_back({n, k});
      }
      RationalPoly rp;
      rp.terms_[rest] = Rational(1);
      t = t * rp;
      if (e > 0) t = t * repl.powed(e);
      r += t;
    }
    return r;
  }

  Int commonDenominator() const {
    Int d = 1;
    for (const auto& [m, c] : terms_) d = std::lcm(d, c.den);
    return d;
  }
  // Multiply by the common denominator to get an integer polynomial.
  std::pair<Poly, Int> scaledToInteger() const {
    Int d = commonDenominator();
    Poly p;
    for (const auto& [m, c] : terms_) p.addTerm(m, checkedMul(c.num, d / c.den));
    return {p, d};
  }
  std::optional<Poly> asIntegerPoly() const {
    auto [p, d] = scaledToInteger();
    if (d != 1) return std::nullopt;
    return p;
  }
  Int degreeIn(const std::string& s) const {
    Int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degreeIn(s));
    return d;
  }
  std::set<std::string> symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.factors) out.insert(s);
    return out;
  }

 private:
  std::map<Monomial, Rational, GradedLex> terms_;
};

// ---------------------------------------------------------------------------
// Assumptions: per-symbol lower bounds, parity, coprimality, and extra
// polynomial constraints (e >= 0 atoms) used by relational hypotheses.
// ---------------------------------------------------------------------------

enum class Parity { Odd, Even };

class AssumptionSet {
 public:
  void declare(const std::string& s, std::optional<Int> lowerBound = std::nullopt) {
    symbols_.insert(s);
    if (lowerBound) lower_[s] = *lowerBound;
  }
  void setLowerBound(const std::string& s, Int lb) {
    symbols_.insert(s);
    lower_[s] = lb;
  }
  void setParity(const std::string& s, Parity p) {
    symbols_.insert(s);
    parity_[s] = p;
  }
  void setCoprime(std::string a, std::string b) {
    symbols_.insert(a);
    symbols_.insert(b);
    if (b < a) std::swap(a, b);
    coprime_.insert({a, b});
  }
  // Adds the constraint e >= 0.
  void addConstraint(SymExpr e) { constraints_.push_back(std::move(e)); }

  const std::set<std::string>& symbols() const { return symbols_; }
  std::optional<Int> lowerBound(const std::string& s) const {
    auto it = lower_.find(s);
    return it == lower_.end() ? std::nullopt : std::optional<Int>(it->second);
  }
  std::optional<Parity> parityOf(const std::string& s) const {
    auto it = parity_.find(s);
    return it == parity_.end() ? std::nullopt : std::optional<Parity>(it->second);
  }
  const std::set<std::pair<std::string, std::string>>& coprimePairs() const { return coprime_; }
  const std::vector<SymExpr>& polyConstraints() const { return constraints_; }

  // Admissible residues of s modulo m, from parity facts.
  std::vector<Int> residues(const std::string& s, Int m) const {
    std::vector<Int> out;
    auto p = parityOf(s);
    for (Int r = 0; r < m; ++r) {
      if (p && *p == Parity::Odd && r % 2 == 0 && m % 2 == 0) continue;
      if (p && *p == Parity::Even && r % 2 == 1 && m % 2 == 0) continue;
      out.push_back(r);
    }
    return out;
  }

  bool satisfiedBy(const Bindings& b) const {
    for (const auto& s : symbols_) {
      auto it = b.find(s);
      if (it == b.end()) return false;
      auto lb = lowerBound(s);
      if (lb && it->second < *lb) return false;
      auto p = parityOf(s);
      if (p) {
        bool odd = ((it->second % 2) + 2) % 2 == 1;
        if ((*p == Parity::Odd) != odd) return false;
      }
    }
    for (const auto& [x, y] : coprime_) {
      if (std::gcd(std::abs(b.at(x)), std::abs(b.at(y))) != 1) return false;
    }
    for (const auto& c : constraints_) {
      if (c.eval(b) < 0) return false;
    }
    return true;
  }

  // Search for a small concrete witness; each symbol scans [lb, lb+radius].
  std::optional<Bindings> findWitness(Int radius = 24) const {
    std::vector<std::string> syms(symbols_.begin(), symbols_.end());
    Bindings b;
    std::optional<Bindings> found;
    std::function<void(size_t)> rec = [&](size_t idx) {
      if (found) return;
      if (idx == syms.size()) {
        if (satisfiedBy(b)) found = b;
        return;
      }
      Int lb = lowerBound(syms[idx]).value_or(1);
      for (Int v = lb; v <= lb + radius && !found; ++v) {
        auto p = parityOf(syms[idx]);
        if (p && ((*p == Parity::Odd) != (((v % 2) + 2) % 2 == 1))) continue;
        b[syms[idx]] = v;
        rec(idx + 1);
      }
      b.erase(syms[idx]);
    };
    rec(0);
    return found;
  }

  // Enumerate up to `count` witnesses within the radius, for sampling checks.
  std::vector<Bindings> sampleWitnesses(size_t count, Int radius = 12) const {
    std::vector<std::string> syms(symbols_.begin(), symbols_.end());
    std::vector<Bindings> out;
    Bindings b;
    std::function<void(size_t)> rec = [&](size_t idx) {
      if (out.size() >= count) return;
      if (idx == syms.size()) {
        if (satisfiedBy(b)) out.push_back(b);
        return;
      }
      Int lb = lowerBound(syms[idx]).value_or(1);
      for (Int v = lb; v <= lb + radius && out.size() < count; ++v) {
        b[syms[idx]] = v;
        rec(idx + 1);
      }
      b.erase(syms[idx]);
    };
    rec(0);
    return out;
  }

 private:
  std::set<std::string> symbols_;
  std::map<std::string, Int> lower_;
  std::map<std::string, Parity> parity_;
  std::set<std::pair<std::string, std::string>> coprime_;
  std::vector<SymExpr> constraints_;
};

// ---------------------------------------------------------------------------
// Sound nonnegativity proving for polynomials under assumptions, by Taylor
// shift: substitute s -> lb(s) + u (u >= 0) for every symbol; if the shifted
// polynomial has only nonnegative coefficients the original is nonnegative
// on the assumed domain.  Parity facts refine via s = 2t + r substitution.
// ---------------------------------------------------------------------------

inline std::optional<Poly> shiftToAssumedOrigin(const Poly& p, const AssumptionSet& asm_) {
  Poly cur = p;
  for (const auto& s : p.symbols()) {
    auto lb = asm_.lowerBound(s);
    if (!lb) return std::nullopt;
    Int base = *lb;
    auto par = asm_.parityOf(s);
    if (par) {
      // s = 2u + base' with base' = smallest admissible value >= lb.
      bool baseOdd = ((base % 2) + 2) % 2 == 1;
      if ((*par == Parity::Odd) != baseOdd) base += 1;
      Poly repl = Poly::constant(base) + Poly::constant(2) * Poly::var("_sh_" + s);
      cur = cur.substituted(s, repl);
    } else {
      Poly repl = Poly::constant(base) + Poly::var("_sh_" + s);
      cur = cur.substituted(s, repl);
    }
  }
  return cur;
}

// Proves p >= 0 for all assignments satisfying the assumptions; sound but
// incomplete.  Returns false for "unknown", never falsely true.
inline bool provePolyNonnegative(const Poly& p, const AssumptionSet& asm_) {
  if (p.totalDegree() > 16 || p.terms().size() > 400) return false;
  try {
    auto shifted = shiftToAssumedOrigin(p, asm_);
    if (!shifted) return false;
    for (const auto& [m, c] : shifted->terms())
      if (c < 0) return false;
    return true;
  } catch (const OverflowError&) {
    return false;
  }
}

// p >= 1 on the assumed domain.
inline bool provePolyPositive(const Poly& p, const AssumptionSet& asm_) {
  return provePolyNonnegative(p - Poly::constant(1), asm_);
}

// Checks that a polynomial is identically divisible by a constant modulus on
// every assignment admissible under the assumptions (residue enumeration;
// parity facts restrict residues).  Sound and complete for the constant case.
inline bool polyDivisibleByConst(const Poly& p, Int m, const AssumptionSet& asm_) {
  if (m <= 0) return false;
  if (m == 1) return true;
  if (p.terms().size() > 64 || p.totalDegree() > 16) return false;
  std::vector<std::string> syms;
  for (const auto& s : p.symbols()) syms.push_back(s);
  // Residue tuples grow as m^k; the summation engine only needs small m.
  if (syms.size() > 4) return false;
  std::vector<std::vector<Int>> residues;
  size_t total = 1;
  for (const auto& s : syms) {
    auto r = asm_.residues(s, m);
    // Shift residues so they respect the lower bound's parity handling; the
    // residue set from AssumptionSet is already parity-filtered.
    residues.push_back(r);
    total *= r.size();
    if (total > 4096) return false;
  }
  std::vector<size_t> idx(syms.size(), 0);
  Bindings b;
  for (size_t n = 0; n < total; ++n) {
    size_t rem = n;
    for (size_t i = 0; i < syms.size(); ++i) {
      b[syms[i]] = residues[i][rem % residues[i].size()];
      rem /= residues[i].size();
    }
    Int v = ((p.evalAt(b) % m) + m) % m;
    if (v != 0) return false;
  }
  return true;
}

// Finds the unique constant rho in [0, m) with p == rho (mod m) identically
// under the assumptions, when one exists.
inline std::optional<Int> polyConstResidue(const Poly& p, Int m, const AssumptionSet& asm_) {
  if (m > 64) return std::nullopt;
  for (Int rho = 0; rho < m; ++rho) {
    if (polyDivisibleByConst(p - Poly::constant(rho), m, asm_)) return rho;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Guard oracle used by floorSimplify.  The default implementation proves
// bounds by Taylor shift; an SMT-backed oracle can be layered on top.
// ---------------------------------------------------------------------------

enum class Verdict3 { Proven, Refuted, Unknown };

class GuardProver {
 public:
  virtual ~GuardProver() = default;
  // Prove that e >= 0 for all assignments satisfying the assumptions.
  virtual Verdict3 proveNonnegative(const SymExpr& e, const AssumptionSet& asm_) const = 0;
};

class PolyGuardProver : public GuardProver {
 public:
  Verdict3 proveNonnegative(const SymExpr& e, const AssumptionSet& asm_) const override {
    auto p = polyFromExpr(e);
    if (!p) return Verdict3::Unknown;
    if (provePolyNonnegative(*p, asm_)) return Verdict3::Proven;
    return Verdict3::Unknown;
  }
};

inline const GuardProver& defaultGuardProver() {
  static PolyGuardProver p;
  return p;
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

enum class FloorStatus { ExactQuotient, ConstantRule, Unchanged };

struct FloorResult {
  SymExpr expr;
  FloorStatus status = FloorStatus::Unchanged;
};

SymExpr simplify(const SymExpr& e, const AssumptionSet& asm_ = {},
                 const GuardProver& guard = defaultGuardProver());

// floor(num/den) simplification:
//  - exact polynomial division (including division by the denominator's
//    monomial part with remainder handling),
//  - constant denominators resolved through residue analysis,
//  - the leading-coefficient rule floor(r/q) in {0, -1} for deg r < deg q,
//    applied only when the bound 0 <= r < q (resp. -q <= r < 0) is proven.
inline FloorResult floorSimplify(const SymExpr& numIn, const SymExpr& denIn, const AssumptionSet& asm_,
                                 const GuardProver& guard = defaultGuardProver()) {
  SymExpr num = simplify(numIn, asm_, guard);
  SymExpr den = simplify(denIn, asm_, guard);
  auto np = polyFromExpr(num);
  auto dp = polyFromExpr(den);
  if (!np || !dp || dp->isZero()) return {SymExpr::floorDiv(num, den), FloorStatus::Unchanged};

  // Constant denominator: use residue analysis.  floor((p - rho)/m + rho/m)
  // with p == rho (mod m) identically gives the exact quotient (p - rho)/m.
  if (dp->isConstant()) {
    Int m = dp->constantValue();
    if (m >= 1) {
      if (auto rho = polyConstResidue(*np, m, asm_)) {
        auto q = (*np - Poly::constant(*rho)).dividedBy(m, Monomial::unit());
        if (q) return {q->toExpr(), FloorStatus::ExactQuotient};
      }
    }
  }

  // Split num = quot * den + rem by exact division against the denominator.
  Poly quot, rem;
  if (auto q = np->dividedByPoly(*dp)) {
    quot = *q;
  } else if (dp->terms().size() == 1) {
    // Monomial denominator: per-term split into divisible and remainder parts.
    const auto& [dm, dc] = *dp->terms().begin();
    Poly divisible;
    for (const auto& [m, c] : np->terms()) {
      auto qm = m.dividedBy(dm);
      if (qm && c % dc == 0)
        quot.addTerm(*qm, c / dc);
      else
        rem.addTerm(m, c);
    }
  } else {
    rem = *np;
  }

  if (rem.isZero()) return {quot.toExpr(), FloorStatus::ExactQuotient};

  // Leading-coefficient rule on the remainder part.
  SymExpr remE = rem.toExpr();
  SymExpr denE = dp->toExpr();
  // Positive case: 0 <= rem and rem <= den - 1  =>  floor(rem/den) = 0.
  bool nonneg = guard.proveNonnegative(remE, asm_) == Verdict3::Proven;
  bool belowDen = guard.proveNonnegative(denE - remE - 1, asm_) == Verdict3::Proven;
  if (nonneg && belowDen) {
    return {quot.toExpr(), quot.isZero() ? FloorStatus::ConstantRule : FloorStatus::ExactQuotient};
  }
  // Negative case: -den <= rem <= -1  =>  floor(rem/den) = -1.
  bool negSide = guard.proveNonnegative(-1 * remE - 1, asm_) == Verdict3::Proven;
  bool aboveNegDen = guard.proveNonnegative(remE + denE, asm_) == Verdict3::Proven;
  if (negSide && aboveNegDen) {
    Poly res = quot - Poly::constant(1);
    return {res.toExpr(), FloorStatus::ConstantRule};
  }
  return {SymExpr::floorDiv(num, den), FloorStatus::Unchanged};
}

inline SymExpr simplify(const SymExpr& e, const AssumptionSet& asm_, const GuardProver& guard) {
  // Pure polynomial subtree: canonical expanded form.
  if (auto p = polyFromExpr(e)) return p->toExpr();

  switch (e.kind()) {
    case ExprKind::Sum:
    case ExprKind::Product: {
      // Simplify children, then fold the polynomial part.
      std::vector<SymExpr> simple;
      simple.reserve(e.args().size());
      for (const auto& a : e.args()) simple.push_back(simplify(a, asm_, guard));
      bool isSum = e.kind() == ExprKind::Sum;
      Poly acc = isSum ? Poly() : Poly::constant(1);
      std::vector<SymExpr> opaque;
      for (auto& s : simple) {
        if (auto p = polyFromExpr(s)) {
          if (isSum)
            acc += *p;
          else
            acc = acc * *p;
        } else {
          opaque.push_back(std::move(s));
        }
      }
      if (opaque.empty()) return acc.toExpr();
      if (isSum) {
        if (!acc.isZero()) opaque.push_back(acc.toExpr());
        return SymExpr::sum(std::move(opaque));
      }
      if (acc.isConstant() && acc.constantValue() == 1 && opaque.size() == 1) return opaque.front();
      if (acc.isZero()) return SymExpr::constant(0);
      if (!(acc.isConstant() && acc.constantValue() == 1)) opaque.insert(opaque.begin(), acc.toExpr());
      return SymExpr::product(std::move(opaque));
    }
    case ExprKind::Power: {
      SymExpr b = simplify(e.args()[0], asm_, guard);
      if (auto p = polyFromExpr(b)) return p->powed(e.value()).toExpr();
      return SymExpr::pow(b, e.value());
    }
    case ExprKind::FloorDiv: return floorSimplify(e.args()[0], e.args()[1], asm_, guard).expr;
    case ExprKind::Lcm: {
      std::vector<SymExpr> parts;
      Int constLcm = 1;
      std::vector<Poly> polys;
      for (const auto& a : e.args()) {
        SymExpr s = simplify(a, asm_, guard);
        if (s.kind() == ExprKind::Constant && s.value() != 0) {
          constLcm = std::lcm(constLcm, std::abs(s.value()));
        } else if (auto p = polyFromExpr(s)) {
          polys.push_back(*p);
        } else {
          parts.push_back(s);
        }
      }
      // Divisibility rule: lcm(d, d*e) = d*e.  Drop arguments that divide
      // another argument exactly.
      std::vector<bool> drop(polys.size(), false);
      for (size_t i = 0; i < polys.size(); ++i)
        for (size_t j = 0; j < polys.size(); ++j) {
          if (i == j || drop[i] || drop[j]) continue;
          if (polys[j].dividedByPoly(polys[i])) {
            if (i < j && polys[i] == polys[j]) continue;
            drop[i] = true;
            break;
          }
        }
      std::vector<SymExpr> kept;
      if (constLcm != 1) {
        // Fold constants divisible into polynomial args where possible.
        bool folded = false;
        for (size_t j = 0; j < polys.size() && !folded; ++j)
          if (!drop[j] && polys[j].dividedBy(constLcm, Monomial::unit())) folded = true;
        if (!folded) kept.push_back(SymExpr::constant(constLcm));
      }
      std::vector<const Poly*> keptPolys;
      for (size_t i = 0; i < polys.size(); ++i)
        if (!drop[i]) {
          kept.push_back(polys[i].toExpr());
          keptPolys.push_back(&polys[i]);
        }
      for (auto& p : parts) kept.push_back(std::move(p));
      if (kept.empty()) return SymExpr::constant(1);
      if (kept.size() == 1) {
        // lcm(e) = |e|: collapse the node only when the sign is settled.
        bool nonneg = kept.front().kind() == ExprKind::Constant
                          ? kept.front().value() >= 0
                          : (keptPolys.size() == 1 && parts.empty() &&
                             provePolyNonnegative(*keptPolys[0], asm_));
        if (nonneg) return kept.front();
      }
      return SymExpr::lcmOf(std::move(kept));
    }
    default: return e;
  }
}

inline SymExpr SymExpr::substitute(const Bindings& b) const {
  switch (kind()) {
    case ExprKind::Constant: return *this;
    case ExprKind::Symbol: {
      auto it = b.find(name());
      return it == b.end() ? *this : SymExpr::constant(it->second);
    }
    default: {
      std::vector<SymExpr> newArgs;
      newArgs.reserve(args().size());
      bool allConst = true;
      for (const auto& a : args()) {
        newArgs.push_back(a.substitute(b));
        allConst = allConst && newArgs.back().kind() == ExprKind::Constant;
      }
      SymExpr rebuilt;
      switch (kind()) {
        case ExprKind::Sum: rebuilt = SymExpr::sum(std::move(newArgs)); break;
        case ExprKind::Product: rebuilt = SymExpr::product(std::move(newArgs)); break;
        case ExprKind::Power: rebuilt = SymExpr::pow(newArgs[0], value()); break;
        case ExprKind::FloorDiv: rebuilt = SymExpr::floorDiv(newArgs[0], newArgs[1]); break;
        case ExprKind::Lcm: rebuilt = SymExpr::lcmOf(std::move(newArgs)); break;
        default: throw std::logic_error("bad kind");
      }
      if (allConst && rebuilt.kind() != ExprKind::Constant) return SymExpr::constant(rebuilt.eval({}));
      return rebuilt;
    }
  }
}

// ---------------------------------------------------------------------------
// Equality proving
// ---------------------------------------------------------------------------

struct EqVerdict {
  Verdict3 verdict = Verdict3::Unknown;
  Bindings counterexample;  // populated on Refuted
};

// Absorb floor nodes with constant denominators that divide their numerator
// identically under the assumptions; nullopt when a genuine floor remains.
inline std::optional<RationalPoly> exactRationalForm(const SymExpr& e, const AssumptionSet& asm_) {
  switch (e.kind()) {
    case ExprKind::Constant: return RationalPoly::constant(Rational(e.value()));
    case ExprKind::Symbol: return RationalPoly::var(e.name());
    case ExprKind::Sum: {
      RationalPoly r;
      for (const auto& a : e.args()) {
        auto p = exactRationalForm(a, asm_);
        if (!p) return std::nullopt;
        r += *p;
      }
      return r;
    }
    case ExprKind::Product: {
      RationalPoly r = RationalPoly::constant(Rational(1));
      for (const auto& a : e.args()) {
        auto p = exactRationalForm(a, asm_);
        if (!p) return std::nullopt;
        r = r * *p;
      }
      return r;
    }
    case ExprKind::Power: {
      auto p = exactRationalForm(e.args()[0], asm_);
      if (!p) return std::nullopt;
      return p->powed(e.value());
    }
    case ExprKind::FloorDiv: {
      auto np = exactRationalForm(e.args()[0], asm_);
      auto dp = exactRationalForm(e.args()[1], asm_);
      if (!np || !dp) return std::nullopt;
      auto dInt = dp->asIntegerPoly();
      if (!dInt) return std::nullopt;
      // Constant denominator m: exact iff numerator scaled is divisible by m
      // identically under the assumptions.
      if (dInt->isConstant()) {
        Int m = dInt->constantValue();
        if (m < 1) return std::nullopt;
        auto [scaled, d] = np->scaledToInteger();
        // num = scaled/d; floor(num/m) exact iff num/m integer-valued, i.e.
        // scaled divisible by d*m with integrality witnessed by residues.
        if (polyDivisibleByConst(scaled, d * m, asm_)) {
          RationalPoly r;
          for (const auto& [mono, c] : scaled.terms()) r.addTerm(mono, Rational(c, d * m));
          return r;
        }
        return std::nullopt;
      }
      // Polynomial denominator: exact division only.
      auto nInt = np->asIntegerPoly();
      if (!nInt) return std::nullopt;
      if (auto q = nInt->dividedByPoly(*dInt)) return RationalPoly::fromPoly(*q);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

inline EqVerdict proveEqPolynomial(const SymExpr& e1, const SymExpr& e2, const AssumptionSet& asm_) {
  auto p1 = exactRationalForm(e1, asm_);
  auto p2 = exactRationalForm(e2, asm_);
  if (p1 && p2) {
    if (*p1 == *p2) return {Verdict3::Proven, {}};
    // Difference is a nonzero rational polynomial: find a concrete refutation.
    for (const auto& w : asm_.sampleWitnesses(64, 16)) {
      try {
        if (e1.eval(w) != e2.eval(w)) return {Verdict3::Refuted, w};
      } catch (const std::exception&) {
      }
    }
    return {Verdict3::Unknown, {}};
  }
  // Non-polynomial route: sample for refutation; equality stays unknown here.
  for (const auto& w : asm_.sampleWitnesses(64, 16)) {
    try {
      if (e1.eval(w) != e2.eval(w)) return {Verdict3::Refuted, w};
    } catch (const std::exception&) {
    }
  }
  return {Verdict3::Unknown, {}};
}

// ---------------------------------------------------------------------------
// Text syntax: integer literals, symbols, + - * ^, floor(p, q),
// lcm(e1, e2, ...), parentheses.  Whitespace-insensitive.
// ---------------------------------------------------------------------------

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  SymExpr parse() {
    SymExpr e = parseSum();
    skipWs();
    if (pos_ != text_.size()) throw ParseError("trailing input at offset " + std::to_string(pos_));
    return e;
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skipWs();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skipWs();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  SymExpr parseSum() {
    std::vector<SymExpr> parts;
    bool neg = eat('-');
    SymExpr t = parseTerm();
    parts.push_back(neg ? -t : t);
    while (true) {
      if (eat('+'))
        parts.push_back(parseTerm());
      else if (eat('-'))
        parts.push_back(-parseTerm());
      else
        break;
    }
    return SymExpr::sum(std::move(parts));
  }
  SymExpr parseTerm() {
    std::vector<SymExpr> parts{parseFactor()};
    while (eat('*')) parts.push_back(parseFactor());
    return SymExpr::product(std::move(parts));
  }
  SymExpr parseFactor() {
    SymExpr base = parseBase();
    if (eat('^')) {
      skipWs();
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent");
      return SymExpr::pow(base, std::stoll(std::string(text_.substr(start, pos_ - start))));
    }
    return base;
  }
  SymExpr parseBase() {
    skipWs();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return SymExpr::constant(std::stoll(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == '(') {
      ++pos_;
      SymExpr e = parseSum();
      if (!eat(')')) throw ParseError("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -parseBase();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string ident(text_.substr(start, pos_ - start));
      if ((ident == "floor" || ident == "lcm") && peek() == '(') {
        ++pos_;
        std::vector<SymExpr> args{parseSum()};
        while (eat(',')) args.push_back(parseSum());
        if (!eat(')')) throw ParseError("expected ')'");
        if (ident == "floor") {
          if (args.size() != 2) throw ParseError("floor takes two arguments");
          return SymExpr::floorDiv(args[0], args[1]);
        }
        return SymExpr::lcmOf(std::move(args));
      }
      return SymExpr::symbol(ident);
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace detail

inline SymExpr parseExpr(std::string_view text) { return detail::ExprParser(text).parse(); }

inline std::string SymExpr::toString() const {
  std::ostringstream os;
  switch (kind()) {
    case ExprKind::Constant: os << value(); break;
    case ExprKind::Symbol: os << name(); break;
    case ExprKind::Sum: {
      for (size_t i = 0; i < args().size(); ++i) {
        std::string part = args()[i].toString();
        if (i == 0) {
          os << part;
        } else if (!part.empty() && part[0] == '-') {
          os << " - " << part.substr(1);
        } else {
          os << " + " << part;
        }
      }
      break;
    }
    case ExprKind::Product: {
      size_t start = 0;
      if (args().size() > 1 && args()[0].isConstant(-1)) {
        os << "-";
        start = 1;
      }
      for (size_t i = start; i < args().size(); ++i) {
        if (i > start) os << "*";
        const SymExpr& a = args()[i];
        bool paren = a.kind() == ExprKind::Sum || (a.kind() == ExprKind::Constant && a.value() < 0 && i > start);
        os << (paren ? "(" : "") << a.toString() << (paren ? ")" : "");
      }
      break;
    }
    case ExprKind::Power: {
      const SymExpr& b = args()[0];
      bool paren = b.kind() != ExprKind::Symbol && b.kind() != ExprKind::Constant;
      os << (paren ? "(" : "") << b.toString() << (paren ? ")" : "") << "^" << value();
      break;
    }
    case ExprKind::FloorDiv:
      os << "floor(" << args()[0].toString() << ", " << args()[1].toString() << ")";
      break;
    case ExprKind::Lcm: {
      os << "lcm(";
      for (size_t i = 0; i < args().size(); ++i) {
        if (i) os << ", ";
        os << args()[i].toString();
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace rado
