#pragma once

// Constraint atoms over symbolic expressions: comparisons, divisibility,
// and boolean structure.  Used by membership conditions, case systems and
// the SMT bridge.

#include <memory>
#include <string>
#include <vector>

#include "rado/symexpr.hpp"

namespace rado {

enum class CmpOp { Le, Lt, Eq, Ne, Ge, Gt };

enum class ConstraintKind { Cmp, Divides, NotDivides, And, Or, Not, True, False };

class Constraint {
  struct Node;
  struct FromNode {};
  Constraint(FromNode, std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Constraint make(Node n) { return {FromNode{}, std::make_shared<Node>(std::move(n))}; }

 public:
  Constraint() : Constraint(alwaysTrue()) {}

  static Constraint cmp(CmpOp op, SymExpr lhs, SymExpr rhs) {
    return make(Node{ConstraintKind::Cmp, op, std::move(lhs), std::move(rhs), {}});
  }
  static Constraint le(SymExpr l, SymExpr r) { return cmp(CmpOp::Le, std::move(l), std::move(r)); }
  static Constraint lt(SymExpr l, SymExpr r) { return cmp(CmpOp::Lt, std::move(l), std::move(r)); }
  static Constraint eq(SymExpr l, SymExpr r) { return cmp(CmpOp::Eq, std::move(l), std::move(r)); }
  static Constraint ne(SymExpr l, SymExpr r) { return cmp(CmpOp::Ne, std::move(l), std::move(r)); }
  static Constraint ge(SymExpr l, SymExpr r) { return cmp(CmpOp::Ge, std::move(l), std::move(r)); }

  static Constraint divides(SymExpr d, SymExpr e) {
    return make(Node{ConstraintKind::Divides, CmpOp::Eq, std::move(d), std::move(e), {}});
  }
  static Constraint notDivides(SymExpr d, SymExpr e) {
    return make(Node{ConstraintKind::NotDivides, CmpOp::Eq, std::move(d), std::move(e), {}});
  }
  static Constraint conj(std::vector<Constraint> cs) {
    if (cs.empty()) return alwaysTrue();
    if (cs.size() == 1) return cs.front();
    return make(Node{ConstraintKind::And, CmpOp::Eq, {}, {}, std::move(cs)});
  }
  static Constraint disj(std::vector<Constraint> cs) {
    if (cs.empty()) return alwaysFalse();
    if (cs.size() == 1) return cs.front();
    return make(Node{ConstraintKind::Or, CmpOp::Eq, {}, {}, std::move(cs)});
  }
  static Constraint negate(Constraint inner) {
    return make(Node{ConstraintKind::Not, CmpOp::Eq, {}, {}, {std::move(inner)}});
  }
  static Constraint alwaysTrue() {
    return make(Node{ConstraintKind::True, CmpOp::Eq, {}, {}, {}});
  }
  static Constraint alwaysFalse() {
    return make(Node{ConstraintKind::False, CmpOp::Eq, {}, {}, {}});
  }

  ConstraintKind kind() const { return node_->kind; }
  CmpOp op() const { return node_->op; }
  const SymExpr& lhs() const { return node_->lhs; }
  const SymExpr& rhs() const { return node_->rhs; }
  const std::vector<Constraint>& children() const { return node_->children; }

  bool eval(const Bindings& b) const {
    switch (kind()) {
      case ConstraintKind::Cmp: {
        Int l = lhs().eval(b), r = rhs().eval(b);
        switch (op()) {
          case CmpOp::Le: return l <= r;
          case CmpOp::Lt: return l < r;
          case CmpOp::Eq: return l == r;
          case CmpOp::Ne: return l != r;
          case CmpOp::Ge: return l >= r;
          case CmpOp::Gt: return l > r;
        }
        return false;
      }
      case ConstraintKind::Divides: {
        Int d = lhs().eval(b);
        if (d == 0) throw DivisionUndefined();
        return rhs().eval(b) % d == 0;
      }
      case ConstraintKind::NotDivides: {
        Int d = lhs().eval(b);
        if (d == 0) throw DivisionUndefined();
        return rhs().eval(b) % d != 0;
      }
      case ConstraintKind::And:
        for (const auto& c : children())
          if (!c.eval(b)) return false;
        return true;
      case ConstraintKind::Or:
        for (const auto& c : children())
          if (c.eval(b)) return true;
        return false;
      case ConstraintKind::Not: return !children()[0].eval(b);
      case ConstraintKind::True: return true;
      case ConstraintKind::False: return false;
    }
    return false;
  }

  void collectSymbols(std::set<std::string>& out) const {
    switch (kind()) {
      case ConstraintKind::Cmp:
      case ConstraintKind::Divides:
      case ConstraintKind::NotDivides:
        lhs().collectSymbols(out);
        rhs().collectSymbols(out);
        break;
      default:
        for (const auto& c : children()) c.collectSymbols(out);
    }
  }
  std::set<std::string> symbolsUsed() const {
    std::set<std::string> s;
    collectSymbols(s);
    return s;
  }

  Constraint substitute(const Bindings& b) const {
    switch (kind()) {
      case ConstraintKind::Cmp: return cmp(op(), lhs().substitute(b), rhs().substitute(b));
      case ConstraintKind::Divides: return divides(lhs().substitute(b), rhs().substitute(b));
      case ConstraintKind::NotDivides: return notDivides(lhs().substitute(b), rhs().substitute(b));
      case ConstraintKind::And: {
        std::vector<Constraint> cs;
        for (const auto& c : children()) cs.push_back(c.substitute(b));
        return conj(std::move(cs));
      }
      case ConstraintKind::Or: {
        std::vector<Constraint> cs;
        for (const auto& c : children()) cs.push_back(c.substitute(b));
        return disj(std::move(cs));
      }
      case ConstraintKind::Not: return negate(children()[0].substitute(b));
      default: return *this;
    }
  }

  // Negation normal form; divisibility atoms flip between Divides and
  // NotDivides so that witness encodings only ever appear positively.
  Constraint toNnf(bool negated = false) const {
    switch (kind()) {
      case ConstraintKind::Cmp: {
        if (!negated) return *this;
        CmpOp flipped;
        switch (op()) {
          case CmpOp::Le: flipped = CmpOp::Gt; break;
          case CmpOp::Lt: flipped = CmpOp::Ge; break;
          case CmpOp::Eq: flipped = CmpOp::Ne; break;
          case CmpOp::Ne: flipped = CmpOp::Eq; break;
          case CmpOp::Ge: flipped = CmpOp::Lt; break;
          case CmpOp::Gt: flipped = CmpOp::Le; break;
          default: flipped = CmpOp::Eq;
        }
        return cmp(flipped, lhs(), rhs());
      }
      case ConstraintKind::Divides: return negated ? notDivides(lhs(), rhs()) : *this;
      case ConstraintKind::NotDivides: return negated ? divides(lhs(), rhs()) : *this;
      case ConstraintKind::And:
      case ConstraintKind::Or: {
        std::vector<Constraint> cs;
        for (const auto& c : children()) cs.push_back(c.toNnf(negated));
        bool isAnd = (kind() == ConstraintKind::And) != negated;
        return isAnd ? conj(std::move(cs)) : disj(std::move(cs));
      }
      case ConstraintKind::Not: return children()[0].toNnf(!negated);
      case ConstraintKind::True: return negated ? alwaysFalse() : alwaysTrue();
      case ConstraintKind::False: return negated ? alwaysTrue() : alwaysFalse();
    }
    return *this;
  }

  std::string toString() const {
    switch (kind()) {
      case ConstraintKind::Cmp: {
        const char* ops[] = {"<=", "<", "==", "!=", ">=", ">"};
        return lhs().toString() + " " + ops[static_cast<int>(op())] + " " + rhs().toString();
      }
      case ConstraintKind::Divides: return lhs().toString() + " | " + rhs().toString();
      case ConstraintKind::NotDivides: return lhs().toString() + " !| " + rhs().toString();
      case ConstraintKind::And: {
        std::string s = "(";
        for (size_t i = 0; i < children().size(); ++i)
          s += (i ? " & " : "") + children()[i].toString();
        return s + ")";
      }
      case ConstraintKind::Or: {
        std::string s = "(";
        for (size_t i = 0; i < children().size(); ++i)
          s += (i ? " | " : "") + children()[i].toString();
        return s + ")";
      }
      case ConstraintKind::Not: return "!" + children()[0].toString();
      case ConstraintKind::True: return "true";
      case ConstraintKind::False: return "false";
    }
    return "?";
  }

 private:
  struct Node {
    ConstraintKind kind;
    CmpOp op;
    SymExpr lhs, rhs;
    std::vector<Constraint> children;
  };
  std::shared_ptr<const Node> node_;
};

}  // namespace rado
