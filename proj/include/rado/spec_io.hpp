#pragma once

// Coloring-spec JSON ingestion and report emission.
//
// Spec document shape:
// {
//   "name": "...",
//   "equation": {"lhsCoeffs": ["a", "1"], "rhsCoeff": "1", "constant": "0"},
//   "symbols": [{"name": "a", "min": 7, "parity": "odd"}, ...],
//   "coprime": [["a", "b"]],
//   "constraints": ["a - b - 1"],              // each expression >= 0
//   "N": "a^3+5*a^2+7*a",
//   "classes": [{"name": "...", "sets": [
//     {"kind": "interval", "lower": "...", "upper": "...",
//      "div": [...], "ndiv": [...]},
//     {"kind": "format", "indices": [{"name": "i", "lower": "...",
//      "upper": "..."}], "expr": "...", "div": [...], "ndiv": [...],
//      "residueFilter": {"divisor": "...", "expr": "..."},
//      "exclude": [{"expr": "...", "witness": {"i": "..."}}],
//      "injective": "declared" | "proven"}]}]
// }

#include <fstream>

#include <nlohmann/json.hpp>

#include "rado/prover.hpp"

namespace rado {

using nlohmann::json;

struct SpecParseError : std::runtime_error {
  explicit SpecParseError(const std::string& m) : std::runtime_error("spec error: " + m) {}
};

inline ColoringSpec parseColoringSpec(const json& j) {
  ColoringSpec spec;
  spec.name = j.value("name", "unnamed");
  if (!j.contains("equation") || !j.contains("N") || !j.contains("classes"))
    throw SpecParseError("missing equation/N/classes");

  const json& eq = j["equation"];
  for (const auto& c : eq.at("lhsCoeffs")) spec.equation.lhsCoeffs.push_back(parseExpr(c.get<std::string>()));
  spec.equation.rhsCoeff = parseExpr(eq.at("rhsCoeff").get<std::string>());
  if (eq.contains("constant")) spec.equation.constant = parseExpr(eq["constant"].get<std::string>());
  if (spec.equation.lhsCoeffs.size() < 2) throw SpecParseError("equation needs at least 3 terms");

  for (const auto& s : j.value("symbols", json::array())) {
    std::string name = s.at("name").get<std::string>();
    if (s.contains("min"))
      spec.assumptions.setLowerBound(name, s["min"].get<Int>());
    else
      spec.assumptions.declare(name);
    if (s.contains("parity")) {
      std::string p = s["parity"].get<std::string>();
      if (p == "odd")
        spec.assumptions.setParity(name, Parity::Odd);
      else if (p == "even")
        spec.assumptions.setParity(name, Parity::Even);
      else
        throw SpecParseError("parity must be odd or even");
    }
  }
  for (const auto& pair : j.value("coprime", json::array())) {
    spec.assumptions.setCoprime(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  }
  for (const auto& c : j.value("constraints", json::array()))
    spec.assumptions.addConstraint(parseExpr(c.get<std::string>()));

  spec.domainBound = parseExpr(j.at("N").get<std::string>());

  auto parseExprList = [](const json& arr) {
    std::vector<SymExpr> out;
    for (const auto& e : arr) out.push_back(parseExpr(e.get<std::string>()));
    return out;
  };

  for (const auto& cj : j["classes"]) {
    ColorClass cls;
    cls.name = cj.at("name").get<std::string>();
    for (const auto& sj : cj.at("sets")) {
      std::string kind = sj.at("kind").get<std::string>();
      if (kind == "interval") {
        IntervalSet is;
        is.lower = parseExpr(sj.at("lower").get<std::string>());
        is.upper = parseExpr(sj.at("upper").get<std::string>());
        is.requiredDivisors = parseExprList(sj.value("div", json::array()));
        is.excludedDivisors = parseExprList(sj.value("ndiv", json::array()));
        cls.members.push_back(std::move(is));
      } else if (kind == "format") {
        FormatSet fs;
        for (const auto& iv : sj.at("indices")) {
          fs.indexVars.push_back({iv.at("name").get<std::string>(),
                                  parseExpr(iv.at("lower").get<std::string>()),
                                  parseExpr(iv.at("upper").get<std::string>())});
        }
        fs.formatExpr = parseExpr(sj.at("expr").get<std::string>());
        fs.requiredDivisors = parseExprList(sj.value("div", json::array()));
        fs.excludedDivisors = parseExprList(sj.value("ndiv", json::array()));
        if (sj.contains("residueFilter")) {
          fs.residueFilter = ResidueFilter{parseExpr(sj["residueFilter"].at("divisor").get<std::string>()),
                                           parseExpr(sj["residueFilter"].at("expr").get<std::string>())};
        }
        for (const auto& ej : sj.value("exclude", json::array())) {
          ExcludedElement ee;
          ee.expr = parseExpr(ej.at("expr").get<std::string>());
          for (const auto& [k, v] : ej.value("witness", json::object()).items())
            ee.witness[k] = parseExpr(v.get<std::string>());
          fs.excludedElements.push_back(std::move(ee));
        }
        std::string inj = sj.value("injective", "unknown");
        fs.injectivity = inj == "proven"     ? InjectivityStatus::Proven
                         : inj == "declared" ? InjectivityStatus::Declared
                                             : InjectivityStatus::Unknown;
        cls.members.push_back(std::move(fs));
      } else {
        throw SpecParseError("unknown set kind: " + kind);
      }
    }
    if (cls.members.empty()) throw SpecParseError("class with no member sets: " + cls.name);
    spec.classes.push_back(std::move(cls));
  }
  if (spec.classes.empty()) throw SpecParseError("no classes");
  return spec;
}

inline ColoringSpec loadColoringSpec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecParseError("cannot open " + path);
  json j;
  in >> j;
  return parseColoringSpec(j);
}

// ---------------------------------------------------------------------------
// Report serialization
// ---------------------------------------------------------------------------

inline json toJson(const Bindings& b) {
  json out = json::object();
  for (const auto& [k, v] : b) out[k] = v;
  return out;
}

inline const char* verdictName(Verdict3 v) {
  switch (v) {
    case Verdict3::Proven: return "proven";
    case Verdict3::Refuted: return "refuted";
    default: return "unknown";
  }
}
inline const char* statusName(SolverStatus s) {
  switch (s) {
    case SolverStatus::Sat: return "sat";
    case SolverStatus::Unsat: return "unsat";
    case SolverStatus::Timeout: return "timeout";
    default: return "unknown";
  }
}

inline json toJson(const CheckOutcome& c) {
  json out{{"name", c.name}, {"verdict", verdictName(c.verdict)}, {"seconds", c.seconds}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  if (!c.witness.empty()) out["witness"] = toJson(c.witness);
  return out;
}

inline json toJson(const CaseReport& c) {
  json out{{"case", c.descriptor.label}, {"status", statusName(c.status)}, {"seconds", c.seconds}};
  if (!c.reason.empty()) out["reason"] = c.reason;
  if (!c.counterexample.empty()) out["counterexample"] = toJson(c.counterexample);
  return out;
}

inline json toJson(const VerificationReport& r, const ColoringSpec& spec) {
  json partition;
  partition["assumptionsSatisfiable"] = toJson(r.partition.assumptionsSatisfiable);
  partition["facts"] = json::array();
  for (const auto& c : r.partition.factChecks) partition["facts"].push_back(toJson(c));
  partition["subset"] = json::array();
  for (const auto& c : r.partition.subsetChecks) partition["subset"].push_back(toJson(c));
  partition["disjoint"] = json::array();
  for (const auto& c : r.partition.disjointChecks) partition["disjoint"].push_back(toJson(c));
  partition["sizeSum"] = toJson(r.partition.sizeCheck);

  json cases = json::array();
  for (const auto& c : r.cases) cases.push_back(toJson(c));

  return json{{"spec", spec.name},
              {"equation", spec.equation.toString()},
              {"passed", r.passed},
              {"claimedLowerBound", r.passed ? r.claimedBound.toString() : ""},
              {"partition", partition},
              {"cases", cases},
              {"totalSeconds", r.totalSeconds}};
}

inline std::string renderReportText(const VerificationReport& r, const ColoringSpec& spec) {
  std::ostringstream os;
  os << "spec: " << spec.name << "\n";
  os << "equation: " << spec.equation.toString() << "\n";
  os << "domain: [1, " << spec.domainBound.toString() << "]\n";
  auto line = [&](const CheckOutcome& c) {
    os << "  [" << (c.passed() ? "pass" : "FAIL") << "] " << c.name;
    if (!c.passed() && !c.detail.empty()) os << " -- " << c.detail;
    if (!c.witness.empty() && !c.passed()) {
      os << " witness{";
      bool first = true;
      for (const auto& [k, v] : c.witness) {
        if (k.rfind("_", 0) == 0) continue;
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
      }
      os << "}";
    }
    os << "\n";
  };
  os << "partition checks:\n";
  line(r.partition.assumptionsSatisfiable);
  for (const auto& c : r.partition.factChecks) line(c);
  for (const auto& c : r.partition.subsetChecks) line(c);
  for (const auto& c : r.partition.disjointChecks) line(c);
  line(r.partition.sizeCheck);
  os << "cases (" << r.cases.size() << "):\n";
  size_t failed = 0;
  for (const auto& c : r.cases) {
    if (c.passed()) continue;
    ++failed;
    os << "  [FAIL " << statusName(c.status) << "] " << c.descriptor.label;
    if (!c.reason.empty()) os << " -- " << c.reason;
    if (!c.counterexample.empty()) {
      os << " model{";
      bool first = true;
      for (const auto& [k, v] : c.counterexample) {
        if (k.rfind("_", 0) == 0) continue;
        os << (first ? "" : ", ") << k << "=" << v;
        first = false;
      }
      os << "}";
    }
    os << "\n";
  }
  if (failed == 0) os << "  all unsat\n";
  os << (r.passed ? "VERIFIED" : "NOT VERIFIED");
  if (r.passed) os << ": Rado number >= " << r.claimedBound.toString();
  os << "\n";
  return os.str();
}

}  // namespace rado
