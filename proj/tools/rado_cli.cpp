// Command-line interface: CNF encoding, Rado-number search via an external
// SAT solver, symbolic coloring verification, concrete instantiation and
// the brute-force coloring check.
//
// Exit codes: 0 success/verified, 1 refuted or satisfiable counterexample,
// 2 inconclusive (unknown/timeout), 3 usage or configuration error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "rado/config.hpp"
#include "rado/eqtext.hpp"
#include "rado/spec_io.hpp"

using namespace rado;

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

void writeOutput(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

json coloringToJson(const std::string& source, const Bindings& binds, const std::vector<Int>& coloring) {
  json j;
  j["source"] = source;
  j["bindings"] = toJson(binds);
  j["n"] = static_cast<Int>(coloring.size()) - 1;
  j["colors"] = json::array();
  for (size_t i = 1; i < coloring.size(); ++i) j["colors"].push_back(coloring[i]);
  return j;
}

std::vector<Int> coloringFromJson(const json& j) {
  std::vector<Int> coloring{-1};
  for (const auto& c : j.at("colors")) coloring.push_back(c.get<Int>());
  return coloring;
}

Bindings parseBindArgs(const std::vector<std::string>& binds) {
  Bindings out;
  for (const auto& b : binds) {
    size_t eq = b.find('=');
    if (eq == std::string::npos) throw std::runtime_error("--bind expects name=value: " + b);
    out[b.substr(0, eq)] = std::stoll(b.substr(eq + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rado number computation and symbolic coloring verification"};
  app.require_subcommand(1);

  std::string configPath;
  app.add_option("--config", configPath, "key=value config file (sat.command, smt.command, ...)");
  std::string satCommand, smtCommand;
  app.add_option("--sat-command", satCommand, "SAT solver command template with {cnf}");
  app.add_option("--smt-command", smtCommand, "SMT solver command template with {script}");
  bool keepArtifacts = false;
  app.add_flag("--keep-artifacts", keepArtifacts, "keep generated CNF/SMT files");
  std::string artifactDir;
  app.add_option("--artifact-dir", artifactDir, "directory for kept artifacts");

  // encode
  auto* cmdEncode = app.add_subcommand("encode", "emit the DIMACS CNF for an equation at fixed n, k");
  std::string encodeEq, encodeOut;
  Int encodeN = 0, encodeK = 3;
  bool noSymmetry = false;
  cmdEncode->add_option("equation", encodeEq)->required();
  cmdEncode->add_option("--n", encodeN)->required();
  cmdEncode->add_option("--k", encodeK);
  cmdEncode->add_flag("--no-symmetry", noSymmetry);
  cmdEncode->add_option("-o,--output", encodeOut);

  // rado
  auto* cmdRado = app.add_subcommand("rado", "compute the k-color Rado number with the SAT solver");
  std::string radoEq, radoStrategy = "geometric", radoOut;
  Int radoK = 3, radoNMax = 5000;
  cmdRado->add_option("equation", radoEq)->required();
  cmdRado->add_option("--k", radoK);
  cmdRado->add_option("--strategy", radoStrategy)->check(CLI::IsMember({"linear", "geometric"}));
  cmdRado->add_option("--n-max", radoNMax);
  cmdRado->add_option("-o,--output", radoOut);

  // verify
  auto* cmdVerify = app.add_subcommand("verify", "verify a symbolic coloring spec");
  std::string verifySpec, verifyOut;
  int verifyJobs = 1;
  double verifyTimeout = 60;
  bool verifyText = false;
  cmdVerify->add_option("spec", verifySpec)->required();
  cmdVerify->add_option("--jobs", verifyJobs);
  cmdVerify->add_option("--timeout", verifyTimeout);
  cmdVerify->add_flag("--text", verifyText, "human-readable report instead of JSON");
  cmdVerify->add_option("-o,--output", verifyOut);

  // cases
  auto* cmdCases = app.add_subcommand("cases", "list case descriptors without solving");
  std::string casesSpec;
  cmdCases->add_option("spec", casesSpec)->required();

  // instantiate
  auto* cmdInst = app.add_subcommand("instantiate", "instantiate a spec at concrete parameters");
  std::string instSpec, instOut;
  std::vector<std::string> instBinds;
  cmdInst->add_option("spec", instSpec)->required();
  cmdInst->add_option("--bind", instBinds, "parameter binding name=value")->required();
  cmdInst->add_option("-o,--output", instOut);

  // check-coloring
  auto* cmdCheck = app.add_subcommand("check-coloring", "brute-force check a concrete coloring");
  std::string checkColoring, checkEq;
  cmdCheck->add_option("coloring", checkColoring)->required();
  cmdCheck->add_option("equation", checkEq)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    ToolConfig config;
    if (!configPath.empty()) config.loadFile(configPath);
    else if (std::filesystem::exists("rado.conf")) config.loadFile("rado.conf");
    config.applyEnvironment();
    config.set("sat.command", satCommand);
    config.set("smt.command", smtCommand);

    if (*cmdEncode) {
      LinearEquation eq = parseEquationText(encodeEq);
      CnfInstance inst = encodeCnf(eq, encodeN, encodeK, !noSymmetry);
      writeOutput(encodeOut, emitDimacs(inst));
      return kExitVerified;
    }

    if (*cmdRado) {
      LinearEquation eq = parseEquationText(radoEq);
      SatSolverConfig sat = config.satConfig();
      sat.keepArtifacts = keepArtifacts;
      sat.artifactDir = artifactDir;
      RadoResult res = computeRado(eq, radoK,
                                   radoStrategy == "linear" ? SearchStrategy::Linear
                                                            : SearchStrategy::Geometric,
                                   radoNMax, sat);
      json j;
      j["equation"] = eq.toString();
      j["k"] = radoK;
      j["regular"] = res.regularity.regular;
      j["regularityNote"] = res.regularity.note;
      j["probes"] = json::array();
      for (const auto& p : res.probes)
        j["probes"].push_back({{"n", p.n}, {"verdict", statusName(p.status)}, {"seconds", p.seconds}});
      if (res.kind == RadoResult::Kind::Value) {
        j["R"] = res.value;
        if (!res.lastSatColoring.empty())
          j["certificate"] = coloringToJson(eq.toString(), {}, res.lastSatColoring);
        writeOutput(radoOut, j.dump(2) + "\n");
        if (radoOut.empty()) std::cout << "R = " << res.value << "\n";
        return kExitVerified;
      }
      j["note"] = res.note;
      writeOutput(radoOut, j.dump(2) + "\n");
      return kExitInconclusive;
    }

    if (*cmdVerify) {
      ColoringSpec spec = loadColoringSpec(verifySpec);
      SolverConfig smt = config.smtConfig();
      smt.keepArtifacts = keepArtifacts;
      smt.artifactDir = artifactDir;
      smt.timeoutSeconds = verifyTimeout;
      SmtBridge bridge(smt);
      ProverOptions opts;
      opts.jobs = verifyJobs;
      opts.caseTimeout = verifyTimeout;
      opts.partitionTimeout = verifyTimeout;
      Prover prover(spec, bridge, opts);
      VerificationReport rep = prover.verifyColoring();
      writeOutput(verifyOut, verifyText ? renderReportText(rep, spec) : toJson(rep, spec).dump(2) + "\n");
      if (rep.passed) return kExitVerified;
      // Distinguish refutation from inconclusiveness.
      bool refuted = false;
      for (const auto& c : rep.cases)
        if (c.status == SolverStatus::Sat) refuted = true;
      for (const auto& c : rep.partition.disjointChecks)
        if (c.verdict == Verdict3::Refuted) refuted = true;
      for (const auto& c : rep.partition.subsetChecks)
        if (c.verdict == Verdict3::Refuted) refuted = true;
      if (rep.partition.sizeCheck.verdict == Verdict3::Refuted) refuted = true;
      return refuted ? kExitRefuted : kExitInconclusive;
    }

    if (*cmdCases) {
      ColoringSpec spec = loadColoringSpec(casesSpec);
      SolverConfig dummy;
      dummy.command = "unused";
      SmtBridge bridge(dummy);
      Prover prover(spec, bridge);
      for (const auto& d : prover.enumerateCases()) std::cout << d.label << "\n";
      return kExitVerified;
    }

    if (*cmdInst) {
      ColoringSpec spec = loadColoringSpec(instSpec);
      Bindings binds = parseBindArgs(instBinds);
      if (!spec.assumptions.satisfiedBy(binds)) {
        std::cerr << "bindings violate the spec assumptions\n";
        return kExitUsage;
      }
      Int n = spec.domainBound.eval(binds);
      std::vector<Int> coloring(n + 1, -1);
      for (size_t ci = 0; ci < spec.classes.size(); ++ci) {
        for (Int v : instantiateClass(spec.classes[ci], binds)) {
          if (v < 1 || v > n) {
            std::cerr << "element " << v << " outside [1, " << n << "]\n";
            return kExitRefuted;
          }
          if (coloring[v] != -1) {
            std::cerr << "element " << v << " in two classes\n";
            return kExitRefuted;
          }
          coloring[v] = static_cast<Int>(ci);
        }
      }
      for (Int v = 1; v <= n; ++v) {
        if (coloring[v] == -1) {
          std::cerr << "element " << v << " uncovered\n";
          return kExitRefuted;
        }
      }
      writeOutput(instOut, coloringToJson(instSpec, binds, coloring).dump(2) + "\n");
      return kExitVerified;
    }

    if (*cmdCheck) {
      std::ifstream in(checkColoring);
      if (!in) throw std::runtime_error("cannot open " + checkColoring);
      json j;
      in >> j;
      std::vector<Int> coloring = coloringFromJson(j);
      LinearEquation eq = parseEquationText(checkEq);
      auto bad = oracle::checkColoringConcrete(coloring, eq);
      json out;
      out["equation"] = eq.toString();
      out["n"] = static_cast<Int>(coloring.size()) - 1;
      out["monochromaticSolutions"] = json::array();
      for (const auto& s : bad) out["monochromaticSolutions"].push_back(s);
      std::cout << out.dump(2) << "\n";
      return bad.empty() ? kExitVerified : kExitRefuted;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const SpecParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const SolverLaunchFailure& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInconclusive;
  }
  return kExitUsage;
}
