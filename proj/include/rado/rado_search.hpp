#pragma once

// External-solver search for exact Rado numbers: encode instances of
// increasing n, launch the configured DIMACS solver, parse and validate
// certificates, and locate the first unsatisfiable n.  Includes the
// regularity pre-check for the equation.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>

#include "rado/oracle.hpp"
#include "rado/sat_encoder.hpp"
#include "rado/smt.hpp"

namespace rado {

struct RegularityReport {
  bool homogeneous = true;
  bool regular = false;
  std::vector<Int> zeroSubset;  // signed coefficients summing to zero
  std::string note;
};

// Rado's characterization on the signed coefficient vector
// (a_1, ..., a_{m-1}, -a_m) with the constant moved to the right-hand side.
inline RegularityReport regularityCheck(const LinearEquation& eq) {
  RegularityReport rep;
  std::vector<Int> signedCoeffs = eq.lhsCoeffs;
  signedCoeffs.push_back(-eq.rhsCoeff);
  size_t m = signedCoeffs.size();
  auto zeroSubset = [&]() -> std::optional<std::vector<Int>> {
    for (size_t mask = 1; mask < (size_t{1} << m); ++mask) {
      Int sum = 0;
      for (size_t i = 0; i < m; ++i)
        if (mask & (size_t{1} << i)) sum += signedCoeffs[i];
      if (sum == 0) {
        std::vector<Int> subset;
        for (size_t i = 0; i < m; ++i)
          if (mask & (size_t{1} << i)) subset.push_back(signedCoeffs[i]);
        return subset;
      }
    }
    return std::nullopt;
  }();

  if (eq.constant == 0) {
    rep.homogeneous = true;
    if (zeroSubset) {
      rep.regular = true;
      rep.zeroSubset = *zeroSubset;
      rep.note = "a nonempty subset of signed coefficients sums to zero";
    } else {
      rep.regular = false;
      rep.note = "no zero-sum subset: not regular for all color counts "
                 "(small k may still be finite)";
    }
    return rep;
  }
  rep.homogeneous = false;
  // Sum-form: signed coefficients sum s, right-hand constant -c.
  Int s = 0;
  for (Int v : signedCoeffs) s += v;
  Int c = -eq.constant;
  if (s != 0 && c % s == 0 && c / s > 0) {
    rep.regular = true;
    rep.note = "constant over coefficient sum is a positive integer";
  } else if (s != 0 && c % s == 0 && c / s < 0 && zeroSubset) {
    rep.regular = true;
    rep.zeroSubset = *zeroSubset;
    rep.note = "negative integer ratio with regular homogeneous part";
  } else {
    rep.regular = false;
    rep.note = "neither regularity condition holds";
  }
  return rep;
}

// ---------------------------------------------------------------------------
// External SAT solving
// ---------------------------------------------------------------------------

struct SatSolverConfig {
  std::string command;  // shell template with {cnf} placeholder
  double timeoutSeconds = 300;
  bool keepArtifacts = false;
  std::string artifactDir;
};

struct SatOutcome {
  SolverStatus status = SolverStatus::Unknown;
  std::vector<Int> coloring;  // 1-indexed on Sat
  double seconds = 0;
};

inline SatOutcome runSatSolver(const CnfInstance& inst, const SatSolverConfig& cfg) {
  namespace fs = std::filesystem;
  fs::path dir = cfg.artifactDir.empty() ? fs::temp_directory_path() : fs::path(cfg.artifactDir);
  fs::create_directories(dir);
  static std::atomic<unsigned> counter{0};
  fs::path path =
      dir / ("rado_sat_" + std::to_string(getpid()) + "_" + std::to_string(counter++) + ".cnf");
  {
    std::ofstream out(path);
    out << emitDimacs(inst);
  }
  std::string cmd = cfg.command;
  size_t pos;
  bool replaced = false;
  while ((pos = cmd.find("{cnf}")) != std::string::npos) {
    cmd.replace(pos, 5, path.string());
    replaced = true;
  }
  if (!replaced) cmd += " " + path.string();
  ProcessResult pr = runProcess(cmd, "", cfg.timeoutSeconds);
  if (!cfg.keepArtifacts) fs::remove(path);

  SatOutcome out;
  out.seconds = pr.seconds;
  if (pr.timedOut) {
    out.status = SolverStatus::Timeout;
    return out;
  }
  if (pr.output.find("s UNSATISFIABLE") != std::string::npos) {
    out.status = SolverStatus::Unsat;
    return out;
  }
  if (pr.output.find("s SATISFIABLE") == std::string::npos) {
    if (pr.exitCode == 127) throw SolverLaunchFailure("command not found: " + cfg.command);
    throw ProtocolError("no solution line in SAT solver output: " + pr.output.substr(0, 300));
  }
  // Parse v-lines.
  std::vector<bool> model(inst.numVars() + 1, false);
  std::istringstream is(pr.output);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] != 'v') continue;
    std::istringstream ls(line.substr(1));
    Int lit;
    while (ls >> lit) {
      if (lit > 0 && lit <= inst.numVars()) model[lit] = true;
    }
  }
  out.status = SolverStatus::Sat;
  out.coloring = decodeCertificate(inst, model);
  return out;
}

// Solve at a fixed n; Sat colorings are validated against the independent
// oracle before being returned.
inline SatOutcome solveAt(const LinearEquation& eq, Int k, Int n, const SatSolverConfig& cfg,
                          bool symBreak = true) {
  CnfInstance inst = encodeCnf(eq, n, k, symBreak);
  SatOutcome out = runSatSolver(inst, cfg);
  if (out.status == SolverStatus::Sat) {
    auto bad = oracle::checkColoringConcrete(out.coloring, eq);
    if (!bad.empty())
      throw ProtocolError("solver certificate contains a monochromatic solution at n=" +
                          std::to_string(n));
  }
  return out;
}

enum class SearchStrategy { Linear, Geometric };

struct RadoProbe {
  Int n;
  SolverStatus status;
  double seconds;
};

struct RadoResult {
  enum class Kind { Value, ExceedsCap, Inconclusive } kind = Kind::Inconclusive;
  Int value = 0;
  std::vector<RadoProbe> probes;
  std::vector<Int> lastSatColoring;  // certificate at value-1 when available
  RegularityReport regularity;
  std::string note;
};

// Locate the least unsatisfiable n.  Monotonicity (clause sets only grow
// with n) makes both strategies sound; they must agree.
inline RadoResult computeRado(const LinearEquation& eq, Int k, SearchStrategy strategy,
                              Int nMax, const SatSolverConfig& cfg, bool symBreak = true) {
  RadoResult res;
  res.regularity = regularityCheck(eq);
  auto probe = [&](Int n) {
    SatOutcome o = solveAt(eq, k, n, cfg, symBreak);
    res.probes.push_back({n, o.status, o.seconds});
    if (o.status == SolverStatus::Sat) res.lastSatColoring = o.coloring;
    return o.status;
  };

  if (strategy == SearchStrategy::Linear) {
    for (Int n = 1; n <= nMax; ++n) {
      SolverStatus s = probe(n);
      if (s == SolverStatus::Unsat) {
        res.kind = RadoResult::Kind::Value;
        res.value = n;
        return res;
      }
      if (s != SolverStatus::Sat) {
        res.note = "solver did not decide n=" + std::to_string(n);
        return res;
      }
    }
    res.kind = RadoResult::Kind::ExceedsCap;
    res.note = res.regularity.regular ? "cap reached; equation is regular so a value exists"
                                      : "cap reached; regularity check suggests no finite value";
    return res;
  }

  // Geometric: double until unsat, then binary search the boundary.
  Int lastSat = 0, firstUnsat = -1;
  Int n = 1;
  while (n <= nMax) {
    SolverStatus s = probe(n);
    if (s == SolverStatus::Unsat) {
      firstUnsat = n;
      break;
    }
    if (s != SolverStatus::Sat) {
      res.note = "solver did not decide n=" + std::to_string(n);
      return res;
    }
    lastSat = n;
    if (n == nMax) break;
    n = std::min(nMax, n * 2);
  }
  if (firstUnsat < 0) {
    res.kind = RadoResult::Kind::ExceedsCap;
    res.note = res.regularity.regular ? "cap reached; equation is regular so a value exists"
                                      : "cap reached; regularity check suggests no finite value";
    return res;
  }
  while (firstUnsat - lastSat > 1) {
    Int mid = lastSat + (firstUnsat - lastSat) / 2;
    SolverStatus s = probe(mid);
    if (s == SolverStatus::Unsat) {
      firstUnsat = mid;
    } else if (s == SolverStatus::Sat) {
      lastSat = mid;
    } else {
      res.note = "solver did not decide n=" + std::to_string(mid);
      return res;
    }
  }
  res.kind = RadoResult::Kind::Value;
  res.value = firstUnsat;
  return res;
}

}  // namespace rado
