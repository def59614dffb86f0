#pragma once

// Solver configuration: key=value file, environment overrides, and
// discovery of the bundled solver adapters relative to the executable.
// Precedence: explicit flags > environment > config file > discovery.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>

#include "rado/rado_search.hpp"
#include "rado/smt.hpp"

namespace rado {

class ToolConfig {
 public:
  // Recognized keys: sat.command, sat.timeout, smt.command, smt.timeout.
  void loadFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
      size_t hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      size_t eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t\"");
        size_t e = s.find_last_not_of(" \t\"");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
      };
      std::string key = trim(line.substr(0, eq));
      std::string value = trim(line.substr(eq + 1));
      if (!key.empty()) values_[key] = value;
    }
  }

  void applyEnvironment() {
    auto pull = [&](const char* env, const std::string& key) {
      if (const char* v = std::getenv(env)) values_[key] = v;
    };
    pull("RADO_SAT_COMMAND", "sat.command");
    pull("RADO_SAT_TIMEOUT", "sat.timeout");
    pull("RADO_SMT_COMMAND", "smt.command");
    pull("RADO_SMT_TIMEOUT", "smt.timeout");
  }

  void set(const std::string& key, const std::string& value) {
    if (!value.empty()) values_[key] = value;
  }

  std::string get(const std::string& key, const std::string& fallback = {}) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
  }

  // Locate tools/solvers relative to the running executable so the bundled
  // adapters work out of the box from the build tree.
  static std::string discoverSolverDir() {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::path exe = fs::read_symlink("/proc/self/exe", ec);
    if (ec) return {};
    fs::path dir = exe.parent_path();
    for (const char* rel : {"solvers", "../tools/solvers", "../../tools/solvers", "tools/solvers"}) {
      fs::path cand = dir / rel;
      if (fs::exists(cand / "z3smt.js", ec)) return fs::weakly_canonical(cand, ec).string();
    }
    return {};
  }

  SolverConfig smtConfig() const {
    SolverConfig cfg;
    cfg.command = get("smt.command");
    if (cfg.command.empty()) {
      std::string dir = discoverSolverDir();
      if (!dir.empty()) cfg.command = "node " + dir + "/z3smt.js {script}";
    }
    if (cfg.command.empty())
      throw std::runtime_error("no SMT solver configured (set smt.command or RADO_SMT_COMMAND)");
    std::string t = get("smt.timeout");
    if (!t.empty()) cfg.timeoutSeconds = std::stod(t);
    return cfg;
  }

  SatSolverConfig satConfig() const {
    SatSolverConfig cfg;
    cfg.command = get("sat.command");
    if (cfg.command.empty()) {
      std::string dir = discoverSolverDir();
      if (!dir.empty()) cfg.command = "node " + dir + "/z3dimacs.js {cnf}";
    }
    if (cfg.command.empty())
      throw std::runtime_error("no SAT solver configured (set sat.command or RADO_SAT_COMMAND)");
    std::string t = get("sat.timeout");
    if (!t.empty()) cfg.timeoutSeconds = std::stod(t);
    return cfg;
  }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace rado
