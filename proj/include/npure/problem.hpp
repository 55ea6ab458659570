#pragma once

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "npure/scan.hpp"

namespace npure {

/// One requested predicate with its parameters. Missing fields fall back to
/// the command-line defaults, then to the auto-selected policy.
struct CheckRequest {
  std::string check;      // pure | ribenboim-pure | n-pure | fully-n-pure |
                          // multiplication | fully-cancellation | wsas-second |
                          // wsas-identity | pid-factorization |
                          // product-characterization | colon-transfer
  std::string submodule;  // named target; empty for module-level checks
  int level = 0;          // 0 = use the command default
  std::string policy;     // "" = auto | exhaustive | residue | bounded:<B>
  std::vector<std::pair<long long, unsigned long>> prime_powers;  // pid-factorization

  bool operator==(const CheckRequest&) const = default;
};

/// The self-describing input document: ring, presentation, named submodules,
/// requested checks. Parses from JSON and round-trips losslessly.
struct ProblemDescription {
  Ring ring = Ring::integers();
  long ambient_rank = 0;
  IntMatrix relations;  // rows
  std::vector<std::pair<std::string, IntMatrix>> submodules;
  std::vector<CheckRequest> checks;

  ModulePresentation module() const;
  Submodule named_submodule(const std::string& name) const;
};

ProblemDescription parse_problem(const nlohmann::json& doc);
ProblemDescription parse_problem_text(const std::string& text);
nlohmann::json problem_to_json(const ProblemDescription& problem);
bool problems_equal(const ProblemDescription& a, const ProblemDescription& b);

/// "" = auto; "exhaustive"; "residue"; "bounded:<B>".
QuantificationPolicy resolve_policy(const std::string& name, const ModulePresentation& m);

struct CommonOptions {
  int level = 2;
  std::string policy;  // default policy name, "" = auto
  int threads = 1;
  bool timing = false;  // wall-clock in machine reports (off keeps them reproducible)
};

/// Everything a subcommand produces: process exit code, human text, and the
/// machine report {command, inputs-digest, verdicts, violations, timing}.
struct CommandResult {
  int exit_code = 0;
  std::string text;
  nlohmann::json machine;
};

CommandResult cmd_check(const std::string& input_text, const CommonOptions& options);
CommandResult cmd_paper_suite(const CommonOptions& options);
CommandResult cmd_scan(const std::string& claim, const ModuleFamily& family,
                       const CommonOptions& options);
CommandResult cmd_mine(const std::string& pattern, const ModuleFamily& family,
                       const CommonOptions& options);
CommandResult cmd_enumerate(const std::string& input_text, const CommonOptions& options);
CommandResult cmd_maximal_pure(const std::string& input_text, const std::string& submodule_name,
                               bool strict, const CommonOptions& options);

/// The fixed example set (Z4; Z_{2^n} for n=2..6; 2Z <= Z bounded) plus one
/// scan per registered claim, with pinned expected verdicts.
struct SuiteEntry {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::vector<SuiteEntry> entries;
  bool all_pass = true;
  double elapsed_seconds = 0;
};

/// `expectation_overrides` replaces pinned expectations by entry name; used
/// by the harness self-test to prove mismatches are caught.
SuiteResult run_paper_suite(const std::map<std::string, std::string>& expectation_overrides = {},
                            int threads = 1);

nlohmann::json verdict_to_json(const Verdict& verdict);
nlohmann::json violation_to_json(const Violation& violation);

/// FNV-1a 64-bit digest, hex encoded.
std::string inputs_digest(const std::string& canonical);

}  // namespace npure
