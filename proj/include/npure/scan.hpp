#pragma once

#include <string>
#include <vector>

#include "npure/oracle.hpp"

namespace npure {

/// Finite test families: all Z/m with m <= max, or all Z/a ⊕ Z/b with
/// 2 <= a <= b and a*b <= max. Each size yields a Z-module instance and,
/// when the modulus permits, an instance over the modular ring (Z/m for
/// cyclic, Z/lcm(a,b) for rank two).
struct ModuleFamily {
  enum class Kind { kCyclic, kRankTwo };
  Kind kind = Kind::kCyclic;
  long max = 16;
  bool over_integers = true;
  bool over_modular = true;

  std::string to_string() const;
};

/// Instances in fixed deterministic order: ascending size, ring Z before the
/// modular ring.
std::vector<ModulePresentation> family_instances(const ModuleFamily& family);

struct Violation {
  std::size_t instance_index = 0;
  std::string claim;
  std::string module_desc;
  std::vector<std::string> submodules;
  std::vector<std::string> ideals;
  std::string detail;
};

struct ScanReport {
  std::string claim;
  std::string family;
  std::size_t scanned_instances = 0;
  std::vector<Violation> violations;
  double elapsed_seconds = 0;
};

struct ScanOptions {
  int level = 2;    // purity level; upper bound for the hierarchy-style claims
  int threads = 1;  // instances are partitioned across workers
};

/// Claim identifiers accepted by conjecture_scan, in registry order.
std::vector<std::string> known_claims();

/// Scans every (module, submodule, parameter) instance of the claim over the
/// family and reports all violations. Exhaustive and deterministic: the
/// report is identical for any thread count.
ScanReport conjecture_scan(const std::string& claim, const ModuleFamily& family,
                           const ScanOptions& options = {});

struct MinedWitness {
  ModulePresentation module;
  Submodule submodule;
  int level = 2;
};

/// Patterns: "n-pure-not-(n-1)-pure". Returns all (M, N) in the family with
/// is_n_pure(level) holding and is_n_pure(level-1) failing.
std::vector<MinedWitness> witness_mine(const std::string& pattern, const ModuleFamily& family,
                                       int level, int threads = 1);

}  // namespace npure
