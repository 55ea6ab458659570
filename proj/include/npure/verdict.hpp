#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npure/modules.hpp"

namespace npure {

enum class Outcome { kHolds, kFails, kUnknown };

std::string to_string(Outcome o);

/// Everything needed to replay a failing instance: the ideal tuple, the
/// submodules, and/or the ring elements exhibiting it.
struct Witness {
  std::vector<Ideal> ideals;
  std::vector<Submodule> submodules;
  std::vector<Int> elements;

  std::string to_string() const;
};

/// Three-valued decision result. Fails always carries a witness; Unknown
/// only arises under the Bounded policy and carries the search bound.
class Verdict {
 public:
  static Verdict holds() { return Verdict(Outcome::kHolds, std::nullopt, std::nullopt); }
  static Verdict fails(Witness w) {
    return Verdict(Outcome::kFails, std::move(w), std::nullopt);
  }
  static Verdict unknown(Int bound) {
    return Verdict(Outcome::kUnknown, std::nullopt, std::move(bound));
  }

  Outcome outcome() const { return outcome_; }
  bool is_holds() const { return outcome_ == Outcome::kHolds; }
  bool is_fails() const { return outcome_ == Outcome::kFails; }
  bool is_unknown() const { return outcome_ == Outcome::kUnknown; }

  const std::optional<Witness>& witness() const { return witness_; }
  const std::optional<Int>& bound() const { return bound_; }

  /// "Holds", "Fails [I=(2),(2)]", "Unknown up to 8".
  std::string to_string() const;

 private:
  Verdict(Outcome outcome, std::optional<Witness> witness, std::optional<Int> bound)
      : outcome_(outcome), witness_(std::move(witness)), bound_(std::move(bound)) {}

  Outcome outcome_;
  std::optional<Witness> witness_;
  std::optional<Int> bound_;
};

/// Purity level: n == 1 is Anderson–Fuller purity (IN = N ∩ IM for every
/// ideal); n >= 2 is n-purity over proper ideal multisets.
class PurityLevel {
 public:
  explicit PurityLevel(int n);
  int n() const { return n_; }

 private:
  int n_;
};

}  // namespace npure
