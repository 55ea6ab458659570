#pragma once

#include <set>

#include "npure/enumerate.hpp"
#include "npure/purity.hpp"

namespace npure {

// The oracle side works on explicit element sets. Its algebra — scaling,
// intersection, sum, and the purity identities — is literal set arithmetic
// and never touches lattice sums, intersections, kernels, or canonical-basis
// comparisons. Element canonicalization and the quantifier materialization
// are shared plumbing: they define the inputs, not the operations under
// cross-validation.

/// A submodule given extensionally: the canonical representatives of its
/// classes. Contains zero and is closed under addition and negation
/// (checked on construction).
class ElementSet {
 public:
  using Members = std::set<IntRowVector, RowVectorLess>;

  /// Validates the invariants (zero present, canonical members, closure
  /// under addition and negation); library operations below construct
  /// through a trusted path since they preserve them.
  ElementSet(ModulePresentation parent, Members members);

  /// Subgroup closure of the given coordinate vectors.
  static ElementSet closure(const ModulePresentation& parent, const IntMatrix& generators);

  const ModulePresentation& parent() const { return parent_; }
  const Members& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const IntRowVector& canonical) const { return members_.count(canonical) > 0; }
  bool contains(const ElementSet& other) const;

  bool operator==(const ElementSet& other) const {
    return parent_ == other.parent_ && members_ == other.members_;
  }
  bool operator!=(const ElementSet& other) const { return !(*this == other); }

 private:
  struct Trusted {};
  ElementSet(Trusted, ModulePresentation parent, Members members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  friend ElementSet zero_element_set(const ModulePresentation&);
  friend ElementSet full_element_set(const ModulePresentation&);
  friend ElementSet oracle_scale(const Ideal&, const ElementSet&);
  friend ElementSet oracle_intersect(const ElementSet&, const ElementSet&);
  friend ElementSet oracle_sum(const ElementSet&, const ElementSet&);
  friend ElementSet to_element_set(const Submodule&);

  ModulePresentation parent_;
  Members members_;
};

ElementSet zero_element_set(const ModulePresentation& m);
ElementSet full_element_set(const ModulePresentation& m);

/// {g x : x in S} for the canonical generator g (a set, already closed).
ElementSet oracle_scale(const Ideal& ideal, const ElementSet& s);
ElementSet oracle_intersect(const ElementSet& s1, const ElementSet& s2);
ElementSet oracle_sum(const ElementSet& s1, const ElementSet& s2);

/// Same contract as purity_predicates::is_n_pure, decided entirely with
/// element sets.
Verdict oracle_is_n_pure(const ElementSet& n, const ModulePresentation& m, PurityLevel level,
                         const QuantificationPolicy& policy);

/// Bridges between the two representations (input marshaling only).
ElementSet to_element_set(const Submodule& n);
Submodule to_submodule(const ElementSet& s);

}  // namespace npure
