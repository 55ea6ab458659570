#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npure/lattice.hpp"
#include "npure/rings.hpp"

namespace npure {

inline constexpr long kDefaultElementBudget = 20000;

/// A finitely generated module M = Z^k / L_rel with the ring folded into the
/// relations: over Z/mZ the rows m*e_i are adjoined automatically, so one
/// lattice engine serves both rings and the ring tag only changes ideal
/// quantification.
class ModulePresentation {
 public:
  ModulePresentation(Ring ring, Index ambient_rank, const IntMatrix& relation_rows);

  /// Z^1/(n) over the given ring; n == 0 gives the free module Z.
  static ModulePresentation cyclic(Ring ring, const Int& order);
  /// Z/a1 ⊕ ... ⊕ Z/ar as Z^r with diagonal relations; 0 entries are free summands.
  static ModulePresentation direct_sum(Ring ring, const std::vector<Int>& orders);
  /// The ring viewed as a module over itself.
  static ModulePresentation ring_as_module(Ring ring);

  const Ring& ring() const { return ring_; }
  Index ambient_rank() const { return ambient_rank_; }
  const LatticeBasis& relations() const { return relations_; }

  bool operator==(const ModulePresentation& other) const {
    return ring_ == other.ring_ && ambient_rank_ == other.ambient_rank_ &&
           relations_ == other.relations_;
  }
  bool operator!=(const ModulePresentation& other) const { return !(*this == other); }

  /// Raw presentation, e.g. "Z/4-module Z^1/[[4]]".
  std::string describe() const;
  /// Invariant-factor shape, e.g. "Z/2 x Z/4" or "Z" or "0".
  std::string structure_name() const;

 private:
  Ring ring_;
  Index ambient_rank_;
  LatticeBasis relations_;
};

/// A submodule N of M, stored as the intermediate lattice L_rel ⊆ L_N ⊆ Z^k
/// in canonical HNF; submodule equality is equality of canonical bases.
class Submodule {
 public:
  Submodule(ModulePresentation parent, LatticeBasis lattice);

  const ModulePresentation& parent() const { return parent_; }
  const LatticeBasis& lattice() const { return lattice_; }
  bool is_zero() const { return lattice_ == parent_.relations(); }

  bool operator==(const Submodule& other) const {
    return parent_ == other.parent_ && lattice_ == other.lattice_;
  }
  bool operator!=(const Submodule& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  ModulePresentation parent_;
  LatticeBasis lattice_;
};

/// An element of M: coordinates of length k interpreted mod L_rel, kept as
/// the canonical representative (reduced against the relation HNF).
class ModuleElement {
 public:
  ModuleElement(ModulePresentation parent, const IntRowVector& coordinates);

  const ModulePresentation& parent() const { return parent_; }
  const IntRowVector& coordinates() const { return coords_; }

  bool operator==(const ModuleElement& other) const {
    return parent_ == other.parent_ && coords_ == other.coords_;
  }

 private:
  ModulePresentation parent_;
  IntRowVector coords_;
};

/// Canonical representative of a coordinate vector mod the relations.
IntRowVector reduce_mod_relations(const ModulePresentation& m, const IntRowVector& v);

ModuleElement element_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement element_negate(const ModuleElement& a);
ModuleElement element_scale(const Int& c, const ModuleElement& a);

/// Canonical submodule generated by the rows of `generators` together with L_rel.
Submodule submodule_span(const ModulePresentation& m, const IntMatrix& generators);
Submodule zero_submodule(const ModulePresentation& m);
Submodule full_submodule(const ModulePresentation& m);

/// IN = {sums of a*n, a in I, n in N}: the lattice g*L_N + L_rel for the
/// canonical generator g.
Submodule scale_by_ideal(const Ideal& i, const Submodule& n);
/// IM for the whole module.
Submodule scale_module(const Ideal& i, const ModulePresentation& m);

Submodule submodule_intersect(const Submodule& n, const Submodule& k);
Submodule submodule_sum(const Submodule& n, const Submodule& k);
bool submodule_contains(const Submodule& outer, const Submodule& inner);

/// (N :_R M), the annihilator of M/N, from the SNF of the quotient.
Ideal colon_ideal(const Submodule& n, const ModulePresentation& m);

/// Ann_R(N): the colon ideal of zero in N viewed as a module in its own right.
Ideal annihilator(const Submodule& n);

/// Invariant factors d1 | ... | dr of the presentation (1-entries included).
std::vector<Int> invariant_factors(const ModulePresentation& m);
Index free_rank(const ModulePresentation& m);
/// Largest invariant factor; 0 if the free rank is positive; 1 for the zero module.
Int exponent(const ModulePresentation& m);
/// Number of elements, or nullopt when infinite.
std::optional<Int> cardinality(const ModulePresentation& m);

/// The p-primary component of a finite module, presented over Z as
/// M/(p^s M) with s the p-valuation of the exponent, together with the
/// transfer map for submodules. Transfer commutes with sum and intersection.
class Localization {
 public:
  Localization(ModulePresentation original, ModulePresentation component);
  const ModulePresentation& module() const { return component_; }
  Submodule transfer(const Submodule& n) const;

 private:
  ModulePresentation original_;
  ModulePresentation component_;
};

Localization localize(const ModulePresentation& m, const Int& p);

/// NK = (N :_R M)(K :_R M)M and its n-ary extension.
Submodule submodule_product(const Submodule& n, const Submodule& k);
Submodule submodule_product(const ModulePresentation& m, const std::vector<Submodule>& factors);

/// Every residue class exactly once, canonical representatives, in odometer
/// order over the pivot boxes. Throws for infinite or over-budget modules.
std::vector<ModuleElement> elements(const ModulePresentation& m,
                                    long budget = kDefaultElementBudget);
/// Same enumeration as raw coordinate vectors (the hot-loop form).
std::vector<IntRowVector> element_vectors(const ModulePresentation& m,
                                          long budget = kDefaultElementBudget);

/// M/N on the same ambient coordinates (relations become L_N), and the image
/// of any submodule K as (K + N)/N.
ModulePresentation quotient(const ModulePresentation& m, const Submodule& n);
Submodule quotient_image(const ModulePresentation& quotient_module, const Submodule& k);

/// K presented as a module in its own right: Z^rank(K) modulo the relation
/// coordinates, with a transfer for submodules of M contained in K.
class SubmoduleAsModule {
 public:
  SubmoduleAsModule(Submodule ambient, ModulePresentation module);
  const ModulePresentation& module() const { return module_; }
  const Submodule& ambient() const { return ambient_; }
  /// Expresses inner ⊆ K in the coordinates of K's basis.
  Submodule restrict(const Submodule& inner) const;

 private:
  Submodule ambient_;
  ModulePresentation module_;
};

SubmoduleAsModule as_module(const Submodule& k);

}  // namespace npure
