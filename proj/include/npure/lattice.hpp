#pragma once

#include <optional>

#include "npure/normal_form.hpp"

namespace npure {

/// A sublattice of Z^ambient_rank, stored as a canonical HNF basis whose
/// rows generate it. Values are immutable after construction.
class LatticeBasis {
 public:
  /// Canonical basis of the row span of `generators` (cols = ambient rank).
  static LatticeBasis from_generators(Index ambient_rank, const IntMatrix& generators);

  static LatticeBasis zero(Index ambient_rank);
  static LatticeBasis full(Index ambient_rank);

  Index ambient_rank() const { return ambient_rank_; }
  Index rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Verifies the stored basis against the HNF convention.
  bool is_canonical() const;

  bool operator==(const LatticeBasis& other) const {
    return ambient_rank_ == other.ambient_rank_ && basis_.rows() == other.basis_.rows() &&
           basis_ == other.basis_;
  }
  bool operator!=(const LatticeBasis& other) const { return !(*this == other); }

 private:
  LatticeBasis(Index ambient_rank, IntMatrix canonical_basis);

  Index ambient_rank_;
  IntMatrix basis_;
};

/// Canonical HNF basis of the row span of a; ambient rank is a.cols().
LatticeBasis hnf(const IntMatrix& a);

/// Canonical basis of L1 + L2.
LatticeBasis lattice_sum(const LatticeBasis& l1, const LatticeBasis& l2);

/// Canonical basis of L1 ∩ L2, via an integer kernel of the stacked bases.
LatticeBasis lattice_intersect(const LatticeBasis& l1, const LatticeBasis& l2);

/// Membership test by back-substitution against the HNF basis.
bool lattice_contains(const LatticeBasis& l, const IntRowVector& v);

/// True when every basis row of inner lies in outer.
bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner);

/// Coordinates x with x * basis == v, when v lies in the lattice.
std::optional<IntRowVector> lattice_coordinates(const LatticeBasis& l, const IntRowVector& v);

/// Basis scaled by a scalar (rows c * b); canonical.
LatticeBasis lattice_scale(const Int& c, const LatticeBasis& l);

/// Strict total order on canonical bases, for deterministic tie-breaking.
struct LatticeLess {
  bool operator()(const LatticeBasis& a, const LatticeBasis& b) const {
    return MatrixLess{}(a.basis(), b.basis());
  }
};

}  // namespace npure
