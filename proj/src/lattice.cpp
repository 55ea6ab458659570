#include "npure/lattice.hpp"

#include <cassert>
#include <stdexcept>

namespace npure {

LatticeBasis::LatticeBasis(Index ambient_rank, IntMatrix canonical_basis)
    : ambient_rank_(ambient_rank), basis_(std::move(canonical_basis)) {
  assert(basis_.cols() == ambient_rank_ || basis_.rows() == 0);
  if (basis_.rows() == 0) basis_.resize(0, ambient_rank_);
}

LatticeBasis LatticeBasis::from_generators(Index ambient_rank, const IntMatrix& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_rank)
    throw std::invalid_argument("LatticeBasis: generator length does not match ambient rank");
  IntMatrix gens = generators;
  if (gens.rows() == 0) gens.resize(0, ambient_rank);
  return LatticeBasis(ambient_rank, hnf_matrix(gens));
}

LatticeBasis LatticeBasis::zero(Index ambient_rank) {
  return LatticeBasis(ambient_rank, IntMatrix(0, ambient_rank));
}

LatticeBasis LatticeBasis::full(Index ambient_rank) {
  return LatticeBasis(ambient_rank, IntMatrix::Identity(ambient_rank, ambient_rank));
}

bool LatticeBasis::is_canonical() const {
  return basis_.rows() == 0 || is_hnf(basis_);
}

LatticeBasis hnf(const IntMatrix& a) { return LatticeBasis::from_generators(a.cols(), a); }

LatticeBasis lattice_sum(const LatticeBasis& l1, const LatticeBasis& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw std::invalid_argument("lattice_sum: ambient rank mismatch");
  IntMatrix stacked(l1.rank() + l2.rank(), l1.ambient_rank());
  stacked.topRows(l1.rank()) = l1.basis();
  stacked.bottomRows(l2.rank()) = l2.basis();
  return LatticeBasis::from_generators(l1.ambient_rank(), stacked);
}

LatticeBasis lattice_intersect(const LatticeBasis& l1, const LatticeBasis& l2) {
  if (l1.ambient_rank() != l2.ambient_rank())
    throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
  const Index k = l1.ambient_rank();
  const Index r1 = l1.rank(), r2 = l2.rank();
  if (r1 == 0 || r2 == 0) return LatticeBasis::zero(k);

  // x * B1 = -y * B2 for every (x | y) in the left kernel of [B1; B2],
  // so the vectors x * B1 generate L1 ∩ L2.
  IntMatrix stacked(r1 + r2, k);
  stacked.topRows(r1) = l1.basis();
  stacked.bottomRows(r2) = l2.basis();
  IntMatrix kernel = left_kernel(stacked);
  IntMatrix gens(kernel.rows(), k);
  for (Index i = 0; i < kernel.rows(); ++i)
    gens.row(i) = kernel.row(i).leftCols(r1) * l1.basis();
  return LatticeBasis::from_generators(k, gens);
}

std::optional<IntRowVector> lattice_coordinates(const LatticeBasis& l, const IntRowVector& v) {
  if (v.cols() != l.ambient_rank())
    throw std::invalid_argument("lattice_coordinates: vector length mismatch");
  IntRowVector rest = v;
  IntRowVector coords(l.rank());
  for (Index i = 0; i < l.rank(); ++i) {
    Index col = 0;
    while (l.basis()(i, col) == 0) ++col;
    const Int& pivot = l.basis()(i, col);
    if (!divides(pivot, rest(col))) return std::nullopt;
    coords(i) = exact_div(rest(col), pivot);
    if (coords(i) != 0) rest -= coords(i) * l.basis().row(i);
  }
  for (Index j = 0; j < rest.cols(); ++j)
    if (rest(j) != 0) return std::nullopt;
  return coords;
}

bool lattice_contains(const LatticeBasis& l, const IntRowVector& v) {
  return lattice_coordinates(l, v).has_value();
}

bool lattice_contains(const LatticeBasis& outer, const LatticeBasis& inner) {
  if (outer.ambient_rank() != inner.ambient_rank())
    throw std::invalid_argument("lattice_contains: ambient rank mismatch");
  for (Index i = 0; i < inner.rank(); ++i)
    if (!lattice_contains(outer, IntRowVector(inner.basis().row(i)))) return false;
  return true;
}

LatticeBasis lattice_scale(const Int& c, const LatticeBasis& l) {
  IntMatrix scaled = c * l.basis();
  return LatticeBasis::from_generators(l.ambient_rank(), scaled);
}

}  // namespace npure
