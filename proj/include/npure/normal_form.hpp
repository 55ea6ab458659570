#pragma once

#include "npure/integers.hpp"

namespace npure {

// Row-style Hermite normal form: upper echelon, pivots strictly positive,
// entries above each pivot reduced into [0, pivot), zero rows removed.
// The row span over Z is preserved, so the result is a canonical basis of
// the lattice generated by the rows of the input.

struct HnfResult {
  IntMatrix echelon;    // zero rows trimmed
  IntMatrix transform;  // unimodular U with U * input == [echelon; 0]
  Index rank = 0;
};

/// Canonical HNF basis of the row span; rows of the result are the basis.
IntMatrix hnf_matrix(const IntMatrix& a);

/// HNF together with the unimodular row transform (kernel extraction).
HnfResult hnf_with_transform(const IntMatrix& a);

/// Basis of the left kernel {x : x * a == 0}, rows canonicalized by HNF.
IntMatrix left_kernel(const IntMatrix& a);

/// True when m satisfies the HNF convention above.
bool is_hnf(const IntMatrix& m);

/// Invariant factors d1 | d2 | ... | dr of the row lattice, all positive;
/// the product of the first j equals the gcd of all j x j minors.
std::vector<Int> snf(const IntMatrix& a);

}  // namespace npure
