#include "npure/normal_form.hpp"

#include <cassert>

namespace npure {

namespace {

// Echelonizes w in place, mirroring every row operation on u when tracking.
// Pivot selection takes the minimal absolute nonzero entry in the current
// column to limit coefficient growth.
Index echelonize(IntMatrix& w, IntMatrix* u) {
  const Index rows = w.rows(), cols = w.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    for (;;) {
      Index pivot = -1;
      for (Index i = row; i < rows; ++i) {
        if (w(i, col) == 0) continue;
        if (pivot < 0 || abs(w(i, col)) < abs(w(pivot, col))) pivot = i;
      }
      if (pivot < 0) break;
      if (pivot != row) {
        w.row(pivot).swap(w.row(row));
        if (u) u->row(pivot).swap(u->row(row));
      }
      bool clean = true;
      for (Index i = row + 1; i < rows; ++i) {
        if (w(i, col) == 0) continue;
        Int q = w(i, col) / w(row, col);  // truncated: |remainder| < |pivot|
        if (q != 0) {
          w.row(i) -= q * w.row(row);
          if (u) u->row(i) -= q * u->row(row);
        }
        if (w(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (w(row, col) != 0) {
      if (w(row, col) < 0) {
        w.row(row) = -w.row(row);
        if (u) u->row(row) = -u->row(row);
      }
      ++row;
    }
  }
  return row;
}

// Reduces entries above each pivot into [0, pivot). Left-to-right keeps
// earlier reductions untouched because later pivot rows are zero there.
void reduce_above(IntMatrix& w, Index rank) {
  for (Index i = 0; i < rank; ++i) {
    Index col = 0;
    while (w(i, col) == 0) ++col;
    for (Index j = 0; j < i; ++j) {
      Int q = fdiv_q(w(j, col), w(i, col));
      if (q != 0) w.row(j) -= q * w.row(i);
    }
  }
}

}  // namespace

IntMatrix hnf_matrix(const IntMatrix& a) {
  IntMatrix w = a;
  Index rank = echelonize(w, nullptr);
  reduce_above(w, rank);
  return w.topRows(rank);
}

HnfResult hnf_with_transform(const IntMatrix& a) {
  HnfResult res;
  IntMatrix w = a;
  IntMatrix u = IntMatrix::Identity(a.rows(), a.rows());
  res.rank = echelonize(w, &u);
  reduce_above(w, res.rank);
  res.echelon = w.topRows(res.rank);
  res.transform = std::move(u);
  return res;
}

IntMatrix left_kernel(const IntMatrix& a) {
  HnfResult h = hnf_with_transform(a);
  IntMatrix raw = h.transform.bottomRows(a.rows() - h.rank);
  return hnf_matrix(raw);
}

bool is_hnf(const IntMatrix& m) {
  Index prev_col = -1;
  for (Index i = 0; i < m.rows(); ++i) {
    Index col = 0;
    while (col < m.cols() && m(i, col) == 0) ++col;
    if (col == m.cols()) return false;  // zero row
    if (col <= prev_col) return false;
    if (m(i, col) <= 0) return false;
    for (Index j = 0; j < i; ++j)
      if (m(j, col) < 0 || m(j, col) >= m(i, col)) return false;
    prev_col = col;
  }
  return true;
}

std::vector<Int> snf(const IntMatrix& a) {
  IntMatrix w = a;
  const Index rows = w.rows(), cols = w.cols();
  std::vector<Int> factors;
  Index t = 0;
  while (t < rows && t < cols) {
    // Bring a minimal-absolute-value nonzero entry of the trailing block
    // to position (t, t).
    Index pi = -1, pj = -1;
    for (Index i = t; i < rows; ++i)
      for (Index j = t; j < cols; ++j) {
        if (w(i, j) == 0) continue;
        if (pi < 0 || abs(w(i, j)) < abs(w(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) w.row(pi).swap(w.row(t));
    if (pj != t) w.col(pj).swap(w.col(t));

    for (;;) {
      bool disturbed = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (w(i, t) == 0) continue;
        Int q = w(i, t) / w(t, t);
        if (q != 0) w.row(i) -= q * w.row(t);
        if (w(i, t) != 0) {
          w.row(i).swap(w.row(t));  // strictly smaller remainder becomes pivot
          disturbed = true;
        }
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (w(t, j) == 0) continue;
        Int q = w(t, j) / w(t, t);
        if (q != 0) w.col(j) -= q * w.col(t);
        if (w(t, j) != 0) {
          w.col(j).swap(w.col(t));
          disturbed = true;
        }
      }
      if (disturbed) continue;
      // Divisibility pass: the pivot must divide the remaining block.
      bool divisible = true;
      for (Index i = t + 1; i < rows && divisible; ++i)
        for (Index j = t + 1; j < cols && divisible; ++j)
          if (!divides(w(t, t), w(i, j))) {
            w.row(t) += w.row(i);
            divisible = false;
          }
      if (divisible) break;
    }
    if (w(t, t) < 0) w.row(t) = -w.row(t);
    factors.push_back(w(t, t));
    ++t;
  }
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) assert(divides(factors[i], factors[i + 1]));
  return factors;
}

}  // namespace npure
