#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "npure/lattice.hpp"
#include "npure/normal_form.hpp"

using namespace npure;
using namespace npure::testing;

TEST_CASE("hnf of identity lattice") {
  IntMatrix a = rows({{1, 0}, {0, 1}});
  CHECK(hnf_matrix(a) == a);
}

TEST_CASE("hnf matches hand row-reduction") {
  // [[2,0],[1,3]]: rows (1,3),(0,6); determinant 6 preserved.
  CHECK(hnf_matrix(rows({{2, 0}, {1, 3}})) == rows({{1, 3}, {0, 6}}));
  CHECK(abs(laplace_det(rows({{2, 0}, {1, 3}}))) == 6);
  // [[4,6],[6,12]]: rows (2,0),(0,6); determinant 12 preserved.
  CHECK(hnf_matrix(rows({{4, 6}, {6, 12}})) == rows({{2, 0}, {0, 6}}));
  CHECK(abs(laplace_det(rows({{4, 6}, {6, 12}}))) == 12);
}

TEST_CASE("hnf trims zero rows and handles empty input") {
  CHECK(hnf_matrix(rows({{0, 0}, {0, 0}})).rows() == 0);
  IntMatrix empty(0, 3);
  CHECK(hnf_matrix(empty).rows() == 0);
  CHECK(hnf(empty).rank() == 0);
}

TEST_CASE("hnf is idempotent and span-preserving on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 4), entry(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    IntMatrix h = hnf_matrix(a);
    CHECK(hnf_matrix(h) == h);
    CHECK((h.rows() == 0 || is_hnf(h)));
    LatticeBasis lb = hnf(a);
    LatticeBasis la = hnf(h);
    for (Index i = 0; i < a.rows(); ++i) CHECK(lattice_contains(lb, IntRowVector(a.row(i))));
    for (Index i = 0; i < h.rows(); ++i) CHECK(lattice_contains(la, IntRowVector(h.row(i))));
    CHECK(lb == la);
  }
}

TEST_CASE("snf invariant factors on pinned inputs") {
  CHECK(snf(rows({{1, 0}, {0, 1}})) == std::vector<Int>{1, 1});
  // minor-gcd oracle: entry gcd 2, 2x2 minor gcd 12.
  CHECK(minor_gcd(rows({{4, 6}, {6, 12}}), 1) == 2);
  CHECK(minor_gcd(rows({{4, 6}, {6, 12}}), 2) == 12);
  CHECK(snf(rows({{4, 6}, {6, 12}})) == std::vector<Int>{2, 6});
  // entry gcd 1, determinant 6.
  CHECK(snf(rows({{2, 0}, {0, 3}})) == std::vector<Int>{1, 6});
}

TEST_CASE("snf divisibility chain and minor gcd products on random matrices") {
  std::mt19937 rng(765432);
  std::uniform_int_distribution<int> dim(1, 3), entry(-8, 8);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix a(dim(rng), dim(rng));
    for (Index i = 0; i < a.rows(); ++i)
      for (Index j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    auto d = snf(a);
    Int prod = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK(d[j] > 0);
      if (j + 1 < d.size()) CHECK(divides(d[j], d[j + 1]));
      prod *= d[j];
      CHECK(prod == minor_gcd(a, static_cast<Index>(j + 1)));
    }
  }
}

TEST_CASE("determinant equals product of hnf pivots and of snf factors") {
  std::mt19937 rng(99185);
  std::uniform_int_distribution<int> entry(-7, 7);
  int done = 0;
  while (done < 25) {
    IntMatrix a(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) a(i, j) = entry(rng);
    Int det = laplace_det(a);
    if (det == 0) continue;
    ++done;
    IntMatrix h = hnf_matrix(a);
    REQUIRE(h.rows() == 3);
    Int pivot_prod = h(0, 0) * h(1, 1) * h(2, 2);
    CHECK(pivot_prod == abs(det));
    Int snf_prod = 1;
    for (const Int& d : snf(a)) snf_prod *= d;
    CHECK(snf_prod == abs(det));
  }
}

TEST_CASE("left kernel rows annihilate the input and are saturated") {
  IntMatrix a = rows({{4}, {-6}});
  IntMatrix k = left_kernel(a);
  REQUIRE(k.rows() == 1);
  CHECK(k * a == IntMatrix::Zero(1, 1));
  CHECK((k(0, 0) == 3 && k(0, 1) == 2));
}

TEST_CASE("lattice_sum pinned examples") {
  LatticeBasis two = hnf(rows({{2, 0}, {0, 2}}));
  LatticeBasis three = hnf(rows({{3, 0}, {0, 3}}));
  CHECK(lattice_sum(two, three) == LatticeBasis::full(2));
  LatticeBasis l = hnf(rows({{1, 3}, {0, 6}}));
  CHECK(lattice_sum(l, l) == l);
  CHECK(lattice_sum(l, LatticeBasis::zero(2)) == l);
  CHECK_THROWS_AS(lattice_sum(l, LatticeBasis::zero(3)), std::invalid_argument);
}

TEST_CASE("lattice_intersect pinned examples") {
  // (4) ∩ (6) = (12), the lcm.
  CHECK(lattice_intersect(hnf(rows({{4}})), hnf(rows({{6}}))) == hnf(rows({{12}})));
  // 2Z^2 ∩ span{(1,1)} = span{(2,2)}.
  CHECK(lattice_intersect(hnf(rows({{2, 0}, {0, 2}})), hnf(rows({{1, 1}}))) ==
        hnf(rows({{2, 2}})));
  LatticeBasis l = hnf(rows({{1, 3}, {0, 6}}));
  CHECK(lattice_intersect(LatticeBasis::full(2), l) == l);
}

TEST_CASE("lattice_intersect is the largest common sublattice on box scans") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 12; ++trial) {
    IntMatrix a(2, 2), b(2, 2);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j) {
        a(i, j) = entry(rng);
        b(i, j) = entry(rng);
      }
    LatticeBasis la = hnf(a), lb = hnf(b);
    LatticeBasis cap = lattice_intersect(la, lb);
    CHECK(lattice_contains(la, cap));
    CHECK(lattice_contains(lb, cap));
    for (long x = -8; x <= 8; ++x)
      for (long y = -8; y <= 8; ++y) {
        IntRowVector v = rowvec({x, y});
        bool in_both = combination_reaches(a, v, 40) && combination_reaches(b, v, 40);
        CHECK(lattice_contains(cap, v) == in_both);
      }
  }
}

TEST_CASE("sum and intersect are commutative and associative") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix a(2, 3), b(1, 3), c(2, 3);
    for (Index j = 0; j < 3; ++j) {
      a(0, j) = entry(rng);
      a(1, j) = entry(rng);
      b(0, j) = entry(rng);
      c(0, j) = entry(rng);
      c(1, j) = entry(rng);
    }
    LatticeBasis la = hnf(a), lb = hnf(b), lc = hnf(c);
    CHECK(lattice_sum(la, lb) == lattice_sum(lb, la));
    CHECK(lattice_intersect(la, lb) == lattice_intersect(lb, la));
    CHECK(lattice_sum(lattice_sum(la, lb), lc) == lattice_sum(la, lattice_sum(lb, lc)));
    CHECK(lattice_intersect(lattice_intersect(la, lb), lc) ==
          lattice_intersect(la, lattice_intersect(lb, lc)));
  }
}

TEST_CASE("lattice_contains pinned examples") {
  LatticeBasis l = hnf(rows({{1, 3}, {0, 6}}));
  CHECK(lattice_contains(l, rowvec({2, 0})));  // (2,0) = 2(1,3) - (0,6)
  CHECK(lattice_contains(l, rowvec({0, 0})));
  LatticeBasis even = hnf(rows({{2, 0}, {0, 2}}));
  CHECK_FALSE(lattice_contains(even, rowvec({1, 1})));
  CHECK_THROWS_AS(lattice_contains(even, rowvec({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("lattice_coordinates reconstructs members") {
  LatticeBasis l = hnf(rows({{1, 3}, {0, 6}}));
  auto c = lattice_coordinates(l, rowvec({2, 0}));
  REQUIRE(c.has_value());
  CHECK(IntRowVector(*c * l.basis()) == rowvec({2, 0}));
  CHECK_FALSE(lattice_coordinates(l, rowvec({0, 1})).has_value());
}
