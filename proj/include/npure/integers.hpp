#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

// Exact arbitrary-precision scalar for all matrix work. No rounding ever occurs.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpz_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

}  // namespace Eigen

namespace npure {

using Int = mpz_class;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntRowVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division; remainder has the sign of the divisor, quotient rounds down.
inline Int fdiv_q(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_prime(const Int& n);

/// Positive divisors of n > 0, ascending.
std::vector<Int> divisors(const Int& n);

/// Prime factorization of n > 0 by trial division, ascending primes.
std::vector<std::pair<Int, unsigned long>> factorize(const Int& n);

/// Largest e with p^e | n (n != 0).
unsigned long valuation(const Int& n, const Int& p);

/// Checked narrowing for report serialization; throws on overflow.
long long to_int64(const Int& v);

/// Total lexicographic order on matrices: shape first, then entries row-major.
struct MatrixLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const;
};

struct RowVectorLess {
  bool operator()(const IntRowVector& a, const IntRowVector& b) const;
};

std::string to_string(const IntMatrix& m);
std::string to_string(const IntRowVector& v);

}  // namespace npure
