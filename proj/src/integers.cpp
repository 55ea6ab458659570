#include "npure/integers.hpp"

#include <algorithm>
#include <sstream>

namespace npure {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d) {
    if (divides(d, n)) return d == n;
  }
  return true;
}

std::vector<Int> divisors(const Int& n) {
  if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (!divides(d, n)) continue;
    small.push_back(d);
    Int cod = exact_div(n, d);
    if (cod != d) large.push_back(cod);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::pair<Int, unsigned long>> factorize(const Int& n) {
  if (n <= 0) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<Int, unsigned long>> factors;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (!divides(p, rest)) continue;
    unsigned long e = 0;
    while (divides(p, rest)) {
      rest = exact_div(rest, p);
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (rest > 1) factors.emplace_back(rest, 1);
  return factors;
}

unsigned long valuation(const Int& n, const Int& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  unsigned long e = 0;
  Int rest = abs(n);
  while (divides(p, rest)) {
    rest = exact_div(rest, p);
    ++e;
  }
  return e;
}

long long to_int64(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("to_int64: value does not fit in 64 bits");
  return static_cast<long long>(v.get_si());
}

bool MatrixLess::operator()(const IntMatrix& a, const IntMatrix& b) const {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      int c = cmp(a(i, j), b(i, j));
      if (c != 0) return c < 0;
    }
  return false;
}

bool RowVectorLess::operator()(const IntRowVector& a, const IntRowVector& b) const {
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index j = 0; j < a.cols(); ++j) {
    int c = cmp(a(j), b(j));
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << "[";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) out << ",";
    out << "[";
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) out << ",";
      out << m(i, j);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::string to_string(const IntRowVector& v) {
  std::ostringstream out;
  out << "(";
  for (Index j = 0; j < v.cols(); ++j) {
    if (j) out << ",";
    out << v(j);
  }
  out << ")";
  return out.str();
}

}  // namespace npure
