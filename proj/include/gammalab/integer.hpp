#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>

namespace gammalab {

/** Exact integer scalar (GMP backed, no expression templates so Eigen sees a plain value type). */
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/** Dense matrix over an arbitrary scalar. */
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/** Dense column vector over an arbitrary scalar. */
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/** Exact integer matrix. Relations are rows; homomorphisms act on column vectors. */
using IntMatrix = MatrixX<Integer>;

/** Exact integer column vector. */
using IntVector = VectorX<Integer>;

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor division and the matching nonnegative remainder for b > 0.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer floor_mod(const Integer& a, const Integer& b) { return a - b * floor_div(a, b); }

/// Extended gcd: returns g = gcd(a, b) >= 0 and sets s, t with s*a + t*b = g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b;
  Integer old_s = 1, cur_s = 0;
  Integer old_t = 0, cur_t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

/// a * b, skipping zero entries of a; avoids the temporaries of the generic product on big integers.
template <typename A, typename B>
MatrixX<typename A::Scalar> exact_product(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  using Scalar = typename A::Scalar;
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
    }
  return out;
}

/// Converts to a machine integer; throws std::overflow_error when out of range.
std::int64_t to_int64(const Integer& x);

std::string to_string(const Integer& x);

/// Converts a matrix of machine integers (e.g. parsed input) to an exact matrix.
template <typename Derived>
IntMatrix to_integer_matrix(const Eigen::MatrixBase<Derived>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Integer(m(i, j));
  return out;
}

/// Identity test without relying on Eigen's fuzzy comparisons.
template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace gammalab
