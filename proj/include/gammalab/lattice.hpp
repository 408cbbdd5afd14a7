#pragma once

#include "gammalab/smith.hpp"

#include <optional>

namespace gammalab {

/// Saturated Z-basis of {x : M x = 0} together with the coordinate map back from the ambient space.
struct IntegerKernel {
  /// ambient x k, columns form a basis of the kernel.
  IntMatrix basis;
  /// k x ambient; for x in the kernel, basis * (coordinates * x) == x.
  IntMatrix coordinates;
};

IntegerKernel integer_kernel(const IntMatrix& m);

/**
 * The subgroup of Z^n spanned by a set of column vectors.
 *
 * Stores a basis and the Smith data needed to express members in that basis.
 */
class Sublattice {
 public:
  /// Span of the columns of `generators` (ambient dimension = generators.rows()).
  explicit Sublattice(const IntMatrix& generators);

  Eigen::Index ambient_dimension() const { return ambient_; }
  Eigen::Index rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& x) const { return coordinates(x).has_value(); }
  std::optional<IntVector> coordinates(const IntVector& x) const;

 private:
  Eigen::Index ambient_ = 0;
  IntMatrix basis_;
  IntMatrix row_transform_;
  std::vector<Integer> divisors_;
};

/// Some x with m * x == b, if one exists over the integers.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Determinant +-1 test for square integer matrices (via the Smith form).
bool is_unimodular(const IntMatrix& m);

}  // namespace gammalab
