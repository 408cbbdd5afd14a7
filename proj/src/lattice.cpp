#include "gammalab/lattice.hpp"

#include <stdexcept>

namespace gammalab {

std::int64_t to_int64(const Integer& x) {
  if (x > Integer(INT64_MAX) || x < Integer(INT64_MIN))
    throw std::overflow_error("integer " + x.str() + " does not fit in 64 bits");
  return x.convert_to<std::int64_t>();
}

std::string to_string(const Integer& x) { return x.str(); }

IntegerKernel integer_kernel(const IntMatrix& m) {
  const auto n = m.cols();
  if (m.rows() == 0) return {IntMatrix::Identity(n, n), IntMatrix::Identity(n, n)};
  auto snf = smith_normal_form(m, PivotStrategy::MinAbs, SmithTransforms::Right);
  const auto k = n - snf.rank;
  return {snf.V.rightCols(k), snf.V_inv.bottomRows(k)};
}

Sublattice::Sublattice(const IntMatrix& generators) : ambient_(generators.rows()) {
  if (generators.cols() == 0 || is_zero_matrix(generators)) {
    basis_ = IntMatrix(ambient_, 0);
    row_transform_ = IntMatrix::Identity(ambient_, ambient_);
    return;
  }
  // U G V = D, so the column span of G equals the span of d_i * (U^-1 e_i).
  auto snf = smith_normal_form(generators, PivotStrategy::MinAbs, SmithTransforms::Left);
  basis_ = snf.U_inv.leftCols(snf.rank);
  for (Eigen::Index i = 0; i < snf.rank; ++i) {
    divisors_.push_back(snf.D(i, i));
    basis_.col(i) *= snf.D(i, i);
  }
  row_transform_ = std::move(snf.U);
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& x) const {
  if (x.size() != ambient_) throw std::invalid_argument("Sublattice: dimension mismatch");
  IntVector y = exact_product(row_transform_, x);
  const auto r = static_cast<Eigen::Index>(divisors_.size());
  for (Eigen::Index i = r; i < y.size(); ++i)
    if (y(i) != 0) return std::nullopt;
  IntVector c(r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& d = divisors_[static_cast<std::size_t>(i)];
    if (y(i) % d != 0) return std::nullopt;
    c(i) = y(i) / d;
  }
  return c;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
  if (m.rows() == 0) return IntVector::Zero(m.cols());
  auto snf = smith_normal_form(m);
  IntVector y = exact_product(snf.U, b);
  IntVector z = IntVector::Zero(m.cols());
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (i < snf.rank) {
      if (y(i) % snf.D(i, i) != 0) return std::nullopt;
      z(i) = y(i) / snf.D(i, i);
    } else if (y(i) != 0) {
      return std::nullopt;
    }
  }
  return IntVector(exact_product(snf.V, z));
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  if (m.rows() == 0) return true;
  auto snf = smith_normal_form(m, PivotStrategy::MinAbs, SmithTransforms::None);
  if (snf.rank != m.rows()) return false;
  return snf.D(m.rows() - 1, m.rows() - 1) == 1;
}

}  // namespace gammalab
