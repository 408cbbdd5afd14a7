#pragma once

#include "gammalab/integer.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gammalab {

/** Pivot rule for the Smith normal form elimination. Both rules produce the same diagonal. */
enum class PivotStrategy {
  /// Move the nonzero entry of least absolute value to the pivot and reduce by division.
  MinAbs,
  /// Keep the pivot in place and clear entries with unimodular 2x2 extended-gcd transforms.
  GcdElimination,
};

/// Which unimodular transforms a Smith computation records.
enum class SmithTransforms {
  None,
  /// U and U^-1 (row operations).
  Left,
  /// V and V^-1 (column operations).
  Right,
  All,
};

/**
 * Result of a Smith normal form computation: U * M * V = D.
 *
 * U and V are unimodular, D is diagonal with d_1 | d_2 | ... and every d_i >= 0.
 * The inverses of U and V are tracked alongside so callers can move between
 * original and diagonal coordinates without a second elimination.
 */
template <typename Scalar>
struct SmithDecomposition {
  MatrixX<Scalar> U;
  MatrixX<Scalar> D;
  MatrixX<Scalar> V;
  MatrixX<Scalar> U_inv;
  MatrixX<Scalar> V_inv;
  /// Number of nonzero diagonal entries.
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Eigen::Index n = std::min(D.rows(), D.cols());
    out.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar scalar_abs(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar scalar_xgcd(const Scalar& a, const Scalar& b, Scalar& s, Scalar& t) {
  Scalar old_r = a, r = b;
  Scalar old_s = 1, cur_s = 0;
  Scalar old_t = 0, cur_t = 1;
  while (r != 0) {
    Scalar q = old_r / r;
    Scalar tmp = old_r - q * r;
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

/// Applies elementary operations to D while keeping U, V and their inverses in sync.
template <typename Scalar>
class SmithWorker {
 public:
  using Matrix = MatrixX<Scalar>;

  SmithWorker(Matrix d, SmithTransforms track)
      : rows_(track == SmithTransforms::Left || track == SmithTransforms::All),
        cols_(track == SmithTransforms::Right || track == SmithTransforms::All) {
    out_.D = std::move(d);
    const auto m = out_.D.rows();
    const auto n = out_.D.cols();
    if (rows_) {
      out_.U = Matrix::Identity(m, m);
      out_.U_inv = Matrix::Identity(m, m);
    }
    if (cols_) {
      out_.V = Matrix::Identity(n, n);
      out_.V_inv = Matrix::Identity(n, n);
    }
  }

  Matrix& D() { return out_.D; }

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    out_.D.row(i).swap(out_.D.row(j));
    if (!rows_) return;
    out_.U.row(i).swap(out_.U.row(j));
    out_.U_inv.col(i).swap(out_.U_inv.col(j));
  }

  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    out_.D.col(i).swap(out_.D.col(j));
    if (!cols_) return;
    out_.V.col(i).swap(out_.V.col(j));
    out_.V_inv.row(i).swap(out_.V_inv.row(j));
  }

  /// row_i += q * row_j
  void add_row(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    if (q == 0) return;
    add_scaled(out_.D.row(i), out_.D.row(j), q);
    if (!rows_) return;
    add_scaled(out_.U.row(i), out_.U.row(j), q);
    add_scaled(out_.U_inv.col(j), out_.U_inv.col(i), Scalar(-q));
  }

  /// col_i += q * col_j
  void add_col(Eigen::Index i, Eigen::Index j, const Scalar& q) {
    if (q == 0) return;
    add_scaled(out_.D.col(i), out_.D.col(j), q);
    if (!cols_) return;
    add_scaled(out_.V.col(i), out_.V.col(j), q);
    add_scaled(out_.V_inv.row(j), out_.V_inv.row(i), Scalar(-q));
  }

  void negate_row(Eigen::Index i) {
    out_.D.row(i) = -out_.D.row(i);
    if (!rows_) return;
    out_.U.row(i) = -out_.U.row(i);
    out_.U_inv.col(i) = -out_.U_inv.col(i);
  }

  /// (row_i, row_j) <- (a row_i + b row_j, c row_i + d row_j), requires ad - bc = 1.
  void combine_rows(Eigen::Index i, Eigen::Index j, const Scalar& a, const Scalar& b,
                    const Scalar& c, const Scalar& d) {
    mix(out_.D.row(i), out_.D.row(j), a, b, c, d);
    if (!rows_) return;
    mix(out_.U.row(i), out_.U.row(j), a, b, c, d);
    mix(out_.U_inv.col(i), out_.U_inv.col(j), d, Scalar(-c), Scalar(-b), a);
  }

  /// (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j), requires ad - bc = 1.
  void combine_cols(Eigen::Index i, Eigen::Index j, const Scalar& a, const Scalar& b,
                    const Scalar& c, const Scalar& d) {
    mix(out_.D.col(i), out_.D.col(j), a, b, c, d);
    if (!cols_) return;
    mix(out_.V.col(i), out_.V.col(j), a, b, c, d);
    mix(out_.V_inv.row(i), out_.V_inv.row(j), d, Scalar(-c), Scalar(-b), a);
  }

  SmithDecomposition<Scalar> finish(Eigen::Index rank) {
    out_.rank = rank;
    return std::move(out_);
  }

 private:
  template <typename X, typename Y>
  static void add_scaled(X&& target, const Y& source, const Scalar& q) {
    for (Eigen::Index k = 0; k < target.size(); ++k)
      if (source(k) != 0) target(k) += q * source(k);
  }

  template <typename X, typename Y>
  static void mix(X&& x, Y&& y, const Scalar& a, const Scalar& b, const Scalar& c,
                  const Scalar& d) {
    for (Eigen::Index k = 0; k < x.size(); ++k) {
      const Scalar xi = x(k);
      const Scalar yi = y(k);
      if (xi == 0 && yi == 0) continue;
      x(k) = a * xi + b * yi;
      y(k) = c * xi + d * yi;
    }
  }

  bool rows_;
  bool cols_;
  SmithDecomposition<Scalar> out_;
};

/// Returns the first (i, j), i, j > t, with D(i, j) not divisible by D(t, t).
template <typename Matrix>
std::optional<std::pair<Eigen::Index, Eigen::Index>> find_indivisible(const Matrix& d,
                                                                      Eigen::Index t) {
  const auto& pivot = d(t, t);
  for (Eigen::Index j = t + 1; j < d.cols(); ++j)
    for (Eigen::Index i = t + 1; i < d.rows(); ++i)
      if (d(i, j) != 0 && d(i, j) % pivot != 0) return std::make_pair(i, j);
  return std::nullopt;
}

template <typename Scalar>
SmithDecomposition<Scalar> smith_min_abs(MatrixX<Scalar> input, SmithTransforms track) {
  SmithWorker<Scalar> w(std::move(input), track);
  auto& d = w.D();
  const Eigen::Index m = d.rows(), n = d.cols();
  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    bool found_any = true;
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      Scalar best = 0;
      for (Eigen::Index j = t; j < n; ++j)
        for (Eigen::Index i = t; i < m; ++i) {
          if (d(i, j) == 0) continue;
          Scalar a = scalar_abs(d(i, j));
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
            if (best == 1) break;
          }
        }
      if (pi < 0) {
        found_any = false;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        w.add_row(i, t, Scalar(-(d(i, t) / d(t, t))));
        if (d(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        w.add_col(j, t, Scalar(-(d(t, j) / d(t, t))));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      if (auto bad = find_indivisible(d, t)) {
        w.add_row(t, bad->first, Scalar(1));
        continue;
      }
      break;
    }
    if (!found_any) break;
    if (d(t, t) < 0) w.negate_row(t);
  }
  return w.finish(t);
}

template <typename Scalar>
SmithDecomposition<Scalar> smith_gcd(MatrixX<Scalar> input, SmithTransforms track) {
  SmithWorker<Scalar> w(std::move(input), track);
  auto& d = w.D();
  const Eigen::Index m = d.rows(), n = d.cols();
  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index j = t; j < n && pi < 0; ++j)
      for (Eigen::Index i = t; i < m; ++i)
        if (d(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    w.swap_rows(t, pi);
    w.swap_cols(t, pj);

    while (true) {
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        // A Bezout combination here can push other entries back into the pivot column and cycle.
        if (d(i, t) % d(t, t) == 0) {
          w.add_row(i, t, Scalar(-(d(i, t) / d(t, t))));
          continue;
        }
        Scalar s, c;
        const Scalar a = d(t, t), b = d(i, t);
        const Scalar g = scalar_xgcd(a, b, s, c);
        w.combine_rows(t, i, s, c, Scalar(-(b / g)), Scalar(a / g));
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        if (d(t, j) % d(t, t) == 0) {
          w.add_col(j, t, Scalar(-(d(t, j) / d(t, t))));
          continue;
        }
        Scalar s, c;
        const Scalar a = d(t, t), b = d(t, j);
        const Scalar g = scalar_xgcd(a, b, s, c);
        w.combine_cols(t, j, s, c, Scalar(-(b / g)), Scalar(a / g));
      }
      bool column_clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i)
        if (d(i, t) != 0) column_clean = false;
      if (!column_clean) continue;
      if (auto bad = find_indivisible(d, t)) {
        w.add_row(t, bad->first, Scalar(1));
        continue;
      }
      break;
    }
    if (d(t, t) < 0) w.negate_row(t);
  }
  return w.finish(t);
}

}  // namespace detail

/**
 * Smith normal form of an integer matrix.
 *
 * Only the requested transforms are accumulated; with SmithTransforms::None just
 * D and rank are filled in, which is all invariant-factor queries need.
 */
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& m, PivotStrategy strategy = PivotStrategy::MinAbs,
    SmithTransforms track_transforms = SmithTransforms::All) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> work = m;
  if (strategy == PivotStrategy::GcdElimination)
    return detail::smith_gcd<Scalar>(std::move(work), track_transforms);
  return detail::smith_min_abs<Scalar>(std::move(work), track_transforms);
}

/// Nonzero diagonal entries of the Smith form, in divisibility order.
template <typename Derived>
std::vector<typename Derived::Scalar> elementary_divisors(const Eigen::MatrixBase<Derived>& m) {
  auto snf = smith_normal_form(m, PivotStrategy::MinAbs, SmithTransforms::None);
  auto diag = snf.diagonal();
  diag.resize(static_cast<std::size_t>(snf.rank));
  return diag;
}

}  // namespace gammalab
