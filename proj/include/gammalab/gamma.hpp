#pragma once

#include "gammalab/abelian.hpp"
#include "gammalab/zpi_module.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

/// Raised for inputs outside the supported class (e.g. torsion where a lattice is required).
class UnsupportedInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n(n+1)/2
inline Eigen::Index gamma_rank(Eigen::Index n) { return n * (n + 1) / 2; }

/// Position of w_ij (i < j) among the generators v_1..v_n, w_12, w_13, ..., w_{n-1,n}.
Eigen::Index cross_index(Eigen::Index n, Eigen::Index i, Eigen::Index j);

/// Human-readable generator names "v1", "w12", ... (1-based).
std::vector<std::string> gamma_generator_names(Eigen::Index n);

/// v(x) = sum x_i^2 v_i + sum_{i<j} x_i x_j w_ij in Gamma(Z^n).
IntVector expand_v(const IntVector& x);

/// [x, y] = v(x + y) - v(x) - v(y).
IntVector cross_term(const IntVector& x, const IntVector& y);

/// Gamma(A) presented on the generators of Gamma(Z^ngens).
struct GammaGroup {
  AbelianPresentation source;
  AbelianPresentation presentation;

  /// v(a) for a given as generator coefficients of the source.
  IntVector v(const IntVector& a) const { return expand_v(a); }
};

/// Gamma(Z^n) modulo v(r) and [r, e_j] for every relation r and generator e_j.
GammaGroup gamma_presented(const AbelianPresentation& a);

/// Gamma(f): v_i -> v(f e_i), w_ij -> [f e_i, f e_j].
AbelianHom gamma_map(const AbelianHom& f);

/// Gamma of the underlying group with g acting by Gamma(g). Rejects torsion.
ZPiModule gamma_module(const ZPiModule& m);

struct SumDecomposition {
  bool holds = false;
  /// Generator correspondence Gamma(A + B) -> Gamma(A) + Gamma(B) + A (x) B.
  IntMatrix correspondence;
  InvariantFactors whole;
  InvariantFactors parts;
};

/// Checks Gamma(A + B) = Gamma(A) + Gamma(B) + A (x) B for free A, B.
SumDecomposition sum_decomposition_check(const AbelianPresentation& a, const AbelianPresentation& b);

}  // namespace gammalab
