#pragma once

#include "gammalab/gamma.hpp"
#include "gammalab/homology.hpp"
#include "gammalab/zpi_module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammalab {

/// Raised when a form's integral matrix is not invertible over Z.
class SingularFormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// What the rows and columns of a form matrix index.
enum class FormBasis {
  /// A basis b_1..b_k of the standard free module over the group ring.
  GroupRing,
  /// The Z-generators of a module that is free as an abelian group.
  Integral,
};

using GroupRingRows = std::vector<std::vector<GroupRingElement>>;

/// Matrix of group ring values lambda(b_i, b_j) for the w-twisted involution.
class HermitianForm {
 public:
  HermitianForm(FiniteGroup group, OrientationChar w, GroupRingRows matrix,
                FormBasis basis = FormBasis::GroupRing);

  /// diag(e_1, ..., e_k) on the free module of rank k.
  static HermitianForm diagonal(const FiniteGroup& group, const OrientationChar& w,
                                const std::vector<int>& entries);

  const FiniteGroup& group() const { return group_; }
  const OrientationChar& character() const { return w_; }
  FormBasis basis() const { return basis_; }
  int rank() const { return static_cast<int>(matrix_.size()); }
  const GroupRingElement& entry(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const GroupRingRows& matrix() const { return matrix_; }

 private:
  FiniteGroup group_;
  OrientationChar w_;
  GroupRingRows matrix_;
  FormBasis basis_;
};

/// lambda(h1 b_i, h2 b_j) = h1 lambda(b_i, b_j) bar(h2), for group ring bases.
GroupRingElement translated_value(const HermitianForm& f, int i, Element h1, int j, Element h2);

/// lambda(x, y) = bar(lambda(y, x)) on every pair of translates of basis elements.
bool check_hermitian(const HermitianForm& f);

/// For integral bases: lambda(g x, y) = g lambda(x, y) under the action of `pi2`.
bool check_equivariant(const HermitianForm& f, const ZPiModule& pi2);

HermitianForm orthogonal_sum(const HermitianForm& a, const HermitianForm& b);

/// The form in the basis b'_j = sum_i p_ij b_i (group ring bases only).
HermitianForm change_basis(const HermitianForm& f, const GroupRingRows& p);

/// The group ring valued form on an integral basis with ev0(lambda(x, h y) ) = s(x, h y).
HermitianForm form_from_integral(const ZPiModule& pi2, const OrientationChar& w, const IntMatrix& s);

/// ev0 of the form on the Z-basis of the underlying abelian group (index i * |G| + g for group ring bases).
IntMatrix ev0_matrix(const HermitianForm& f);

/// (pi, w, pi2, k, lambda) with the k-invariant restricted to the trivial case.
class QuadraticTwoType {
 public:
  /// Validates ranks, freeness of pi2 over Z, the hermitian law and (integral bases) equivariance.
  QuadraticTwoType(ZPiModule pi2, HermitianForm form, bool k_invariant_trivial = true);

  const FiniteGroup& group() const { return pi2_.group(); }
  const OrientationChar& character() const { return form_.character(); }
  const ZPiModule& pi2() const { return pi2_; }
  const HermitianForm& form() const { return form_; }
  bool k_invariant_trivial() const { return true; }

 private:
  ZPiModule pi2_;
  HermitianForm form_;
};

/// Adds a free summand to pi2 and an orthogonal <sign> to the form.
QuadraticTwoType stabilize(const QuadraticTwoType& q, int sign);

/**
 * The form as an element of Gamma(pi2*), pi2* = dual_module(pi2): diagonal and cross coefficients
 * reproduce ev0_matrix. For a unimodular form the adjoint pi2 -> pi2* (x) Z^w carries it to the
 * element of Gamma(pi2) with matrix S^{-1}.
 */
IntVector lambda_to_gamma(const QuadraticTwoType& q);

/// Symmetric matrix of a Gamma(Z^n) element: x_k on the diagonal, x_{w_kl} off it.
IntMatrix gamma_element_matrix(const IntVector& x, Eigen::Index n);

/// A functional on the twisted coinvariants of Gamma(pi2*) sending lambda (x) 1 to 1, if any.
std::optional<IntVector> kappa_splitting(const QuadraticTwoType& q);

/// w trivial, or the 2-part of |G| exceeds 2.
bool kappa_hypotheses_hold(const FiniteGroup& g, const OrientationChar& w);

/// S_lambda^{-1} S_x, an endomorphism of pi2; throws SingularFormError when S_lambda is not unimodular.
IntMatrix kappa_prime(const QuadraticTwoType& q, const IntVector& gamma_element);

struct KappaDiagnostics {
  /// k with N^w lambda = k lambda, when lambda is such an eigenvector.
  std::optional<Integer> kappa1;
  /// trace of kappa'(lambda).
  Integer kappa2;
  Eigen::Index rank = 0;
  /// |G| chi - 2 when an Euler characteristic was supplied.
  std::optional<Integer> euler_rank;
  std::optional<Element> tau;
  std::optional<Integer> tau_trace;
  /// -trace / 2 when the trace of tau kappa'(lambda) is even.
  std::optional<Integer> kappa3;
  std::string kappa3_note;
};

KappaDiagnostics kappa_diagnostics(const QuadraticTwoType& q,
                                   const std::optional<Integer>& euler_characteristic = std::nullopt);

/// Torsion subgroup of the twisted coinvariants of Gamma(pi2).
AbelianPresentation obstruction_torsion(const OrientationChar& w, const ZPiModule& pi2);

/// Number of g != 1 with g^2 = 1 and w(g) = -1.
int involution_rank_formula(const FiniteGroup& g, const OrientationChar& w);

struct H4Split {
  AbelianPresentation coinvariant_part;
  AbelianPresentation homology_part;
  AbelianPresentation total;
};

/// Z^w (x) Gamma(pi2) + H_4(G; Z^w) for a free pi2 (trivial k-invariant).
H4Split h4_twotype_split(const OrientationChar& w, const ZPiModule& pi2, ResolutionKind kind,
                         std::size_t budget = kDefaultHomologyBudget);

struct CensusReport {
  int group_order = 0;
  AbelianPresentation coinvariants;
  AbelianPresentation torsion;
  Integer count;
  IntVector lambda_gamma;
  /// Canonical coordinates of lambda (x) 1 in the twisted coinvariants of Gamma(pi2*).
  IntVector lambda_tensor_one;
  bool primitive = false;
  std::optional<IntVector> kappa;
  bool kappa_hypotheses = false;
  InvariantFactors norm_quotient;
  bool norm_quotient_ok = false;
  InvariantFactors tor_one;
  bool tor_one_ok = false;
  int involution_rank = 0;
};

CensusReport census(const QuadraticTwoType& q);

}  // namespace gammalab
