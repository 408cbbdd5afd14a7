#pragma once

#include "gammalab/abelian.hpp"
#include "gammalab/group.hpp"

#include <map>
#include <vector>

namespace gammalab {

/**
 * Left module over the integral group ring of a finite group.
 *
 * The underlying abelian group is a presentation; each group element acts by an
 * integer matrix on generator coefficients (column i = image of generator i).
 * Construction checks that the actions are well defined, that the identity acts
 * trivially and that action(a) action(b) = action(ab), all up to relations.
 */
class ZPiModule {
 public:
  /// `action[g]` for every element g.
  ZPiModule(FiniteGroup group, AbelianPresentation underlying, std::vector<IntMatrix> action);

  /// Skips the action checks; for modules that are valid by construction.
  struct Trusted {};
  ZPiModule(FiniteGroup group, AbelianPresentation underlying, std::vector<IntMatrix> action, Trusted);

  /// Actions for a generating subset; the rest follow by composition.
  static ZPiModule from_generators(FiniteGroup group, AbelianPresentation underlying,
                                   const std::map<Element, IntMatrix>& generator_action);

  /// The free module of the given rank; Z-generator i * |G| + g is g b_i.
  static ZPiModule free(const FiniteGroup& group, int rank);

  /// Z with g acting by w(g).
  static ZPiModule from_character(const FiniteGroup& group, const OrientationChar& w);

  const FiniteGroup& group() const { return group_; }
  const AbelianPresentation& underlying() const { return underlying_; }
  const IntMatrix& action(Element g) const { return action_[static_cast<std::size_t>(g)]; }
  AbelianHom action_hom(Element g) const;
  Eigen::Index ngens() const { return underlying_.ngens(); }

  IntVector act(Element g, const IntVector& x) const { return action(g) * x; }
  /// Action of a group ring element.
  IntVector act(const GroupRingElement& r, const IntVector& x) const;

  /// Rank over the group ring when this is the standard free module, otherwise -1.
  int free_rank() const { return free_rank_; }

 private:
  ZPiModule(FiniteGroup group, AbelianPresentation underlying, std::vector<IntMatrix> action, int free_rank);

  FiniteGroup group_;
  AbelianPresentation underlying_;
  std::vector<IntMatrix> action_;
  int free_rank_ = -1;
};

/// Direct sum on concatenated generators.
ZPiModule direct_sum(const ZPiModule& a, const ZPiModule& b);

/// M modulo the submodule generated by the given elements (columns).
ZPiModule quotient_module(const ZPiModule& m, const IntMatrix& elements);

/// The group ring modulo the submodule generated by N^w.
ZPiModule norm_quotient(const FiniteGroup& group, const OrientationChar& w);

/// Hom_Z(M, Z) on the dual basis, g acting by the transpose of g^{-1}. M must be free abelian.
ZPiModule dual_module(const ZPiModule& m);

/// Equivariant homomorphism between modules over the same group.
class ZPiHom {
 public:
  ZPiHom(ZPiModule source, ZPiModule target, IntMatrix matrix);

  const ZPiModule& source() const { return source_; }
  const ZPiModule& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  AbelianHom underlying() const;

 private:
  ZPiModule source_;
  ZPiModule target_;
  IntMatrix matrix_;
};

/// The twisted coinvariants Z^w (x)_{Z pi} M with the quotient map from M.
struct Coinvariants {
  AbelianPresentation group;
  AbelianHom projection;
};

/// M / <g m - w(g) m>.
Coinvariants twisted_coinvariants(const ZPiModule& m, const OrientationChar& w);

/// Coinvariants for the restricted action of a subgroup U (listed as its elements).
Coinvariants twisted_coinvariants(const ZPiModule& m, const OrientationChar& w,
                                  const std::vector<Element>& subgroup);

/// Map induced on twisted coinvariants.
AbelianHom induced_on_coinvariants(const ZPiHom& f, const OrientationChar& w);

/// Tor_1 over the group ring of (M, Z^w).
AbelianPresentation tor_one(const ZPiModule& m, const OrientationChar& w);

/// Transfer from pi-coinvariants to U-coinvariants: [m] -> sum over coset reps g of w(g) [g m].
AbelianHom transfer_down(const ZPiModule& m, const OrientationChar& w, const SubgroupCosets& u);

/// Projection from U-coinvariants to pi-coinvariants.
AbelianHom projection_up(const ZPiModule& m, const OrientationChar& w, const SubgroupCosets& u);

/// For normal U: action of sum over pi/U of g on U-coinvariants, [m] -> sum_g w(g) [g m].
AbelianHom quotient_norm_action(const ZPiModule& m, const OrientationChar& w,
                                const SubgroupCosets& u);

}  // namespace gammalab
