#pragma once

#include "gammalab/lattice.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gammalab {

/** Canonical decomposition Z^r + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... and d_i >= 2. */
struct InvariantFactors {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  /// Product of the torsion factors (1 for torsion-free groups).
  Integer torsion_order() const;

  /// "0", "Z/4", "Z^6", "Z/2 + Z/2 + Z".
  std::string to_string() const;

  friend bool operator==(const InvariantFactors&, const InvariantFactors&) = default;
};

struct AbelianStructure;

/**
 * Finitely generated abelian group Z^ngens / rowspan(relations).
 *
 * Each relation is a row with `ngens` columns. Elements are column vectors of
 * generator coefficients.
 */
class AbelianPresentation {
 public:
  /// The trivial group on no generators.
  AbelianPresentation();
  AbelianPresentation(Eigen::Index ngens, IntMatrix relations);

  static AbelianPresentation free(Eigen::Index rank);
  static AbelianPresentation cyclic(const Integer& order);
  static AbelianPresentation from_invariants(const InvariantFactors& f);

  Eigen::Index ngens() const { return ngens_; }
  const IntMatrix& relations() const { return relations_; }

  /// True iff x represents the zero element.
  bool is_zero(const IntVector& x) const;
  bool equal_elements(const IntVector& x, const IntVector& y) const {
    return is_zero(IntVector(x - y));
  }

  /// Appends relation rows.
  AbelianPresentation with_relations(const IntMatrix& extra) const;

  /// Invariant-factor coordinates; computed once and shared between copies.
  const AbelianStructure& structure() const;

 private:
  struct Cache;

  Eigen::Index ngens_ = 0;
  IntMatrix relations_;
  std::shared_ptr<Cache> cache_;
};

/**
 * Change of generators that puts a presentation in invariant-factor form.
 *
 * Canonical generators are listed torsion first (d_1 | d_2 | ...) then free;
 * trivial Smith factors are dropped.
 */
struct AbelianStructure {
  InvariantFactors invariants;
  /// One entry per canonical generator: its order, or 0 for free generators.
  std::vector<Integer> moduli;
  /// canonical x ngens; raw canonical coordinates of an element.
  IntMatrix to_canonical;
  /// ngens x canonical; column k is canonical generator k in the original generators.
  IntMatrix from_canonical;

  /// Canonical coordinates with torsion entries reduced into [0, d).
  IntVector reduce(const IntVector& x) const;
};

inline const AbelianStructure& abelian_structure(const AbelianPresentation& a) {
  return a.structure();
}

InvariantFactors invariant_factors(const AbelianPresentation& a);

inline bool isomorphic(const AbelianPresentation& a, const AbelianPresentation& b) {
  return invariant_factors(a) == invariant_factors(b);
}

/**
 * Homomorphism between presented groups.
 *
 * `matrix` is target.ngens x source.ngens; column i is the image of source
 * generator i. Construction checks that every source relation is sent into the
 * target relation subgroup.
 */
class AbelianHom {
 public:
  AbelianHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix);

  static AbelianHom identity(const AbelianPresentation& a);
  static AbelianHom zero(const AbelianPresentation& source, const AbelianPresentation& target);

  const AbelianPresentation& source() const { return source_; }
  const AbelianPresentation& target() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }

  IntVector apply(const IntVector& x) const { return matrix_ * x; }

  /// Equality as maps, i.e. up to the target relations.
  bool equals(const AbelianHom& other) const;

  /// Skips the well-definedness check; for maps that are correct by construction.
  struct Trusted {};
  AbelianHom(AbelianPresentation source, AbelianPresentation target, IntMatrix matrix, Trusted);

 private:
  AbelianPresentation source_;
  AbelianPresentation target_;
  IntMatrix matrix_;
};

/// after ∘ before
AbelianHom compose(const AbelianHom& after, const AbelianHom& before);

/// Sum of two homs with the same source and target.
AbelianHom add(const AbelianHom& f, const AbelianHom& g);
AbelianHom scale(const Integer& k, const AbelianHom& f);

/// A (+) B on concatenated generators.
AbelianPresentation direct_sum(const AbelianPresentation& a, const AbelianPresentation& b);

/// Presentation of the torsion subgroup and its inclusion into A.
std::pair<AbelianPresentation, AbelianHom> torsion_part(const AbelianPresentation& a);

/// True iff some homomorphism A -> Z sends x to 1.
bool is_primitive_mod_torsion(const AbelianPresentation& a, const IntVector& x);

/// A functional phi (row over A's generators, vanishing on relations) with phi(x) = 1, if any.
std::optional<IntVector> splitting_functional(const AbelianPresentation& a, const IntVector& x);

/// A (x)_Z B on generators g_i (x) h_j in lexicographic order (index i * B.ngens + j).
AbelianPresentation tensor_over_Z(const AbelianPresentation& a, const AbelianPresentation& b);

/// A / <columns of elements>, with the projection.
std::pair<AbelianPresentation, AbelianHom> quotient(const AbelianPresentation& a,
                                                    const IntMatrix& elements);

/// Kernel of f with its inclusion into f.source().
std::pair<AbelianPresentation, AbelianHom> kernel(const AbelianHom& f);

/// Cokernel of f with the projection from f.target().
std::pair<AbelianPresentation, AbelianHom> cokernel(const AbelianHom& f);

bool is_injective(const AbelianHom& f);
bool is_surjective(const AbelianHom& f);

/// All elements of a finite group as canonical coordinates (lexicographic order).
std::vector<IntVector> enumerate_elements(const AbelianStructure& s);

}  // namespace gammalab
