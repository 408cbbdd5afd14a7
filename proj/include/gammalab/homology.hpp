#pragma once

#include "gammalab/abelian.hpp"
#include "gammalab/group.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

/// Raised when a computation would build matrices beyond the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest free rank (over the group ring) a resolution provider may allocate.
inline constexpr std::size_t kDefaultHomologyBudget = 256;

/**
 * Sparse matrix over the group ring describing a map of free left modules.
 *
 * Entry (i, j) is the coefficient of target basis element i in the image of
 * source basis element j, so f(x b_j) = sum_i x a_ij b'_i.
 */
class GroupRingMatrix {
 public:
  struct Term {
    Eigen::Index row;
    Element element;
    Integer coeff;
  };

  GroupRingMatrix() = default;
  GroupRingMatrix(Eigen::Index rows, Eigen::Index cols, int group_order);

  /// Dense input: entries[i][j] is a coefficient vector of length |G|.
  static GroupRingMatrix from_dense(const std::vector<std::vector<GroupRingElement>>& entries,
                                    Eigen::Index cols, int group_order);

  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return static_cast<Eigen::Index>(columns_.size()); }
  int group_order() const { return order_; }

  /// Adds c * g to entry (row, col).
  void add(Eigen::Index row, Eigen::Index col, Element g, const Integer& c);
  const std::vector<Term>& column(Eigen::Index j) const { return columns_[static_cast<std::size_t>(j)]; }
  GroupRingElement entry(Eigen::Index i, Eigen::Index j) const;

  /// Integer matrix after applying the twisted augmentation to each entry.
  IntMatrix augmented(const OrientationChar& w) const;

  /// Integer matrix on the Z-bases {g b_j}, index j * |G| + g.
  IntMatrix underlying(const FiniteGroup& g) const;

 private:
  Eigen::Index rows_ = 0;
  int order_ = 0;
  std::vector<std::vector<Term>> columns_;
};

/// after ∘ before
GroupRingMatrix compose(const FiniteGroup& g, const GroupRingMatrix& after,
                        const GroupRingMatrix& before);

/**
 * Free resolution of the trivial module Z over the group ring.
 *
 * ranks[n] is the rank of F_n; boundaries[n - 1] is d_n: F_n -> F_{n-1}.
 */
class Resolution {
 public:
  /// Checks shapes, d d = 0, and exactness of the underlying augmented integer complex
  /// in degrees 0 .. length - 1.
  static Resolution validated(FiniteGroup group, std::vector<GroupRingMatrix> boundaries,
                              std::size_t min_length = 5);

  /// Builds without the exactness check (providers whose exactness is known).
  static Resolution trusted(FiniteGroup group, std::vector<GroupRingMatrix> boundaries);

  const FiniteGroup& group() const { return group_; }
  int length() const { return static_cast<int>(boundaries_.size()); }
  Eigen::Index rank(int n) const;
  const GroupRingMatrix& boundary(int n) const { return boundaries_[static_cast<std::size_t>(n - 1)]; }

 private:
  Resolution(FiniteGroup group, std::vector<GroupRingMatrix> boundaries);

  FiniteGroup group_;
  std::vector<GroupRingMatrix> boundaries_;
};

/// First degree in which the augmented underlying complex fails to be exact, if any.
std::optional<int> first_inexact_degree(const Resolution& r);

/// Normalized bar resolution through degree `max_degree`; cells [g1|...|gn] with all gi != 1.
Resolution bar_resolution(const FiniteGroup& g, int max_degree,
                          std::size_t budget = kDefaultHomologyBudget);

/// The element of maximal order when the group is cyclic.
std::optional<Element> cyclic_generator(const FiniteGroup& g);

/// Periodic resolution for a cyclic group with generator t: d_odd = t - 1, d_even = N.
Resolution cyclic_resolution(const FiniteGroup& g, int max_degree);

enum class ResolutionKind { Bar, Cyclic };

/// Homology H_k of an integer chain complex; d[n]: C_n -> C_{n-1}, d[0] has zero rows.
struct HomologyGroup {
  AbelianPresentation group;
  /// C_k x ngens; column i is the cycle representing generator i.
  IntMatrix cycles;
  /// ngens x C_k; coordinates of a cycle in terms of `cycles`.
  IntMatrix cycle_coordinates;
};

HomologyGroup chain_homology(const std::vector<IntMatrix>& d, int k);

/// Z^w (x) F_* with the twisted augmentation, d[0] an empty 0 x rank(F_0) matrix.
std::vector<IntMatrix> twisted_complex(const Resolution& r, const OrientationChar& w);

HomologyGroup group_homology(const Resolution& r, const OrientationChar& w, int k);

/// H_k(G; Z^w) with a built-in provider.
HomologyGroup group_homology(const FiniteGroup& g, const OrientationChar& w, int k,
                             ResolutionKind kind, std::size_t budget = kDefaultHomologyBudget);

/// Automorphisms (as permutations) with w(phi(g)) = w(g).
std::vector<std::vector<Element>> character_automorphisms(const FiniteGroup& g,
                                                          const OrientationChar& w,
                                                          int max_order = kDefaultAutomorphismCap);

/**
 * Matrix of the map induced by an automorphism on the twisted chain group of
 * degree n. Bar cells are permuted; on the cyclic resolution t -> t^a acts by
 * a^i in degree 2i and a^i (1 + t + ... + t^{a-1}) in degree 2i + 1.
 */
IntMatrix automorphism_chain_map(const FiniteGroup& g, const OrientationChar& w,
                                 const std::vector<Element>& phi, int n, ResolutionKind kind);

struct HomologyOrbits {
  HomologyGroup homology;
  /// Canonical coordinates of the listed classes, grouped by orbit; the first member represents.
  std::vector<std::vector<IntVector>> orbits;
  std::size_t automorphism_count = 0;
};

/// Default cap on the number of classes enumerated for an orbit computation.
inline constexpr std::size_t kDefaultClassCap = 4096;

/**
 * Orbits of +-Aut(G, w) on classes of H_k(G; Z^w).
 *
 * Without an explicit class list every element is used, which requires a finite group.
 * Classes are canonical coordinates of the homology group.
 */
HomologyOrbits orbit_quotient(const FiniteGroup& g, const OrientationChar& w, int k,
                              ResolutionKind kind,
                              const std::optional<std::vector<IntVector>>& classes = std::nullopt,
                              std::size_t budget = kDefaultHomologyBudget,
                              int aut_cap = kDefaultAutomorphismCap,
                              std::size_t class_cap = kDefaultClassCap);

}  // namespace gammalab
