#pragma once

#include "gammalab/integer.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

/// Index of a group element; 0 is always the identity.
using Element = int;

/// Raised when a multiplication table violates a group axiom. The message names the failing elements.
class GroupValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a brute-force enumeration would exceed its configured size cap.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Finite group given extensionally by its multiplication table.
 *
 * table[a][b] is the index of a*b. Index 0 must be the two-sided identity.
 */
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(table_.size()); }
  Element mul(Element a, Element b) const { return table_[idx(a)][idx(b)]; }
  Element inverse(Element a) const { return inverse_[idx(a)]; }
  Element power(Element a, long long k) const;
  int element_order(Element a) const;
  bool is_central(Element a) const;
  std::vector<Element> center() const;

  const std::string& label(Element a) const { return labels_[idx(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  /// Index of the element with this label, or -1.
  Element find_label(const std::string& label) const;

  /// Smallest subgroup containing the given elements.
  std::vector<Element> closure(const std::vector<Element>& generators) const;

  /// A small generating set, chosen greedily in index order.
  std::vector<Element> generating_set() const;

  bool is_p_group(int p) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  FiniteGroup() = default;
  static std::size_t idx(Element a) { return static_cast<std::size_t>(a); }

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
};

/// Homomorphism w: G -> {+1, -1}.
class OrientationChar {
 public:
  /// Validates w(1) = 1 and w(ab) = w(a) w(b).
  OrientationChar(const FiniteGroup& g, std::vector<int> values, std::string name = {});

  static OrientationChar trivial(const FiniteGroup& g);

  int operator()(Element a) const { return values_[static_cast<std::size_t>(a)]; }
  const std::vector<int>& values() const { return values_; }
  bool is_trivial() const;
  const std::string& name() const { return name_; }

  friend bool operator==(const OrientationChar& a, const OrientationChar& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;
  std::string name_;
};

/// Every homomorphism G -> {+1, -1}; the trivial one first.
std::vector<OrientationChar> all_characters(const FiniteGroup& g);

/**
 * Element of the integral group ring, stored as a coefficient vector indexed by group elements.
 */
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(IntVector coeffs) : coeffs_(std::move(coeffs)) {}

  static GroupRingElement zero(int order) { return GroupRingElement(IntVector::Zero(order)); }
  static GroupRingElement one(int order) { return basis(order, 0); }
  static GroupRingElement basis(int order, Element g, const Integer& c = 1);

  const IntVector& coeffs() const { return coeffs_; }
  const Integer& operator[](Element g) const { return coeffs_(g); }
  int size() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return is_zero_matrix(coeffs_); }

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(const GroupRingElement& a) {
    return GroupRingElement(IntVector(-a.coeffs_));
  }
  friend GroupRingElement operator*(const Integer& k, const GroupRingElement& a) {
    return GroupRingElement(IntVector(a.coeffs_ * k));
  }
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return exactly_equal(a.coeffs_, b.coeffs_);
  }

 private:
  IntVector coeffs_;
};

/// Convolution product through the multiplication table.
GroupRingElement multiply(const FiniteGroup& g, const GroupRingElement& x, const GroupRingElement& y);

/// Linear extension of g -> w(g) g^{-1}.
GroupRingElement bar_involution(const FiniteGroup& g, const OrientationChar& w,
                                const GroupRingElement& x);

/// N^w = sum over g of w(g) g.
GroupRingElement norm_element(const FiniteGroup& g, const OrientationChar& w);

/// Coefficient at the identity.
inline Integer ev0(const GroupRingElement& x) { return x[0]; }

/// Twisted augmentation sum_g w(g) x_g.
Integer twisted_augmentation(const OrientationChar& w, const GroupRingElement& x);

/// Central elements tau != 1 with tau^2 = 1 and w(tau) = +1, in index order.
std::vector<Element> central_involutions(const FiniteGroup& g, const OrientationChar& w);

/// Subgroup generated by a set, with its right cosets U g.
struct SubgroupCosets {
  std::vector<Element> subgroup;
  /// Minimal element index of each right coset, in increasing order.
  std::vector<Element> representatives;
  /// coset_of[g] is the position in `representatives` of the coset U g.
  std::vector<int> coset_of;

  int index() const { return static_cast<int>(representatives.size()); }
};

SubgroupCosets subgroup_and_cosets(const FiniteGroup& g, const std::vector<Element>& generators);

bool is_normal_subgroup(const FiniteGroup& g, const std::vector<Element>& subgroup);

/// A Sylow p-subgroup (generated by elements of p-power order, grown greedily).
std::vector<Element> sylow_subgroup(const FiniteGroup& g, int p);

/// The largest power of p dividing |G|.
int p_part(int order, int p);

/// Default cap on |G| for automorphism enumeration.
inline constexpr int kDefaultAutomorphismCap = 12;

/**
 * All automorphisms as permutations of element indices (perm[g] = image of g).
 *
 * Enumerates images of a generating set and extends multiplicatively.
 * Throws EnumerationLimitError when |G| exceeds `max_order`.
 */
std::vector<std::vector<Element>> automorphisms(const FiniteGroup& g,
                                                int max_order = kDefaultAutomorphismCap);

}  // namespace gammalab
