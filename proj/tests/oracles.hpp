#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's Smith normal form; values are checked against plain 64-bit code,
// closed formulas or brute force.

#include "gammalab/abelian.hpp"
#include "gammalab/group.hpp"

#include <vector>

namespace oracle {

struct Invariants {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;
};

bool same(const gammalab::InvariantFactors& f, const Invariants& o);

/// Z^ncols / rowspan(rows), by plain integer elimination on 64-bit values (throws on overflow).
Invariants cokernel(std::vector<std::vector<long long>> rows, int ncols);

/// Gamma of Z/m_1 + ... + Z/m_k from the defining presentation: one symbol v(a)
/// per element a, with v(-a) = v(a) and the seven-term relation for all triples.
Invariants brute_gamma(const std::vector<int>& moduli);

/// H_k(Z/n; Z^w) from the periodic complex, by closed form.
Invariants periodic_homology(int n, bool w_nontrivial, int k);

/// gcd of the entries is 1.
bool gcd_primitive(const std::vector<long long>& x);

/// A functional with entries in [-box, box] that kills every relation row and sends x to 1.
bool brute_splitting_exists(const std::vector<std::vector<long long>>& relations,
                            const std::vector<long long>& x, int box);

/// Fraction-free determinant.
gammalab::Integer bareiss_determinant(const gammalab::IntMatrix& m);

/// Number of bijections fixing 0 that preserve the table, by exhaustive search over permutations.
int brute_automorphism_count(const gammalab::FiniteGroup& g);

/// Central elements by checking every commutator.
std::vector<gammalab::Element> brute_center(const gammalab::FiniteGroup& g);

}  // namespace oracle
