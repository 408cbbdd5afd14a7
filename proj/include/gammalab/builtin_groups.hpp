#pragma once

#include "gammalab/group.hpp"

#include <string>
#include <vector>

namespace gammalab::groups {

/// Z/n with elements g^0, ..., g^{n-1} in exponent order.
FiniteGroup cyclic(int n);

/// G x H; element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Dihedral group of order 2n; r^k s^e has index k + n e.
FiniteGroup dihedral(int n);

/// Quaternion group {1, -1, i, -i, j, -j, k, -k} in that index order.
FiniteGroup quaternion8();

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Every group of order at most 8, one per isomorphism class.
std::vector<NamedGroup> small_groups();

/// Look up a built-in group by its short name ("Z2", "Z2xZ2", "Q8", "D4", "S3", ...).
FiniteGroup by_name(const std::string& name);

}  // namespace gammalab::groups
