#include "gammalab/builtin_groups.hpp"

#include <array>
#include <stdexcept>

namespace gammalab::groups {

FiniteGroup cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(n),
                                      std::vector<Element>(static_cast<std::size_t>(n)));
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
    labels.push_back(a == 0 ? "1" : a == 1 ? "g" : "g^" + std::to_string(a));
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = g.order(), n = h.order();
  const auto size = static_cast<std::size_t>(m * n);
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  std::vector<std::string> labels(size);
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1) {
      const auto x = static_cast<std::size_t>(a1 * n + b1);
      labels[x] = "(" + g.label(a1) + "," + h.label(b1) + ")";
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          t[x][static_cast<std::size_t>(a2 * n + b2)] = g.mul(a1, a2) * n + h.mul(b1, b2);
    }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: n must be positive");
  const auto size = static_cast<std::size_t>(2 * n);
  std::vector<std::vector<Element>> t(size, std::vector<Element>(size));
  std::vector<std::string> labels(size);
  auto index = [n](int k, int e) { return ((k % n + n) % n) + n * e; };
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < n; ++k1) {
      const auto x = static_cast<std::size_t>(index(k1, e1));
      std::string r = k1 == 0 ? "" : k1 == 1 ? "r" : "r^" + std::to_string(k1);
      labels[x] = e1 == 0 ? (k1 == 0 ? "1" : r) : r + "s";
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < n; ++k2) {
          // (r^k1 s^e1)(r^k2 s^e2) = r^{k1 + (-1)^e1 k2} s^{e1 + e2}
          const int k = k1 + (e1 == 0 ? k2 : -k2);
          t[x][static_cast<std::size_t>(index(k2, e2))] = index(k, (e1 + e2) % 2);
        }
    }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

FiniteGroup quaternion8() {
  // Unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
  struct Q {
    int sign;
    int axis;
  };
  auto mul = [](Q a, Q b) {
    static constexpr std::array<std::array<Q, 4>, 4> unit{{
        {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
        {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
        {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
        {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
    }};
    Q u = unit[static_cast<std::size_t>(a.axis)][static_cast<std::size_t>(b.axis)];
    return Q{a.sign * b.sign * u.sign, u.axis};
  };
  auto index = [](Q q) { return 2 * q.axis + (q.sign < 0 ? 1 : 0); };
  auto element = [](int i) { return Q{i % 2 == 0 ? 1 : -1, i / 2}; };
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = index(mul(element(a), element(b)));
  return FiniteGroup::from_table(std::move(t), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::vector<NamedGroup> small_groups() {
  const auto z2 = cyclic(2);
  return {
      {"Z1", cyclic(1)},
      {"Z2", z2},
      {"Z3", cyclic(3)},
      {"Z4", cyclic(4)},
      {"Z2xZ2", direct_product(z2, z2)},
      {"Z5", cyclic(5)},
      {"Z6", cyclic(6)},
      {"S3", dihedral(3)},
      {"Z7", cyclic(7)},
      {"Z8", cyclic(8)},
      {"Z2xZ4", direct_product(z2, cyclic(4))},
      {"Z2xZ2xZ2", direct_product(z2, direct_product(z2, z2))},
      {"D4", dihedral(4)},
      {"Q8", quaternion8()},
  };
}

FiniteGroup by_name(const std::string& name) {
  for (auto& entry : small_groups())
    if (entry.name == name) return entry.group;
  throw std::invalid_argument("unknown built-in group '" + name + "'");
}

}  // namespace gammalab::groups
