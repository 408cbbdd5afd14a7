#include "gammalab/homology.hpp"

#include "gammalab/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace gammalab {

GroupRingMatrix::GroupRingMatrix(Eigen::Index rows, Eigen::Index cols, int group_order)
    : rows_(rows), order_(group_order), columns_(static_cast<std::size_t>(cols)) {}

GroupRingMatrix GroupRingMatrix::from_dense(const std::vector<std::vector<GroupRingElement>>& entries,
                                            Eigen::Index cols, int group_order) {
  GroupRingMatrix m(static_cast<Eigen::Index>(entries.size()), cols, group_order);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (static_cast<Eigen::Index>(entries[i].size()) != cols)
      throw std::invalid_argument("GroupRingMatrix: ragged rows");
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto& x = entries[i][static_cast<std::size_t>(j)];
      if (x.size() != group_order)
        throw std::invalid_argument("GroupRingMatrix: coefficient vector has wrong length");
      for (Element g = 0; g < group_order; ++g)
        if (x[g] != 0) m.add(static_cast<Eigen::Index>(i), j, g, x[g]);
    }
  }
  return m;
}

void GroupRingMatrix::add(Eigen::Index row, Eigen::Index col, Element g, const Integer& c) {
  if (c == 0) return;
  auto& column = columns_[static_cast<std::size_t>(col)];
  for (auto it = column.begin(); it != column.end(); ++it)
    if (it->row == row && it->element == g) {
      it->coeff += c;
      if (it->coeff == 0) column.erase(it);
      return;
    }
  column.push_back({row, g, c});
}

GroupRingElement GroupRingMatrix::entry(Eigen::Index i, Eigen::Index j) const {
  IntVector c = IntVector::Zero(order_);
  for (const auto& t : column(j))
    if (t.row == i) c(t.element) += t.coeff;
  return GroupRingElement(std::move(c));
}

IntMatrix GroupRingMatrix::augmented(const OrientationChar& w) const {
  IntMatrix out = IntMatrix::Zero(rows_, cols());
  for (Eigen::Index j = 0; j < cols(); ++j)
    for (const auto& t : column(j)) out(t.row, j) += t.coeff * w(t.element);
  return out;
}

IntMatrix GroupRingMatrix::underlying(const FiniteGroup& g) const {
  const int n = g.order();
  IntMatrix out = IntMatrix::Zero(rows_ * n, cols() * n);
  for (Eigen::Index j = 0; j < cols(); ++j)
    for (Element h = 0; h < n; ++h)
      for (const auto& t : column(j)) out(t.row * n + g.mul(h, t.element), j * n + h) += t.coeff;
  return out;
}

GroupRingMatrix compose(const FiniteGroup& g, const GroupRingMatrix& after,
                        const GroupRingMatrix& before) {
  if (after.cols() != before.rows()) throw std::invalid_argument("compose: shape mismatch");
  GroupRingMatrix out(after.rows(), before.cols(), g.order());
  for (Eigen::Index j = 0; j < before.cols(); ++j)
    for (const auto& a : before.column(j))
      for (const auto& c : after.column(a.row)) out.add(c.row, j, g.mul(a.element, c.element), a.coeff * c.coeff);
  return out;
}

Resolution::Resolution(FiniteGroup group, std::vector<GroupRingMatrix> boundaries)
    : group_(std::move(group)), boundaries_(std::move(boundaries)) {
  for (std::size_t n = 0; n < boundaries_.size(); ++n) {
    if (boundaries_[n].group_order() != group_.order())
      throw std::invalid_argument("Resolution: boundary d_" + std::to_string(n + 1) +
                                  " is over a group of different order");
    if (n > 0 && boundaries_[n].rows() != boundaries_[n - 1].cols()) {
      std::ostringstream os;
      os << "Resolution: d_" << n + 1 << " has " << boundaries_[n].rows() << " rows but F_" << n
         << " has rank " << boundaries_[n - 1].cols();
      throw std::invalid_argument(os.str());
    }
  }
}

Resolution Resolution::trusted(FiniteGroup group, std::vector<GroupRingMatrix> boundaries) {
  return Resolution(std::move(group), std::move(boundaries));
}

Resolution Resolution::validated(FiniteGroup group, std::vector<GroupRingMatrix> boundaries,
                                 std::size_t min_length) {
  if (boundaries.size() < min_length)
    throw std::invalid_argument("Resolution: need at least " + std::to_string(min_length) +
                                " boundary maps, got " + std::to_string(boundaries.size()));
  Resolution r(std::move(group), std::move(boundaries));
  for (int n = 2; n <= r.length(); ++n) {
    auto dd = compose(r.group_, r.boundary(n - 1), r.boundary(n));
    for (Eigen::Index j = 0; j < dd.cols(); ++j)
      if (!dd.column(j).empty())
        throw std::invalid_argument("Resolution: d_" + std::to_string(n - 1) + " d_" +
                                    std::to_string(n) + " is not zero");
  }
  if (auto bad = first_inexact_degree(r))
    throw std::invalid_argument("Resolution: not exact in degree " + std::to_string(*bad));
  return r;
}

Eigen::Index Resolution::rank(int n) const {
  if (n == 0) return boundaries_.empty() ? 0 : boundaries_.front().rows();
  return boundary(n).cols();
}

std::optional<int> first_inexact_degree(const Resolution& r) {
  const int order = r.group().order();
  // Augmented complex with Z in position 0 and F_n in position n + 1.
  std::vector<IntMatrix> d;
  d.emplace_back(0, 1);
  d.emplace_back(IntMatrix::Ones(1, r.rank(0) * order));
  for (int n = 1; n <= r.length(); ++n) d.push_back(r.boundary(n).underlying(r.group()));
  for (int m = 0; m + 1 < static_cast<int>(d.size()); ++m)
    if (!invariant_factors(chain_homology(d, m).group).is_trivial()) return m - 1;
  return std::nullopt;
}

namespace {

std::size_t checked_power(std::size_t base, int exp, std::size_t cap) {
  std::size_t v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / std::max<std::size_t>(base, 1)) return cap + 1;
    v *= base;
  }
  return v;
}

// Cell [g1|...|gn] (all gi != 1) <-> index with g1 most significant, digit gi - 1.
Eigen::Index bar_index(const std::vector<Element>& cell, int m) {
  Eigen::Index idx = 0;
  for (Element g : cell) idx = idx * m + (g - 1);
  return idx;
}

std::vector<Element> bar_cell(Eigen::Index idx, int n, int m) {
  std::vector<Element> cell(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    cell[static_cast<std::size_t>(i)] = static_cast<Element>(idx % m) + 1;
    idx /= m;
  }
  return cell;
}

}  // namespace

Resolution bar_resolution(const FiniteGroup& g, int max_degree, std::size_t budget) {
  const int m = g.order() - 1;
  const std::size_t top = checked_power(static_cast<std::size_t>(m), max_degree, budget);
  if (top > budget) {
    std::ostringstream os;
    os << "bar resolution for a group of order " << g.order() << " through degree " << max_degree
       << " needs d_" << max_degree << " of size " << m << "^" << max_degree - 1 << " x " << m
       << "^" << max_degree << " over Z[G], beyond the budget of " << budget
       << " free generators (raise --budget or GAMMALAB_BUDGET)";
    throw ResourceError(os.str());
  }
  std::vector<GroupRingMatrix> d;
  Eigen::Index rows = 1;
  for (int n = 1; n <= max_degree; ++n) {
    const auto cols = static_cast<Eigen::Index>(checked_power(static_cast<std::size_t>(m), n, budget));
    GroupRingMatrix b(rows, cols, g.order());
    for (Eigen::Index c = 0; c < cols; ++c) {
      auto cell = bar_cell(c, n, m);
      std::vector<Element> face(cell.begin() + 1, cell.end());
      b.add(bar_index(face, m), c, cell[0], 1);
      for (int i = 1; i < n; ++i) {
        Element p = g.mul(cell[static_cast<std::size_t>(i - 1)], cell[static_cast<std::size_t>(i)]);
        if (p == 0) continue;
        face.assign(cell.begin(), cell.end());
        face[static_cast<std::size_t>(i - 1)] = p;
        face.erase(face.begin() + i);
        b.add(bar_index(face, m), c, 0, i % 2 == 0 ? 1 : -1);
      }
      face.assign(cell.begin(), cell.end() - 1);
      b.add(bar_index(face, m), c, 0, n % 2 == 0 ? 1 : -1);
    }
    d.push_back(std::move(b));
    rows = cols;
  }
  return Resolution::trusted(g, std::move(d));
}

std::optional<Element> cyclic_generator(const FiniteGroup& g) {
  for (Element x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return x;
  return std::nullopt;
}

Resolution cyclic_resolution(const FiniteGroup& g, int max_degree) {
  auto t = cyclic_generator(g);
  if (!t) throw std::invalid_argument("cyclic resolution requested for a non-cyclic group");
  std::vector<GroupRingMatrix> d;
  for (int n = 1; n <= max_degree; ++n) {
    GroupRingMatrix b(1, 1, g.order());
    if (n % 2 == 1) {
      b.add(0, 0, *t, 1);
      b.add(0, 0, 0, -1);
    } else {
      for (int i = 0; i < g.order(); ++i) b.add(0, 0, g.power(*t, i), 1);
    }
    d.push_back(std::move(b));
  }
  return Resolution::trusted(g, std::move(d));
}

HomologyGroup chain_homology(const std::vector<IntMatrix>& d, int k) {
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= d.size())
    throw std::invalid_argument("chain_homology: complex too short for degree " + std::to_string(k));
  const auto& in = d[static_cast<std::size_t>(k) + 1];
  auto ker = integer_kernel(d[static_cast<std::size_t>(k)]);
  IntMatrix rel = exact_product(ker.coordinates, in).transpose();
  return {AbelianPresentation(ker.basis.cols(), std::move(rel)), ker.basis, ker.coordinates};
}

std::vector<IntMatrix> twisted_complex(const Resolution& r, const OrientationChar& w) {
  std::vector<IntMatrix> d;
  d.emplace_back(0, r.rank(0));
  for (int n = 1; n <= r.length(); ++n) d.push_back(r.boundary(n).augmented(w));
  return d;
}

HomologyGroup group_homology(const Resolution& r, const OrientationChar& w, int k) {
  if (k + 1 > r.length())
    throw std::invalid_argument("resolution of length " + std::to_string(r.length()) +
                                " is too short for H_" + std::to_string(k));
  return chain_homology(twisted_complex(r, w), k);
}

HomologyGroup group_homology(const FiniteGroup& g, const OrientationChar& w, int k,
                             ResolutionKind kind, std::size_t budget) {
  auto r = kind == ResolutionKind::Bar ? bar_resolution(g, k + 1, budget) : cyclic_resolution(g, k + 1);
  return group_homology(r, w, k);
}

std::vector<std::vector<Element>> character_automorphisms(const FiniteGroup& g,
                                                          const OrientationChar& w, int max_order) {
  auto all = automorphisms(g, max_order);
  std::erase_if(all, [&](const std::vector<Element>& phi) {
    for (Element x = 0; x < g.order(); ++x)
      if (w(phi[static_cast<std::size_t>(x)]) != w(x)) return true;
    return false;
  });
  return all;
}

IntMatrix automorphism_chain_map(const FiniteGroup& g, const OrientationChar& w,
                                 const std::vector<Element>& phi, int n, ResolutionKind kind) {
  if (kind == ResolutionKind::Bar) {
    const int m = g.order() - 1;
    const auto size = static_cast<Eigen::Index>(checked_power(static_cast<std::size_t>(m), n,
                                                              static_cast<std::size_t>(-1) / 2));
    IntMatrix p = IntMatrix::Zero(size, size);
    for (Eigen::Index c = 0; c < size; ++c) {
      auto cell = bar_cell(c, n, m);
      for (auto& x : cell) x = phi[static_cast<std::size_t>(x)];
      p(bar_index(cell, m), c) = 1;
    }
    return p;
  }
  auto t = cyclic_generator(g);
  if (!t) throw std::invalid_argument("cyclic chain map requested for a non-cyclic group");
  int a = 1;
  while (g.power(*t, a) != phi[static_cast<std::size_t>(*t)]) ++a;
  Integer value = boost::multiprecision::pow(Integer(a), static_cast<unsigned>(n / 2));
  if (n % 2 == 1) {
    Integer s = 0;
    for (int j = 0; j < a; ++j) s += w(g.power(*t, j));
    value *= s;
  }
  return IntMatrix::Constant(1, 1, value);
}

namespace {

std::string key_of(const IntVector& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += to_string(v(i)) + ",";
  return s;
}

}  // namespace

HomologyOrbits orbit_quotient(const FiniteGroup& g, const OrientationChar& w, int k,
                              ResolutionKind kind,
                              const std::optional<std::vector<IntVector>>& classes,
                              std::size_t budget, int aut_cap, std::size_t class_cap) {
  HomologyOrbits out;
  out.homology = group_homology(g, w, k, kind, budget);
  const auto& s = out.homology.group.structure();
  const auto autos = character_automorphisms(g, w, aut_cap);
  out.automorphism_count = autos.size();

  std::vector<IntMatrix> maps;
  for (const auto& phi : autos) {
    IntMatrix f = automorphism_chain_map(g, w, phi, k, kind);
    IntMatrix on_h = exact_product(out.homology.cycle_coordinates, exact_product(f, out.homology.cycles));
    maps.push_back(on_h);
    maps.push_back(-on_h);
  }

  std::vector<IntVector> list;
  if (classes) {
    for (const auto& c : *classes) {
      if (c.size() != static_cast<Eigen::Index>(s.moduli.size()))
        throw std::invalid_argument("orbit_quotient: class has " + std::to_string(c.size()) +
                                    " coordinates, homology has " +
                                    std::to_string(s.moduli.size()));
      list.push_back(s.reduce(exact_product(s.from_canonical, c)));
    }
  } else {
    if (!s.invariants.is_finite())
      throw std::invalid_argument("H_" + std::to_string(k) +
                                  " is infinite; pass an explicit list of classes");
    if (s.invariants.torsion_order() > class_cap)
      throw EnumerationLimitError("H_" + std::to_string(k) + " has " +
                                  to_string(s.invariants.torsion_order()) +
                                  " elements, beyond the class cap " + std::to_string(class_cap));
    list = enumerate_elements(s);
  }

  std::vector<int> orbit_of(list.size(), -1);
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (orbit_of[i] >= 0) continue;
    const int id = static_cast<int>(out.orbits.size());
    // Orbit of list[i] under the finite group generated by the maps.
    std::set<std::string> seen{key_of(list[i])};
    std::deque<IntVector> queue{list[i]};
    while (!queue.empty()) {
      IntVector c = queue.front();
      queue.pop_front();
      IntVector raw = exact_product(s.from_canonical, c);
      for (const auto& f : maps) {
        IntVector img = s.reduce(exact_product(f, raw));
        if (seen.insert(key_of(img)).second) queue.push_back(img);
      }
    }
    out.orbits.emplace_back();
    for (std::size_t j = i; j < list.size(); ++j)
      if (orbit_of[j] < 0 && seen.count(key_of(list[j]))) {
        orbit_of[j] = id;
        out.orbits.back().push_back(list[j]);
      }
  }
  return out;
}

}  // namespace gammalab
