#include "gammalab/zpi_module.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace gammalab {

namespace {

bool equal_up_to_relations(const AbelianPresentation& a, const IntMatrix& x, const IntMatrix& y) {
  if (a.relations().rows() == 0) return exactly_equal(x, y);
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    if (!a.is_zero(IntVector(x.col(j) - y.col(j)))) return false;
  return true;
}

IntMatrix coinvariant_relations(const ZPiModule& m, const OrientationChar& w,
                                const std::vector<Element>& elements) {
  const auto n = m.ngens();
  IntMatrix rel(static_cast<Eigen::Index>(elements.size()) * n, n);
  Eigen::Index row = 0;
  for (Element g : elements) {
    IntMatrix d = m.action(g) - IntMatrix::Identity(n, n) * Integer(w(g));
    rel.middleRows(row, n) = d.transpose();
    row += n;
  }
  return m.underlying().relations().rows() == 0
             ? rel
             : (IntMatrix(rel.rows() + m.underlying().relations().rows(), n)
                << m.underlying().relations(), rel)
                   .finished();
}

std::vector<Element> all_elements(const FiniteGroup& g) {
  std::vector<Element> out(static_cast<std::size_t>(g.order()));
  for (Element a = 0; a < g.order(); ++a) out[static_cast<std::size_t>(a)] = a;
  return out;
}

}  // namespace

ZPiModule::ZPiModule(FiniteGroup group, AbelianPresentation underlying,
                     std::vector<IntMatrix> actions)
    : ZPiModule(std::move(group), std::move(underlying), std::move(actions), -1) {
  const auto n = underlying_.ngens();
  if (static_cast<int>(action_.size()) != group_.order())
    throw std::invalid_argument("ZPiModule: need one action matrix per group element");
  for (Element g = 0; g < group_.order(); ++g) {
    const auto& a = action(g);
    if (a.rows() != n || a.cols() != n) {
      std::ostringstream os;
      os << "ZPiModule: action of " << group_.label(g) << " is " << a.rows() << "x" << a.cols()
         << ", expected " << n << "x" << n;
      throw std::invalid_argument(os.str());
    }
    (void)AbelianHom(underlying_, underlying_, a);
  }
  if (!equal_up_to_relations(underlying_, action(0), IntMatrix::Identity(n, n)))
    throw std::invalid_argument("ZPiModule: identity element does not act trivially");
  for (Element a = 0; a < group_.order(); ++a)
    for (Element b = 0; b < group_.order(); ++b)
      if (!equal_up_to_relations(underlying_, exact_product(action(a), action(b)),
                                 action(group_.mul(a, b)))) {
        std::ostringstream os;
        os << "ZPiModule: action(" << group_.label(a) << ") action(" << group_.label(b)
           << ") != action(" << group_.label(group_.mul(a, b)) << ")";
        throw std::invalid_argument(os.str());
      }
}

ZPiModule::ZPiModule(FiniteGroup group, AbelianPresentation underlying,
                     std::vector<IntMatrix> actions, int free_rank)
    : group_(std::move(group)),
      underlying_(std::move(underlying)),
      action_(std::move(actions)),
      free_rank_(free_rank) {}

ZPiModule::ZPiModule(FiniteGroup group, AbelianPresentation underlying,
                     std::vector<IntMatrix> actions, Trusted)
    : ZPiModule(std::move(group), std::move(underlying), std::move(actions), -1) {}

ZPiModule ZPiModule::from_generators(FiniteGroup group, AbelianPresentation underlying,
                                     const std::map<Element, IntMatrix>& generator_action) {
  const auto n = underlying.ngens();
  std::vector<IntMatrix> action(static_cast<std::size_t>(group.order()));
  std::vector<char> known(static_cast<std::size_t>(group.order()), 0);
  action[0] = IntMatrix::Identity(n, n);
  known[0] = 1;
  for (const auto& [g, a] : generator_action) {
    if (g < 0 || g >= group.order()) throw std::invalid_argument("ZPiModule: element out of range");
    action[static_cast<std::size_t>(g)] = a;
    known[static_cast<std::size_t>(g)] = 1;
  }
  std::deque<Element> queue;
  for (Element g = 0; g < group.order(); ++g)
    if (known[static_cast<std::size_t>(g)]) queue.push_back(g);
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& [s, a] : generator_action) {
      Element y = group.mul(x, s);
      if (known[static_cast<std::size_t>(y)]) continue;
      action[static_cast<std::size_t>(y)] = action[static_cast<std::size_t>(x)] * a;
      known[static_cast<std::size_t>(y)] = 1;
      queue.push_back(y);
    }
  }
  for (Element g = 0; g < group.order(); ++g)
    if (!known[static_cast<std::size_t>(g)])
      throw std::invalid_argument("ZPiModule: given actions do not generate the group (missing " +
                                  group.label(g) + ")");
  return ZPiModule(std::move(group), std::move(underlying), std::move(action));
}

ZPiModule ZPiModule::free(const FiniteGroup& group, int rank) {
  const int order = group.order();
  const Eigen::Index n = static_cast<Eigen::Index>(rank) * order;
  std::vector<IntMatrix> action;
  action.reserve(static_cast<std::size_t>(order));
  for (Element g = 0; g < order; ++g) {
    IntMatrix a = IntMatrix::Zero(n, n);
    for (int i = 0; i < rank; ++i)
      for (Element h = 0; h < order; ++h) a(i * order + group.mul(g, h), i * order + h) = 1;
    action.push_back(std::move(a));
  }
  return ZPiModule(group, AbelianPresentation::free(n), std::move(action), rank);
}

ZPiModule ZPiModule::from_character(const FiniteGroup& group, const OrientationChar& w) {
  std::vector<IntMatrix> action;
  for (Element g = 0; g < group.order(); ++g) action.push_back(IntMatrix::Constant(1, 1, Integer(w(g))));
  return ZPiModule(group, AbelianPresentation::free(1), std::move(action));
}

AbelianHom ZPiModule::action_hom(Element g) const {
  return AbelianHom(underlying_, underlying_, action(g), AbelianHom::Trusted{});
}

IntVector ZPiModule::act(const GroupRingElement& r, const IntVector& x) const {
  IntVector out = IntVector::Zero(ngens());
  for (Element g = 0; g < group_.order(); ++g)
    if (r[g] != 0) out += r[g] * exact_product(action(g), x);
  return out;
}

ZPiModule direct_sum(const ZPiModule& a, const ZPiModule& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("direct_sum: different groups");
  const auto na = a.ngens(), nb = b.ngens();
  std::vector<IntMatrix> action;
  for (Element g = 0; g < a.group().order(); ++g) {
    IntMatrix m = IntMatrix::Zero(na + nb, na + nb);
    m.topLeftCorner(na, na) = a.action(g);
    m.bottomRightCorner(nb, nb) = b.action(g);
    action.push_back(std::move(m));
  }
  return ZPiModule(a.group(), direct_sum(a.underlying(), b.underlying()), std::move(action),
                   ZPiModule::Trusted{});
}

ZPiModule quotient_module(const ZPiModule& m, const IntMatrix& elements) {
  const auto k = elements.cols();
  const int order = m.group().order();
  IntMatrix orbit(m.ngens(), k * order);
  for (Element g = 0; g < order; ++g) orbit.middleCols(g * k, k) = exact_product(m.action(g), elements);
  std::vector<IntMatrix> action;
  for (Element g = 0; g < order; ++g) action.push_back(m.action(g));
  return ZPiModule(m.group(), m.underlying().with_relations(orbit.transpose()), std::move(action),
                   ZPiModule::Trusted{});
}

ZPiModule dual_module(const ZPiModule& m) {
  if (m.underlying().relations().rows() != 0)
    throw std::invalid_argument("dual_module: module must be given on a free abelian basis");
  const auto& g = m.group();
  std::vector<IntMatrix> action;
  for (Element h = 0; h < g.order(); ++h) action.push_back(m.action(g.inverse(h)).transpose());
  return ZPiModule(g, m.underlying(), std::move(action), ZPiModule::Trusted{});
}

ZPiModule norm_quotient(const FiniteGroup& group, const OrientationChar& w) {
  auto regular = ZPiModule::free(group, 1);
  IntMatrix n = norm_element(group, w).coeffs();
  return quotient_module(regular, n);
}

ZPiHom::ZPiHom(ZPiModule source, ZPiModule target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (!(source_.group() == target_.group())) throw std::invalid_argument("ZPiHom: different groups");
  (void)AbelianHom(source_.underlying(), target_.underlying(), matrix_);
  for (Element g = 0; g < source_.group().order(); ++g)
    if (!equal_up_to_relations(target_.underlying(), exact_product(matrix_, source_.action(g)),
                               exact_product(target_.action(g), matrix_)))
      throw std::invalid_argument("ZPiHom: map is not equivariant at " + source_.group().label(g));
}

AbelianHom ZPiHom::underlying() const {
  return AbelianHom(source_.underlying(), target_.underlying(), matrix_, AbelianHom::Trusted{});
}

Coinvariants twisted_coinvariants(const ZPiModule& m, const OrientationChar& w,
                                  const std::vector<Element>& subgroup) {
  AbelianPresentation c(m.ngens(), coinvariant_relations(m, w, subgroup));
  AbelianHom p(m.underlying(), c, IntMatrix::Identity(m.ngens(), m.ngens()), AbelianHom::Trusted{});
  return {c, p};
}

Coinvariants twisted_coinvariants(const ZPiModule& m, const OrientationChar& w) {
  return twisted_coinvariants(m, w, all_elements(m.group()));
}

AbelianHom induced_on_coinvariants(const ZPiHom& f, const OrientationChar& w) {
  auto src = twisted_coinvariants(f.source(), w);
  auto tgt = twisted_coinvariants(f.target(), w);
  return AbelianHom(src.group, tgt.group, f.matrix(), AbelianHom::Trusted{});
}

AbelianPresentation tor_one(const ZPiModule& m, const OrientationChar& w) {
  const auto& g = m.group();
  const int order = g.order();
  const auto n = m.ngens();
  // Cover M by the free module on its Z-generators: g b_i -> g e_i.
  auto cover = ZPiModule::free(g, static_cast<int>(n));
  IntMatrix c(n, n * order);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Element h = 0; h < order; ++h) c.col(i * order + h) = m.action(h).col(i);
  AbelianHom cover_map(cover.underlying(), m.underlying(), c, AbelianHom::Trusted{});

  // The kernel is a free abelian submodule; give it a basis and the induced action.
  auto [k, inclusion] = kernel(cover_map);
  Sublattice lattice(inclusion.matrix());
  const auto& basis = lattice.basis();
  std::vector<IntMatrix> action;
  for (Element h = 0; h < order; ++h) {
    IntMatrix a(basis.cols(), basis.cols());
    IntMatrix moved = exact_product(cover.action(h), basis);
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      auto coords = lattice.coordinates(moved.col(j));
      if (!coords) throw std::logic_error("tor_one: kernel is not a submodule");
      a.col(j) = *coords;
    }
    action.push_back(std::move(a));
  }
  ZPiModule kernel_module(g, AbelianPresentation::free(basis.cols()), std::move(action),
                          ZPiModule::Trusted{});

  // 0 -> K -> F -> M -> 0 with F free gives Tor_1(M, Z^w) = ker(K_w -> F_w).
  auto kw = twisted_coinvariants(kernel_module, w);
  auto fw = twisted_coinvariants(cover, w);
  AbelianHom map(kw.group, fw.group, basis, AbelianHom::Trusted{});
  return kernel(map).first;
}

AbelianHom transfer_down(const ZPiModule& m, const OrientationChar& w, const SubgroupCosets& u) {
  auto top = twisted_coinvariants(m, w);
  auto bottom = twisted_coinvariants(m, w, u.subgroup);
  IntMatrix t = IntMatrix::Zero(m.ngens(), m.ngens());
  for (Element g : u.representatives) t += m.action(g) * Integer(w(g));
  // Checked construction: independence of the coset representatives is verified here.
  return AbelianHom(top.group, bottom.group, t);
}

AbelianHom projection_up(const ZPiModule& m, const OrientationChar& w, const SubgroupCosets& u) {
  auto top = twisted_coinvariants(m, w);
  auto bottom = twisted_coinvariants(m, w, u.subgroup);
  return AbelianHom(bottom.group, top.group, IntMatrix::Identity(m.ngens(), m.ngens()));
}

AbelianHom quotient_norm_action(const ZPiModule& m, const OrientationChar& w,
                                const SubgroupCosets& u) {
  if (!is_normal_subgroup(m.group(), u.subgroup))
    throw std::invalid_argument("quotient_norm_action: subgroup is not normal");
  auto bottom = twisted_coinvariants(m, w, u.subgroup);
  IntMatrix t = IntMatrix::Zero(m.ngens(), m.ngens());
  for (Element g : u.representatives) t += m.action(g) * Integer(w(g));
  return AbelianHom(bottom.group, bottom.group, t);
}

}  // namespace gammalab
