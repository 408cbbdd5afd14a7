#include "gammalab/gamma.hpp"

#include "gammalab/lattice.hpp"

namespace gammalab {

Eigen::Index cross_index(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  // Pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... after the n diagonal generators.
  return n + i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<std::string> gamma_generator_names(Eigen::Index n) {
  std::vector<std::string> names;
  for (Eigen::Index i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      names.push_back("w" + std::to_string(i + 1) + (n > 9 ? "," : "") + std::to_string(j + 1));
  return names;
}

IntVector expand_v(const IntVector& x) {
  const auto n = x.size();
  IntVector out = IntVector::Zero(gamma_rank(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (x(i) == 0) continue;
    out(i) = x(i) * x(i);
    for (Eigen::Index j = i + 1; j < n; ++j) out(cross_index(n, i, j)) = x(i) * x(j);
  }
  return out;
}

IntVector cross_term(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("cross_term: length mismatch");
  const auto n = x.size();
  IntVector out = IntVector::Zero(gamma_rank(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i) = 2 * x(i) * y(i);
    for (Eigen::Index j = i + 1; j < n; ++j) out(cross_index(n, i, j)) = x(i) * y(j) + x(j) * y(i);
  }
  return out;
}

GammaGroup gamma_presented(const AbelianPresentation& a) {
  const auto n = a.ngens();
  const auto& r = a.relations();
  IntMatrix rel(r.rows() * (n + 1), gamma_rank(n));
  Eigen::Index row = 0;
  for (Eigen::Index k = 0; k < r.rows(); ++k) {
    IntVector rk = r.row(k).transpose();
    rel.row(row++) = expand_v(rk).transpose();
    for (Eigen::Index j = 0; j < n; ++j)
      rel.row(row++) = cross_term(rk, IntVector::Unit(n, j)).transpose();
  }
  return {a, AbelianPresentation(gamma_rank(n), std::move(rel))};
}

AbelianHom gamma_map(const AbelianHom& f) {
  const auto n = f.source().ngens();
  const auto m = f.target().ngens();
  IntMatrix g(gamma_rank(m), gamma_rank(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    IntVector fi = f.matrix().col(i);
    g.col(i) = expand_v(fi);
    for (Eigen::Index j = i + 1; j < n; ++j)
      g.col(cross_index(n, i, j)) = cross_term(fi, IntVector(f.matrix().col(j)));
  }
  return AbelianHom(gamma_presented(f.source()).presentation, gamma_presented(f.target()).presentation,
                    std::move(g));
}

ZPiModule gamma_module(const ZPiModule& m) {
  const auto inv = invariant_factors(m.underlying());
  if (!inv.torsion.empty())
    throw UnsupportedInputError("gamma_module: the underlying group " + inv.to_string() +
                                " has torsion; only torsion-free modules are supported");
  auto gamma = gamma_presented(m.underlying()).presentation;
  std::vector<IntMatrix> action;
  for (Element g = 0; g < m.group().order(); ++g) action.push_back(gamma_map(m.action_hom(g)).matrix());
  // Gamma is a functor, so the action laws carry over from m.
  return ZPiModule(m.group(), std::move(gamma), std::move(action), ZPiModule::Trusted{});
}

SumDecomposition sum_decomposition_check(const AbelianPresentation& a, const AbelianPresentation& b) {
  if (!invariant_factors(a).torsion.empty() || !invariant_factors(b).torsion.empty() ||
      a.relations().rows() != 0 || b.relations().rows() != 0)
    throw UnsupportedInputError("sum_decomposition_check: both groups must be given as free");
  const auto na = a.ngens(), nb = b.ngens(), n = na + nb;
  const auto ga = gamma_rank(na), gb = gamma_rank(nb);
  IntMatrix c = IntMatrix::Zero(ga + gb + na * nb, gamma_rank(n));
  // Diagonal generators of each side, then the mixed cross terms e_i (x) f_j.
  for (Eigen::Index i = 0; i < n; ++i) c(i < na ? i : ga + (i - na), i) = 1;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      Eigen::Index target;
      if (j < na)
        target = cross_index(na, i, j);
      else if (i >= na)
        target = ga + cross_index(nb, i - na, j - na);
      else
        target = ga + gb + i * nb + (j - na);
      c(target, cross_index(n, i, j)) = 1;
    }
  SumDecomposition out;
  out.whole = invariant_factors(gamma_presented(direct_sum(a, b)).presentation);
  auto parts = direct_sum(direct_sum(gamma_presented(a).presentation, gamma_presented(b).presentation),
                          tensor_over_Z(a, b));
  out.parts = invariant_factors(parts);
  out.holds = c.rows() == c.cols() && (c.rows() == 0 || is_unimodular(c)) && out.whole == out.parts;
  out.correspondence = std::move(c);
  return out;
}

}  // namespace gammalab
