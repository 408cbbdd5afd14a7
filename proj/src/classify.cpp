#include "gammalab/classify.hpp"

#include "gammalab/lattice.hpp"

#include <sstream>

namespace gammalab {

namespace {

GroupRingElement group_element(int order, Element g, const Integer& c = 1) {
  return GroupRingElement::basis(order, g, c);
}

GroupRingElement product(const FiniteGroup& g, const GroupRingElement& a, const GroupRingElement& b,
                         const GroupRingElement& c) {
  return multiply(g, multiply(g, a, b), c);
}

}  // namespace

HermitianForm::HermitianForm(FiniteGroup group, OrientationChar w, GroupRingRows matrix, FormBasis basis)
    : group_(std::move(group)), w_(std::move(w)), matrix_(std::move(matrix)), basis_(basis) {
  if (static_cast<int>(w_.values().size()) != group_.order())
    throw std::invalid_argument("HermitianForm: character is for a different group");
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != matrix_.size())
      throw std::invalid_argument("HermitianForm: matrix is not square");
    for (const auto& x : matrix_[i])
      if (x.size() != group_.order())
        throw std::invalid_argument("HermitianForm: coefficient vector of length " +
                                    std::to_string(x.size()) + ", expected " +
                                    std::to_string(group_.order()));
  }
}

HermitianForm HermitianForm::diagonal(const FiniteGroup& group, const OrientationChar& w,
                                      const std::vector<int>& entries) {
  const auto k = entries.size();
  GroupRingRows m(k, std::vector<GroupRingElement>(k, GroupRingElement::zero(group.order())));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = group_element(group.order(), 0, entries[i]);
  return HermitianForm(group, w, std::move(m));
}

GroupRingElement translated_value(const HermitianForm& f, int i, Element h1, int j, Element h2) {
  const auto& g = f.group();
  const auto n = g.order();
  return product(g, group_element(n, h1), f.entry(i, j),
                 bar_involution(g, f.character(), group_element(n, h2)));
}

bool check_hermitian(const HermitianForm& f) {
  const auto& g = f.group();
  const auto& w = f.character();
  for (int i = 0; i < f.rank(); ++i)
    for (int j = 0; j < f.rank(); ++j)
      if (!(f.entry(i, j) == bar_involution(g, w, f.entry(j, i)))) return false;
  if (f.basis() == FormBasis::Integral) return true;
  for (int i = 0; i < f.rank(); ++i)
    for (int j = 0; j < f.rank(); ++j)
      for (Element h1 = 0; h1 < g.order(); ++h1)
        for (Element h2 = 0; h2 < g.order(); ++h2)
          if (!(translated_value(f, i, h1, j, h2) ==
                bar_involution(g, w, translated_value(f, j, h2, i, h1))))
            return false;
  return true;
}

bool check_equivariant(const HermitianForm& f, const ZPiModule& pi2) {
  if (f.basis() != FormBasis::Integral) return true;
  const auto& g = f.group();
  const int k = f.rank();
  if (pi2.ngens() != k) return false;
  for (Element h = 0; h < g.order(); ++h) {
    const auto& a = pi2.action(h);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        GroupRingElement lhs = GroupRingElement::zero(g.order());
        for (int l = 0; l < k; ++l)
          if (a(l, i) != 0) lhs += a(l, i) * f.entry(l, j);
        if (!(lhs == multiply(g, group_element(g.order(), h), f.entry(i, j)))) return false;
      }
  }
  return true;
}

HermitianForm orthogonal_sum(const HermitianForm& a, const HermitianForm& b) {
  if (!(a.group() == b.group()) || !(a.character() == b.character()) || a.basis() != b.basis())
    throw std::invalid_argument("orthogonal_sum: forms over different data");
  const auto ka = static_cast<std::size_t>(a.rank()), kb = static_cast<std::size_t>(b.rank());
  GroupRingRows m(ka + kb, std::vector<GroupRingElement>(ka + kb, GroupRingElement::zero(a.group().order())));
  for (std::size_t i = 0; i < ka; ++i)
    for (std::size_t j = 0; j < ka; ++j) m[i][j] = a.matrix()[i][j];
  for (std::size_t i = 0; i < kb; ++i)
    for (std::size_t j = 0; j < kb; ++j) m[ka + i][ka + j] = b.matrix()[i][j];
  return HermitianForm(a.group(), a.character(), std::move(m), a.basis());
}

HermitianForm change_basis(const HermitianForm& f, const GroupRingRows& p) {
  if (f.basis() != FormBasis::GroupRing)
    throw std::invalid_argument("change_basis: only group ring bases are supported");
  const auto& g = f.group();
  const auto& w = f.character();
  const auto k = static_cast<std::size_t>(f.rank());
  if (p.size() != k) throw std::invalid_argument("change_basis: matrix has the wrong size");
  GroupRingRows out(k, std::vector<GroupRingElement>(k, GroupRingElement::zero(g.order())));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          out[i][j] += product(g, p[a][i], f.matrix()[a][b], bar_involution(g, w, p[b][j]));
  return HermitianForm(g, w, std::move(out));
}

HermitianForm form_from_integral(const ZPiModule& pi2, const OrientationChar& w, const IntMatrix& s) {
  const auto& g = pi2.group();
  const auto k = pi2.ngens();
  if (s.rows() != k || s.cols() != k) throw std::invalid_argument("form_from_integral: size mismatch");
  GroupRingRows m(static_cast<std::size_t>(k));
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      IntVector c(g.order());
      for (Element h = 0; h < g.order(); ++h)
        c(h) = w(h) * (s.row(i) * pi2.action(h).col(j)).value();
      m[static_cast<std::size_t>(i)].emplace_back(std::move(c));
    }
  return HermitianForm(g, w, std::move(m), FormBasis::Integral);
}

IntMatrix ev0_matrix(const HermitianForm& f) {
  const int k = f.rank();
  if (f.basis() == FormBasis::Integral) {
    IntMatrix s(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s(i, j) = ev0(f.entry(i, j));
    return s;
  }
  const int n = f.group().order();
  IntMatrix s(k * n, k * n);
  for (int i = 0; i < k; ++i)
    for (Element h1 = 0; h1 < n; ++h1)
      for (int j = 0; j < k; ++j)
        for (Element h2 = 0; h2 < n; ++h2) s(i * n + h1, j * n + h2) = ev0(translated_value(f, i, h1, j, h2));
  return s;
}

QuadraticTwoType::QuadraticTwoType(ZPiModule pi2, HermitianForm form, bool k_invariant_trivial)
    : pi2_(std::move(pi2)), form_(std::move(form)) {
  if (!k_invariant_trivial)
    throw UnsupportedInputError("quadratic 2-type: only the trivial k-invariant is supported");
  if (!(pi2_.group() == form_.group()))
    throw std::invalid_argument("quadratic 2-type: form and pi2 are over different groups");
  if (pi2_.underlying().relations().rows() != 0)
    throw UnsupportedInputError("quadratic 2-type: pi2 must be given on a free abelian basis");
  std::ostringstream os;
  if (form_.basis() == FormBasis::GroupRing) {
    if (pi2_.free_rank() < 0)
      throw std::invalid_argument(
          "quadratic 2-type: a form on a group ring basis needs pi2 to be a standard free module");
    if (pi2_.free_rank() != form_.rank()) {
      os << "quadratic 2-type: form has rank " << form_.rank() << " but pi2 is free of rank "
         << pi2_.free_rank();
      throw std::invalid_argument(os.str());
    }
  } else if (pi2_.ngens() != form_.rank()) {
    os << "quadratic 2-type: form has rank " << form_.rank() << " but pi2 has " << pi2_.ngens()
       << " Z-generators";
    throw std::invalid_argument(os.str());
  }
  if (!check_hermitian(form_)) throw std::invalid_argument("quadratic 2-type: form is not hermitian");
  if (!check_equivariant(form_, pi2_))
    throw std::invalid_argument("quadratic 2-type: form is not compatible with the action on pi2");
}

QuadraticTwoType stabilize(const QuadraticTwoType& q, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("stabilize: sign must be +1 or -1");
  const auto& g = q.group();
  const auto& w = q.character();
  if (q.form().basis() == FormBasis::GroupRing) {
    auto pi2 = ZPiModule::free(g, q.pi2().free_rank() + 1);
    return QuadraticTwoType(pi2, orthogonal_sum(q.form(), HermitianForm::diagonal(g, w, {sign})));
  }
  // Integral basis: the new Z-generators are h b for the added free generator b.
  const int n = g.order();
  GroupRingRows block(static_cast<std::size_t>(n));
  for (Element h1 = 0; h1 < n; ++h1)
    for (Element h2 = 0; h2 < n; ++h2)
      block[static_cast<std::size_t>(h1)].push_back(
          group_element(n, g.mul(h1, g.inverse(h2)), Integer(sign * w(h2))));
  HermitianForm extra(g, w, std::move(block), FormBasis::Integral);
  return QuadraticTwoType(direct_sum(q.pi2(), ZPiModule::free(g, 1)), orthogonal_sum(q.form(), extra));
}

IntVector lambda_to_gamma(const QuadraticTwoType& q) {
  IntMatrix s = ev0_matrix(q.form());
  const auto n = s.rows();
  IntVector x = IntVector::Zero(gamma_rank(n));
  for (Eigen::Index k = 0; k < n; ++k) {
    x(k) = s(k, k);
    for (Eigen::Index l = k + 1; l < n; ++l) x(cross_index(n, k, l)) = s(k, l);
  }
  return x;
}

IntMatrix gamma_element_matrix(const IntVector& x, Eigen::Index n) {
  if (x.size() != gamma_rank(n)) throw std::invalid_argument("gamma_element_matrix: length mismatch");
  IntMatrix s(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    s(k, k) = x(k);
    for (Eigen::Index l = k + 1; l < n; ++l) s(k, l) = s(l, k) = x(cross_index(n, k, l));
  }
  return s;
}

std::optional<IntVector> kappa_splitting(const QuadraticTwoType& q) {
  auto coinv = twisted_coinvariants(gamma_module(dual_module(q.pi2())), q.character());
  return splitting_functional(coinv.group, lambda_to_gamma(q));
}

bool kappa_hypotheses_hold(const FiniteGroup& g, const OrientationChar& w) {
  return w.is_trivial() || p_part(g.order(), 2) > 2;
}

IntMatrix kappa_prime(const QuadraticTwoType& q, const IntVector& gamma_element) {
  IntMatrix s = ev0_matrix(q.form());
  if (s.rows() > 0 && !is_unimodular(s))
    throw SingularFormError("kappa': the ev0 matrix of the form is not invertible over Z");
  if (s.rows() == 0) return s;
  auto snf = smith_normal_form(s);
  // U S V = I, so S^{-1} = V U.
  IntMatrix inv = exact_product(snf.V, snf.U);
  return exact_product(inv, gamma_element_matrix(gamma_element, s.rows()));
}

KappaDiagnostics kappa_diagnostics(const QuadraticTwoType& q, const std::optional<Integer>& euler) {
  const auto& g = q.group();
  const auto& w = q.character();
  KappaDiagnostics out;
  const IntVector lambda = lambda_to_gamma(q);
  const auto gm = gamma_module(dual_module(q.pi2()));

  IntVector nl = IntVector::Zero(lambda.size());
  for (Element h = 0; h < g.order(); ++h) nl += exact_product(gm.action(h), lambda) * Integer(w(h));
  for (Eigen::Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) != 0) {
      if (nl(i) % lambda(i) == 0 && exactly_equal(nl, IntVector(lambda * (nl(i) / lambda(i)))))
        out.kappa1 = nl(i) / lambda(i);
      break;
    }

  const IntMatrix kp = kappa_prime(q, lambda);
  out.kappa2 = kp.trace();
  out.rank = q.pi2().ngens();
  if (euler) out.euler_rank = Integer(g.order()) * *euler - 2;

  const auto taus = central_involutions(g, w);
  if (!g.is_p_group(2) || g.order() == 1) {
    out.kappa3_note = "group is not a nontrivial 2-group";
  } else if (taus.empty()) {
    out.kappa3_note = "no central involution with w = +1";
  } else {
    out.tau = taus.front();
    out.tau_trace = exact_product(q.pi2().action(*out.tau), kp).trace();
    if (*out.tau_trace % 2 == 0) {
      out.kappa3 = -*out.tau_trace / 2;
    } else {
      out.kappa3_note = "trace of tau kappa'(lambda) is odd (" + to_string(*out.tau_trace) + ")";
    }
  }
  return out;
}

AbelianPresentation obstruction_torsion(const OrientationChar& w, const ZPiModule& pi2) {
  return torsion_part(twisted_coinvariants(gamma_module(pi2), w).group).first;
}

int involution_rank_formula(const FiniteGroup& g, const OrientationChar& w) {
  int r = 0;
  for (Element x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0 && w(x) == -1) ++r;
  return r;
}

H4Split h4_twotype_split(const OrientationChar& w, const ZPiModule& pi2, ResolutionKind kind,
                         std::size_t budget) {
  H4Split out;
  out.coinvariant_part = twisted_coinvariants(gamma_module(pi2), w).group;
  out.homology_part = group_homology(pi2.group(), w, 4, kind, budget).group;
  out.total = direct_sum(out.coinvariant_part, out.homology_part);
  return out;
}

CensusReport census(const QuadraticTwoType& q) {
  const auto& g = q.group();
  const auto& w = q.character();
  CensusReport r;
  r.group_order = g.order();
  auto coinv = twisted_coinvariants(gamma_module(q.pi2()), w);
  r.coinvariants = coinv.group;
  r.torsion = torsion_part(coinv.group).first;
  r.count = invariant_factors(r.torsion).torsion_order();
  r.lambda_gamma = lambda_to_gamma(q);
  const auto dual = twisted_coinvariants(gamma_module(dual_module(q.pi2())), w).group;
  r.lambda_tensor_one = dual.structure().reduce(r.lambda_gamma);
  r.kappa = splitting_functional(dual, r.lambda_gamma);
  r.primitive = r.kappa.has_value();
  r.kappa_hypotheses = kappa_hypotheses_hold(g, w);
  auto nq = norm_quotient(g, w);
  r.norm_quotient = invariant_factors(twisted_coinvariants(nq, w).group);
  r.norm_quotient_ok = r.norm_quotient == invariant_factors(AbelianPresentation::cyclic(g.order()));
  r.tor_one = invariant_factors(tor_one(nq, w));
  r.tor_one_ok = r.tor_one.is_trivial();
  r.involution_rank = involution_rank_formula(g, w);
  return r;
}

}  // namespace gammalab
