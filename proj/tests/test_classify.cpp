#include "oracles.hpp"
#include "properties.hpp"

#include "gammalab/builtin_groups.hpp"
#include "gammalab/classify.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gammalab;

namespace {

const std::filesystem::path kData = GAMMALAB_DATA_DIR;

std::string text(const AbelianPresentation& a) { return invariant_factors(a).to_string(); }

OrientationChar nontrivial(const FiniteGroup& g) { return all_characters(g).at(1); }

IntVector vec(std::initializer_list<long long> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long long x : xs) v(i++) = x;
  return v;
}

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (long long x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

QuadraticTwoType diagonal_type(const FiniteGroup& g, const OrientationChar& w, const std::vector<int>& entries) {
  return QuadraticTwoType(ZPiModule::free(g, static_cast<int>(entries.size())), HermitianForm::diagonal(g, w, entries));
}

// Necessary for pi2 of a Poincaré complex: deck transformations act freely on the universal cover, so
// each g != 1 has Lefschetz number 0, i.e. trace(g | pi2) = -1 - w(g).
bool lefschetz_consistent(const ZPiModule& pi2, const OrientationChar& w) {
  for (Element g = 1; g < pi2.group().order(); ++g)
    if (pi2.action(g).trace() != -1 - w(g)) return false;
  return true;
}

QuadraticTwoType rp4_cp2() {
  const auto z2 = groups::cyclic(2);
  return diagonal_type(z2, nontrivial(z2), {1});
}

QuadraticTwoType rp2_s2() {
  const auto z2 = groups::cyclic(2);
  const auto w = nontrivial(z2);
  const auto pi2 = direct_sum(ZPiModule::from_character(z2, OrientationChar::trivial(z2)), ZPiModule::from_character(z2, w));
  return QuadraticTwoType(pi2, form_from_integral(pi2, w, mat({{0, 1}, {1, 0}})));
}

}  // namespace

TEST(Hermitian, RankOneOverZ2WithNontrivialCharacter) {
  const auto z2 = groups::cyclic(2);
  const auto f = HermitianForm::diagonal(z2, nontrivial(z2), {1});
  EXPECT_TRUE(check_hermitian(f));
  EXPECT_EQ(translated_value(f, 0, 1, 0, 1), Integer(-1) * GroupRingElement::one(2));
  EXPECT_TRUE(exactly_equal(ev0_matrix(f), mat({{1, 0}, {0, -1}})));
}

TEST(Hermitian, DiagonalMustBeBarFixed) {
  const auto z3 = groups::cyclic(3);
  const HermitianForm f(z3, OrientationChar::trivial(z3), {{GroupRingElement::basis(3, 1)}});
  EXPECT_FALSE(check_hermitian(f));
  EXPECT_THROW(QuadraticTwoType(ZPiModule::free(z3, 1), f), std::invalid_argument);
}

TEST(Hermitian, SymmetricIntegerMatrixOverTrivialGroup) {
  const auto one = groups::cyclic(1);
  const auto w = OrientationChar::trivial(one);
  const auto pi2 = ZPiModule::free(one, 3);
  EXPECT_TRUE(check_hermitian(form_from_integral(pi2, w, mat({{2, 1, 0}, {1, -1, 5}, {0, 5, 0}}))));
  EXPECT_FALSE(check_hermitian(form_from_integral(pi2, w, mat({{2, 1, 0}, {0, -1, 5}, {0, 5, 0}}))));
}

TEST(Hermitian, PropertySuite) {
  const auto r = props::hermitian_laws();
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Stabilize, FromRankZero) {
  const auto z2 = groups::cyclic(2);
  const auto w = nontrivial(z2);
  const QuadraticTwoType empty(ZPiModule::free(z2, 0), HermitianForm(z2, w, {}));
  const auto s = stabilize(empty, 1);
  EXPECT_EQ(s.form().rank(), 1);
  EXPECT_EQ(s.form().entry(0, 0), GroupRingElement::one(2));

  const auto t = stabilize(s, -1);
  EXPECT_EQ(t.form().rank(), 2);
  EXPECT_EQ(t.form().entry(1, 1), Integer(-1) * GroupRingElement::one(2));
  EXPECT_TRUE(t.form().entry(0, 1).is_zero());
  EXPECT_THROW(stabilize(s, 2), std::invalid_argument);
}

TEST(Stabilize, AddsSignedSquaresToLambda) {
  // On either kind of basis the new Z-generators are h b for the added generator b, and λ ⊗ 1
  // picks up s w(h) v_{hb} for each of them.
  std::vector<QuadraticTwoType> seeds{rp4_cp2(), rp2_s2()};
  for (const auto& [name, q] : props::geometric_seeds()) seeds.push_back(q);
  for (const auto& q : seeds)
    for (int sign : {1, -1}) {
      const auto s = stabilize(q, sign);
      const auto k = q.pi2().ngens(), n = static_cast<Eigen::Index>(q.group().order());
      ASSERT_EQ(s.pi2().ngens(), k + n);
      IntMatrix incl = IntMatrix::Zero(k + n, k);
      incl.topRows(k) = IntMatrix::Identity(k, k);
      const auto gi = gamma_map(AbelianHom(AbelianPresentation::free(k), AbelianPresentation::free(k + n), incl));
      IntVector expected = gi.apply(lambda_to_gamma(q));
      for (Element h = 0; h < q.group().order(); ++h) expected(k + h) += sign * q.character()(h);
      EXPECT_TRUE(exactly_equal(lambda_to_gamma(s), expected));
    }
}

TEST(LambdaToGamma, Examples) {
  const auto one = groups::cyclic(1);
  EXPECT_TRUE(exactly_equal(lambda_to_gamma(diagonal_type(one, OrientationChar::trivial(one), {1})), vec({1})));
  const auto pi2 = ZPiModule::free(one, 2);
  const QuadraticTwoType hyp(pi2, form_from_integral(pi2, OrientationChar::trivial(one), mat({{0, 1}, {1, 0}})));
  EXPECT_TRUE(exactly_equal(lambda_to_gamma(hyp), vec({0, 0, 1})));
  EXPECT_TRUE(exactly_equal(lambda_to_gamma(rp4_cp2()), vec({1, -1, 0})));
}

TEST(LambdaToGamma, SymmetricTensorPicture) {
  // Γ(Z^n) is the symmetric n x n integer matrices with v(a) = a a^T.
  std::mt19937 rng(props::kSeed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int t = 0; t < 200; ++t) {
    const int n = uniform(1, 5);
    IntVector x = IntVector::Zero(gamma_rank(n));
    IntMatrix s = IntMatrix::Zero(n, n);
    for (int term = 0; term < 3; ++term) {
      IntVector a(n);
      for (int i = 0; i < n; ++i) a(i) = uniform(-4, 4);
      const int c = uniform(-3, 3);
      x += expand_v(a) * Integer(c);
      s += exact_product(a, a.transpose()) * Integer(c);
    }
    EXPECT_TRUE(exactly_equal(gamma_element_matrix(x, n), s)) << "case " << t;
  }
  for (const auto& [name, q] : props::geometric_seeds())
    EXPECT_TRUE(exactly_equal(gamma_element_matrix(lambda_to_gamma(q), q.pi2().ngens()), ev0_matrix(q.form()))) << name;
}

TEST(Kappa, TrivialGroup) {
  const auto one = groups::cyclic(1);
  const auto w = OrientationChar::trivial(one);
  const auto k = kappa_splitting(diagonal_type(one, w, {1}));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->dot(vec({1})), 1);
  EXPECT_FALSE(kappa_splitting(diagonal_type(one, w, {2})).has_value());
}

TEST(Kappa, RegularModuleOverZ2WithUnitFormIsNotPrimitive) {
  // λ ⊗ 1 = v_x + v_{gx} = 2 v_x in Z^w ⊗ Γ(Zπ) = Z v + Z w, so no functional sends it to 1.
  const auto z2 = groups::cyclic(2);
  const auto q = diagonal_type(z2, OrientationChar::trivial(z2), {1});
  EXPECT_TRUE(kappa_hypotheses_hold(q.group(), q.character()));
  EXPECT_FALSE(kappa_splitting(q).has_value());
  EXPECT_FALSE(census(q).primitive);
}

TEST(Kappa, ProjectivePlaneSumIsNotPrimitive) {
  const auto q = rp4_cp2();
  EXPECT_FALSE(kappa_hypotheses_hold(q.group(), q.character()));
  EXPECT_FALSE(kappa_splitting(q).has_value());
}

TEST(Kappa, HypothesesByGroup) {
  EXPECT_TRUE(kappa_hypotheses_hold(groups::cyclic(4), nontrivial(groups::cyclic(4))));
  EXPECT_FALSE(kappa_hypotheses_hold(groups::cyclic(6), nontrivial(groups::cyclic(6))));
  EXPECT_TRUE(kappa_hypotheses_hold(groups::cyclic(6), OrientationChar::trivial(groups::cyclic(6))));
  EXPECT_TRUE(kappa_hypotheses_hold(groups::quaternion8(), nontrivial(groups::quaternion8())));
}

TEST(Kappa, PropertySuites) {
  for (const auto& r : {props::kappa_existence(), props::transfer_scaling_z6()}) EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Kappa, BundledFormsMeetingTheHypothesesSplit) {
  struct Bundle {
    std::string group, character, module, form;
  };
  std::vector<Bundle> bundles{{"Z1", "trivial", "regular", "unit"},
                              {"Z1", "trivial", "regular2", "hyperbolic"},
                              {"Z2", "trivial", "z_minus_squared", "hyperbolic_integral"},
                              {"Z4", "w1", "z4_rotation", "hyperbolic_integral"},
                              {"Z2", "w1", "regular", "rp4_cp2"},
                              {"Z2", "w1", "z_plus_zw", "rp2_s2"}};
  for (const auto& entry : std::filesystem::directory_iterator(kData / "groups")) {
    const auto g = io::load_group(entry.path());
    if (g.group.order() == 1) continue;  // already listed above
    bundles.push_back({g.name, "trivial", "regular2", "hyperbolic"});
    for (const auto& c : g.characters) bundles.push_back({g.name, c.name(), "regular2", "hyperbolic"});
  }
  int checked = 0;
  for (const auto& b : bundles) {
    const auto g = io::load_group(kData / "groups" / (b.group + ".json"));
    const auto w = io::find_character(g, b.character);
    const auto pi2 = io::load_module(kData / "modules" / (b.module + ".json"), g, w);
    const QuadraticTwoType q(pi2, io::load_form(kData / "forms" / (b.form + ".json"), pi2, w));
    if (!kappa_hypotheses_hold(q.group(), q.character()) || !lefschetz_consistent(q.pi2(), q.character())) continue;
    ++checked;
    const auto k = kappa_splitting(q);
    ASSERT_TRUE(k.has_value()) << b.group << " " << b.character << " " << b.module << " " << b.form;
    const auto coinv = twisted_coinvariants(gamma_module(q.pi2()), q.character()).group;
    EXPECT_EQ(k->dot(lambda_to_gamma(q)), 1);
    if (coinv.relations().rows() > 0) {
      EXPECT_TRUE(is_zero_matrix(exact_product(coinv.relations(), *k)));
    }
  }
  EXPECT_EQ(checked, 4);
}

TEST(Kappa, FreeModulesOverLargerGroupsFailTheTraceConditionAndDoNotSplit) {
  // Hyperbolic form on Zπ^2: λ ⊗ 1 = |π| w_{e1,e2}, so the trace condition is what rules these out.
  for (int n : {2, 3, 4}) {
    const auto g = groups::cyclic(n);
    const auto w = OrientationChar::trivial(g);
    const auto pi2 = ZPiModule::free(g, 2);
    const GroupRingRows hyp{{GroupRingElement::zero(n), GroupRingElement::one(n)}, {GroupRingElement::one(n), GroupRingElement::zero(n)}};
    const QuadraticTwoType q(pi2, HermitianForm(g, w, hyp));
    EXPECT_FALSE(lefschetz_consistent(pi2, w));
    EXPECT_FALSE(kappa_splitting(q).has_value()) << n;
  }
  EXPECT_TRUE(lefschetz_consistent(rp4_cp2().pi2(), rp4_cp2().character()));
  for (const auto& [name, q] : props::geometric_seeds()) EXPECT_TRUE(lefschetz_consistent(q.pi2(), q.character())) << name;
}

TEST(Kappa, DualModuleIsAModuleAndAnInvolution) {
  for (const auto& [name, q] : props::geometric_seeds()) {
    const auto d = dual_module(q.pi2());
    std::vector<IntMatrix> action;
    for (Element h = 0; h < q.group().order(); ++h) action.push_back(d.action(h));
    EXPECT_NO_THROW(ZPiModule(q.group(), d.underlying(), action)) << name;
    const auto dd = dual_module(d);
    for (Element h = 0; h < q.group().order(); ++h) EXPECT_TRUE(exactly_equal(dd.action(h), q.pi2().action(h))) << name;
  }
}

TEST(KappaDiagnostics, TrivialGroupUnitForm) {
  const auto one = groups::cyclic(1);
  const auto d = kappa_diagnostics(diagonal_type(one, OrientationChar::trivial(one), {1}), Integer(3));
  ASSERT_TRUE(d.kappa1.has_value());
  EXPECT_EQ(*d.kappa1, 1);
  EXPECT_EQ(d.kappa2, 1);
  EXPECT_EQ(d.rank, 1);
  EXPECT_EQ(d.euler_rank, std::optional<Integer>(1));
  EXPECT_FALSE(d.kappa3.has_value());
  EXPECT_FALSE(d.tau.has_value());
}

TEST(KappaDiagnostics, RegularRepresentationSwapHasTraceZero) {
  const auto z2 = groups::cyclic(2);
  const auto w = OrientationChar::trivial(z2);
  const auto pi2 = ZPiModule::free(z2, 1);
  const QuadraticTwoType q(pi2, form_from_integral(pi2, w, IntMatrix::Identity(2, 2)));
  const auto d = kappa_diagnostics(q);
  ASSERT_TRUE(d.tau.has_value());
  EXPECT_EQ(*d.tau, 1);
  EXPECT_EQ(d.tau_trace, std::optional<Integer>(0));
  EXPECT_EQ(d.kappa3, std::optional<Integer>(0));
}

TEST(KappaDiagnostics, SingularFormIsRejected) {
  const auto one = groups::cyclic(1);
  EXPECT_THROW(kappa_diagnostics(diagonal_type(one, OrientationChar::trivial(one), {2})), SingularFormError);
}

TEST(KappaDiagnostics, TraceOfKappaPrimeIsRankForUnimodularForms) {
  // κ'(λ) = S S^{-1} = I.
  for (const auto& [name, q] : props::geometric_seeds()) {
    const auto d = kappa_diagnostics(q);
    EXPECT_EQ(d.kappa2, d.rank) << name;
  }
}

TEST(Obstruction, Examples) {
  const auto z2 = groups::cyclic(2);
  const auto w = nontrivial(z2);
  EXPECT_EQ(text(obstruction_torsion(w, ZPiModule::free(z2, 1))), "Z/2");
  EXPECT_EQ(text(obstruction_torsion(w, rp2_s2().pi2())), "Z/2 + Z/2");
  const auto one = groups::cyclic(1);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(text(obstruction_torsion(OrientationChar::trivial(one), ZPiModule::free(one, k))), "0");
}

TEST(Obstruction, InvolutionRankExamples) {
  const auto z2 = groups::cyclic(2);
  EXPECT_EQ(involution_rank_formula(z2, nontrivial(z2)), 1);
  EXPECT_EQ(involution_rank_formula(z2, OrientationChar::trivial(z2)), 0);
  const auto v4 = groups::by_name("Z2xZ2");
  const OrientationChar first(v4, {1, 1, -1, -1});
  EXPECT_EQ(involution_rank_formula(v4, first), 2);
  EXPECT_EQ(text(obstruction_torsion(first, ZPiModule::free(v4, 1))), "Z/2 + Z/2");
}

TEST(H4Split, Examples) {
  const auto z2 = groups::cyclic(2);
  for (auto kind : {ResolutionKind::Cyclic, ResolutionKind::Bar}) {
    const auto s = h4_twotype_split(nontrivial(z2), ZPiModule::free(z2, 1), kind);
    EXPECT_EQ(text(s.total), "Z/2 + Z/2 + Z");
    EXPECT_EQ(text(s.homology_part), "Z/2");
  }
  const auto one = groups::cyclic(1);
  EXPECT_EQ(text(h4_twotype_split(OrientationChar::trivial(one), ZPiModule::free(one, 1), ResolutionKind::Bar).total), "Z");
  EXPECT_EQ(text(h4_twotype_split(OrientationChar::trivial(z2), ZPiModule::free(z2, 0), ResolutionKind::Cyclic).total), "0");
}

TEST(Census, Examples) {
  EXPECT_EQ(census(rp4_cp2()).count, 2);
  EXPECT_EQ(census(rp2_s2()).count, 4);
  for (const auto& [name, q] : props::geometric_seeds())
    if (q.group().order() == 1) {
      EXPECT_EQ(census(q).count, 1) << name;
    }
  const auto r = census(rp4_cp2());
  EXPECT_EQ(r.group_order, 2);
  EXPECT_TRUE(r.norm_quotient_ok);
  EXPECT_TRUE(r.tor_one_ok);
  EXPECT_EQ(r.involution_rank, 1);
}

TEST(Census, InvariantUnderBaseChange) {
  const auto r = props::census_base_change();
  EXPECT_TRUE(r.ok()) << r.summary();
}
