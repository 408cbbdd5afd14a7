#include "oracles.hpp"
#include "properties.hpp"

#include "gammalab/builtin_groups.hpp"
#include "gammalab/gamma.hpp"
#include "gammalab/homology.hpp"
#include "gammalab/io.hpp"
#include "gammalab/zpi_module.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gammalab;

namespace {

const std::filesystem::path kData = GAMMALAB_DATA_DIR;

std::string text(const AbelianPresentation& a) { return invariant_factors(a).to_string(); }

OrientationChar nontrivial(const FiniteGroup& g) { return all_characters(g).at(1); }

GroupRingElement element(const FiniteGroup& g, std::vector<std::pair<Element, int>> terms) {
  auto x = GroupRingElement::zero(g.order());
  for (auto [e, c] : terms) x += GroupRingElement::basis(g.order(), e, c);
  return x;
}

// Length-n periodic resolution of Z over Z/2 with d alternating (g - 1) and (g + 1).
std::vector<GroupRingMatrix> periodic_boundaries(const FiniteGroup& z2, int n, bool broken) {
  std::vector<GroupRingMatrix> out;
  for (int k = 1; k <= n; ++k) {
    const bool odd = k % 2 == 1 || broken;
    const auto entry = odd ? element(z2, {{0, -1}, {1, 1}}) : element(z2, {{0, 1}, {1, 1}});
    out.push_back(GroupRingMatrix::from_dense({{entry}}, 1, 2));
  }
  return out;
}

}  // namespace

TEST(Coinvariants, RegularModuleGivesZForEveryCharacter) {
  for (const auto& ng : groups::small_groups())
    for (const auto& w : all_characters(ng.group)) {
      for (int k = 1; k <= 2; ++k) {
        const auto f = invariant_factors(twisted_coinvariants(ZPiModule::free(ng.group, k), w).group);
        EXPECT_EQ(f.free_rank, static_cast<std::size_t>(k)) << ng.name << " " << w.name();
        EXPECT_TRUE(f.torsion.empty()) << ng.name << " " << w.name();
      }
    }
}

TEST(Coinvariants, GammaOfZPlusZwForZ2) {
  const auto z2 = groups::cyclic(2);
  const auto w = nontrivial(z2);
  const auto m = direct_sum(ZPiModule::from_character(z2, OrientationChar::trivial(z2)), ZPiModule::from_character(z2, w));
  const auto g = gamma_module(m);
  EXPECT_EQ(g.ngens(), 3);
  EXPECT_EQ(text(twisted_coinvariants(g, w).group), "Z/2 + Z/2 + Z");
}

TEST(Coinvariants, NormQuotientForZ2) {
  const auto z2 = groups::cyclic(2);
  const auto w = nontrivial(z2);
  EXPECT_EQ(text(twisted_coinvariants(norm_quotient(z2, w), w).group), "Z/2");
}

TEST(Coinvariants, TrivialModuleGivesZOrZ2) {
  for (const auto& ng : groups::small_groups())
    for (const auto& w : all_characters(ng.group)) {
      const auto f = text(twisted_coinvariants(ZPiModule::from_character(ng.group, OrientationChar::trivial(ng.group)), w).group);
      EXPECT_EQ(f, w.is_trivial() ? "Z" : "Z/2") << ng.name << " " << w.name();
    }
}

TEST(Coinvariants, RightExactOnRandomQuotients) {
  std::mt19937 rng(props::kSeed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto all = groups::small_groups();
  for (int t = 0; t < 200; ++t) {
    const auto& ng = all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
    if (ng.group.order() > 6) continue;
    const auto chars = all_characters(ng.group);
    const auto& w = chars[static_cast<std::size_t>(uniform(0, static_cast<int>(chars.size()) - 1))];
    const auto m = ZPiModule::free(ng.group, uniform(1, 2));
    IntMatrix elems(m.ngens(), uniform(1, 2));
    for (Eigen::Index i = 0; i < elems.rows(); ++i)
      for (Eigen::Index j = 0; j < elems.cols(); ++j) elems(i, j) = uniform(-3, 3);
    const auto n = quotient_module(m, elems);
    const ZPiHom proj(m, n, IntMatrix::Identity(m.ngens(), n.ngens()));
    EXPECT_TRUE(is_surjective(induced_on_coinvariants(proj, w))) << ng.name << " case " << t;
  }
}

TEST(TorOne, FreeModulesAndNormQuotient) {
  for (const auto& ng : groups::small_groups())
    for (const auto& w : all_characters(ng.group)) {
      EXPECT_EQ(text(tor_one(ZPiModule::free(ng.group, 2), w)), "0") << ng.name;
      EXPECT_EQ(text(tor_one(norm_quotient(ng.group, w), w)), "0") << ng.name << " " << w.name();
    }
}

TEST(TorOne, TrivialModuleOverCyclicGroupsMatchesPeriodicComplex) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = groups::cyclic(n);
    for (const auto& w : all_characters(g)) {
      const auto tor = invariant_factors(tor_one(ZPiModule::from_character(g, OrientationChar::trivial(g)), w));
      EXPECT_TRUE(oracle::same(tor, oracle::periodic_homology(n, !w.is_trivial(), 1))) << n << " " << w.name() << ": " << tor.to_string();
    }
  }
}

TEST(Transfer, IndexTwoInZ4OnRegularModule) {
  const auto z4 = groups::cyclic(4);
  for (const auto& w : all_characters(z4)) {
    const auto m = ZPiModule::free(z4, 1);
    const auto u = subgroup_and_cosets(z4, {2});
    const auto down = transfer_down(m, w, u);
    const auto up = projection_up(m, w, u);
    EXPECT_TRUE(compose(up, down).equals(scale(2, AbelianHom::identity(down.source()))));
    EXPECT_TRUE(compose(down, up).equals(quotient_norm_action(m, w, u)));
  }
}

TEST(Transfer, WholeGroupIsIdentity) {
  const auto s3 = groups::by_name("S3");
  for (const auto& w : all_characters(s3)) {
    const auto m = ZPiModule::free(s3, 1);
    const auto u = subgroup_and_cosets(s3, {1, 3});
    ASSERT_EQ(u.index(), 1);
    EXPECT_TRUE(transfer_down(m, w, u).equals(AbelianHom::identity(twisted_coinvariants(m, w).group)));
  }
}

TEST(Transfer, PropertySuite) {
  const auto r = props::transfer_identities();
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(Homology, CyclicGroupsMatchPeriodicComplex) {
  for (int n = 1; n <= 8; ++n) {
    const auto g = groups::cyclic(n);
    for (const auto& w : all_characters(g))
      for (int k = 0; k <= 4; ++k) {
        const auto h = invariant_factors(group_homology(g, w, k, ResolutionKind::Cyclic).group);
        EXPECT_TRUE(oracle::same(h, oracle::periodic_homology(n, !w.is_trivial(), k)))
            << "Z/" << n << " " << w.name() << " H_" << k << " = " << h.to_string();
      }
  }
}

TEST(Homology, BarProviderAgreesWithPeriodicComplex) {
  for (int n : {2, 3, 4}) {
    const auto g = groups::cyclic(n);
    for (const auto& w : all_characters(g))
      for (int k = 0; k <= 4; ++k) {
        const auto h = invariant_factors(group_homology(g, w, k, ResolutionKind::Bar, 4096).group);
        EXPECT_TRUE(oracle::same(h, oracle::periodic_homology(n, !w.is_trivial(), k)))
            << "Z/" << n << " " << w.name() << " H_" << k << " = " << h.to_string();
      }
  }
}

TEST(Homology, Examples) {
  const auto z2 = groups::cyclic(2);
  EXPECT_EQ(text(group_homology(z2, nontrivial(z2), 4, ResolutionKind::Cyclic).group), "Z/2");
  EXPECT_EQ(text(group_homology(z2, nontrivial(z2), 0, ResolutionKind::Bar).group), "Z/2");
  EXPECT_EQ(text(group_homology(z2, OrientationChar::trivial(z2), 0, ResolutionKind::Bar).group), "Z");
  EXPECT_EQ(text(group_homology(groups::cyclic(3), OrientationChar::trivial(groups::cyclic(3)), 4, ResolutionKind::Cyclic).group), "0");
}

TEST(Homology, KleinFourMatchesKunneth) {
  // H_k(Z/2 x Z/2; Z) = Z, Z/2^2, Z/2, Z/2^3, Z/2^2 for k = 0..4.
  const auto v4 = groups::by_name("Z2xZ2");
  const std::vector<std::string> expected{"Z", "Z/2 + Z/2", "Z/2", "Z/2 + Z/2 + Z/2", "Z/2 + Z/2"};
  for (int k = 0; k <= 4; ++k)
    EXPECT_EQ(text(group_homology(v4, OrientationChar::trivial(v4), k, ResolutionKind::Bar).group), expected[static_cast<std::size_t>(k)]);
}

TEST(Homology, ResolutionsAreExact) {
  for (const auto& ng : groups::small_groups()) {
    if (ng.group.order() > 4) continue;
    EXPECT_FALSE(first_inexact_degree(bar_resolution(ng.group, 4, 4096)).has_value()) << ng.name;
  }
  for (int n = 1; n <= 8; ++n) EXPECT_FALSE(first_inexact_degree(cyclic_resolution(groups::cyclic(n), 6)).has_value()) << n;
}

TEST(Homology, BudgetIsEnforced) {
  EXPECT_THROW(bar_resolution(groups::by_name("Z2xZ2xZ2"), 4, 256), ResourceError);
  const auto z3 = groups::cyclic(3);
  EXPECT_THROW(group_homology(z3, OrientationChar::trivial(z3), 4, ResolutionKind::Bar, 16), ResourceError);
  EXPECT_THROW(cyclic_resolution(groups::by_name("Z2xZ2"), 4), std::invalid_argument);
}

TEST(Homology, UserResolutionFromFile) {
  const auto z2 = groups::cyclic(2);
  const auto r = io::load_resolution(kData / "resolutions" / "Z2_periodic.json", z2);
  EXPECT_EQ(text(group_homology(r, nontrivial(z2), 4).group), "Z/2");
  EXPECT_EQ(text(group_homology(r, OrientationChar::trivial(z2), 3).group), "Z/2");
}

TEST(Homology, RejectsNonResolutions) {
  const auto z2 = groups::cyclic(2);
  EXPECT_NO_THROW(Resolution::validated(z2, periodic_boundaries(z2, 5, false)));
  EXPECT_THROW(Resolution::validated(z2, periodic_boundaries(z2, 5, true)), std::invalid_argument);
  EXPECT_THROW(Resolution::validated(z2, periodic_boundaries(z2, 3, false)), std::invalid_argument);
  // d1 = g - 1 and d2 = 0 is a complex, exact nowhere past degree 1.
  auto bad = periodic_boundaries(z2, 5, false);
  bad[1] = GroupRingMatrix::from_dense({{GroupRingElement::zero(2)}}, 1, 2);
  bad[2] = GroupRingMatrix::from_dense({{GroupRingElement::zero(2)}}, 1, 2);
  EXPECT_EQ(first_inexact_degree(Resolution::trusted(z2, bad)), std::optional<int>(1));
}

TEST(Orbits, Examples) {
  const auto z2 = groups::cyclic(2);
  auto o = orbit_quotient(z2, nontrivial(z2), 4, ResolutionKind::Bar);
  EXPECT_EQ(o.orbits.size(), 2u);
  EXPECT_EQ(o.automorphism_count, 1u);

  const auto one = groups::cyclic(1);
  o = orbit_quotient(one, OrientationChar::trivial(one), 4, ResolutionKind::Bar);
  EXPECT_EQ(o.orbits.size(), 1u);

  const auto z3 = groups::cyclic(3);
  o = orbit_quotient(z3, OrientationChar::trivial(z3), 4, ResolutionKind::Cyclic);
  EXPECT_EQ(o.orbits.size(), 1u);
}

TEST(Orbits, KleinFourDegreeFour) {
  // Aut = GL_2(F_2) acts on H_4 = (Z/2)^2 transitively on the nonzero classes.
  const auto v4 = groups::by_name("Z2xZ2");
  const auto o = orbit_quotient(v4, OrientationChar::trivial(v4), 4, ResolutionKind::Bar);
  EXPECT_EQ(o.automorphism_count, 6u);
  EXPECT_EQ(o.orbits.size(), 2u);
}

TEST(Orbits, CyclicGroupsUnderUnitGroup) {
  // H_3(Z/n; Z) = Z/n; a -> a^u acts as multiplication by u^2 there, so orbits are the square classes.
  const auto z5 = groups::cyclic(5);
  const auto o = orbit_quotient(z5, OrientationChar::trivial(z5), 3, ResolutionKind::Cyclic);
  EXPECT_EQ(o.automorphism_count, 4u);
  EXPECT_EQ(o.orbits.size(), 3u);  // {0}, {±1}, {±2}
}

TEST(Orbits, LimitsAndInfiniteGroups) {
  const auto z2 = groups::cyclic(2);
  EXPECT_THROW(orbit_quotient(z2, nontrivial(z2), 4, ResolutionKind::Bar, std::nullopt, 256, 12, 1), EnumerationLimitError);
  EXPECT_THROW(orbit_quotient(z2, OrientationChar::trivial(z2), 0, ResolutionKind::Bar), std::invalid_argument);
  // With explicit classes an infinite group is fine.
  IntVector c(1);
  c(0) = 1;
  const auto o = orbit_quotient(z2, OrientationChar::trivial(z2), 0, ResolutionKind::Bar, std::vector<IntVector>{c});
  EXPECT_EQ(o.orbits.size(), 1u);
}
