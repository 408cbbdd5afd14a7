#include "oracles.hpp"
#include "properties.hpp"

#include "gammalab/builtin_groups.hpp"
#include "gammalab/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace gammalab;

namespace {

GroupRingElement element(std::vector<int> coeffs) {
  IntVector v(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t i = 0; i < coeffs.size(); ++i) v(static_cast<Eigen::Index>(i)) = coeffs[i];
  return GroupRingElement(v);
}

OrientationChar nontrivial(const FiniteGroup& g) { return all_characters(g).at(1); }

}  // namespace

TEST(BuildGroup, CyclicOfOrderTwo) {
  const auto g = FiniteGroup::from_table({{0, 1}, {1, 0}});
  EXPECT_EQ(g.order(), 2);
  EXPECT_EQ(g.inverse(1), 1);
}

TEST(BuildGroup, RejectsNonInvertibleElement) {
  try {
    FiniteGroup::from_table({{0, 1}, {1, 1}});
    FAIL() << "expected a validation error";
  } catch (const GroupValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("not invertible"), std::string::npos) << e.what();
  }
}

TEST(BuildGroup, RejectsNonAssociativeTableNamingTheTriple) {
  // A Latin square with identity 0 that is not associative (the loop of order 5).
  const std::vector<std::vector<Element>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table(t);
    FAIL() << "expected a validation error";
  } catch (const GroupValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("associative at triple"), std::string::npos) << e.what();
  }
}

TEST(BuildGroup, RejectsMissingIdentityAndBadIndices) {
  EXPECT_THROW(FiniteGroup::from_table({{1, 0}, {0, 1}}), GroupValidationError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 2}, {1, 0}}), GroupValidationError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}}), GroupValidationError);
}

TEST(BuildGroup, QuaternionCenterHasOrderTwo) {
  const auto q8 = groups::quaternion8();
  EXPECT_EQ(q8.center(), oracle::brute_center(q8));
  EXPECT_EQ(q8.center().size(), 2u);
}

TEST(BuildGroup, CentersAgreeWithBruteForceForAllSmallGroups) {
  for (const auto& ng : groups::small_groups()) EXPECT_EQ(ng.group.center(), oracle::brute_center(ng.group)) << ng.name;
}

TEST(Characters, AreHomomorphismsAndCountMatchesAbelianization) {
  // Number of characters = |Hom(G, Z/2)|; for these groups: 2^(rank of G/G^2[G,G]).
  const std::map<std::string, std::size_t> expected{{"Z1", 1}, {"Z2", 2},    {"Z3", 1},       {"Z4", 2}, {"Z2xZ2", 4},
                                                    {"Z5", 1}, {"Z6", 2},    {"S3", 2},       {"Z7", 1}, {"Z8", 2},
                                                    {"Z2xZ4", 4}, {"Z2xZ2xZ2", 8}, {"D4", 4}, {"Q8", 4}};
  for (const auto& ng : groups::small_groups()) {
    const auto chars = all_characters(ng.group);
    EXPECT_EQ(chars.size(), expected.at(ng.name)) << ng.name;
    EXPECT_TRUE(chars.front().is_trivial());
    for (const auto& w : chars)
      for (Element a = 0; a < ng.group.order(); ++a)
        for (Element b = 0; b < ng.group.order(); ++b) EXPECT_EQ(w(ng.group.mul(a, b)), w(a) * w(b));
  }
  EXPECT_THROW(OrientationChar(groups::cyclic(3), {1, -1, -1}), std::invalid_argument);
}

TEST(BarInvolution, Examples) {
  const auto z2 = groups::cyclic(2);
  EXPECT_EQ(bar_involution(z2, nontrivial(z2), element({0, 1})), element({0, -1}));
  for (const auto& ng : groups::small_groups())
    for (const auto& w : all_characters(ng.group))
      EXPECT_EQ(bar_involution(ng.group, w, GroupRingElement::one(ng.group.order())), GroupRingElement::one(ng.group.order()));
  const auto z4 = groups::cyclic(4);
  EXPECT_EQ(bar_involution(z4, OrientationChar::trivial(z4), element({0, 1, 0, 0})), element({0, 0, 0, 1}));
}

TEST(NormElement, Examples) {
  const auto z2 = groups::cyclic(2);
  EXPECT_EQ(norm_element(z2, nontrivial(z2)), element({1, -1}));
  EXPECT_EQ(norm_element(z2, OrientationChar::trivial(z2)), element({1, 1}));
  // Z/2 x Z/2 with index a1 * 2 + b1: b = 1, a = 2, ab = 3; w = projection to the first factor.
  const auto v4 = groups::by_name("Z2xZ2");
  const OrientationChar first(v4, {1, 1, -1, -1});
  EXPECT_EQ(norm_element(v4, first), element({1, 1, -1, -1}));
}

TEST(CentralInvolutions, Examples) {
  const auto z2 = groups::cyclic(2);
  EXPECT_TRUE(central_involutions(z2, nontrivial(z2)).empty());
  const auto z4 = groups::cyclic(4);
  EXPECT_EQ(central_involutions(z4, nontrivial(z4)), std::vector<Element>{2});
  const auto q8 = groups::quaternion8();
  const auto taus = central_involutions(q8, OrientationChar::trivial(q8));
  ASSERT_EQ(taus.size(), 1u);
  EXPECT_EQ(q8.label(taus[0]), "-1");
}

TEST(CentralInvolutions, ExistForTwoGroupsUnderTheStatedHypotheses) {
  for (const auto& ng : groups::small_groups()) {
    if (!ng.group.is_p_group(2) || ng.group.order() == 1) continue;
    for (const auto& w : all_characters(ng.group)) {
      if (w.is_trivial() || ng.group.order() > 2) {
        EXPECT_FALSE(central_involutions(ng.group, w).empty()) << ng.name << " " << w.name();
      }
    }
  }
}

TEST(Subgroups, Examples) {
  const auto z4 = groups::cyclic(4);
  auto u = subgroup_and_cosets(z4, {2});
  EXPECT_EQ(u.subgroup.size(), 2u);
  EXPECT_EQ(u.index(), 2);
  EXPECT_EQ(u.representatives, (std::vector<Element>{0, 1}));

  u = subgroup_and_cosets(z4, {});
  EXPECT_EQ(u.subgroup, std::vector<Element>{0});
  EXPECT_EQ(u.index(), 4);

  const auto s3 = groups::by_name("S3");
  u = subgroup_and_cosets(s3, {1});
  EXPECT_EQ(s3.element_order(1), 3);
  EXPECT_EQ(u.subgroup.size(), 3u);
  EXPECT_EQ(u.index(), 2);
}

TEST(Subgroups, RepresentativesAreCosetMinimaAndPartitionTheGroup) {
  for (const auto& ng : groups::small_groups())
    for (Element x = 0; x < ng.group.order(); ++x) {
      const auto u = subgroup_and_cosets(ng.group, {x});
      std::set<Element> seen;
      for (std::size_t c = 0; c < u.representatives.size(); ++c) {
        const Element rep = u.representatives[c];
        for (Element h : u.subgroup) {
          const Element y = ng.group.mul(h, rep);
          EXPECT_GE(y, rep);
          EXPECT_EQ(u.coset_of[static_cast<std::size_t>(y)], static_cast<int>(c));
          seen.insert(y);
        }
      }
      EXPECT_EQ(static_cast<int>(seen.size()), ng.group.order());
    }
}

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(groups::cyclic(2)).size(), 1u);
  EXPECT_EQ(automorphisms(groups::cyclic(3)).size(), 2u);
  EXPECT_EQ(automorphisms(groups::by_name("Z2xZ2")).size(), 6u);
}

TEST(Automorphisms, CountsMatchExhaustiveSearch) {
  for (const auto& ng : groups::small_groups())
    EXPECT_EQ(static_cast<int>(automorphisms(ng.group).size()), oracle::brute_automorphism_count(ng.group)) << ng.name;
}

TEST(Automorphisms, FormAGroup) {
  for (const auto& ng : groups::small_groups()) {
    const auto autos = automorphisms(ng.group);
    const std::set<std::vector<Element>> all(autos.begin(), autos.end());
    for (const auto& a : autos) {
      std::vector<Element> inv(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) inv[static_cast<std::size_t>(a[i])] = static_cast<Element>(i);
      EXPECT_TRUE(all.count(inv)) << ng.name;
      for (const auto& b : autos) {
        std::vector<Element> ab(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[static_cast<std::size_t>(b[i])];
        EXPECT_TRUE(all.count(ab)) << ng.name;
      }
    }
  }
}

TEST(Automorphisms, RefusesGroupsAboveTheCap) {
  EXPECT_THROW(automorphisms(groups::cyclic(13)), EnumerationLimitError);
  EXPECT_EQ(automorphisms(groups::cyclic(13), 13).size(), 12u);
}

TEST(GroupRing, MultiplicationIsAssociativeWithUnit) {
  const auto d4 = groups::by_name("D4");
  const auto x = element({1, -2, 0, 3, 1, 0, 0, 2}), y = element({0, 1, 1, 0, -1, 2, 0, 0}),
             z = element({2, 0, 0, 0, 1, 0, -1, 1});
  EXPECT_EQ(multiply(d4, multiply(d4, x, y), z), multiply(d4, x, multiply(d4, y, z)));
  EXPECT_EQ(multiply(d4, GroupRingElement::one(8), x), x);
  EXPECT_EQ(ev0(multiply(d4, x, y)), ev0(multiply(d4, y, x)));
}

TEST(GroupRing, InvolutionPropertySuite) {
  const auto r = props::involution_laws();
  EXPECT_TRUE(r.ok()) << r.summary();
}
