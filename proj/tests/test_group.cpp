#include <gtest/gtest.h>

#include <set>

#include "sigma/element_set.hpp"
#include "sigma/error.hpp"
#include "sigma/group.hpp"
#include "sigma/sumset.hpp"

using namespace sigma;

TEST(GroupTest, MakeFromInvariantFactors) {
  const Group g({3, 3});
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(g.exponent(), 3);

  const Group z12({12});
  EXPECT_TRUE(z12.is_cyclic());
  EXPECT_EQ(z12.order(), 12);
}

TEST(GroupTest, RejectsBrokenChains) {
  EXPECT_THROW(Group({3, 4}), InvalidArgument);
  EXPECT_THROW(Group({1, 4}), InvalidArgument);
  EXPECT_THROW(Group(std::vector<std::int64_t>{}), InvalidArgument);
  EXPECT_THROW(Group({0}), InvalidArgument);
  EXPECT_THROW(Group({2, 1 << 20}), InvalidArgument);
}

TEST(GroupTest, ParseRoundTrip) {
  EXPECT_EQ(Group::parse("3,3"), Group({3, 3}));
  EXPECT_EQ(Group::parse("2, 4, 8").to_string(), "2,4,8");
  EXPECT_THROW(Group::parse("3,,3"), InvalidArgument);
  EXPECT_THROW(Group::parse("x"), InvalidArgument);
  EXPECT_THROW(Group::parse("3,4"), InvalidArgument);
}

TEST(GroupTest, AddCoordinates) {
  const Group g({3, 3});
  EXPECT_EQ(g.add(GroupElement{{1, 2}}, GroupElement{{2, 2}}), (GroupElement{{0, 1}}));
  const Group z12({12});
  EXPECT_EQ(z12.add(GroupElement{{7}}, GroupElement{{8}}), (GroupElement{{3}}));
  EXPECT_EQ(g.add(GroupElement{{1, 2}}, g.zero()), (GroupElement{{1, 2}}));
  EXPECT_THROW(g.add(GroupElement{{1}}, GroupElement{{1, 1}}), InvalidArgument);
}

TEST(GroupTest, NegateCoordinates) {
  EXPECT_EQ(Group({9}).negate(GroupElement{{1}}), (GroupElement{{8}}));
  EXPECT_EQ(Group({3, 3}).negate(GroupElement{{1, 2}}), (GroupElement{{2, 1}}));
  EXPECT_EQ(Group({3, 3}).negate(GroupElement{{0, 0}}), (GroupElement{{0, 0}}));
  EXPECT_THROW(Group({3, 3}).negate(GroupElement{{1}}), InvalidArgument);
}

TEST(GroupTest, IndexArithmeticMatchesCoordinates) {
  // Small (tabled) and large (coordinate path) noncyclic groups plus cyclic.
  for (const auto& g : {Group({2, 4}), Group({3, 9}), Group({2, 2, 6}), Group({4, 80}), Group({21})}) {
    std::set<Index> seen;
    for (Index a = 0; a < g.order(); ++a) {
      seen.insert(a);
      EXPECT_EQ(g.index_of(g.element(a)), a);
      EXPECT_EQ(g.add(a, g.negate(a)), 0u);
      EXPECT_EQ(g.index_of(g.negate(g.element(a))), g.negate(a));
      for (Index b = 0; b < g.order(); b += 7) {
        EXPECT_EQ(g.add(a, b), g.index_of(g.add(g.element(a), g.element(b))));
      }
      EXPECT_EQ(g.multiple(a, 3), g.add(a, g.add(a, a)));
      EXPECT_EQ(g.multiple(a, -2), g.negate(g.add(a, a)));
    }
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(g.order()));
  }
}

TEST(GroupTest, Divisors) {
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(9), (std::vector<std::int64_t>{1, 3, 9}));
  EXPECT_EQ(divisors(1), (std::vector<std::int64_t>{1}));
  EXPECT_THROW(divisors(0), InvalidArgument);
}

TEST(GroupTest, DivisorCountsMatchFactorization) {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t x = n, expected = 1;
    for (std::int64_t p = 2; p * p <= x; ++p) {
      int e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      expected *= e + 1;
    }
    if (x > 1) expected *= 2;
    const auto ds = divisors(n);
    EXPECT_EQ(static_cast<std::int64_t>(ds.size()), expected) << n;
    for (const auto d : ds) EXPECT_EQ(n % d, 0);
    EXPECT_TRUE(std::is_sorted(ds.begin(), ds.end()));
  }
}

TEST(GroupTest, SubgroupOfOrder) {
  EXPECT_EQ(subgroup_of_order(Group({12}), 6).members(), (std::vector<Index>{0, 2, 4, 6, 8, 10}));
  const Group g({3, 3});
  const auto h = subgroup_of_order(g, 3);
  std::vector<GroupElement> elems;
  h.for_each([&](Index x) { elems.push_back(g.element(x)); });
  EXPECT_EQ(elems, (std::vector<GroupElement>{{{0, 0}}, {{0, 1}}, {{0, 2}}}));
  EXPECT_THROW(subgroup_of_order(Group({12}), 5), InvalidArgument);
}

TEST(GroupTest, SubgroupsAreClosedWithExactOrder) {
  for (std::int64_t n = 2; n <= 48; ++n) {
    for (const auto& g : abelian_groups_of_order(n)) {
      for (const auto d : divisors(n)) {
        const auto h = subgroup_of_order(g, d);
        ASSERT_EQ(static_cast<std::int64_t>(h.size()), d) << g.to_string() << " d=" << d;
        h.for_each([&](Index a) {
          EXPECT_TRUE(h.contains(g.negate(a)));
          h.for_each([&](Index b) { EXPECT_TRUE(h.contains(g.add(a, b))); });
        });
      }
    }
  }
}

TEST(GroupTest, AbelianGroupsOfOrder) {
  // Number of abelian groups of order n is the product of partition counts
  // of the prime exponents: 16 -> 5, 24 -> 3, 36 -> 4, 72 -> 6.
  EXPECT_EQ(abelian_groups_of_order(16).size(), 5u);
  EXPECT_EQ(abelian_groups_of_order(24).size(), 3u);
  EXPECT_EQ(abelian_groups_of_order(36).size(), 4u);
  EXPECT_EQ(abelian_groups_of_order(72).size(), 6u);
  EXPECT_EQ(abelian_groups_of_order(7).size(), 1u);
  const auto g9 = abelian_groups_of_order(9);
  ASSERT_EQ(g9.size(), 2u);
  EXPECT_EQ(g9[0], Group({9}));
  EXPECT_EQ(g9[1], Group({3, 3}));
  for (const auto& g : abelian_groups_of_order(64)) EXPECT_EQ(g.order(), 64);
}

TEST(GroupTest, OddSquareSubgroupDetection) {
  EXPECT_TRUE(has_odd_square_subgroup(Group({3, 3})));
  EXPECT_TRUE(has_odd_square_subgroup(Group({3, 9})));
  EXPECT_TRUE(has_odd_square_subgroup(Group({2, 6, 6})));
  EXPECT_FALSE(has_odd_square_subgroup(Group({2, 6})));
  EXPECT_FALSE(has_odd_square_subgroup(Group({4, 4})));
  EXPECT_FALSE(has_odd_square_subgroup(Group({45})));
}
