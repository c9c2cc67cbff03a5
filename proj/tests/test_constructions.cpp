#include <gtest/gtest.h>

#include "sigma/bounds.hpp"
#include "sigma/constructions.hpp"
#include "sigma/error.hpp"
#include "sigma/sumset.hpp"

using namespace sigma;

TEST(ConstructionsTest, CyclicWitnessCaseOne) {
  const auto w = cyclic_symmetric_witness(12, 5, 6, 2);
  EXPECT_EQ(w.set.members(), (std::vector<Index>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(w.params.construction_case, 1);
  EXPECT_EQ(w.params.a, 2);
  EXPECT_EQ(w.params.b, 1);
  EXPECT_EQ(w.params.c, 0);
  EXPECT_EQ(w.params.m0, 1);
  EXPECT_EQ(fold_sumset(Group({12}), w.set, 2).size(), 6u);
  EXPECT_EQ(divisor_bound(5, 2, 6), 6);
}

TEST(ConstructionsTest, CyclicWitnessCaseTwo) {
  const auto w = cyclic_symmetric_witness(6, 3, 2, 2);
  EXPECT_EQ(w.set.members(), (std::vector<Index>{1, 2, 4, 5}));
  EXPECT_EQ(w.params.construction_case, 2);
  EXPECT_EQ(w.params.a, 1);
  EXPECT_EQ(w.params.b, 1);
  EXPECT_EQ(w.params.c, 1);
  EXPECT_EQ(w.params.e, 3);
  EXPECT_EQ(w.params.subgroup_order, 2);
  const Group z6({6});
  EXPECT_EQ(classify_symmetry(z6, w.set), SymmetryClass::Symmetric);
  EXPECT_EQ(fold_sumset(z6, w.set, 2).size(), 6u);
  EXPECT_LE(6, divisor_bound(3, 2, 2));
}

TEST(ConstructionsTest, PrimeOrderIntervals) {
  for (const std::int64_t p : {5, 7, 11, 13}) {
    const Group zp({p});
    for (std::int64_t m = 1; m <= p; m += 2) {
      const auto w = cyclic_symmetric_witness(p, m, 1, 2);
      // {-(m-1)/2, ..., (m-1)/2}
      ElementSet expected(static_cast<std::size_t>(p));
      for (std::int64_t i = -(m - 1) / 2; i <= (m - 1) / 2; ++i) expected.insert(static_cast<Index>((i + p) % p));
      EXPECT_EQ(w.set, expected);
      for (int h = 1; h <= 4; ++h)
        EXPECT_EQ(static_cast<std::int64_t>(fold_sumset(zp, w.set, h).size()), std::min(p, h * (m - 1) + 1));
    }
  }
}

TEST(ConstructionsTest, CyclicWitnessRejectsBadInput) {
  EXPECT_THROW(cyclic_symmetric_witness(12, 5, 5, 2), InvalidArgument);
  EXPECT_THROW(cyclic_symmetric_witness(12, 13, 6, 2), InvalidArgument);
  EXPECT_THROW(cyclic_symmetric_witness(12, 0, 6, 2), InvalidArgument);
  EXPECT_THROW(cyclic_symmetric_witness(12, 5, 6, 0), InvalidArgument);
}

TEST(ConstructionsTest, CyclicWitnessSweepSmall) {
  for (std::int64_t n = 2; n <= 48; ++n) {
    const Group zn({n});
    for (const auto d : divisors(n))
      for (std::int64_t m = 1; m <= n; ++m) {
        const auto w = cyclic_symmetric_witness(n, m, d, 1);
        ASSERT_EQ(negated(zn, w.set), w.set);
        ASSERT_EQ(static_cast<std::int64_t>(w.set.size()), d * ((m + d - 1) / d));
        for (int h = 1; h <= 4; ++h)
          ASSERT_LE(static_cast<std::int64_t>(fold_sumset(zn, w.set, h).size()), divisor_bound(m, h, d))
              << "n=" << n << " m=" << m << " d=" << d << " h=" << h;
      }
  }
}

TEST(ConstructionsTest, ProductWitness) {
  const Group z33({3, 3});
  const std::vector<std::int64_t> parts{2, 2};
  const auto w = product_witness(z33, parts, 2);
  EXPECT_EQ(w.set.size(), 4u);
  EXPECT_EQ(w.bound, 9);
  EXPECT_EQ(classify_symmetry(z33, w.set), SymmetryClass::Symmetric);
  EXPECT_LE(static_cast<std::int64_t>(fold_signed_sumset(z33, w.set, 2).size()), 9);

  const Group z55({5, 5});
  const std::vector<std::int64_t> parts55{2, 5};
  const auto w55 = product_witness(z55, parts55, 2);
  EXPECT_EQ(w55.set.size(), 10u);
  EXPECT_EQ(w55.bound, 15);
  EXPECT_EQ(fold_signed_sumset(z55, w55.set, 2).size(), 15u);
  EXPECT_EQ(fold_signed_sumset(z55, w55.set, 2), fold_sumset(z55, w55.set, 2));

  const std::vector<std::int64_t> bad_len{2};
  EXPECT_THROW(product_witness(z33, bad_len, 2), InvalidArgument);
  const std::vector<std::int64_t> too_big{2, 4};
  EXPECT_THROW(product_witness(z33, too_big, 2), InvalidArgument);
}

TEST(ConstructionsTest, ProductWitnessOfCyclicGroupIsCyclicWitness) {
  const Group z12({12});
  const std::vector<std::int64_t> parts{5};
  const auto w = product_witness(z12, parts, 2);
  EXPECT_EQ(w.set, cyclic_symmetric_witness(12, 5, min_divisor_bound(12, 5, 2).argmin, 2).set);
}

TEST(ConstructionsTest, ProductWitnessesStayWithinBound) {
  for (const auto& g : {Group({2, 4}), Group({3, 6}), Group({2, 2, 4}), Group({4, 8})}) {
    const auto& n = g.invariant_factors();
    std::vector<std::int64_t> parts(n.size(), 1);
    while (true) {
      for (int h = 1; h <= 3; ++h) {
        const auto w = product_witness(g, parts, h);
        EXPECT_EQ(classify_symmetry(g, w.set), SymmetryClass::Symmetric);
        EXPECT_LE(static_cast<std::int64_t>(fold_signed_sumset(g, w.set, h).size()), w.bound);
      }
      std::size_t i = 0;
      while (i < n.size() && parts[i] == n[i]) parts[i++] = 1;
      if (i == n.size()) break;
      ++parts[i];
    }
  }
}

TEST(ConstructionsTest, AsymmetricHalfWitness) {
  const Group z33({3, 3});
  const auto a = asymmetric_half_witness(z33, 4, 9);
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(sdeg(z33, a), 0u);
  EXPECT_EQ(fold_signed_sumset(z33, a, 2).size(), 8u);

  const Group z15({15});
  const auto b = asymmetric_half_witness(z15, 7, 15);
  EXPECT_EQ(b.members(), (std::vector<Index>{1, 2, 3, 4, 5, 6, 7}));
  const auto s = fold_signed_sumset(z15, b, 2);
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.size(), 14u);

  const Group z8({8});
  EXPECT_THROW(asymmetric_half_witness(z8, 3, 7), InvalidArgument);
  EXPECT_THROW(asymmetric_half_witness(z8, 3, 8), InvalidArgument);
  EXPECT_THROW(asymmetric_half_witness(z15, 7, 5), InvalidArgument);
}

TEST(ConstructionsTest, AsymmetricHalfWitnessStaysInSubgroup) {
  for (const auto& g : {Group({3, 9}), Group({5, 5}), Group({45}), Group({3, 3, 3})}) {
    for (const auto d : divisors(g.order())) {
      if (d % 2 == 0 || d < 3) continue;
      const auto h = subgroup_of_order(g, d);
      for (std::int64_t m = 1; 2 * m + 1 <= d; ++m) {
        const auto a = asymmetric_half_witness(g, m, d);
        EXPECT_EQ(static_cast<std::int64_t>(a.size()), m);
        EXPECT_EQ(sdeg(g, a), 0u);
        const auto s = fold_signed_sumset(g, a, 2);
        EXPECT_FALSE(s.contains(0));
        EXPECT_TRUE(s.is_subset_of(h));
      }
    }
  }
}

TEST(ConstructionsTest, TrimWitness) {
  const Group z12({12});
  const auto r = cyclic_symmetric_witness(12, 7, 2, 2).set;  // size 8
  ASSERT_EQ(r.size(), 8u);
  const auto t = trim_witness(z12, r, 7);
  EXPECT_EQ(t.size(), 7u);
  EXPECT_TRUE(t.is_subset_of(r));
  const auto t6 = trim_witness(z12, r, 6);
  EXPECT_EQ(t6.size(), 6u);
  EXPECT_EQ(classify_symmetry(z12, t6), SymmetryClass::Symmetric);
  EXPECT_LE(fold_sumset(z12, t6, 2).size(), fold_sumset(z12, r, 2).size());
  EXPECT_THROW(trim_witness(z12, r, 9), InvalidArgument);
}
