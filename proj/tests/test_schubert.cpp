#include <gtest/gtest.h>

#include <skewchar/schubert.hpp>

using skewchar::BoxSpec;
using skewchar::Decomposition;
using skewchar::Partition;

TEST(ParseBox, Examples) {
    EXPECT_EQ(skewchar::parse_box("3x2"), (BoxSpec{3, 2}));
    EXPECT_EQ(skewchar::parse_box("10X4"), (BoxSpec{10, 4}));
    EXPECT_THROW(skewchar::parse_box("3"), skewchar::malformed_partition);
    EXPECT_THROW(skewchar::parse_box("0x2"), skewchar::malformed_partition);
    EXPECT_THROW(skewchar::parse_box("3x2y"), skewchar::malformed_partition);
    EXPECT_THROW(skewchar::parse_box("x2"), skewchar::malformed_partition);
}

TEST(ComplementInBox, Examples) {
    EXPECT_EQ(skewchar::complement_in_box({2, 1}, {3, 3}), (Partition{3, 2, 1}));
    EXPECT_EQ(skewchar::complement_in_box({}, {4, 2}), (Partition{4, 4}));
    EXPECT_EQ(skewchar::complement_in_box({4, 4}, {4, 2}), Partition{});
    EXPECT_EQ(skewchar::complement_in_box({3, 1}, {4, 3}), (Partition{4, 3, 1}));
    EXPECT_THROW(skewchar::complement_in_box({5}, {4, 4}), skewchar::does_not_fit);
    EXPECT_THROW(skewchar::complement_in_box({1, 1, 1}, {4, 2}), skewchar::does_not_fit);
}

TEST(ComplementInBox, InvolutionAndWeights) {
    const BoxSpec box{4, 3};
    for (const auto& p : skewchar::partitions_in_box(box.k, box.l)) {
        const auto c = skewchar::complement_in_box(p, box);
        EXPECT_EQ(skewchar::complement_in_box(c, box), p);
        EXPECT_EQ(p.weight() + c.weight(), box.k * box.l);
    }
}

TEST(StarProduct, Examples) {
    EXPECT_EQ(skewchar::star_product({1}, {1}, {2, 2}), (Decomposition{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
    EXPECT_EQ(skewchar::star_product({1}, {1}, {2, 1}), (Decomposition{{Partition{2}, 1}}));
    EXPECT_EQ(skewchar::star_product({2, 1}, {2, 1}, {3, 3}).coefficient({3, 2, 1}), 2u);
    EXPECT_TRUE(skewchar::star_product({2}, {2}, {1, 4}).terms().empty());
}

TEST(StarProduct, LargeBoxGivesFullProduct) {
    for (const auto& mu : skewchar::partitions_in_box(3, 3))
        for (const auto& nu : skewchar::partitions_in_box(2, 2)) {
            const BoxSpec box{mu.first() + nu.first(), static_cast<int>(mu.length() + nu.length())};
            if (box.k == 0 || box.l == 0) continue;
            EXPECT_EQ(skewchar::star_product(mu, nu, box), skewchar::lr_product(mu, nu));
            EXPECT_EQ(skewchar::star_product(mu, nu, box), skewchar::star_product(nu, mu, box));
        }
}

TEST(StarProduct, ComplementPairsPairToOne) {
    const BoxSpec box{3, 3};
    for (const auto& mu : skewchar::partitions_in_box(box.k, box.l))
        for (const auto& nu : skewchar::partitions_in_box(box.k, box.l)) {
            if (mu.weight() + nu.weight() != box.k * box.l) continue;
            const bool dual = nu == skewchar::complement_in_box(mu, box);
            EXPECT_EQ(skewchar::star_product(mu, nu, box).coefficient(box.shape()), dual ? 1u : 0u)
                << mu.to_string() << " " << nu.to_string();
        }
}

TEST(DualityCheck, Examples) {
    EXPECT_TRUE(skewchar::duality_check({1}, {2, 1}, {2, 2}));
    EXPECT_TRUE(skewchar::duality_check({2, 1}, {4, 3, 2}, {4, 4}));
    EXPECT_TRUE(skewchar::duality_check({}, {3, 3}, {3, 2}));
    EXPECT_THROW(skewchar::duality_check({1}, {5}, {4, 4}), skewchar::does_not_fit);
    EXPECT_THROW(skewchar::duality_check({3}, {2, 2}, {4, 4}), skewchar::not_contained);
}

TEST(DualityCheck, HoldsInSmallBoxes) {
    for (const BoxSpec box : {BoxSpec{3, 2}, BoxSpec{2, 3}, BoxSpec{3, 3}})
        for (const auto& lam : skewchar::partitions_in_box(box.k, box.l))
            for (const auto& mu : skewchar::subpartitions(lam))
                EXPECT_TRUE(skewchar::duality_check(mu, lam, box)) << lam.to_string() << "/" << mu.to_string() << " in " << box.to_string();
}
