#include <gtest/gtest.h>

#include <limits>

#include <skewchar/lr.hpp>

#include "oracles.hpp"

using skewchar::Decomposition;
using skewchar::Partition;
using skewchar::SkewDiagram;

namespace {

SkewDiagram sk(const char* text) { return skewchar::parse_skew(text); }

Decomposition from_oracle(const std::map<Partition, std::uint64_t>& m) {
    Decomposition d;
    for (const auto& [nu, c] : m) d.add(nu, c);
    return d;
}

} // namespace

TEST(IsLatticeWord, Examples) {
    EXPECT_TRUE(skewchar::is_lattice_word(std::vector<int>{1, 2, 1}));
    EXPECT_FALSE(skewchar::is_lattice_word(std::vector<int>{2, 1}));
    EXPECT_TRUE(skewchar::is_lattice_word(std::vector<int>{}));
    EXPECT_TRUE(skewchar::is_lattice_word(std::vector<int>{1, 1, 2, 3, 2}));
    EXPECT_FALSE(skewchar::is_lattice_word(std::vector<int>{1, 2, 2}));
    EXPECT_FALSE(skewchar::is_lattice_word(std::vector<int>{1, 3}));
}

TEST(LrCoefficient, Examples) {
    EXPECT_EQ(skewchar::lr_coefficient({3, 2, 1}, {2, 1}, {2, 1}), 2u);
    EXPECT_EQ(skewchar::lr_coefficient({2, 2}, {1}, {2, 1}), 1u);
    for (const auto& lam : skewchar::partitions_of(5)) EXPECT_EQ(skewchar::lr_coefficient(lam, lam, {}), 1u);
}

TEST(LrCoefficient, ZeroWhenIncompatible) {
    EXPECT_EQ(skewchar::lr_coefficient({3, 1}, {2}, {3}), 0u);     // weights differ
    EXPECT_EQ(skewchar::lr_coefficient({2, 2}, {3}, {1}), 0u);     // not contained
    EXPECT_EQ(skewchar::lr_coefficient({2, 2}, {1}, {3}), 0u);     // column strictness
    EXPECT_EQ(skewchar::lr_coefficient({4, 2}, {2}, {1, 1, 1, 1}), 0u);
}

TEST(LrCoefficient, AgreesWithExhaustiveFillings) {
    for (const auto& d : oracle::all_skew_diagrams(7)) {
        if (d.cell_count() > 5) continue;
        const auto expected = oracle::brute_lr(d);
        for (const auto& nu : skewchar::partitions_of(d.cell_count())) {
            const auto it = expected.find(nu);
            const std::uint64_t want = it == expected.end() ? 0 : it->second;
            EXPECT_EQ(skewchar::lr_coefficient(d.outer(), d.inner(), nu), want) << d.to_string() << " nu=" << nu.to_string();
        }
        EXPECT_EQ(skewchar::skew_character(d), from_oracle(expected)) << d.to_string();
    }
}

TEST(SkewCharacter, Examples) {
    EXPECT_EQ(skewchar::skew_character(sk("2,2/1")), (Decomposition{{Partition{2, 1}, 1}}));
    EXPECT_EQ(skewchar::skew_character(sk("3,2,1/2,1")),
              (Decomposition{{Partition{3}, 1}, {Partition{2, 1}, 2}, {Partition{1, 1, 1}, 1}}));
    EXPECT_EQ(skewchar::skew_character(sk("2,2/2,2")), Decomposition::unit());
    EXPECT_EQ(skewchar::skew_character(SkewDiagram{}), Decomposition::unit());
}

TEST(SkewCharacter, WorkedExampleLeadingConstituent) {
    // The column filling 1..height has content conjugate to the sorted heights (3,3,2,2,2,2,1).
    const auto dec = skewchar::skew_character(sk("7,7,5,3,2/4,2,2,1"));
    EXPECT_EQ(dec.leading(), (Partition{7, 6, 2}));
    EXPECT_EQ(dec.leading(), skewchar::conjugate({3, 3, 2, 2, 2, 2, 1}));
    EXPECT_EQ(dec.coefficient(dec.leading()), 1u);
}

TEST(SkewCharacter, OrderedDescendingLexicographically) {
    const auto dec = skewchar::skew_character(sk("4,3,2/1"));
    const Partition* prev = nullptr;
    for (const auto& [nu, c] : dec.terms()) {
        if (prev) {
            EXPECT_GT(*prev, nu);
        }
        EXPECT_EQ(nu.weight(), 8);
        prev = &nu;
    }
}

TEST(EnumerateLrTableaux, Examples) {
    const auto one = skewchar::enumerate_lr_tableaux(sk("2,2/1"), {2, 1});
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].entries(), (std::vector<int>{1, 1, 2}));
    EXPECT_EQ(one[0].at(1, 2), 1);
    EXPECT_EQ(one[0].at(2, 1), 1);
    EXPECT_EQ(one[0].at(2, 2), 2);
    EXPECT_TRUE(skewchar::enumerate_lr_tableaux(sk("2,2/1"), {3}).empty());
    EXPECT_TRUE(skewchar::enumerate_lr_tableaux(sk("2,2/1"), {2, 2}).empty());
}

TEST(EnumerateLrTableaux, ValidSortedAndCounted) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(7, 7, 7)) {
        for (const auto& [nu, c] : skewchar::skew_character(d).terms()) {
            const auto tabs = skewchar::enumerate_lr_tableaux(d, nu);
            ASSERT_EQ(tabs.size(), c) << d.to_string();
            for (std::size_t i = 0; i < tabs.size(); ++i) {
                EXPECT_TRUE(tabs[i].is_valid());
                EXPECT_EQ(tabs[i].content(), nu);
                if (i) {
                    EXPECT_LT(tabs[i - 1].entries(), tabs[i].entries());
                }
            }
        }
    }
}

TEST(SkewSchurMonomials, Examples) {
    using M = skewchar::MonomialMap;
    EXPECT_EQ(skewchar::skew_schur_monomials(sk("1"), 3), (M{{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}}));
    EXPECT_EQ(skewchar::skew_schur_monomials(sk("2"), 2), (M{{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}}));
}

TEST(SkewSchurMonomials, MatchesDecomposition) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(5, 5, 5)) {
        const int n = d.cell_count();
        skewchar::MonomialMap sum;
        for (const auto& [nu, c] : skewchar::skew_character(d).terms())
            for (const auto& [exp, k] : skewchar::schur_monomials(nu, n)) sum[exp] += c * k;
        EXPECT_EQ(skewchar::skew_schur_monomials(d, n), sum) << d.to_string();
    }
}

TEST(SytCount, Examples) {
    EXPECT_EQ(skewchar::syt_count(Partition{2, 1}), 2u);
    EXPECT_EQ(skewchar::syt_count(sk("3,2,1/2,1")), 6u);
    EXPECT_EQ(skewchar::syt_count(Partition{6}), 1u);
    EXPECT_EQ(skewchar::syt_count(Partition{3, 3}), 5u);
    EXPECT_EQ(skewchar::syt_count(Partition{4, 3, 2, 1}), 768u);
}

TEST(SytCount, HookFormulaAgreesWithChainCounting) {
    for (int n = 1; n <= 12; ++n)
        for (const auto& p : skewchar::partitions_of(n)) EXPECT_EQ(skewchar::syt_count(p), skewchar::syt_count(SkewDiagram(p)));
}

TEST(SytCount, SkewAgreesWithPermutationSearch) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(7, 7, 7)) EXPECT_EQ(skewchar::syt_count(d), oracle::brute_syt(d)) << d.to_string();
}

TEST(SytCount, LargeStaircaseStaysExact) {
    // f^(6,5,4,3,2,1) = 21! / prod(hooks); 1100742656 is the published value.
    EXPECT_EQ(skewchar::syt_count(Partition::staircase(6)), 1100742656u);
}

TEST(LrSymmetries, CommutativityAndConjugation) {
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : skewchar::partitions_of(n))
            for (const auto& mu : skewchar::subpartitions(lam))
                for (const auto& nu : skewchar::partitions_of(n - mu.weight())) {
                    const auto c = skewchar::lr_coefficient(lam, mu, nu);
                    EXPECT_EQ(c, skewchar::lr_coefficient(lam, nu, mu));
                    EXPECT_EQ(c, skewchar::lr_coefficient(skewchar::conjugate(lam), skewchar::conjugate(mu), skewchar::conjugate(nu)));
                }
}

TEST(LrSymmetries, RotationAndTranslation) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(6, 6, 6)) {
        const auto c = skewchar::skew_character(d);
        EXPECT_EQ(c, skewchar::skew_character(skewchar::rotate180(d)));
        // Shift right by two columns and down by one empty row.
        std::vector<int> outer{d.outer().first() + 2}, inner{d.outer().first() + 2};
        for (std::size_t r = 0; r < d.rows(); ++r) {
            outer.push_back(d.outer()[r] + 2);
            inner.push_back(d.inner()[r] + 2);
        }
        const SkewDiagram shifted{Partition(outer), Partition(inner)};
        for (const auto& nu : skewchar::partitions_of(d.cell_count()))
            EXPECT_EQ(c.coefficient(nu), skewchar::lr_coefficient(shifted.outer(), shifted.inner(), nu)) << d.to_string();
    }
}

TEST(LrProduct, DecayProductIdentity) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(7, 7, 7)) {
        const auto comps = skewchar::decay_components(d);
        if (comps.size() < 2) continue;
        Decomposition product = Decomposition::unit();
        for (const auto& c : comps) product = skewchar::lr_product(product, skewchar::skew_character(c));
        EXPECT_EQ(skewchar::skew_character(d), product) << d.to_string();
    }
}

TEST(LrProduct, PieriSpotCheck) {
    EXPECT_EQ(skewchar::lr_product(Partition{1}, Partition{1}), (Decomposition{{Partition{2}, 1}, {Partition{1, 1}, 1}}));
    EXPECT_EQ(skewchar::lr_product(Partition{2, 1}, Partition{}), (Decomposition{{Partition{2, 1}, 1}}));
    EXPECT_EQ(skewchar::lr_product(Partition{2, 1}, Partition{2, 1}).coefficient({3, 2, 1}), 2u);
}

TEST(MaxConstituent, IsColumnFillingWithCoefficientOne) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(8, 8, 8)) {
        const auto dec = skewchar::skew_character(d);
        const auto heights = skewchar::parts_and_heights(d).heights;
        EXPECT_EQ(dec.leading(), skewchar::conjugate(Partition(heights))) << d.to_string();
        EXPECT_EQ(dec.coefficient(dec.leading()), 1u);
    }
}

TEST(Decomposition, OverflowIsDetected) {
    Decomposition d;
    d.add({1}, std::numeric_limits<skewchar::Coefficient>::max());
    EXPECT_THROW(d.add({1}, 1), skewchar::coefficient_overflow);
    EXPECT_THROW(skewchar::checked_mul(std::numeric_limits<skewchar::Coefficient>::max(), 2), skewchar::coefficient_overflow);
}

TEST(RemovalBijection, FullFirstRowMatchesTopRemoved) {
    for (const auto& d : skewchar::enumerate_basic_skew_diagrams(6, 6, 6)) {
        Decomposition expected;
        for (const auto& [nu, c] : skewchar::skew_character(d).terms())
            if (nu.first() == d.columns()) expected.add(Partition(std::vector<int>(nu.parts().begin() + 1, nu.parts().end())), c);
        EXPECT_EQ(skewchar::skew_character(skewchar::remove_top(d, 1)), expected) << d.to_string();
    }
}
