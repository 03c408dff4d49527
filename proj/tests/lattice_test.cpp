#include <gtest/gtest.h>

#include "nikulin/lattice.hpp"
#include "oracles.hpp"

using namespace nikulin;

namespace {

DivisorClass from_vec(const oracle::Vec& v) {
    DivisorClass x;
    x.set_two_cL(v[0]);
    for (int i = 1; i <= 16; ++i) x.set_two_cA(i, v[static_cast<std::size_t>(i)]);
    return x;
}

oracle::Vec to_vec(const DivisorClass& x) {
    oracle::Vec v{};
    v[0] = static_cast<std::int64_t>(x.two_cL());
    for (int i = 1; i <= 16; ++i) v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(x.two_cA(i));
    return v;
}

DivisorClass half_sum(std::initializer_list<int> idx) {
    DivisorClass x = DivisorClass::from_doubled(1, {});
    for (int i : idx) x.set_two_cA(i, 1);
    return x;
}

std::vector<oracle::Vec> run(const EnumerationBox<BigInt>& box, const GramForm& form) {
    std::vector<oracle::Vec> out;
    for (const DivisorClass& x : enumerate_minus2(box, form).classes) out.push_back(to_vec(x));
    return out;
}

}  // namespace

TEST(Pairing, GramConventions) {
    const GramForm f3(3);
    EXPECT_EQ(pair(L(), L(), f3), 12);
    EXPECT_EQ(pair(A(1), A(1), f3), -2);
    EXPECT_EQ(pair(L(), A(7), f3), 0);
    EXPECT_EQ(pair(A(2), A(9), f3), 0);
    const DivisorClass A1p = BigInt(2) * L() - BigInt(5) * A(1);
    EXPECT_EQ(pair(A1p, A1p, f3), -2);

    const GramForm f2(2);
    const DivisorClass F1 = half_sum({1, 2, 3, 4});
    const DivisorClass F2 = half_sum({5, 6, 7, 8});
    EXPECT_EQ(pair(F1, F2, f2), 2);
    EXPECT_EQ(pair(F1, F1, f2), 0);
    EXPECT_EQ(pair_integer(F1, A(1), f2), 1);
    EXPECT_EQ(pair(half_sum({1}), half_sum({1}), f2), BigRational(3, 2));
    EXPECT_THROW(pair_integer(half_sum({1}), half_sum({1}), f2), ConstructionError);
    EXPECT_THROW(GramForm(0), std::invalid_argument);
}

TEST(Pairing, Admissibility) {
    EXPECT_TRUE(is_admissible(half_sum({1, 2, 3, 4})));
    EXPECT_FALSE(is_admissible(DivisorClass::from_doubled(1, {})));
    DivisorClass x = L();
    for (int i = 1; i <= 4; ++i) x.set_two_cA(i, 3);
    EXPECT_FALSE(is_admissible(x));
    EXPECT_TRUE(is_admissible(x, HalfIntegerRule::none));
    // Eight halves with integral alpha are allowed; four are not.
    DivisorClass eight = L();
    for (int i = 1; i <= 8; ++i) eight.set_two_cA(i, 1);
    EXPECT_TRUE(is_admissible(eight));
    eight.set_two_cA(5, 0), eight.set_two_cA(6, 0), eight.set_two_cA(7, 0), eight.set_two_cA(8, 0);
    EXPECT_FALSE(is_admissible(eight));
    // Block rule.
    EXPECT_TRUE(is_admissible(half_sum({5, 6, 7, 8}), HalfIntegerRule::labelled_blocks));
    EXPECT_FALSE(is_admissible(half_sum({3, 4, 5, 6}), HalfIntegerRule::labelled_blocks));
    EXPECT_TRUE(is_admissible(half_sum({3, 4, 5, 6}), HalfIntegerRule::necessary));
    EXPECT_TRUE(is_admissible(half_sum({1, 2, 3, 4, 5}), HalfIntegerRule::labelled_blocks));
    EXPECT_EQ(default_rule(GramForm(4)), HalfIntegerRule::labelled_blocks);
    EXPECT_EQ(default_rule(GramForm(3)), HalfIntegerRule::necessary);
}

TEST(Pairing, EffectiveCandidates) {
    const GramForm f3(3);
    EXPECT_TRUE(is_effective_candidate(A(3), f3));
    EXPECT_TRUE(is_effective_candidate(BigInt(2) * L() - BigInt(5) * A(1), f3));
    EXPECT_FALSE(is_effective_candidate(-A(1), f3));
    EXPECT_THROW(is_effective_candidate(L(), f3), std::invalid_argument);
}

TEST(Display, Strings) {
    EXPECT_EQ(to_display_string(BigInt(2) * L() - BigInt(5) * A(1)), "2L - 5A1");
    DivisorClass a1pp = half_sum({1, 2, 3, 4});
    a1pp.set_two_cA(1, 3);
    EXPECT_EQ(to_display_string(a1pp), "1/2(L - 3A1 - A2 - A3 - A4)");
    EXPECT_EQ(to_display_string(-A(2) + A(3)), "-A2 + A3");
    EXPECT_EQ(to_display_string(DivisorClass()), "0");
    EXPECT_THROW(DivisorClass::from_doubled(1, {}).halved(), std::invalid_argument);
}

TEST(Enumerate, TwoCurvesOnRankTwoSublattice) {
    const GramForm f3(3);
    EnumerationBox<BigInt> box;
    box.support = support_with({1});
    box.two_bound_uL = 6;
    std::vector<DivisorClass> rank_two;
    for (const DivisorClass& x : enumerate_minus2(box, f3).classes) {
        bool tail_free = true;
        for (int j = 2; j <= 16; ++j) tail_free = tail_free && x.two_cA(j) == 0;
        if (tail_free) rank_two.push_back(x);
    }
    EXPECT_EQ(rank_two, (std::vector<DivisorClass>{A(1), BigInt(2) * L() - BigInt(5) * A(1)}));
}

TEST(Enumerate, HalfClassesForT4) {
    const GramForm f4(4);
    EnumerationBox<BigInt> box;
    box.support = support_with({1});
    box.two_bound_uL = 1;
    const auto out = enumerate_minus2(box, f4).classes;
    DivisorClass a1pp = half_sum({1, 2, 3, 4});
    a1pp.set_two_cA(1, 3);
    EXPECT_NE(std::find(out.begin(), out.end(), a1pp), out.end());
}

TEST(Enumerate, SupportLOnlyGivesExceptionalCurvesForLargeT) {
    for (std::int64_t t : {5, 6, 7, 10}) {
        EnumerationBox<BigInt> box;
        box.two_bound_uL = 4;
        const auto out = enumerate_minus2(box, GramForm(t)).classes;
        std::vector<DivisorClass> expected;
        for (int i = 16; i >= 1; --i) expected.push_back(A(i));
        std::sort(expected.begin(), expected.end());
        EXPECT_EQ(out, expected) << t;
    }
}

TEST(Enumerate, PreconditionsAndCap) {
    EnumerationBox<BigInt> box;
    box.support.reset();
    EXPECT_THROW(enumerate_minus2(box, GramForm(3)), std::invalid_argument);
    box.support = support_with({});
    box.two_bound_uL = 0;
    EXPECT_THROW(enumerate_minus2(box, GramForm(3)), std::invalid_argument);
    box.two_bound_uL = 2;
    box.nonpositive_against = A(5);
    EXPECT_THROW(enumerate_minus2(box, GramForm(3)), std::invalid_argument);
    box.nonpositive_against.reset();
    box.support = support_with({1, 2, 3, 4});
    box.two_bound_uL = 8;
    box.node_cap = 50;
    EXPECT_THROW(enumerate_minus2(box, GramForm(2)), BoundOverflow);
}

TEST(EnumerateOracle, AgreesWithSignedGrid) {
    struct Case {
        std::int64_t t;
        std::vector<int> support;
        std::int64_t bound;
        std::int64_t cap;
        std::optional<oracle::Vec> half_space;
    };
    oracle::Vec L1{};  // 3L - 4(A1 + .. + A4)
    L1[0] = 6;
    for (int i = 1; i <= 4; ++i) L1[static_cast<std::size_t>(i)] = 8;
    oracle::Vec Lp3{};  // 5L - 12A1
    Lp3[0] = 10;
    Lp3[1] = 24;
    const std::vector<Case> cases{
        {1, {}, 1, 12, std::nullopt},          {2, {1, 2, 3, 4}, 1, 12, std::nullopt},
        {3, {1}, 6, 12, std::nullopt},         {3, {1}, 4, 4, Lp3},
        {4, {1, 2, 3, 4}, 2, 4, L1},           {4, {1}, 2, 12, std::nullopt},
        {5, {1, 2}, 2, 8, std::nullopt},       {2, {}, 1, 8, std::nullopt},
    };
    for (const Case& c : cases) {
        EnumerationBox<BigInt> box;
        box.support = Support{1};
        for (int i : c.support) box.support.set(static_cast<std::size_t>(i));
        box.two_bound_uL = c.bound;
        box.max_tail_norm_x4 = c.cap;
        if (c.half_space) box.nonpositive_against = from_vec(*c.half_space);
        oracle::GridBox g{c.t, c.support, c.bound, c.cap, c.t % 2 == 0, c.half_space};
        EXPECT_EQ(run(box, GramForm(c.t)), oracle::grid_minus2(g)) << "t = " << c.t << ", bound " << c.bound;
    }
}

TEST(LatticeProperty, SymmetryAndBilinearity) {
    oracle::Gen gen(0xa11ce);
    for (int iter = 0; iter < 500; ++iter) {
        const GramForm f(gen.uniform(1, 60));
        const DivisorClass x = from_vec(gen.vec(9)), y = from_vec(gen.vec(9)), z = from_vec(gen.vec(9));
        const BigInt k = gen.uniform(-20, 20);
        EXPECT_EQ(pair(x, y, f), pair(y, x, f));
        EXPECT_EQ(pair(x + z, y, f), pair(x, y, f) + pair(z, y, f));
        EXPECT_EQ(pair(k * x, y, f), BigRational(k) * pair(x, y, f));
        EXPECT_EQ(pair_x4(x, y, f), oracle::pair_x4(to_vec(x), to_vec(y), f.t()));
    }
}

TEST(LatticeProperty, IntegralClassesHaveEvenSquares) {
    oracle::Gen gen(0xe7e7);
    for (int iter = 0; iter < 500; ++iter) {
        oracle::Vec v = gen.vec(12);
        for (auto& c : v) c *= 2;
        const DivisorClass x = from_vec(v);
        ASSERT_TRUE(x.is_integral());
        const BigInt sq = pair_integer(x, x, GramForm(gen.uniform(1, 40)));
        EXPECT_TRUE(is_even(sq));
    }
}

TEST(LatticeProperty, BlockSupportedHalvesPairIntegrally) {
    // Half alpha with halves exactly on one labelled block pairs integrally with every half fibre;
    // a support with three halves in one block does not.
    oracle::Gen gen(0xb10c);
    const GramForm f(2);
    auto random_on = [&](const std::array<int, 4>& halves) {
        oracle::Vec v{};
        v[0] = 2 * gen.uniform(-4, 4) + 1;
        for (int i = 1; i <= 16; ++i) v[static_cast<std::size_t>(i)] = 2 * gen.uniform(-4, 4);
        for (int i : halves) v[static_cast<std::size_t>(i)] += 1;
        return from_vec(v);
    };
    for (int iter = 0; iter < 400; ++iter) {
        const auto& block = kHalfFibreBlocks[static_cast<std::size_t>(gen.uniform(0, 3))];
        const DivisorClass x = random_on(block);
        ASSERT_TRUE(is_admissible(x, HalfIntegerRule::labelled_blocks));
        for (const auto& other : kHalfFibreBlocks) {
            DivisorClass F = DivisorClass::from_doubled(1, {});
            for (int i : other) F.set_two_cA(i, 1);
            EXPECT_EQ(denominator(pair(x, F, f)), 1) << to_display_string(x);
        }
    }
    const DivisorClass straddling = random_on({2, 3, 4, 5});
    const DivisorClass F1 = half_sum({1, 2, 3, 4});
    EXPECT_FALSE(is_admissible(straddling, HalfIntegerRule::labelled_blocks));
    EXPECT_NE(denominator(pair(straddling, F1, f)), 1);
}

TEST(LatticeProperty, EnumeratedClassesAreMinusTwo) {
    oracle::Gen gen(0xd00d);
    for (int iter = 0; iter < 20; ++iter) {
        const std::int64_t t = gen.uniform(1, 12);
        EnumerationBox<BigInt> box;
        box.support = support_with({1});
        box.two_bound_uL = gen.uniform(1, 4);
        const GramForm f(t);
        for (const DivisorClass& x : enumerate_minus2(box, f).classes) {
            EXPECT_EQ(self_x4(x, f), -8);
            EXPECT_TRUE(is_admissible(x, default_rule(f)));
            EXPECT_TRUE(is_effective_candidate(x, f));
        }
    }
}
