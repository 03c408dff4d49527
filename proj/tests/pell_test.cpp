#include <gtest/gtest.h>

#include <map>

#include "nikulin/errors.hpp"
#include "nikulin/pell.hpp"
#include "oracles.hpp"

using namespace nikulin;

namespace {

// Fundamental solutions for 2t <= 60 as printed in the table of the source; 0 marks squares.
const std::map<int, std::pair<long, long>> kPrintedTable{
    {2, {3, 2}},     {4, {0, 0}},      {6, {5, 2}},        {8, {3, 1}},     {10, {19, 6}},
    {12, {7, 2}},    {14, {15, 4}},    {16, {0, 0}},       {18, {17, 4}},   {20, {9, 2}},
    {22, {197, 42}}, {24, {5, 1}},     {26, {51, 10}},     {28, {127, 24}}, {30, {11, 2}},
    {32, {17, 3}},   {34, {35, 6}},    {36, {0, 0}},       {38, {37, 6}},   {40, {19, 3}},
    {42, {13, 2}},   {44, {199, 30}},  {46, {24335, 3588}}, {48, {7, 1}},   {50, {99, 14}},
    {52, {649, 90}}, {54, {485, 66}},  {56, {15, 2}},      {58, {19603, 2574}}, {60, {31, 4}}};

}  // namespace

TEST(Pell, PrintedTableValues) {
    for (const auto& [two_t, sol] : kPrintedTable) {
        const auto f = fundamental_solution(two_t);
        if (sol.first == 0) {
            EXPECT_FALSE(f) << two_t;
            continue;
        }
        ASSERT_TRUE(f) << two_t;
        EXPECT_EQ(f->alpha, sol.first) << two_t;
        EXPECT_EQ(f->beta, sol.second) << two_t;
    }
}

TEST(Pell, MatchesScanOracleForSmallRadicands) {
    for (std::int64_t D = 2; D <= 300; ++D) {
        const auto f = fundamental_solution(D);
        const auto scan = oracle::minimal_pell_by_scan(D, 2'000'000);
        if (is_square(BigInt(D))) {
            EXPECT_FALSE(f);
            continue;
        }
        ASSERT_TRUE(f) << D;
        if (scan) {
            EXPECT_EQ(f->alpha, scan->alpha) << D;
            EXPECT_EQ(f->beta, scan->beta) << D;
        } else {
            EXPECT_TRUE(oracle::certify_fundamental(D, f->alpha, f->beta)) << D;
        }
    }
}

TEST(Pell, CertificateRejectsNonFundamental) {
    const PellSolution fund{5, 2};
    EXPECT_TRUE(oracle::certify_fundamental(6, fund.alpha, fund.beta));
    for (std::uint64_t n = 2; n <= 6; ++n) {
        const PellSolution s = nth_solution(6, fund, n);
        EXPECT_FALSE(oracle::certify_fundamental(6, s.alpha, s.beta)) << n;
    }
    EXPECT_FALSE(oracle::certify_fundamental(6, 5, 3));
}

TEST(Pell, LargeFundamentalIsCertified) {
    const auto f = fundamental_solution(1621);
    ASSERT_TRUE(f);
    EXPECT_GT(f->beta, BigInt("1000000000000000000000000000000"));
    EXPECT_EQ(f->norm(1621), 1);
    EXPECT_TRUE(oracle::certify_fundamental(1621, f->alpha, f->beta));
}

TEST(Pell, ContinuedFractionOfSqrt) {
    const CFExpansion cf = cf_sqrt(46);
    EXPECT_EQ(cf.a0, 6);
    const std::vector<BigInt> period{1, 3, 1, 1, 2, 6, 2, 1, 1, 3, 1, 12};
    EXPECT_EQ(cf.period, period);
    EXPECT_THROW(cf_sqrt(49), std::invalid_argument);
    EXPECT_THROW(cf_sqrt(1), std::invalid_argument);
}

TEST(Pell, NegativeEquation) {
    const std::map<int, std::pair<long, long>> expected{{2, {1, 1}}, {10, {3, 1}}, {26, {5, 1}}, {50, {7, 1}},
                                                        {58, {99, 13}}};
    for (int d = 2; d <= 60; d += 2) {
        const auto n = negative_fundamental_solution(d);
        const auto it = expected.find(d);
        if (it == expected.end()) {
            EXPECT_FALSE(n) << d;
            continue;
        }
        ASSERT_TRUE(n) << d;
        EXPECT_EQ(n->alpha, it->second.first);
        EXPECT_EQ(n->beta, it->second.second);
    }
}

TEST(Pell, NegativeEquationAgreesWithScan) {
    for (std::int64_t D = 2; D <= 400; ++D) {
        if (is_square(BigInt(D))) continue;
        const auto n = negative_fundamental_solution(D);
        const auto f = fundamental_solution(D);
        // Any negative solution is smaller than the positive fundamental one.
        const std::int64_t limit = static_cast<std::int64_t>(std::min<BigInt>(f->beta, 10'000'000));
        const auto scan = oracle::minimal_negative_pell_by_scan(D, limit);
        if (scan) {
            ASSERT_TRUE(n) << D;
            EXPECT_EQ(n->alpha, scan->alpha) << D;
            EXPECT_EQ(n->beta, scan->beta) << D;
        } else if (n) {
            EXPECT_GT(n->beta, limit) << D;
            EXPECT_LT(limit, f->beta) << D;
        }
    }
}

TEST(Pell, SolvableNegativeListUpTo109) {
    std::vector<std::int64_t> solvable;
    for (std::int64_t t = 1; t <= 109; ++t)
        if (classify_t(t).neg_pell) solvable.push_back(t);
    const std::vector<std::int64_t> printed{1, 5, 13, 25, 29, 37, 41, 53, 61, 65, 85, 101, 109};
    EXPECT_EQ(solvable, printed);
}

TEST(Pell, NthSolutionRecurrence) {
    const PellSolution fund{5, 2};
    EXPECT_EQ(nth_solution(6, fund, 0), (PellSolution{1, 0}));
    EXPECT_EQ(nth_solution(6, fund, 1), fund);
    EXPECT_EQ(nth_solution(6, fund, 2), (PellSolution{49, 20}));
    EXPECT_THROW(nth_solution(6, PellSolution{5, 3}, 2), std::invalid_argument);
}

TEST(PellProperty, PowersStaySolutionsAndGrow) {
    oracle::Gen gen(0x5eed01);
    for (int iter = 0; iter < 200; ++iter) {
        const std::int64_t D = gen.uniform(2, 5000);
        if (is_square(BigInt(D))) continue;
        const PellSolution fund = *fundamental_solution(D);
        const auto n = static_cast<std::uint64_t>(gen.uniform(1, 12));
        const PellSolution a = nth_solution(D, fund, n);
        const PellSolution b = nth_solution(D, fund, n + 1);
        EXPECT_EQ(a.norm(D), 1);
        EXPECT_EQ(b.norm(D), 1);
        EXPECT_GT(b.alpha, a.alpha);
        // (x_{n+1}, y_{n+1}) = fund * (x_n, y_n).
        EXPECT_EQ(b.alpha, fund.alpha * a.alpha + D * fund.beta * a.beta);
    }
}

TEST(PellProperty, NegativeSquaresToFundamental) {
    for (std::int64_t D = 2; D <= 3000; ++D) {
        if (is_square(BigInt(D))) continue;
        const auto n = negative_fundamental_solution(D);
        if (!n) continue;
        const PellSolution sq{n->alpha * n->alpha + D * n->beta * n->beta, 2 * n->alpha * n->beta};
        EXPECT_EQ(sq, *fundamental_solution(D)) << D;
        EXPECT_EQ(n->norm(D), -1);
    }
}

TEST(Classify, Fields) {
    const TClassification c3 = classify_t(3);
    EXPECT_FALSE(c3.two_t_is_square);
    EXPECT_TRUE(*c3.beta0_even);
    EXPECT_FALSE(c3.neg_pell);
    EXPECT_EQ(c3.t_mod_12, 3);
    EXPECT_EQ(c3.nu, 1);
    EXPECT_EQ(c3.predicted_structures, 2u);

    const TClassification c30 = classify_t(30);
    EXPECT_EQ(c30.nu, 3);
    EXPECT_EQ(c30.predicted_structures, 8u);

    const TClassification c8 = classify_t(8);
    EXPECT_TRUE(c8.two_t_is_square);
    EXPECT_FALSE(c8.fundamental);
    EXPECT_FALSE(c8.beta0_even);
    EXPECT_THROW(classify_t(0), std::invalid_argument);
}

TEST(Families, TriangularT) {
    for (std::int64_t k = 1; k <= 200; ++k) {
        const AppendixFamilyMember m = appendix_family(k);
        EXPECT_EQ(m.t, k * (k + 1) / 2);
        EXPECT_EQ(m.solution, (PellSolution{2 * k + 1, 2}));
        EXPECT_EQ(m.d0, 1);
    }
}

TEST(Families, EightSSquared) {
    for (std::uint64_t n = 1; n <= 8; ++n) {
        const Family8s2 f = family_8s2(n);
        EXPECT_EQ(f.base.norm(8), 1);
        EXPECT_EQ(f.odd_fundamental.beta, 1);
        EXPECT_EQ(f.even_s.has_value(), n % 2 == 0);
    }
    EXPECT_EQ(family_8s2(1).odd_s, 1);
    EXPECT_EQ(family_8s2(2).base, (PellSolution{17, 6}));
    EXPECT_EQ(*family_8s2(2).even_s, 3);
}

TEST(Scans, EightSList) {
    const EightSScanReport r = scan_8s_family(100);
    const std::vector<std::int64_t> printed{7,  9,  14, 23, 30, 31, 33, 34, 46, 47, 56, 57, 62,
                                            63, 69, 71, 73, 75, 77, 79, 81, 82, 89, 90, 94};
    EXPECT_EQ(r.beta0_even, printed);
    EXPECT_EQ(r.skipped_square, (std::vector<std::int64_t>{2, 8, 18, 32, 50, 72, 98}));
}

TEST(Scans, ParitySmallRange) {
    const ParityScanReport r = scan_parity_lemmas(600);
    EXPECT_TRUE(r.clean());
    EXPECT_GT(r.tested, 500u);
    const ParityScanReport one = scan_parity_lemmas(4, 4);
    EXPECT_EQ(one.tested, 1u);
    EXPECT_EQ(one.beta0_even_count, 0u);
}

TEST(Scans, DistinctPrimes) {
    EXPECT_EQ(distinct_prime_factors(1), (std::vector<std::int64_t>{}));
    EXPECT_EQ(distinct_prime_factors(360), (std::vector<std::int64_t>{2, 3, 5}));
    EXPECT_EQ(distinct_prime_factors(97), (std::vector<std::int64_t>{97}));
}
