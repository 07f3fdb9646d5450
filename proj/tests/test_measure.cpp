#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ekr;
using namespace ekr::measure;

namespace {
// sum of p^|F| q^(n-|F|) member by member, no size grouping
Rational mu_direct(const Family& f, const Rational& p)
{
    Rational s = 0;
    for (Mask m : f.masks()) {
        Rational w = 1;
        for (int j = 0; j < f.ground(); ++j) w *= ((m >> j) & 1) ? p : 1 - p;
        s += w;
    }
    return s;
}
} // namespace

TEST(Measure, Normalization)
{
    for (int n = 1; n <= 16; ++n)
        for (Rational p : {rat(1, 3), rat(2, 7)}) EXPECT_EQ(mu(setfam::all_subsets(n), WeightParams(n, p)), 1);
    EXPECT_EQ(mu(Family(5), WeightParams(5, rat(1, 4))), 0);
    EXPECT_THROW(WeightParams(3, Rational(1)), std::invalid_argument);
    EXPECT_THROW(mu(Family(4), WeightParams(5, rat(1, 4))), std::invalid_argument);
}

TEST(Measure, StarAndFirstHitExamples)
{
    const Rational p = rat(1, 5);
    const WeightParams w(8, p);
    EXPECT_EQ(mu(setfam::make_frankl(8, 2, 0), w), p * p);
    // walks through (1,t) avoiding (0,t), t = 2
    std::vector<Mask> sel;
    for (Mask m : setfam::power_set(8)) {
        Subset f(8, m);
        bool at_0t = f.count_upto(2) == 2;
        bool at_1t = f.count_upto(3) == 2;
        if (at_1t && !at_0t) sel.push_back(m);
    }
    EXPECT_EQ(mu(Family(8, sel), w), mu_hit_1t_not_0t_closed(2, p));
    EXPECT_EQ(mu_hit_1t_not_0t_closed(2, p), 2 * p * p * (1 - p));
}

TEST(Measure, FranklClosedFormMatchesEnumeration)
{
    for (int n = 1; n <= 10; ++n)
        for (int t = 1; t <= n; ++t)
            for (int i = 0; t + 2 * i <= n; ++i)
                for (Rational p : {rat(1, 4), rat(1, 3), rat(3, 5)}) {
                    Family f = setfam::make_frankl(n, t, i);
                    ASSERT_EQ(mu_frankl_closed(n, t, i, p), mu_direct(f, p));
                    ASSERT_EQ(mu(f, WeightParams(n, p)), mu_direct(f, p));
                }
    const Rational p = rat(1, 4), q = 1 - p;
    EXPECT_EQ(mu_frankl_closed(7, 2, 1, p), 4 * ipow(p, 3) * q + ipow(p, 4));
    EXPECT_EQ(mu_frankl_closed(9, 3, 0, rat(1, 4)), ipow(rat(1, 4), 3));
    EXPECT_THROW(mu_frankl_closed(4, 2, 2, p), std::invalid_argument);
}

TEST(Measure, EqualityCaseAtOneOverTPlusOne)
{
    EXPECT_EQ(mu(setfam::make_frankl(9, 3, 0), WeightParams(9, rat(1, 4))),
              mu(setfam::make_frankl(9, 3, 1), WeightParams(9, rat(1, 4))));
    EXPECT_GT(mu_frankl_closed(9, 3, 1, rat(1, 3)), mu_frankl_closed(9, 3, 0, rat(1, 3)));
    EXPECT_LT(mu_frankl_closed(9, 3, 1, rat(1, 5)), mu_frankl_closed(9, 3, 0, rat(1, 5)));
}

TEST(Measure, StabilityFamilyWeight)
{
    const Rational p = rat(1, 5);
    Family g = setfam::stability_weight_family(6, 2);
    EXPECT_EQ(mu(g, WeightParams(6, p)), mu_stability_family_closed(6, 2, p));
}

TEST(Measure, HitProbability)
{
    for (int t = 1; t <= 4; ++t) EXPECT_EQ(hit_probability_exact(t, t, rat(1, 4)), ipow(rat(1, 4), t));
    EXPECT_EQ(hit_probability_exact(0, 2, rat(1, 4)), 0);
    auto h10 = hit_probability_exact(10, 2, rat(1, 4)), h9 = hit_probability_exact(9, 2, rat(1, 4));
    EXPECT_LT(h10, rat(1, 9));
    EXPECT_GT(h10, h9);
    EXPECT_EQ(hit_probability_limit(2, rat(1, 4)), rat(1, 9));
    EXPECT_EQ(hit_probability_limit(2, rat(1, 2)), 1);
    for (auto [t, p] : std::vector<std::pair<int, Rational>>{{2, rat(1, 4)}, {3, rat(1, 5)}}) {
        Rational last = 0;
        for (int n = t; n <= t + 20; ++n) {
            auto h = hit_probability_exact(n, t, p);
            ASSERT_GE(h, last);
            ASSERT_LE(h, hit_probability_limit(t, p));
            last = h;
        }
    }
    // against enumeration
    for (int n = 1; n <= 12; ++n)
        for (int t = 1; t <= 3; ++t) {
            std::vector<Mask> hit;
            for (Mask m : setfam::power_set(n))
                if (walks::hits_line(Subset(n, m), t)) hit.push_back(m);
            ASSERT_EQ(hit_probability_exact(n, t, rat(2, 7)), mu_direct(Family(n, hit), rat(2, 7)));
        }
}

TEST(Measure, ShiftPreservesWeight)
{
    std::mt19937_64 rng(17);
    const Rational p = rat(1, 3);
    for (int n = 2; n <= 6; ++n) {
        const WeightParams w(n, p);
        auto all = setfam::power_set(n);
        for (int rep = 0; rep < 200; ++rep) {
            std::vector<Mask> mem;
            for (Mask m : all)
                if (rng() & 1) mem.push_back(m);
            Family f(n, mem);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) ASSERT_EQ(mu(setfam::shift(f, {i, j}), w), mu(f, w));
        }
    }
    // every family on [3]
    for (std::uint32_t s = 0; s < 256; ++s) {
        std::vector<Mask> mem;
        for (int b = 0; b < 8; ++b)
            if ((s >> b) & 1) mem.push_back(Mask(b));
        Family f(3, mem);
        for (int i = 1; i < 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                ASSERT_EQ(mu(setfam::shift(f, {i, j}), WeightParams(3, p)), mu(f, WeightParams(3, p)));
    }
}

TEST(Measure, HittingFamiliesAreBoundedByAlphaPowers)
{
    for (int n = 1; n <= 5; ++n)
        for (int t = 1; t <= 3; ++t)
            for (Rational p : {rat(1, 3), rat(1, 4), rat(2, 5)}) {
                std::vector<Mask> hit, twice;
                for (Mask m : setfam::power_set(n)) {
                    Subset f(n, m);
                    if (walks::hits_line(f, t)) hit.push_back(m);
                    if (walks::classify(f, t).tag == walks::Tag::DoubleHat) twice.push_back(m);
                }
                const WeightParams w(n, p);
                const Rational alpha = w.alpha();
                ASSERT_LE(mu(Family(n, hit), w), ipow(alpha, t));
                ASSERT_LE(mu(Family(n, twice), w), ipow(alpha, t + 1));
            }
}

TEST(Measure, ReflectionPreservesWeight)
{
    const Rational p = rat(1, 4);
    const WeightParams w(10, p);
    for (Mask m : setfam::power_set(10)) {
        Subset f(10, m);
        if (walks::classify(f, 2).tag != walks::Tag::DoubleHat) continue;
        ASSERT_EQ(mu(walks::reflect_after_first_touch(f, 2), w), mu(f, w));
    }
}

TEST(Measure, LiftPreservesWeight)
{
    std::mt19937_64 rng(99);
    const Rational p = rat(2, 9);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Mask> mem;
        for (Mask m : setfam::power_set(5))
            if (rng() % 3 == 0) mem.push_back(m);
        Family f(5, mem);
        Family l = lift(f);
        EXPECT_EQ(l.ground(), 6);
        EXPECT_EQ(l.size(), 2 * f.size());
        EXPECT_EQ(mu(l, WeightParams(6, p)), mu(f, WeightParams(5, p)));
    }
}

TEST(Measure, ProductMonotoneCheck)
{
    auto a = product_monotone_check(3, 1, rat(1, 3));
    EXPECT_TRUE(a.monotone);
    EXPECT_TRUE(a.lifting_preserves_weight);
    EXPECT_EQ(a.f_n, rat(1, 9));
    EXPECT_EQ(a.f_n1, rat(1, 9));
    search::SearchBudget shifted;
    shifted.restrict_shifted = true;
    auto b = product_monotone_check(4, 2, rat(1, 4), shifted);
    EXPECT_TRUE(b.monotone);
    EXPECT_TRUE(b.lifting_preserves_weight);
    EXPECT_EQ(b.f_n, rat(1, 256));
}
