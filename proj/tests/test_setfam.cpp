#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ekr;
using namespace ekr::setfam;

namespace {
Family fam(int n, std::initializer_list<std::initializer_list<int>> sets, std::optional<int> k = std::nullopt)
{
    return Family(n, sets, k);
}
} // namespace

TEST(Subset, ElementsAndOrder)
{
    Subset a(9, {2, 4, 6, 8});
    EXPECT_EQ(a.size(), 4);
    EXPECT_EQ(a.element(1), 2);
    EXPECT_EQ(a.element(4), 8);
    EXPECT_THROW(a.element(5), std::out_of_range);
    EXPECT_EQ(a.str(), "{2,4,6,8}");
    EXPECT_THROW(Subset(3, {4}), std::invalid_argument);
    EXPECT_THROW(Subset(65, Mask{0}), std::invalid_argument);
    EXPECT_EQ(Subset::interval(10, 3, 5), Subset(10, {3, 4, 5}));
}

TEST(Family, SortedUniqueAndUniformTag)
{
    Family f(4, std::vector<Mask>{0b0110, 0b0011, 0b0110});
    EXPECT_EQ(f.size(), 2u);
    EXPECT_EQ(f.masks().front(), 0b0011u);
    EXPECT_EQ(f.with_uniform_tag().uniform_k(), 2);
    EXPECT_THROW(Family(4, std::vector<Mask>{0b0111}, 2), std::invalid_argument);
    EXPECT_THROW(Family(3, std::vector<Mask>{0b1000}), std::invalid_argument);
}

TEST(Family, SerializationRoundTrip)
{
    Family f = make_frankl_uniform(6, 3, 1, 1);
    std::string text = family_to_string(f);
    EXPECT_EQ(text.substr(0, text.find('\n')), "n=6 k=3");
    EXPECT_EQ(family_from_string(text), f);
    Family g = make_frankl(4, 2, 0);
    std::string tg = family_to_string(g);
    EXPECT_EQ(tg.substr(0, tg.find('\n')), "n=4 k=*");
    EXPECT_EQ(family_from_string(tg), g);
}

TEST(Constructions, FranklFamilies)
{
    EXPECT_EQ(make_frankl_uniform(5, 3, 2, 0), fam(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
    EXPECT_EQ(make_frankl_uniform(4, 2, 1, 1), fam(4, {{1, 2}, {1, 3}, {2, 3}}));
    for (int n = 3; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            for (int t = 1; t <= k; ++t) EXPECT_EQ(BigInt(make_frankl_uniform(n, k, t, 0).size()), binom(n - t, k - t));
    EXPECT_THROW(make_frankl_uniform(5, 2, 1, 2), std::invalid_argument);
    EXPECT_THROW(make_frankl(4, 2, 2), std::invalid_argument);
}

TEST(Constructions, BracketWalks)
{
    EXPECT_EQ(make_F_bracket(7, 2), Subset(7, {1, 2, 4, 6}));
    EXPECT_EQ(make_F_bracket_k(12, 3, 2), Subset(12, {1, 2, 4}));
}

TEST(Duals, DefinitionAndIntersectionSize)
{
    Subset a(9, {2, 4, 6, 8});
    EXPECT_EQ(dual_t(a, 2), Subset(9, {1, 2, 3, 5, 7, 9}));
    EXPECT_EQ((a & dual_t(a, 2)).size(), 1);
    EXPECT_EQ(dual_t(Subset::interval(4, 1, 4), 4), Subset::interval(4, 1, 3));
    EXPECT_THROW(dual_t(Subset(5, {1}), 2), std::invalid_argument);
    // |A ∩ dual_t(A)| = t-1 for every A with |A| >= t
    for (int n = 1; n <= 14; ++n)
        for (Mask m : power_set(n))
            for (int t = 1; t <= std::min(4, std::popcount(m)); ++t) {
                Subset s(n, m);
                ASSERT_EQ((s & dual_t(s, t)).size(), t - 1);
            }
}

TEST(Duals, BracketDuality)
{
    EXPECT_EQ(dual_t(make_F_bracket(12, 1), 3), make_F_bracket(12, 4));
    for (int u = 0; u <= 3; ++u) EXPECT_EQ(dual_t(make_F_bracket(12, u), 3), make_F_bracket(12, 5 - u));
    EXPECT_EQ(dual_t_k(make_F_bracket_k(12, 6, 2), 3, 6), make_F_bracket_k(12, 6, 3));
}

TEST(Duals, UniformDualOnRandomSets)
{
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 1000; ++rep) {
        const int n = 14, k = 6, t = std::uniform_int_distribution<int>(1, 4)(rng);
        auto layer_sets = layer(n, k);
        Subset a(n, layer_sets[std::uniform_int_distribution<std::size_t>(0, layer_sets.size() - 1)(rng)]);
        if (dual_t(a, t).size() < k) continue;
        ASSERT_LT((a & dual_t_k(a, t, k)).size(), t);
        ASSERT_EQ(dual_t_k(a, t, k).size(), k);
    }
    EXPECT_EQ(first_k(Subset(10, {2, 5, 7, 9}), 3), Subset(10, {2, 5, 7}));
    EXPECT_THROW(first_k(Subset(10, {2}), 3), std::invalid_argument);
}

TEST(Shifting, SingleShift)
{
    Family f = fam(4, {{2, 3}, {1, 3}, {3, 4}});
    Family s = shift(f, {1, 3});
    // {2,3} -> {1,2}; {1,3} stays; {3,4} -> {1,4}
    EXPECT_EQ(s, fam(4, {{1, 2}, {1, 3}, {1, 4}}));
    EXPECT_THROW(shift(f, {3, 2}), std::invalid_argument);
}

TEST(Shifting, SizePotentialAndCrossPreservation)
{
    for (int n = 2; n <= 5; ++n) {
        std::mt19937_64 rng(n);
        for (int rep = 0; rep < 60; ++rep) {
            const int t = 1 + rep % 2;
            auto [a, b] = oracle::random_cross_pair(n, std::nullopt, t, rng);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Family sa = shift(a, {i, j}), sb = shift(b, {i, j});
                    ASSERT_EQ(sa.size(), a.size());
                    ASSERT_TRUE(is_cross_t_intersecting(sa, sb, t));
                    if (!(sa == a)) {
                        ASSERT_LT(potential(sa), potential(a));
                    }
                }
        }
    }
}

TEST(Shifting, ExhaustiveCrossPreservationOnSmallLayers)
{
    // all pairs of families in C([4],2) and C([5],2) containing a cross-intersecting pair, t = 1
    for (int n : {4, 5}) {
        auto items = layer(n, 2);
        const std::uint32_t total = 1u << items.size();
        for (std::uint32_t s = 1; s < total; s += (n == 5 ? 7 : 1)) {
            std::vector<Mask> mem;
            for (std::uint32_t r = s; r; r &= r - 1) mem.push_back(items[std::countr_zero(r)]);
            Family a(n, mem, 2);
            Family b = maximal_cross_partner(a, 1, 2);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    ASSERT_TRUE(is_cross_t_intersecting(shift(a, {i, j}), shift(b, {i, j}), 1));
        }
    }
}

TEST(Shifting, FixpointIsShifted)
{
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 40; ++rep) {
        auto [a, b] = oracle::random_cross_pair(6, 3, 1, rng);
        auto fx = shift_pair_to_fixpoint(a, b);
        EXPECT_TRUE(is_shifted(fx.a));
        EXPECT_TRUE(is_shifted(fx.b));
        EXPECT_EQ(fx.a.size(), a.size());
        EXPECT_TRUE(is_cross_t_intersecting(fx.a, fx.b, 1));
    }
}

TEST(ShiftOrder, Relation)
{
    EXPECT_TRUE(shifts_to(Subset(6, {3, 5}), Subset(6, {1, 4})));
    EXPECT_FALSE(shifts_to(Subset(6, {1, 4}), Subset(6, {3, 5})));
    EXPECT_TRUE(shifts_to(Subset(6, {3, 5}), Subset(6, {2, 5, 6})));
    EXPECT_FALSE(shifts_to(Subset(6, {2, 5, 6}), Subset(6, {3, 5})));
}

TEST(ShiftOrder, ShiftedFamiliesAreClosedUnderIt)
{
    // equal sizes for any shifted family; all sizes for shifted inclusion-maximal families
    for (const auto& f : oracle::all_shifted(4, std::nullopt, true))
        for (const auto& a : f.subsets())
            for (Mask m : power_set(4))
                if (shifts_to(a, Subset(4, m))) {
                    ASSERT_TRUE(f.contains(m));
                }
    for (const auto& f : oracle::all_shifted(5, 2, false))
        for (const auto& a : f.subsets())
            for (Mask m : layer(5, 2))
                if (shifts_to(a, Subset(5, m))) {
                    ASSERT_TRUE(f.contains(m));
                }
}

TEST(Closure, UpwardAndMaximal)
{
    Family f = fam(3, {{1}});
    EXPECT_EQ(upward_closure(f), fam(3, {{1}, {1, 2}, {1, 3}, {1, 2, 3}}));
    EXPECT_TRUE(is_inclusion_maximal(upward_closure(f)));
    EXPECT_FALSE(is_inclusion_maximal(f));
}

TEST(Isomorphism, StarsAndFrankl)
{
    Family s1 = fam(4, {{1, 2}, {1, 3}, {1, 4}}), s3 = fam(4, {{1, 3}, {2, 3}, {3, 4}});
    auto p = are_isomorphic(s1, s3);
    ASSERT_TRUE(p);
    EXPECT_EQ(apply_permutation(s3, *p), s1);
    // equal sizes, but only the star has a common element
    EXPECT_EQ(make_frankl_uniform(6, 3, 1, 0).size(), make_frankl_uniform(6, 3, 1, 1).size());
    EXPECT_FALSE(are_isomorphic(make_frankl_uniform(6, 3, 1, 0), make_frankl_uniform(6, 3, 1, 1)));
    EXPECT_THROW(are_isomorphic(Family(13), Family(13)), std::invalid_argument);
}

TEST(Isomorphism, RandomRelabelingsAreFound)
{
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 30; ++rep) {
        auto [a, b] = oracle::random_cross_pair(7, 3, 1, rng);
        Permutation perm(7);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        Family pa = apply_permutation(a, perm), pb = apply_permutation(b, perm);
        auto found = are_isomorphic_jointly({a, b}, {pa, pb});
        ASSERT_TRUE(found);
        EXPECT_EQ(apply_permutation(pa, *found), a);
        EXPECT_EQ(apply_permutation(pb, *found), b);
    }
}

TEST(Partner, ExamplesAndGaloisConnection)
{
    Family star = make_frankl_uniform(6, 3, 2, 0);
    EXPECT_EQ(maximal_cross_partner(star, 2, 3), star);
    EXPECT_EQ(maximal_cross_partner(Family(5, std::nullopt), 1, 2), uniform_layer(5, 2));
    EXPECT_TRUE(maximal_cross_partner(uniform_layer(5, 2), 1, 2).empty());
    // D is antitone and D∘D∘D = D on all sub-families of C([5],2) (sampled) and C([4],2) (all)
    for (int n : {4, 5}) {
        auto items = layer(n, 2);
        for (std::uint32_t s = 0; s < (1u << items.size()); s += (n == 5 ? 5 : 1)) {
            std::vector<Mask> mem;
            for (std::uint32_t r = s; r; r &= r - 1) mem.push_back(items[std::countr_zero(r)]);
            Family a(n, mem, 2);
            Family d = maximal_cross_partner(a, 1, 2);
            Family dd = maximal_cross_partner(d, 1, 2);
            for (Mask m : a.masks()) ASSERT_TRUE(dd.contains(m));
            ASSERT_EQ(maximal_cross_partner(dd, 1, 2), d);
            if (!a.empty()) {
                std::vector<Mask> smaller(a.masks().begin() + 1, a.masks().end());
                Family ds = maximal_cross_partner(Family(n, smaller, 2), 1, 2);
                for (Mask m : d.masks()) ASSERT_TRUE(ds.contains(m));
            }
        }
    }
}

TEST(Stability, UniformCounterexample831)
{
    Family a = stability_uniform_family(8, 3, 1);
    EXPECT_TRUE(is_shifted(a));
    EXPECT_TRUE(is_t_intersecting(a, 1));
    // not inside any of the 8 stars
    EXPECT_FALSE(find_star_copy_containing(a, 1));
    EXPECT_THROW(stability_uniform_family(8, 1, 1), std::invalid_argument);
    EXPECT_THROW(stability_uniform_family(3, 3, 1), std::invalid_argument);
}

TEST(Stability, WeightCounterexample62)
{
    Family g = stability_weight_family(6, 2);
    EXPECT_TRUE(is_shifted(g));
    EXPECT_TRUE(is_inclusion_maximal(g));
    EXPECT_TRUE(is_t_intersecting(g, 2));
    Family f0 = make_frankl(6, 2, 0);
    std::vector<Mask> sym;
    std::set_symmetric_difference(g.masks().begin(), g.masks().end(), f0.masks().begin(), f0.masks().end(),
                                  std::back_inserter(sym));
    EXPECT_EQ(sym.size(), 3u);
    EXPECT_EQ(Family(6, sym), fam(6, {{1, 2}, {2, 3, 4, 5, 6}, {1, 3, 4, 5, 6}}));
    EXPECT_FALSE(find_star_copy_containing(g, 2));
}

TEST(ShiftPreimages, UniformFranklFamiliesHaveOnlyThemselves)
{
    // s_ij(A) = s_ij(B) = F with A,B cross t-intersecting forces A = B ≅ F (t >= 2, n >= 2k-t+2)
    for (auto [n, k, t] : std::vector<std::array<int, 3>>{{6, 3, 2}, {7, 3, 2}, {7, 4, 3}, {6, 2, 2}})
        for (int l = 0; l <= k - t && t + 2 * l <= n; ++l) {
            Family f = make_frankl_uniform(n, k, t, l);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    auto pre = shift_preimages(f, {i, j});
                    ASSERT_TRUE(pre.exists);
                    ASSERT_LE(pre.slots.size(), 12u);
                    std::vector<Family> cands;
                    for (std::uint32_t c = 0; c < (1u << pre.slots.size()); ++c) {
                        std::vector<Mask> mem = pre.fixed;
                        for (std::size_t q = 0; q < pre.slots.size(); ++q) mem.push_back(pre.slots[q][(c >> q) & 1]);
                        cands.emplace_back(n, mem, k);
                    }
                    for (const auto& a : cands)
                        for (const auto& b : cands)
                            if (is_cross_t_intersecting(a, b, t)) {
                                ASSERT_EQ(a, b);
                                ASSERT_TRUE(are_isomorphic(a, f));
                            }
                }
        }
}

TEST(ShiftPreimages, NonUniformFranklFamilies)
{
    for (auto [n, t] : std::vector<std::array<int, 2>>{{4, 2}, {5, 2}, {5, 3}})
        for (int l = 0; t + 2 * l <= n; ++l) {
            Family f = make_frankl(n, t, l);
            for (int i = 1; i < n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    auto pre = shift_preimages(f, {i, j});
                    ASSERT_TRUE(pre.exists);
                    ASSERT_LE(pre.slots.size(), 10u);
                    std::vector<Family> cands;
                    for (std::uint32_t c = 0; c < (1u << pre.slots.size()); ++c) {
                        std::vector<Mask> mem = pre.fixed;
                        for (std::size_t q = 0; q < pre.slots.size(); ++q) mem.push_back(pre.slots[q][(c >> q) & 1]);
                        cands.emplace_back(n, mem);
                    }
                    for (const auto& a : cands)
                        for (const auto& b : cands)
                            if (is_cross_t_intersecting(a, b, t)) {
                                ASSERT_EQ(a, b);
                                ASSERT_TRUE(are_isomorphic(a, f));
                            }
                }
        }
}

TEST(Uniqueness, FranklFamiliesAreRigidAgainstEqualSizePartners)
{
    // B cross t-intersecting with F = F_l^t(n,k) and |B| = |F| forces B = F
    for (auto [n, k, t] : std::vector<std::array<int, 3>>{{6, 3, 2}, {7, 3, 2}, {7, 4, 3}, {5, 2, 2}})
        for (int l = 0; l <= k - t && t + 2 * l <= n; ++l) {
            Family f = make_frankl_uniform(n, k, t, l);
            Family d = maximal_cross_partner(f, t, k);
            EXPECT_EQ(d, f) << "n=" << n << " k=" << k << " t=" << t << " l=" << l;
        }
}

TEST(Facts, MissingBracketForcesLargerLambda)
{
    for (const auto& f : oracle::all_shifted(4, std::nullopt, true))
        for (int u = 0; u <= 4; ++u)
            if (!f.contains(make_F_bracket(4, u))) {
                ASSERT_GE(walks::lambda(f), u + 1);
            }
    for (const auto& f : oracle::all_shifted(5, 3, false))
        for (int u = 0; u <= 3; ++u)
            if (make_F_bracket(5, u).size() >= 3 && !f.contains(make_F_bracket_k(5, 3, u))) {
                ASSERT_GE(walks::lambda(f), u + 1);
            }
}
