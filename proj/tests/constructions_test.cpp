#include <gtest/gtest.h>

#include "mis/bounds.hpp"
#include "mis/constructions.hpp"
#include "mis/engine.hpp"
#include "mis/errors.hpp"
#include "mis/graph6.hpp"
#include "mis/structure.hpp"

namespace mis {
namespace {

TEST(Families, Basic)
{
    EXPECT_EQ(count_mis(cycle(5)), 5);
    EXPECT_EQ(count_mis(complete(4)), 4);
    EXPECT_EQ(count_mis(matching(3)), 8);
    EXPECT_EQ(matching(0), Graph());
    EXPECT_EQ(complete(0), Graph());
    EXPECT_THROW(cycle(2), DomainError);
}

TEST(MoonMoser, Examples)
{
    EXPECT_EQ(moon_moser(6), copies(complete(3), 2));
    EXPECT_EQ(count_mis(moon_moser(6)), 9);
    EXPECT_EQ(moon_moser(7), disjoint_union(complete(4), complete(3)));
    EXPECT_EQ(count_mis(moon_moser(7)), 12);
    EXPECT_EQ(moon_moser(5), disjoint_union(complete(3), complete(2)));
    EXPECT_EQ(count_mis(moon_moser(5)), 6);
    EXPECT_THROW(moon_moser(2), DomainError);
}

TEST(MoonMoser, AttainsMaximum)
{
    for (int n = 3; n <= 24; ++n) {
        EXPECT_EQ(count_mis(moon_moser(n)), mis_max(n)) << n;
        EXPECT_EQ(moon_moser(n).order(), n);
        if (n % 3 == 1) EXPECT_EQ(count_mis(moon_moser(n, true)), mis_max(n)) << n;
    }
}

TEST(HujterTuza, Examples)
{
    EXPECT_EQ(hujter_tuza(8), matching(4));
    EXPECT_EQ(count_mis(hujter_tuza(8)), 16);
    EXPECT_EQ(count_mis(hujter_tuza(7)), 10);
    EXPECT_EQ(hujter_tuza(5), cycle(5));
    EXPECT_THROW(hujter_tuza(3), DomainError);
}

TEST(HujterTuza, AttainsTriangleFreeMaximum)
{
    for (int n = 4; n <= 24; ++n) {
        const Graph g = hujter_tuza(n);
        EXPECT_EQ(count_mis(g), mis_triangle_free_max(n)) << n;
        EXPECT_TRUE(is_triangle_free(g));
        EXPECT_EQ(induced_matching_number(g), n % 2 == 0 ? n / 2 : (n - 3) / 2) << n; // C5 contributes 1
    }
}

TEST(GExtremal, Examples)
{
    const Graph a = g_extremal(2, 10);
    EXPECT_EQ(a, disjoint_union(copies(complete(3), 2), matching(2)));
    EXPECT_EQ(count_mis(a), 36);

    const Graph b = g_extremal(1, 6);
    EXPECT_EQ(b, matching(3));
    EXPECT_EQ(count_mis(b), 8);

    const Graph c = g_extremal(0, 9);
    EXPECT_EQ(c, disjoint_union(cycle(5), matching(2)));
    EXPECT_EQ(count_mis(c), 20);

    EXPECT_THROW(g_extremal(3, 8), DomainError);
    EXPECT_THROW(g_extremal(0, 3), DomainError);
    EXPECT_THROW(g_extremal(-1, 3), DomainError);
}

TEST(GExtremal, WitnessesAttainBound)
{
    for (int n = 0; n <= 24; ++n)
        for (int t = 0; 3 * t <= n; ++t) {
            const int m = n - 3 * t;
            if (t == 0 && m % 2 == 1 && n < 5) continue;
            const Graph g = g_extremal(t, n);
            EXPECT_EQ(g.order(), n);
            EXPECT_EQ(count_mis(g), g_bound(t, n)) << t << " " << n;
            const int tm = triangle_matching_number(g);
            EXPECT_LE(tm, t);
            EXPECT_EQ(tm, m % 2 == 0 ? t : std::max(t - 1, 0));
        }
}

TEST(GExtremal, ComponentOrderIsDeterministic)
{
    // special component first, then triangles, then edges
    EXPECT_EQ(encode_graph6(g_extremal(0, 7)), encode_graph6(disjoint_union(cycle(5), complete(2))));
    EXPECT_EQ(moon_moser(10), disjoint_union(complete(4), copies(complete(3), 2)));
    EXPECT_EQ(encode_graph6(g_extremal(2, 9)), encode_graph6(g_extremal(2, 9)));
}

TEST(Families, ByName)
{
    EXPECT_EQ(parse_family("g_extremal"), Family::g_extremal);
    EXPECT_FALSE(parse_family("petersen"));
    EXPECT_EQ(construct(Family::g_extremal, 10, 2), g_extremal(2, 10));
    EXPECT_EQ(construct(Family::matching, 3), matching(3));
    for (Family f : {Family::moon_moser, Family::hujter_tuza, Family::g_extremal, Family::cycle, Family::complete,
                     Family::matching})
        EXPECT_EQ(parse_family(to_string(f)), f);
}

} // namespace
} // namespace mis
