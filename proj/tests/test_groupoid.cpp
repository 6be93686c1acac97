#include "wgalois/groupoid.hpp"

#include <gtest/gtest.h>

using namespace wgalois;

TEST(Groupoid, TrivialValidates) {
    auto g = trivial_groupoid();
    EXPECT_EQ(g.num_objects(), 1u);
    EXPECT_EQ(g.num_morphisms(), 1u);
    EXPECT_TRUE(g.validate());
}

TEST(Groupoid, PairGroupoidCounts) {
    for (size_t n = 1; n <= 4; ++n) {
        auto g = pair_groupoid(n);
        EXPECT_TRUE(g.validate()) << g.validate().describe();
        EXPECT_EQ(g.num_morphisms(), n * n);
        size_t ids = 0;
        for (size_t s = 0; s < g.num_morphisms(); ++s)
            if (g.is_identity(s))
                ++ids;
        EXPECT_EQ(ids, n);
    }
    EXPECT_THROW(pair_groupoid(0), std::invalid_argument);
}

TEST(Groupoid, PairCompositionConvention) {
    auto g = pair_groupoid(3);
    // (i,j): j -> i, so (0,1) o (1,2) = (0,2) and (1,2) o (0,1) is undefined
    size_t a = 0 * 3 + 1, b = 1 * 3 + 2;
    EXPECT_EQ(g.src(a), 1u);
    EXPECT_EQ(g.tgt(a), 0u);
    EXPECT_EQ(g.compose(a, b), std::optional<size_t>(0 * 3 + 2));
    EXPECT_FALSE(g.compose(b, a));
}

TEST(Groupoid, Groups) {
    auto c2 = cyclic_group(2);
    EXPECT_EQ(c2.num_objects(), 1u);
    EXPECT_EQ(c2.num_morphisms(), 2u);
    EXPECT_TRUE(c2.validate());
    auto c3 = cyclic_group(3);
    EXPECT_EQ(c3.num_morphisms(), 3u);
    EXPECT_EQ(c3.inverse(1), 2u);
    EXPECT_THROW(from_group({{0, 1}, {1, 1}}), std::invalid_argument);
    EXPECT_THROW(from_group({{1, 0}, {0, 0}}), std::invalid_argument);
    // a quasigroup that is not associative
    EXPECT_THROW(from_group({{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), std::invalid_argument);
}

TEST(Groupoid, DisjointUnion) {
    auto u = disjoint_union(cyclic_group(2), pair_groupoid(2));
    EXPECT_EQ(u.num_objects(), 3u);
    EXPECT_EQ(u.num_morphisms(), 6u);
    EXPECT_TRUE(u.validate());
    EXPECT_FALSE(u.compose(1, 2));
}

TEST(Groupoid, BrokenInverseReported) {
    auto g = pair_groupoid(2);
    auto inv = g.inverse_table();
    std::swap(inv[1], inv[2]);  // (0,1) and (1,0) now claim to be self-inverse
    Groupoid bad(g.num_objects(), g.morphisms(), g.compose_table(), inv, g.identities());
    auto v = bad.validate();
    ASSERT_FALSE(v);
    EXPECT_EQ(v.law(), "inverse law");
    EXPECT_NE(v.witness().find("(0,1)"), std::string::npos);
}

TEST(Groupoid, InverseIsInvolution) {
    for (const auto& g : {pair_groupoid(3), cyclic_group(3), disjoint_union(cyclic_group(2), pair_groupoid(2))})
        for (size_t s = 0; s < g.num_morphisms(); ++s)
            EXPECT_EQ(g.inverse(g.inverse(s)), s);
}
