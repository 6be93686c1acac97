#include "catalogue.hpp"
#include "wgalois/graded.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wgalois;
using namespace wgalois::testing;

namespace {
const Rationals Q;
}

TEST(Graded, ExamplesVerify) {
    EXPECT_TRUE(matrix_grading(Q, 2).verify());
    EXPECT_TRUE(matrix_grading(Q, 3).verify());
    EXPECT_TRUE(dual_numbers_grading(Q).verify());
    for (const auto& [name, g] : standard_groupoids())
        EXPECT_TRUE(self_grading(g, Q).verify()) << name;
}

TEST(Graded, WrongDegreeRejected) {
    // E01 and E10 swapped: E01 E11 = E01 lands in the wrong degree
    auto bad = monomial_grading(matrix_algebra(Q, 2), pair_groupoid(2), {0, 2, 1, 3});
    auto v = bad.verify();
    ASSERT_FALSE(v);
    auto missing = GradedAlgebra<Rationals>(truncated_polynomial(Q, 2), cyclic_group(2),
                                            {Subspace<Rationals>::span(Q, 2, {unit_vector(Q, 2, 0)}),
                                             Subspace<Rationals>::zero(Q, 2)});
    EXPECT_EQ(missing.verify().law(), "direct sum");
    EXPECT_THROW(grading_to_comodule(bad), PreconditionError);
}

TEST(Graded, MatrixGradingToComodule) {
    auto ca = grading_to_comodule(matrix_grading(Q, 2));
    EXPECT_TRUE(ca.verify());
    for (const auto& [law, v] : ca.unit_conditions())
        EXPECT_TRUE(v) << law;
    EXPECT_TRUE(ca.verify_unit_identities());
}

TEST(Graded, RoundTrip) {
    for (auto ga : {dual_numbers_grading(Q), matrix_grading(Q, 2)}) {
        auto back = comodule_to_grading(grading_to_comodule(ga), ga.groupoid());
        for (size_t s = 0; s < ga.groupoid().num_morphisms(); ++s)
            EXPECT_EQ(back.component(s), ga.component(s));
    }
}

TEST(Graded, IdentityConcentratedGrading) {
    // k x k over P_2 with both factors in identity degrees
    auto a = diagonal_algebra(Q, 2);
    auto g = pair_groupoid(2);
    auto ga = monomial_grading(a, g, {g.identity(0), g.identity(1)});
    ASSERT_TRUE(ga.verify()) << ga.verify().describe();
    auto ca = grading_to_comodule(ga);
    EXPECT_EQ(coinvariants(ca).dim(), 2u);
    // rho(a) = sum_x a1_x (x) u_x
    auto h = groupoid_algebra(g, Q);
    for (size_t i = 0; i < 2; ++i) {
        Vec<Rationals> expect = zero_vector(Q, 8);
        expect[i * 4 + g.identity(i)] = 1;
        EXPECT_EQ(ca.coact_basis(i), expect);
    }
}

TEST(Graded, CoinvariantsAreIdentityComponents) {
    for (auto ga : {matrix_grading(Q, 2), matrix_grading(Q, 3), dual_numbers_grading(Q)}) {
        Subspace<Rationals> ids(Q, ga.algebra().dim());
        for (size_t x : ga.groupoid().identities())
            ids = ids.sum(ga.component(x));
        EXPECT_EQ(coinvariants(grading_to_comodule(ga)), ids);
    }
}

TEST(Graded, StronglyGraded) {
    EXPECT_TRUE(is_strongly_graded(matrix_grading(Q, 2)).holds);
    EXPECT_TRUE(is_strongly_graded(matrix_grading(Q, 3)).holds);
    auto dn = is_strongly_graded(dual_numbers_grading(Q));
    EXPECT_FALSE(dn.holds);
    EXPECT_EQ(dn.witness, "(g1,g1): dim span(A_g1A_g1) = 0 < 1");
    for (const auto& [name, g] : standard_groupoids())
        EXPECT_TRUE(is_strongly_graded(self_grading(g, Q)).holds) << name;
}

TEST(Graded, PropositionIdentities) {
    // a in A_s: 1_{t(s)} a = a = a 1_{s(s)}
    for (auto ga : {matrix_grading(Q, 3), self_grading(disjoint_union(cyclic_group(2), pair_groupoid(2)), Q)}) {
        const auto& a = ga.algebra();
        const auto& g = ga.groupoid();
        auto p = ga.projections();
        for (size_t s = 0; s < g.num_morphisms(); ++s)
            for (const auto& v : ga.component(s).basis()) {
                EXPECT_EQ(a.mul(p[g.identity(g.tgt(s))].apply(a.unit()), v), v);
                EXPECT_EQ(a.mul(v, p[g.identity(g.src(s))].apply(a.unit())), v);
            }
    }
}

TEST(Graded, ModuleRegular) {
    auto ga = matrix_grading(Q, 2);
    auto m = GradedModule<Rationals>::regular(ga);
    EXPECT_TRUE(m.verify());
    auto hm = m.to_hopf_module();
    EXPECT_TRUE(hm.verify());
    EXPECT_EQ(hm.coaction(), grading_to_comodule(ga).coaction());
}

TEST(Graded, AdjunctionUnit) {
    for (auto ga : {matrix_grading(Q, 2), dual_numbers_grading(Q)}) {
        auto t = coinvariants(grading_to_comodule(ga));
        EXPECT_TRUE(graded_adjunction_unit(ga, subring_regular(ga.algebra(), t)).bijective);
        EXPECT_TRUE(graded_adjunction_unit(ga, restricted_algebra(ga.algebra(), t)).bijective);
    }
}

TEST(Theorem35, Harness) {
    auto m2 = theorem35_harness(matrix_grading(Q, 2));
    EXPECT_TRUE(m2.strongly_graded && m2.can_bijective && m2.can_surjective && m2.sampled_equivalence);
    auto m3 = theorem35_harness(matrix_grading(Q, 3));
    EXPECT_TRUE(m3.strongly_graded && m3.can_bijective && m3.can_surjective);
    auto dn = theorem35_harness(dual_numbers_grading(Q));
    EXPECT_FALSE(dn.strongly_graded || dn.can_bijective || dn.can_surjective);
    EXPECT_FALSE(dn.sampled_equivalence);
    for (const auto& [name, g] : standard_groupoids()) {
        auto r = theorem35_harness(self_grading(g, Q));
        EXPECT_TRUE(r.strongly_graded && r.can_bijective && r.can_surjective) << name;
    }
    for (const auto& c : m2.checks)
        if (c.name == "module category equivalence")
            EXPECT_EQ(c.outcome, Outcome::sampled);
}

// k^n over P_n concentrated in identity degrees, n random, over F_5: the three
// verdicts agree and fail exactly when off-diagonal components vanish.
TEST(Property, HarnessAgreementOnRandomGradings) {
    std::mt19937 rng(7);
    PrimeField f5(5);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + rng() % 3;
        auto g = pair_groupoid(n);
        // k^n over P_n with e_i in degree (i,i): identity-concentrated
        std::vector<size_t> grade;
        for (size_t i = 0; i < n; ++i)
            grade.push_back(g.identity(i));
        auto ga = monomial_grading(diagonal_algebra(f5, n), g, grade);
        ASSERT_TRUE(ga.verify());
        auto r = theorem35_harness(ga);
        EXPECT_EQ(r.strongly_graded, r.can_bijective);
        EXPECT_EQ(r.can_bijective, r.can_surjective);
        EXPECT_EQ(r.strongly_graded, n == 1);
    }
}

// Conjugating the matrix-unit grading of M_2 by a random invertible matrix
// gives non-monomial components; the verdicts must not change.
TEST(Property, ConjugatedMatrixGrading) {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> d(-3, 3);
    auto base = matrix_grading(Q, 2);
    const auto& a = base.algebra();
    for (int trial = 0; trial < 10; ++trial) {
        Vec<Rationals> p(4), pinv;
        std::optional<Matrix<Rationals>> inv;
        Matrix<Rationals> pm(Q, 2, 2);
        do {
            for (size_t i = 0; i < 4; ++i)
                pm(i / 2, i % 2) = d(rng);
            inv = invert(pm);
        } while (!inv);
        pinv.resize(4);
        for (size_t i = 0; i < 4; ++i) {
            p[i] = pm(i / 2, i % 2);
            pinv[i] = (*inv)(i / 2, i % 2);
        }
        std::vector<Subspace<Rationals>> comps;
        for (size_t s = 0; s < 4; ++s)
            comps.push_back(Subspace<Rationals>::span(Q, 4, {a.mul(a.mul(p, unit_vector(Q, 4, s)), pinv)}));
        GradedAlgebra<Rationals> ga(a, pair_groupoid(2), comps);
        ASSERT_TRUE(ga.verify()) << ga.verify().describe();
        auto r = theorem35_harness(ga);
        EXPECT_TRUE(r.strongly_graded && r.can_bijective && r.can_surjective && r.sampled_equivalence);
    }
}
