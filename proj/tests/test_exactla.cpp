#include "wgalois/exactla/linalg.hpp"
#include "wgalois/exactla/tensor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace wgalois;

namespace {

const Rationals Q;

template <class F>
Matrix<F> ints(const F& f, std::vector<std::vector<long>> rows) {
    std::vector<std::vector<typename F::Scalar>> s;
    for (auto& r : rows) {
        s.emplace_back();
        for (long v : r)
            s.back().push_back(f.from_int(v));
    }
    return Matrix<F>::from_rows(f, s);
}

template <class F>
Matrix<F> random_matrix(const F& f, std::mt19937& rng, size_t r, size_t c) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::bernoulli_distribution sparse(0.4);
    Matrix<F> m(f, r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j)
            m(i, j) = sparse(rng) ? f.zero() : f.from_int(d(rng));
    return m;
}

}  // namespace

TEST(Field, RationalsParseCanonical) {
    EXPECT_EQ(Q.to_string(Q.parse("6/4")), "3/2");
    EXPECT_EQ(Q.to_string(Q.parse("-2/4")), "-1/2");
    EXPECT_THROW(Q.parse("2/-4"), ScalarParseError);
    EXPECT_EQ(Q.to_string(Q.parse("5")), "5");
    EXPECT_THROW(Q.parse("1.5"), ScalarParseError);
    EXPECT_THROW(Q.parse("1/0"), ScalarParseError);
    EXPECT_THROW(Q.parse(""), ScalarParseError);
}

TEST(Field, PrimeFieldArithmetic) {
    PrimeField f5(5);
    EXPECT_EQ(f5.to_string(f5.parse("1/2")), "3");
    EXPECT_EQ(f5.to_string(f5.from_int(-1)), "4");
    EXPECT_EQ(inverse(f5.from_int(2)).value(), 3u);
    EXPECT_THROW(PrimeField(4), std::invalid_argument);
    EXPECT_THROW(f5.parse("1/5"), ScalarParseError);
    PrimeField f7(7);
    EXPECT_THROW(f5.one() + f7.one(), FieldMismatch);
}

TEST(Rref, Identity) {
    auto e = rref(Matrix<Rationals>::identity(Q, 2));
    EXPECT_EQ(e.reduced, Matrix<Rationals>::identity(Q, 2));
    EXPECT_EQ(e.pivots, (std::vector<size_t>{0, 1}));
}

TEST(Rref, RankOneOverQ) {
    auto e = rref(ints(Q, {{2, 4}, {1, 2}}));
    EXPECT_EQ(e.reduced, ints(Q, {{1, 2}, {0, 0}}));
    EXPECT_EQ(e.pivots, (std::vector<size_t>{0}));
}

TEST(Rref, OverF2) {
    PrimeField f2(2);
    // rows (1,1),(1,0): subtracting gives (0,1) mod 2, then clearing gives I
    auto e = rref(ints(f2, {{1, 1}, {1, 0}}));
    EXPECT_EQ(e.reduced, Matrix<PrimeField>::identity(f2, 2));
}

TEST(KernelImageSolve, Examples) {
    EXPECT_EQ(kernel(Matrix<Rationals>::identity(Q, 3)).dim(), 0u);
    auto im = image(ints(Q, {{1}, {1}}));
    EXPECT_EQ(im.dim(), 1u);
    EXPECT_TRUE(im.contains({Q.one(), Q.one()}));
    auto x = solve(ints(Q, {{2}}), {Q.one()});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], mpq_class(1, 2));
    EXPECT_FALSE(solve(ints(Q, {{1, 1}, {1, 1}}), {Q.one(), Q.zero()}));
}

TEST(Quotient, Examples) {
    auto q0 = quotient_by(Subspace<Rationals>::zero(Q, 3), 3);
    EXPECT_EQ(q0.dim(), 3u);
    EXPECT_EQ(q0.projection(), Matrix<Rationals>::identity(Q, 3));
    EXPECT_EQ(quotient_by(Subspace<Rationals>::full(Q, 3), 3).dim(), 0u);
    auto rel = Subspace<Rationals>::span(Q, 4, {{1, -1, 0, 0}, {0, 0, 1, -1}});
    auto q = quotient_by(rel, 4);
    EXPECT_EQ(q.dim(), 2u);
    EXPECT_EQ(q.projection() * q.section(), Matrix<Rationals>::identity(Q, 2));
    EXPECT_TRUE(kernel(q.projection()) == rel);
}

TEST(Kron, Examples) {
    EXPECT_EQ(kron(Matrix<Rationals>::identity(Q, 2), Matrix<Rationals>::identity(Q, 3)),
              Matrix<Rationals>::identity(Q, 6));
    EXPECT_EQ(kron(ints(Q, {{0, 1}, {1, 0}}), Matrix<Rationals>::identity(Q, 1)), ints(Q, {{0, 1}, {1, 0}}));
    // a row times a column: entry (k, j) = a(0, j) b(k, 0)
    EXPECT_EQ(kron(ints(Q, {{1, 2}}), ints(Q, {{3}, {4}})), ints(Q, {{3, 6}, {4, 8}}));
    // the same numbers as vectors: (1,2) (x) (3,4) flattened i-outer
    Vec<Rationals> t = tensor_vectors(Q, Vec<Rationals>{1, 2}, Vec<Rationals>{3, 4});
    EXPECT_EQ(t, (Vec<Rationals>{3, 4, 6, 8}));
}

TEST(Kron, MixedProductWithSlots) {
    std::mt19937 rng(11);
    auto a = random_matrix(Q, rng, 2, 3);
    auto b = random_matrix(Q, rng, 3, 2);
    Vec<Rationals> v(6);
    for (size_t i = 0; i < 6; ++i)
        v[i] = Q.from_int(static_cast<long>(i) - 2);
    auto via_kron = kron(a, b).apply(v);
    auto via_slots = apply_to_slot(a, apply_to_slot(b, v, 3, 1), 1, 3);
    EXPECT_EQ(via_kron, via_slots);
}

TEST(FieldMismatch, MatrixOps) {
    PrimeField f3(3), f5(5);
    EXPECT_THROW(Matrix<PrimeField>::identity(f3, 2) * Matrix<PrimeField>::identity(f5, 2), FieldMismatch);
    EXPECT_THROW(kron(Matrix<PrimeField>::identity(f3, 2), Matrix<PrimeField>::identity(f5, 2)), FieldMismatch);
}

template <class F>
void rank_nullity_property(const F& f, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> dim(1, 6);
    for (int trial = 0; trial < 60; ++trial) {
        size_t r = dim(rng), c = dim(rng);
        auto m = random_matrix(f, rng, r, c);
        auto k = kernel(m);
        auto im = image(m);
        EXPECT_EQ(k.dim() + im.dim(), c);
        for (const auto& v : k.basis())
            EXPECT_TRUE(is_zero_vector(m.apply(v)));
        auto e = rref(m);
        EXPECT_EQ(rref(e.reduced).reduced, e.reduced);
        // section o projection is the identity modulo the relations
        auto q = quotient_by(k, c);
        Vec<F> v = zero_vector(f, c);
        for (size_t i = 0; i < c; ++i)
            v[i] = f.from_int(static_cast<long>(i * 7 % 5) - 2);
        EXPECT_TRUE(q.same_class(q.lift(q.project(v)), v));
        EXPECT_EQ(q.dim(), c - k.dim());
        auto x = solve(m, m.apply(v));
        ASSERT_TRUE(x);
        EXPECT_EQ(m.apply(*x), m.apply(v));
    }
}

TEST(Property, RankNullityOverQ) { rank_nullity_property(Q, 1); }
TEST(Property, RankNullityOverF5) { rank_nullity_property(PrimeField(5), 2); }
TEST(Property, RankNullityOverF2) { rank_nullity_property(PrimeField(2), 3); }

TEST(Invert, RoundTrip) {
    auto m = ints(Q, {{2, 1}, {1, 1}});
    auto inv = invert(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix<Rationals>::identity(Q, 2));
    EXPECT_FALSE(invert(ints(Q, {{1, 2}, {2, 4}})));
}

TEST(BalancedTensor, OverDiagonalSubring) {
    // k^2 (x)_{k^2} k^2 with both actions coordinatewise is k^2
    std::vector<Matrix<Rationals>> act = {ints(Q, {{1, 0}, {0, 0}}), ints(Q, {{0, 0}, {0, 1}})};
    EXPECT_EQ(balanced_tensor(Q, 2, 2, act, act).dim(), 2u);
    // over k = k * 1 nothing is identified
    std::vector<Matrix<Rationals>> one = {Matrix<Rationals>::identity(Q, 2)};
    EXPECT_EQ(balanced_tensor(Q, 2, 2, one, one).dim(), 4u);
}
