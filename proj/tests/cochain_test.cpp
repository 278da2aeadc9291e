#include <gtest/gtest.h>

#include <random>

#include "prelie/cochain.hpp"
#include "test_support.hpp"

using namespace prelie;
using namespace prelie::fixtures;


TEST(CochainBasis, SizeAndOrder) {
    const CochainBasis b(3, 3);
    EXPECT_EQ(b.size(), binomial(3, 2) * 3);
    EXPECT_EQ(b.element(0), (std::vector<std::size_t>{0, 1, 0}));
    EXPECT_EQ(b.element(3), (std::vector<std::size_t>{0, 2, 0}));
    EXPECT_EQ(b.element(8), (std::vector<std::size_t>{1, 2, 2}));
    EXPECT_EQ(CochainBasis(4, 2).size(), 0u);
    EXPECT_THROW(CochainBasis(0, 2), ArityMismatch);
}

TEST(Cochain, EvaluationIsAlternatingInLeadingSlots) {
    std::mt19937_64 rng(11);
    const Cochain f = random_cochain(rng, 3, 3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                EXPECT_EQ(f.evaluate_basis({i, j, k}), Scalar(-1) * f.evaluate_basis({j, i, k}));
                if (i == j)
                    EXPECT_TRUE(is_zero(f.evaluate_basis({i, j, k})));
            }
    const Vector x = random_vector(rng, 3), y = random_vector(rng, 3), z = random_vector(rng, 3);
    EXPECT_EQ(f.evaluate({x, y, z}), Scalar(-1) * f.evaluate({y, x, z}));
    EXPECT_TRUE(is_zero(f.evaluate({x, x, z})));
    EXPECT_THROW(f.evaluate_basis({0, 1}), ArityMismatch);
}

TEST(Coboundary, AbelianTrivialIsZero) {
    std::mt19937_64 rng(3);
    const auto a = PreLieAlgebra::abelian(3);
    const auto rep = Representation::trivial(3, 2);
    for (std::size_t n = 1; n <= 3; ++n)
        EXPECT_TRUE(coboundary(a, rep, random_cochain(rng, n, 3, 2)).is_zero());
    EXPECT_TRUE(coboundary_matrix(a, rep, 2).is_zero());
}

TEST(Coboundary, IdentityOnIdempotent) {
    const auto a = idempotent1();
    const auto rep = Representation::regular(a);
    const Cochain id(1, 1, 1, Vector{1});
    const Cochain df = coboundary(a, rep, id);
    EXPECT_EQ(df.evaluate_basis({0, 0}), (Vector{1}));

    const Matrix d1 = coboundary_matrix(a, rep, 1);
    ASSERT_EQ(d1.rows(), 1u);
    ASSERT_EQ(d1.cols(), 1u);
    EXPECT_EQ(d1(0, 0), 1);
    EXPECT_EQ(cohomology(a, rep, 1).dimension, 0u);
}

TEST(Coboundary, MatchesPrintedLowDegreeFormulas) {
    std::mt19937_64 rng(5);
    for (const auto& p : small_pairs()) {
        const std::size_t n = p.algebra.dim(), v = p.rep.carrier_dim();
        const Cochain f1 = random_cochain(rng, 1, n, v);
        const Cochain f2 = random_cochain(rng, 2, n, v);
        const Cochain d1 = coboundary(p.algebra, p.rep, f1);
        const Cochain d2 = coboundary(p.algebra, p.rep, f2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector x = unit_vector(n, i), y = unit_vector(n, j);
                EXPECT_EQ(d1.evaluate_basis({i, j}), printed_d1(p.algebra, p.rep, f1, x, y))
                    << p.name;
                for (std::size_t k = 0; k < n; ++k)
                    EXPECT_EQ(d2.evaluate_basis({i, j, k}),
                              printed_d2(p.algebra, p.rep, f2, x, y, unit_vector(n, k)))
                        << p.name;
            }
    }
}

TEST(Coboundary, SquaresToZero) {
    std::mt19937_64 rng(17);
    for (const auto& p : small_pairs()) {
        const std::size_t n = p.algebra.dim(), v = p.rep.carrier_dim();
        for (std::size_t k = 1; k <= 3; ++k) {
            for (int t = 0; t < 5; ++t) {
                const Cochain f = random_cochain(rng, k, n, v);
                EXPECT_TRUE(coboundary(p.algebra, p.rep, coboundary(p.algebra, p.rep, f)).is_zero())
                    << p.name << " k=" << k;
            }
            const Matrix dd = coboundary_matrix(p.algebra, p.rep, k + 1) *
                              coboundary_matrix(p.algebra, p.rep, k);
            EXPECT_TRUE(dd.is_zero()) << p.name;
        }
    }
}

TEST(Coboundary, RejectsMismatchedShapes) {
    const auto a = nonabelian2();
    EXPECT_THROW(coboundary(a, Representation::trivial(2, 1), Cochain(1, 2, 2)), ShapeError);
    EXPECT_THROW(coboundary(a, Representation::trivial(3, 1), Cochain(1, 3, 1)), ShapeError);
}

TEST(Cohomology, AbelianDimensionLaw) {
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t v = 1; v <= 2; ++v)
            for (std::size_t k = 1; k <= 4; ++k)
                EXPECT_EQ(cohomology(PreLieAlgebra::abelian(m), Representation::trivial(m, v), k)
                              .dimension,
                          binomial(m, k - 1) * m * v);
}

TEST(Cohomology, RankNullity) {
    for (const auto& p : small_pairs())
        for (std::size_t k = 2; k <= 3; ++k) {
            const auto h = cohomology(p.algebra, p.rep, k);
            const std::size_t c = cochain_space_dim(k, p.algebra.dim(), p.rep.carrier_dim());
            EXPECT_EQ(h.dimension, c - rank(coboundary_matrix(p.algebra, p.rep, k)) -
                                       rank(coboundary_matrix(p.algebra, p.rep, k - 1)))
                << p.name;
            for (const auto& r : h.representatives)
                EXPECT_TRUE(coboundary(p.algebra, p.rep, r).is_zero());
        }
}

TEST(Cohomology, DegenerateDegreeIsZero) {
    const auto h = cohomology(nonabelian2(), Representation::trivial(2, 1), 4);
    EXPECT_EQ(h.dimension, 0u);
}

TEST(Cohomology, ClassCoordinatesOfRepresentatives) {
    const auto a = PreLieAlgebra::abelian(2);
    const auto rep = Representation::trivial(2, 1);
    const auto h = cohomology(a, rep, 3);
    ASSERT_EQ(h.dimension, 2u);
    EXPECT_EQ(class_coordinates(a, rep, h, h.representatives[1]), (Vector{0, 1}));
}

TEST(AreCohomologous, Examples) {
    std::mt19937_64 rng(23);
    for (const auto& p : small_pairs()) {
        const std::size_t n = p.algebra.dim(), v = p.rep.carrier_dim();
        const Cochain f1 = coboundary(p.algebra, p.rep, random_cochain(rng, 2, n, v));
        auto same = are_cohomologous(p.algebra, p.rep, f1, f1);
        ASSERT_TRUE(same.has_value());
        EXPECT_TRUE(coboundary(p.algebra, p.rep, *same).is_zero());

        const Cochain beta0 = random_cochain(rng, 2, n, v);
        const Cochain d_beta0 = coboundary(p.algebra, p.rep, beta0);
        const Cochain f2(3, n, v, d_beta0.coordinates());
        const Cochain zero(3, n, v);
        auto beta = are_cohomologous(p.algebra, p.rep, f2, zero);
        ASSERT_TRUE(beta.has_value());
        EXPECT_EQ(coboundary(p.algebra, p.rep, *beta), d_beta0);

        for (const auto& r : cohomology(p.algebra, p.rep, 3).representatives)
            EXPECT_FALSE(are_cohomologous(p.algebra, p.rep, r, zero).has_value()) << p.name;
    }
    EXPECT_THROW(are_cohomologous(idempotent1(), Representation::regular(idempotent1()),
                                  Cochain(2, 1, 1), Cochain(3, 1, 1)),
                 ArityMismatch);
}

TEST(LieSide, DegreeZeroIsTheModuleAction) {
    std::mt19937_64 rng(29);
    for (const auto& p : small_pairs()) {
        const auto w = hom_module(p.algebra, p.rep);
        const auto l = subadjacent_lie(p.algebra);
        const LieCochain f(0, l.dim(), w.dim(), random_vector(rng, w.dim()));
        const LieCochain df = lie_coboundary(l, w, f);
        for (std::size_t i = 0; i < l.dim(); ++i)
            EXPECT_EQ(df.evaluate_basis({i}), w.apply(unit_vector(l.dim(), i), f.coordinates()));
    }
}

TEST(LieSide, AbelianTrivialIsZero) {
    const auto a = PreLieAlgebra::abelian(3);
    const auto w = hom_module(a, Representation::trivial(3, 1));
    EXPECT_TRUE(w.act.is_zero());
    EXPECT_TRUE(lie_coboundary_matrix(subadjacent_lie(a), w, 1).is_zero());
}

TEST(LieSide, SquaresToZero) {
    for (const auto& p : small_pairs()) {
        const auto w = hom_module(p.algebra, p.rep);
        const auto l = subadjacent_lie(p.algebra);
        for (std::size_t k = 0; k <= 2; ++k)
            EXPECT_TRUE((lie_coboundary_matrix(l, w, k + 1) * lie_coboundary_matrix(l, w, k)).is_zero())
                << p.name << " k=" << k;
    }
}

TEST(Phi, IsInvertibleCochainMap) {
    for (const auto& p : small_pairs()) {
        const std::size_t n = p.algebra.dim(), v = p.rep.carrier_dim();
        const auto w = hom_module(p.algebra, p.rep);
        const auto l = subadjacent_lie(p.algebra);
        for (std::size_t k = 1; k <= 3; ++k) {
            const Matrix phi = phi_matrix(k, n, v);
            ASSERT_EQ(phi.rows(), phi.cols());
            EXPECT_EQ(rank(phi), phi.cols());
            EXPECT_EQ(phi_matrix(k + 1, n, v) * coboundary_matrix(p.algebra, p.rep, k),
                      lie_coboundary_matrix(l, w, k - 1) * phi)
                << p.name << " k=" << k;
        }
        EXPECT_TRUE(phi_map(Cochain(2, n, v)).is_zero());
    }
}

TEST(Phi, CohomologyDimensionsAgree) {
    for (const auto& p : small_pairs()) {
        const auto w = hom_module(p.algebra, p.rep);
        const auto l = subadjacent_lie(p.algebra);
        for (std::size_t k = 1; k <= 3; ++k)
            EXPECT_EQ(cohomology(p.algebra, p.rep, k).dimension, lie_cohomology_dim(l, w, k - 1))
                << p.name << " k=" << k;
    }
}
