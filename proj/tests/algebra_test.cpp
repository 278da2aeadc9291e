#include <gtest/gtest.h>

#include <random>

#include "prelie/algebra.hpp"
#include "test_support.hpp"

using namespace prelie;
using namespace prelie::fixtures;

namespace {

std::vector<PreLieAlgebra> valid_algebras() {
    return {PreLieAlgebra::abelian(1), PreLieAlgebra::abelian(3), idempotent1(), nonabelian2(),
            left_unit2(), algebra(2, {{1, 1, 1, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}}),
            algebra(3, {{1, 2, 3, 1}})};
}

} // namespace

TEST(CheckPrelie, Examples) {
    for (std::size_t n = 1; n <= 4; ++n)
        EXPECT_TRUE(check_prelie(PreLieAlgebra::abelian(n)).ok());
    EXPECT_TRUE(check_prelie(idempotent1()).ok());

    const auto bad = check_prelie(broken2());
    ASSERT_FALSE(bad.ok());
    EXPECT_EQ(bad.violation().witness, (std::vector<std::size_t>{0, 1, 0}));
    EXPECT_EQ(bad.violation().lhs, (Vector{0, -1}));
    EXPECT_EQ(bad.violation().rhs, (Vector{0, 1}));
}

TEST(CheckPrelie, ShapeError) {
    EXPECT_THROW(PreLieAlgebra(Tensor3(2, 2, 3)), ShapeError);
}

TEST(SubadjacentLie, Examples) {
    EXPECT_TRUE(subadjacent_lie(PreLieAlgebra::abelian(3)).structure().is_zero());
    EXPECT_TRUE(subadjacent_lie(idempotent1()).structure().is_zero());
    const LieAlgebra l = subadjacent_lie(nonabelian2());
    EXPECT_EQ(l.structure().slice(0, 1), (Vector{0, 1}));
    EXPECT_EQ(l.structure().slice(1, 0), (Vector{0, -1}));
    EXPECT_EQ(l.structure().slice(0, 0), (Vector{0, 0}));
}

TEST(SubadjacentLie, PassesLieAxiomsOnValidAlgebras) {
    for (const auto& a : valid_algebras()) {
        ASSERT_TRUE(check_prelie(a).ok());
        EXPECT_TRUE(check_lie(subadjacent_lie(a)).ok());
    }
}

TEST(CheckRepresentation, Examples) {
    for (const auto& a : valid_algebras()) {
        EXPECT_TRUE(check_representation(a, Representation::trivial(a.dim(), 2)).ok());
        EXPECT_TRUE(check_representation(a, Representation::regular(a)).ok());
        EXPECT_TRUE(check_representation(a, Representation::left_regular(a)).ok());
    }
    // one nonzero entry over a nonabelian algebra
    const auto a = nonabelian2();
    const Representation single(tensor(2, 1, 1, {{2, 1, 1, 1}}), Tensor3(1, 2, 1));
    // e1 o_l v = v alone would be valid: it is a character vanishing on [g, g].
    EXPECT_TRUE(check_representation(a, Representation(tensor(2, 1, 1, {{1, 1, 1, 1}}), Tensor3(1, 2, 1))).ok());
    const auto r = check_representation(a, single);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violation().axiom, "Lie representation [x,y] o_l u");

    EXPECT_THROW(check_representation(a, Representation::trivial(3, 1)), ShapeError);
}

TEST(CheckAction, ZeroProductReducesToRepresentation) {
    const auto g = nonabelian2();
    const auto rep = Representation::regular(g);
    EXPECT_TRUE(check_action(g, PreLieAlgebra::abelian(2), rep).ok());
}

TEST(CheckAction, IdealActionAndViolation) {
    const auto n = nonabelian2();
    EXPECT_TRUE(check_action(n, n, Representation::regular(n)).ok());

    // ideal span(e2) with restricted product (zero) and restricted action
    const PreLieAlgebra m = PreLieAlgebra::abelian(1);
    const ActionData act(tensor(2, 1, 1, {{1, 1, 1, 1}}), Tensor3(1, 2, 1));
    EXPECT_TRUE(check_action(n, m, act).ok());

    // regular action on the algebra e o e = e with the right action doubled
    const auto g = idempotent1();
    const ActionData doubled(g.product(), tensor(1, 1, 1, {{1, 1, 1, 2}}));
    EXPECT_FALSE(check_action(g, g, doubled).ok());
}

TEST(CheckMorphism, Examples) {
    for (const auto& a : valid_algebras()) {
        EXPECT_TRUE(check_morphism(a, a, Matrix::identity(a.dim())).ok());
        EXPECT_TRUE(check_morphism(a, a, Matrix(a.dim(), a.dim())).ok());
    }
    Matrix twice(1, 1);
    twice(0, 0) = 2;
    const auto r = check_morphism(idempotent1(), idempotent1(), twice);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violation().lhs, (Vector{2}));
    EXPECT_EQ(r.violation().rhs, (Vector{4}));
    EXPECT_THROW(check_morphism(idempotent1(), nonabelian2(), twice), ShapeError);
}

TEST(CheckIdeal, Examples) {
    const auto a = nonabelian2();
    EXPECT_TRUE(check_two_sided_ideal(a, standard_basis(2)).ok());
    EXPECT_TRUE(check_two_sided_ideal(a, SubspaceBasis{2, {}}).ok());
    EXPECT_TRUE(check_two_sided_ideal(a, SubspaceBasis{2, {{0, 1}}}).ok());
    EXPECT_FALSE(check_two_sided_ideal(a, SubspaceBasis{2, {{1, 0}}}).ok());
    EXPECT_THROW(check_two_sided_ideal(a, SubspaceBasis{2, {{1, 1}, {2, 2}}}), BadBasis);
    EXPECT_THROW(check_two_sided_ideal(a, SubspaceBasis{3, {}}), BadBasis);
}

TEST(CheckAction, AcceptsRegularActionOnEveryIdeal) {
    // Every ideal of a random-ish catalog algebra, acted on by restricted o_L, o_R.
    for (const auto& a : valid_algebras()) {
        const std::size_t n = a.dim();
        for (std::size_t mask = 1; mask < (1u << n); ++mask) {
            SubspaceBasis sub{n, {}};
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k))
                    sub.vectors.push_back(unit_vector(n, k));
            if (!check_two_sided_ideal(a, sub).ok())
                continue;
            const Matrix cols = sub.as_columns();
            const std::size_t d = sub.dim();
            Tensor3 prod(d, d, d), left(n, d, d), right(d, n, d);
            for (std::size_t s = 0; s < d; ++s) {
                for (std::size_t t = 0; t < d; ++t) {
                    const auto c = *solve_particular(cols, a.multiply(sub.vectors[s], sub.vectors[t]));
                    for (std::size_t k = 0; k < d; ++k)
                        prod(s, t, k) = c[k];
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const auto l = *solve_particular(cols, a.multiply(unit_vector(n, i), sub.vectors[s]));
                    const auto r = *solve_particular(cols, a.multiply(sub.vectors[s], unit_vector(n, i)));
                    for (std::size_t k = 0; k < d; ++k) {
                        left(i, s, k) = l[k];
                        right(s, i, k) = r[k];
                    }
                }
            }
            EXPECT_TRUE(check_action(a, PreLieAlgebra(prod), ActionData(left, right)).ok());
        }
    }
}
