#include <gtest/gtest.h>

#include <random>

#include "prelie/linalg.hpp"
#include "test_support.hpp"

using namespace prelie;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (auto row : rows) {
        std::size_t c = 0;
        for (int x : row)
            m(r, c++) = x;
        ++r;
    }
    return m;
}

Vector vec(std::initializer_list<int> xs) {
    Vector v;
    for (int x : xs)
        v.emplace_back(x);
    return v;
}

} // namespace

TEST(Scalar, ParsesAndPrintsLowestTerms) {
    EXPECT_EQ(to_string(parse_scalar("2/4")), "1/2");
    EXPECT_EQ(to_string(parse_scalar("-6/3")), "-2");
    EXPECT_EQ(to_string(parse_scalar("7")), "7");
    EXPECT_THROW(parse_scalar("1/0"), ValueError);
    EXPECT_THROW(parse_scalar("1/-2"), ValueError);
    EXPECT_THROW(parse_scalar("x"), ValueError);
    EXPECT_THROW(parse_scalar(""), ValueError);
}

TEST(RankKernelImage, ZeroMatrix) {
    auto r = rank_kernel_image(Matrix(2, 2));
    EXPECT_EQ(r.rank, 0u);
    EXPECT_EQ(r.kernel, standard_basis(2));
    EXPECT_TRUE(r.image.vectors.empty());
}

TEST(RankKernelImage, Identity) {
    auto r = rank_kernel_image(Matrix::identity(2));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_TRUE(r.kernel.vectors.empty());
    EXPECT_EQ(r.image, standard_basis(2));
}

TEST(RankKernelImage, RankOne) {
    auto r = rank_kernel_image(mat({{1, 2}, {2, 4}}));
    EXPECT_EQ(r.rank, 1u);
    ASSERT_EQ(r.kernel.dim(), 1u);
    EXPECT_EQ(r.kernel.vectors[0], vec({-2, 1}));
    ASSERT_EQ(r.image.dim(), 1u);
    EXPECT_EQ(r.image.vectors[0], vec({1, 2}));
}

TEST(SolveParticular, Examples) {
    EXPECT_EQ(solve_particular(Matrix::identity(2), vec({3, 5})), vec({3, 5}));
    EXPECT_FALSE(solve_particular(mat({{1, 2}, {2, 4}}), vec({1, 0})).has_value());
    EXPECT_EQ(solve_particular(mat({{1, 2}, {2, 4}}), vec({1, 2})), vec({1, 0}));
    EXPECT_THROW(solve_particular(Matrix::identity(2), vec({1})), DimensionMismatch);
}

TEST(RightInverse, Examples) {
    EXPECT_EQ(right_inverse_on_image(Matrix::identity(3)), Matrix::identity(3));
    EXPECT_EQ(right_inverse_on_image(mat({{1, 0}})), mat({{1}, {0}}));
    EXPECT_EQ(right_inverse_on_image(Matrix(2, 3)), Matrix(3, 2));
}

TEST(QuotientReduce, Examples) {
    SubspaceBasis none{2, {}};
    EXPECT_EQ(quotient_reduce(2, none, vec({3, 7})), vec({3, 7}));
    SubspaceBasis first{2, {vec({1, 0})}};
    EXPECT_EQ(quotient_reduce(2, first, vec({3, 7})), vec({7}));
    EXPECT_EQ(quotient_reduce(2, first, vec({-5, 0})), vec({0}));
    SubspaceBasis dependent{2, {vec({1, 1}), vec({2, 2})}};
    EXPECT_THROW(QuotientReducer{dependent}, BadBasis);
}

TEST(LinalgProperties, SectionsRanksSolves) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t rows = dim(rng), cols = dim(rng);
        const Matrix m = fixtures::random_matrix(rng, rows, cols);

        const Matrix s = right_inverse_on_image(m);
        EXPECT_EQ(m * s * m, m);

        EXPECT_EQ(rank(m), rank(m.transpose()));

        const auto rki = rank_kernel_image(m);
        EXPECT_EQ(rki.rank + rki.kernel.dim(), cols);
        for (const auto& k : rki.kernel.vectors)
            EXPECT_TRUE(is_zero(m * k));

        const Vector x = fixtures::random_vector(rng, cols);
        const Vector b = m * x;
        const auto sol = solve_particular(m, b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m * *sol, b);
    }
}

TEST(LinalgProperties, QuotientLiftRoundTrip) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const Matrix gen = fixtures::random_matrix(rng, n, trial % 4);
        const SubspaceBasis sub = rank_kernel_image(gen).image;
        const QuotientReducer q(sub);
        EXPECT_EQ(q.quotient_dim() + sub.dim(), n);
        const Vector c = fixtures::random_vector(rng, q.quotient_dim());
        EXPECT_EQ(q.reduce(q.lift(c)), c);
        const Vector v = fixtures::random_vector(rng, n);
        const Vector diff = v - q.lift(q.reduce(v));
        EXPECT_TRUE(in_span(sub.as_columns(), diff));
        for (const auto& s : sub.vectors)
            EXPECT_TRUE(is_zero(q.reduce(s)));
    }
}
