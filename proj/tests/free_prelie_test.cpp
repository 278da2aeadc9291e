#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "prelie/free_prelie.hpp"
#include "test_support.hpp"

namespace prelie {
namespace {

TreePoly poly(const char* text, std::size_t d = 6) { return TreePoly::basis(parse_tree(text), d); }

TEST(Tree, ParsePrintRoundTrip) {
    EXPECT_EQ(to_string(parse_tree("a")), "a");
    EXPECT_EQ(to_string(parse_tree("b(a)")), "b(a)");
    EXPECT_EQ(to_string(parse_tree("c(a,b)")), "c(b,a)");
    EXPECT_EQ(to_string(parse_tree(" b ( c , a ) ")), "b(c,a)");
    EXPECT_EQ(to_string(parse_tree("a(a(a),a)")), "a(a(a),a)");
    EXPECT_EQ(parse_tree("a(a,a(a))"), parse_tree("a(a(a),a)"));
    for (const char* bad : {"", "A", "a(", "a()", "a(b", "a)b", "ab", "1"})
        EXPECT_THROW(parse_tree(bad), ParseError) << bad;
}

TEST(Tree, CanonicalFormIgnoresChildOrder) {
    std::mt19937_64 rng(11);
    for (const auto& t : fixtures::trees_up_to(2, 5)) {
        // rebuild with shuffled children at every vertex
        auto shuffled = [&](auto&& self, const Tree& s) -> Tree {
            std::vector<Tree> kids;
            for (const auto& c : s.children())
                kids.push_back(self(self, c));
            std::shuffle(kids.begin(), kids.end(), rng);
            return Tree(s.label(), std::move(kids));
        };
        const Tree u = shuffled(shuffled, t);
        EXPECT_EQ(u, t);
        EXPECT_EQ(to_string(u), to_string(t));
        EXPECT_EQ(parse_tree(to_string(t)), t);
    }
}

TEST(Tree, OrderIsDegreeThenLabelThenChildren) {
    EXPECT_LT(parse_tree("b"), parse_tree("a(a)"));
    EXPECT_LT(parse_tree("a(b)"), parse_tree("b(a)"));
    EXPECT_LT(parse_tree("a(a,a)"), parse_tree("a(a(a))"));
    EXPECT_LT(parse_tree("a(b,a)"), parse_tree("a(b,b)"));
}

TEST(Grafting, Examples) {
    const TreePoly ab = graft_product(poly("a"), poly("b"));
    EXPECT_EQ(to_string(ab), "b(a)");
    EXPECT_EQ(to_string(graft_product(poly("a"), poly("b(c)"))), "b(c,a) + b(c(a))");

    const TreePoly a = poly("a"), b = poly("b"), c = poly("c");
    const TreePoly lhs = graft_product(graft_product(a, b), c) - graft_product(a, graft_product(b, c));
    const TreePoly rhs = graft_product(graft_product(b, a), c) - graft_product(b, graft_product(a, c));
    EXPECT_EQ(lhs, rhs);
    EXPECT_EQ(lhs, Scalar(-1) * poly("c(a,b)"));
    EXPECT_EQ(to_string(lhs), "-c(b,a)");
}

TEST(Grafting, RepeatedSitesAddUp) {
    const TreePoly p = graft_product(poly("b"), poly("a(a,a)"));
    EXPECT_EQ(to_string(p), "a(b,a,a) + 2*a(a(b),a)");
}

TEST(Grafting, DegreeAdditiveAndTermCount) {
    const auto trees = fixtures::trees_up_to(2, 4);
    for (const auto& s : trees)
        for (const auto& t : trees) {
            const TreePoly p = graft_product(TreePoly::basis(s, 8), TreePoly::basis(t, 8));
            Scalar total = 0;
            for (const auto& [tree, c] : p.terms()) {
                EXPECT_EQ(tree.degree(), s.degree() + t.degree());
                total += c;
            }
            EXPECT_EQ(total, Scalar(static_cast<long>(t.degree())));
            EXPECT_FALSE(p.truncated());
        }
}

TEST(Grafting, LeftSymmetryUpToDegreeFive) {
    const auto trees = fixtures::trees_up_to(1, 3);
    std::size_t checked = 0;
    for (const auto& x : trees)
        for (const auto& y : trees)
            for (const auto& z : trees) {
                if (x.degree() + y.degree() + z.degree() > 5)
                    continue;
                const TreePoly X = TreePoly::basis(x, 5), Y = TreePoly::basis(y, 5),
                               Z = TreePoly::basis(z, 5);
                const TreePoly lhs =
                    graft_product(graft_product(X, Y), Z) - graft_product(X, graft_product(Y, Z));
                const TreePoly rhs =
                    graft_product(graft_product(Y, X), Z) - graft_product(Y, graft_product(X, Z));
                ASSERT_FALSE(lhs.truncated());
                EXPECT_EQ(lhs, rhs) << to_string(x) << " " << to_string(y) << " " << to_string(z);
                ++checked;
            }
    EXPECT_GT(checked, 0u);
}

TEST(Grafting, OppositeConventionIsNotLeftSymmetric) {
    // x o' y := y o x (x receives y) is right-symmetric instead
    auto op = [](const TreePoly& x, const TreePoly& y) { return graft_product(y, x); };
    const TreePoly a = poly("a"), b = poly("b"), c = poly("c");
    const TreePoly lhs = op(op(a, b), c) - op(a, op(b, c));
    const TreePoly rhs = op(op(b, a), c) - op(b, op(a, c));
    EXPECT_NE(lhs, rhs);
}

TEST(Grafting, TruncationFlagAndMismatch) {
    const TreePoly p = graft_product(poly("a(a)", 3), poly("a(a)", 3));
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.truncated());
    EXPECT_THROW(graft_product(poly("a", 3), poly("a", 4)), TruncationMismatch);
    EXPECT_THROW(poly("a", 3) + poly("a", 4), TruncationMismatch);
    EXPECT_THROW(TreePoly::basis(parse_tree("a(a(a))"), 2), InvalidInput);
}

TEST(Enumeration, CountsMatchOracle) {
    for (long long k : {1, 2, 3}) {
        const auto expected = fixtures::tree_counts(k, 5);
        for (std::size_t d = 1; d <= 5; ++d) {
            const auto trees = enumerate_trees(static_cast<std::size_t>(k), d);
            EXPECT_EQ(static_cast<long long>(trees.size()), expected[d]) << k << " " << d;
            EXPECT_TRUE(std::is_sorted(trees.begin(), trees.end()));
            EXPECT_EQ(std::set<Tree>(trees.begin(), trees.end()).size(), trees.size());
            for (const auto& t : trees) {
                EXPECT_EQ(t.degree(), d);
                EXPECT_EQ(parse_tree(to_string(t)), t);
            }
        }
    }
    const auto oracle = fixtures::tree_counts(1, 4);
    EXPECT_EQ(std::vector<long long>(oracle.begin() + 1, oracle.end()),
              (std::vector<long long>{1, 1, 2, 4}));
}

TEST(Enumeration, SmallCases) {
    EXPECT_EQ(enumerate_trees(2, 1).size(), 2u);
    std::vector<std::string> names;
    for (const auto& t : enumerate_trees(2, 2))
        names.push_back(to_string(t));
    EXPECT_EQ(names, (std::vector<std::string>{"a(a)", "a(b)", "b(a)", "b(b)"}));
    std::vector<std::string> three;
    for (const auto& t : enumerate_trees(1, 3))
        three.push_back(to_string(t));
    EXPECT_EQ(three, (std::vector<std::string>{"a(a,a)", "a(a(a))"}));
    EXPECT_THROW(enumerate_trees(0, 1), ValueError);
    EXPECT_THROW(enumerate_trees(1, 0), ValueError);
}

TEST(Evaluate, Examples) {
    const PreLieAlgebra g = fixtures::algebra(2, {{1, 1, 1, 2}, {1, 2, 2, 1}, {2, 2, 1, 1}});
    const std::vector<Vector> assign{{1, 0}, {1, 1}, {0, 2}};
    const Vector& a = assign[0];
    const Vector& b = assign[1];
    const Vector& c = assign[2];
    EXPECT_EQ(evaluate(poly("a"), g, assign), a);
    EXPECT_EQ(evaluate(poly("b(a)"), g, assign), g.multiply(a, b));
    EXPECT_EQ(evaluate(poly("c(a,b)"), g, assign),
              g.multiply(a, g.multiply(b, c)) - g.multiply(g.multiply(a, b), c));
    EXPECT_THROW(evaluate(poly("d"), g, assign), InvalidInput);
    EXPECT_THROW(evaluate(graft_product(poly("a(a)", 3), poly("a(a)", 3)), g, assign),
                 NeedsHigherTruncation);
}

TEST(Evaluate, IsHomomorphismIntoCatalogAlgebras) {
    std::mt19937_64 rng(5);
    for (const auto& g : fixtures::small_algebras()) {
        const std::size_t labels = 2;
        std::vector<Vector> assign;
        for (std::size_t k = 0; k < labels; ++k)
            assign.push_back(fixtures::random_vector(rng, g.dim()));
        TreeEvaluator eval(g, assign);
        const auto trees = fixtures::trees_up_to(labels, 3);
        for (const auto& x : trees)
            for (const auto& y : trees) {
                if (x.degree() + y.degree() > 4)
                    continue;
                const TreePoly X = TreePoly::basis(x, 4), Y = TreePoly::basis(y, 4);
                EXPECT_EQ(eval(graft_product(X, Y)), g.multiply(eval(X), eval(Y)))
                    << to_string(x) << " o " << to_string(y);
            }
    }
}

TEST(Evaluate, NotHomomorphismIntoNonPreLie) {
    // evaluation is still defined, but fails multiplicativity somewhere
    const PreLieAlgebra broken = fixtures::broken2();
    TreeEvaluator eval(broken, basis_assignment(2));
    bool failed = false;
    for (const auto& x : fixtures::trees_up_to(2, 2))
        for (const auto& y : fixtures::trees_up_to(2, 2)) {
            const TreePoly X = TreePoly::basis(x, 4), Y = TreePoly::basis(y, 4);
            failed = failed || eval(graft_product(X, Y)) != broken.multiply(eval(X), eval(Y));
        }
    EXPECT_TRUE(failed);
}

TEST(CocyclePullback, CatalogRepresentatives) {
    for (const auto& p : fixtures::small_pairs()) {
        const auto assign = basis_assignment(p.algebra.dim());
        const Cochain zero(3, p.algebra.dim(), p.rep.carrier_dim());
        EXPECT_TRUE(check_cocycle_pullback(p.algebra, p.rep, zero, assign, 4));
        for (const auto& rep3 : cohomology(p.algebra, p.rep, 3).representatives) {
            const auto r = check_cocycle_pullback(p.algebra, p.rep, rep3, assign, 4);
            EXPECT_TRUE(r) << p.name << ": " << r.describe();
        }
    }
}

TEST(CocyclePullback, HigherDegreeTrees) {
    const PreLieAlgebra g = fixtures::algebra(3, {{1, 2, 3, 1}});
    const Representation rep = Representation::trivial(3, 1);
    const auto h3 = cohomology(g, rep, 3);
    ASSERT_GT(h3.dimension, 0u);
    for (const auto& rep3 : h3.representatives)
        EXPECT_TRUE(check_cocycle_pullback(g, rep, rep3, basis_assignment(3), 5));
}

TEST(CocyclePullback, NonCocycleIsCaught) {
    // on a 2-dim algebra C^4 = 0, so a non-cocycle needs dim 3
    const PreLieAlgebra g = fixtures::algebra(3, {{1, 2, 2, 1}, {1, 3, 3, 1}});
    const Representation rep = Representation::regular(g);
    std::mt19937_64 rng(2);
    const Cochain theta = fixtures::random_cochain(rng, 3, 3, 3);
    ASSERT_FALSE(coboundary(g, rep, theta).is_zero());
    const auto r = check_cocycle_pullback(g, rep, theta, basis_assignment(3), 4);
    ASSERT_FALSE(r);
    EXPECT_EQ(r.violation().witness.size(), 4u);
    EXPECT_THROW(check_cocycle_pullback(g, rep, theta, basis_assignment(3), 3),
                 NeedsHigherTruncation);
}

} // namespace
} // namespace prelie
