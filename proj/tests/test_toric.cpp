#include "support/generators.hpp"

#include <addlab/toric.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace addlab;
using addlab::testing::make_graph;
using addlab::testing::with_labels;

TEST(RootOfUnity, ExponentArithmetic) {
    const RootOfUnity z(6, 5);
    EXPECT_EQ((z * z).exponent(), 4);
    EXPECT_TRUE(z.pow(6).is_one());
    EXPECT_EQ(z.pow(-1).exponent(), 1);
    EXPECT_EQ(RootOfUnity(6, -1), z);
    EXPECT_THROW(RootOfUnity(6, 1) * RootOfUnity(4, 1), PreconditionError);
}

TEST(Toric, AllOnesIsSolvable) {
    const auto g = parse_graph("d 5\nedge a b 0\nedge b c 0\nedge c a 0\nedge c d 0");
    EXPECT_TRUE(multiplicative_check(g).additive);
    const auto x = toric_solve(g);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(x->vertex_exponents, (std::vector<Residue>{0, 0, 0, 0}));
    EXPECT_TRUE(satisfies_monomial_map(g, *x));
}

TEST(Toric, TriangleOverSquareRoots) {
    const auto g = parse_graph("d 2\nedge a b 0\nedge b c 0\nedge c a 0");
    const auto n = toric_count(g);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(n->solutions, 2);
    EXPECT_EQ(n->g, 2);
    EXPECT_EQ(n->alpha, 2);
}

TEST(Toric, CounterexampleHasNoSolution) {
    const auto g = addlab::testing::fundamental_cycle_counterexample();
    EXPECT_FALSE(multiplicative_check(g).additive);
    EXPECT_FALSE(toric_count(g).has_value());
    EXPECT_FALSE(toric_solve(g).has_value());
}

TEST(Toric, CountExamples) {
    std::mt19937_64 rng(3);
    const auto c4 = addlab::testing::random_additive_labeling(rng, make_graph(3, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    const auto c4_count = toric_count(c4);
    EXPECT_EQ(c4_count->solutions, 3);
    EXPECT_EQ(c4_count->g, 0);

    const auto tri5 = addlab::testing::random_additive_labeling(rng, make_graph(5, 3, {{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_EQ(toric_count(tri5)->solutions, 1);
    const auto tri6 = addlab::testing::random_additive_labeling(rng, make_graph(6, 3, {{0, 1}, {1, 2}, {2, 0}}));
    EXPECT_EQ(toric_count(tri6)->solutions, 2);
}

TEST(Toric, TreeCountsDSolutionsThoughMinorGcdIsOne) {
    // m < n: maximal minors are (n-1)x(n-1) and their gcd is 1, yet every
    // root of unity at one vertex extends.
    const auto g = parse_graph("d 4\nedge a b 1\nedge b c 3");
    const auto n = toric_count(g);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(n->g, 1);
    EXPECT_EQ(n->alpha, 0);
    EXPECT_EQ(n->solutions, 4);
    EXPECT_EQ(toric_enumerate(g, 100).size(), 4U);
}

TEST(Toric, RequiresConnectedGraph) {
    EXPECT_THROW(toric_count(parse_graph("d 3\nedge a b 0\nedge c d 0")), PreconditionError);
}

TEST(Toric, TransportsTheAdditiveAnswers) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 7;
        const std::int64_t d = 2 + static_cast<std::int64_t>(rng() % 7);
        auto g = make_graph(d, n, addlab::testing::random_connected_graph(rng, n, n - 1 + rng() % 5, t % 5 == 0));
        g = t % 2 ? addlab::testing::random_additive_labeling(rng, g)
                  : with_labels(g, addlab::testing::random_residues(rng, g.edge_count(), d));
        const auto add = check(g);
        const auto mul = multiplicative_check(g);
        ASSERT_EQ(add.additive, mul.additive);
        ASSERT_EQ(add.violations.size(), mul.violations.size());
        const auto c = count(g);
        const auto tc = toric_count(g);
        ASSERT_EQ(c.has_value(), tc.has_value());
        if (c) {
            EXPECT_EQ(c->total, tc->solutions);
        }
        if (auto x = toric_solve(g)) {
            EXPECT_TRUE(satisfies_monomial_map(g, *x));
        }
    }
}
