#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weakind;

TEST(FormalSum, ReduceOnceTakesLeftmostStep) {
    FormalSum s{{1, 2}, {0, 1}, {3, 2}};
    auto r = reduce_once(s);
    ASSERT_TRUE(r);
    EXPECT_EQ(*r, (FormalSum{{1, 2}, {3, 2}}));
    EXPECT_EQ(*reduce_once(*r), (FormalSum{{4, 2}}));
    EXPECT_FALSE(reduce_once(FormalSum{{4, 2}}));
    EXPECT_FALSE(reduce_once(FormalSum{}));
}

TEST(FormalSum, NormalFormKeepsNonAdjacentTerms) {
    EXPECT_EQ(normal_form(FormalSum{{1, 1}, {2, 0}, {3, 1}}), (FormalSum{{1, 1}, {2, 0}, {3, 1}}));
    EXPECT_EQ(normal_form(FormalSum{{1, 1}, {-1, 1}, {2, 0}}), (FormalSum{{2, 0}}));
    EXPECT_EQ(normal_form(FormalSum{{1, 0}, {1, 1}, {-1, 1}, {2, 0}}), (FormalSum{{3, 0}}));
    EXPECT_TRUE(is_normal_form(FormalSum{}));
    EXPECT_FALSE(is_normal_form(FormalSum{{0, 3}}));
}

TEST(FormalSum, Arithmetic) {
    FormalSum x{{1, 1}};
    EXPECT_EQ(sum_succ(x), (FormalSum{{1, 1}, {1, 0}}));
    EXPECT_EQ(sum_add(FormalSum{{1, 0}}, x), (FormalSum{{1, 0}, {1, 1}}));
    EXPECT_EQ(sum_negate(FormalSum{{2, 3}, {-1, 0}}), (FormalSum{{1, 0}, {-2, 3}}));
    EXPECT_EQ(sum_mul(sum_succ(x), FormalSum{{2, 0}}), (FormalSum{{1, 1}, {1, 0}, {1, 1}, {1, 0}}));
    EXPECT_EQ(sum_mul(x, FormalSum{{-1, 1}}), (FormalSum{{-1, 2}}));
    EXPECT_EQ(sum_mul(FormalSum{{1, 1}, {1, 0}}, FormalSum{{-1, 0}}), (FormalSum{{-1, 0}, {-1, 1}}));
    EXPECT_EQ(sum_predecessor(sum_succ(x)), x);
    EXPECT_THROW(sum_mul(x, FormalSum{{1000, 0}}, 999), std::length_error);
}

TEST(FormalSum, Positivity) {
    EXPECT_TRUE(is_positive(parse_formal_sum("-X + X^2")));
    EXPECT_TRUE(is_positive(parse_formal_sum("-X^2 + X + 2X^2")));
    EXPECT_FALSE(is_positive(parse_formal_sum("X - X^2")));
    EXPECT_FALSE(is_positive(parse_formal_sum("X - X")));
    EXPECT_TRUE(is_nonnegative(parse_formal_sum("X - X")));
    EXPECT_FALSE(is_nonnegative(parse_formal_sum("-1")));
}

TEST(FormalSum, Order) {
    FormalSum x{{1, 1}};
    EXPECT_TRUE(sum_leq(FormalSum{{7, 0}}, x));
    EXPECT_FALSE(sum_leq(x, FormalSum{{7, 0}}));
    EXPECT_TRUE(sum_leq(x, x));
    // The residue keeps order: X + 1 - X, whose top-exponent total is 0.
    EXPECT_EQ(leq_residue(x, sum_succ(x)), (FormalSum{{1, 1}, {1, 0}, {-1, 1}}));
    EXPECT_FALSE(sum_leq(x, sum_succ(x)));
    EXPECT_TRUE(sum_leq(x, FormalSum{{1, 0}, {1, 1}}));
}

TEST(FormalSum, TextForms) {
    FormalSum s = parse_formal_sum("2X^3 - X + 4");
    EXPECT_EQ(s, (FormalSum{{2, 3}, {-1, 1}, {4, 0}}));
    EXPECT_EQ(render(s), "2X^3 - X^1 + 4X^0");
    EXPECT_EQ(render(FormalSum{}), "0");
    EXPECT_EQ(parse_formal_sum(render(s)), s);
    EXPECT_EQ(render_pairs(s), "[(2,3),(-1,1),(4,0)]");
    EXPECT_EQ(parse_formal_sum_pairs(render_pairs(s)), s);
    EXPECT_EQ(parse_formal_sum_pairs("[]"), FormalSum{});
    for (const char* bad : {"", "2X^", "X X", "3Y", "X^a"}) EXPECT_THROW(parse_formal_sum(bad), std::invalid_argument) << bad;
    for (const char* bad : {"(1,2)", "[(1)]", "[(1,2)(3,4)]", "[(a,2)]"})
        EXPECT_THROW(parse_formal_sum_pairs(bad), std::invalid_argument) << bad;
}

TEST(FormalSum, NormalFormIsOrderIndependent) {
    Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        FormalSum s = oracle::random_sum(rng, 10, 3, 3);
        FormalSum nf = normal_form(s);
        EXPECT_TRUE(is_normal_form(nf));
        ASSERT_EQ(oracle::random_order_nf(s, rng), nf) << render_pairs(s);
        FormalSum step = s;
        while (auto r = reduce_once(step)) step = *r;
        EXPECT_EQ(step, nf);
    }
}

TEST(FormalSum, OperationsRespectEquivalence) {
    Rng rng(42);
    for (int i = 0; i < 500; ++i) {
        FormalSum a = oracle::random_sum(rng, 5, 3, 3), b = oracle::random_sum(rng, 5, 3, 3);
        FormalSum a2 = oracle::scramble(a, rng), b2 = oracle::scramble(b, rng);
        ASSERT_EQ(normal_form(a2), normal_form(a));
        EXPECT_EQ(sum_add(a2, b2), sum_add(a, b));
        EXPECT_EQ(sum_mul(a2, b2), sum_mul(a, b)) << render_pairs(a) << " * " << render_pairs(b);
        EXPECT_EQ(sum_negate(a2), sum_negate(a));
        EXPECT_EQ(is_positive(a2), is_positive(a));
    }
}

TEST(FormalSum, PositivityMatchesDefinition) {
    Rng rng(43);
    for (int i = 0; i < 1000; ++i) {
        FormalSum nf = normal_form(oracle::random_sum(rng, 6, 3, 3));
        EXPECT_EQ(is_nonnegative(nf), oracle::nonnegative_nf(nf)) << render_pairs(nf);
    }
}

TEST(FormalSum, NonnegativesAreClosed) {
    Rng rng(44);
    int tested = 0;
    for (int i = 0; i < 3000 && tested < 500; ++i) {
        FormalSum a = normal_form(oracle::random_sum(rng, 5, 3, 3)), b = normal_form(oracle::random_sum(rng, 5, 3, 3));
        if (!is_nonnegative(a) || !is_nonnegative(b)) continue;
        ++tested;
        EXPECT_TRUE(is_nonnegative(sum_add(a, b)));
        EXPECT_TRUE(is_nonnegative(sum_mul(a, b)));
        EXPECT_TRUE(is_nonnegative(sum_succ(a)));
    }
    EXPECT_EQ(tested, 500);
}

TEST(FormalSum, AdditionIsAssociativeAndNegationCancels) {
    Rng rng(45);
    for (int i = 0; i < 500; ++i) {
        FormalSum a = oracle::random_sum(rng, 5, 3, 3), b = oracle::random_sum(rng, 5, 3, 3),
                  c = oracle::random_sum(rng, 5, 3, 3);
        EXPECT_EQ(sum_add(sum_add(a, b), c), sum_add(a, sum_add(b, c)));
        EXPECT_EQ(sum_add(a, sum_negate(a)), FormalSum{});
        EXPECT_EQ(sum_add(sum_negate(a), a), FormalSum{});
    }
}
