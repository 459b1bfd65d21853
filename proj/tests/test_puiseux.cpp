#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weakind;

namespace {

const std::vector<Int> P23 = {2, 3};

Rational r(long long n, long long d = 1) { return Rational(n, d); }

TruncatedRoot root(std::vector<std::pair<Rational, Rational>> exp_coeff, bool terminates = false) {
    return TruncatedRoot{std::move(exp_coeff), terminates};
}

}  // namespace

TEST(Puiseux, SmoothDenominators) {
    EXPECT_TRUE(smooth_denominator_check(1, P23));
    EXPECT_TRUE(smooth_denominator_check(12, P23));
    EXPECT_FALSE(smooth_denominator_check(10, P23));
    EXPECT_FALSE(smooth_denominator_check(7, {}));
    EXPECT_THROW(smooth_denominator_check(0, P23), std::invalid_argument);
    EXPECT_TRUE(smooth_exponent(r(5, 6), P23));
    EXPECT_FALSE(smooth_exponent(r(1, 5), P23));
}

TEST(Puiseux, PolynomialArithmeticAndRender) {
    PuiseuxPoly a(P23, {{r(1), r(1, 2)}, {r(-1), r(0)}});
    EXPECT_EQ(render(a), "X^(1/2) - 1");
    EXPECT_EQ(a.leading_exponent(), r(1, 2));
    EXPECT_EQ(a.leading_coefficient(), 1);
    PuiseuxPoly sq = a * a;  // X - 2X^(1/2) + 1
    EXPECT_EQ(sq.coefficient(r(1)), 1);
    EXPECT_EQ(sq.coefficient(r(1, 2)), -2);
    EXPECT_EQ(sq.coefficient(r(0)), 1);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_THROW(PuiseuxPoly().leading_exponent(), std::domain_error);
    EXPECT_THROW(PuiseuxPoly(P23, {{r(1), r(1, 5)}}), std::invalid_argument);
    EXPECT_THROW(a + PuiseuxPoly({2}, {{r(1), r(1)}}), std::invalid_argument);
}

TEST(Puiseux, Membership) {
    EXPECT_TRUE(PuiseuxPoly(P23, {{r(3), r(2, 3)}, {r(-4), r(0)}}).is_member());
    EXPECT_FALSE(PuiseuxPoly(P23, {{r(-3), r(2, 3)}}).is_member());
    EXPECT_TRUE(PuiseuxPoly(P23, {{r(-3), r(2, 3)}}).is_ring_member());
    EXPECT_FALSE(PuiseuxPoly(P23, {{r(1, 2), r(0)}}).is_ring_member());
    EXPECT_FALSE(PuiseuxPoly(P23, {{r(1), r(-1)}}).is_ring_member());
    EXPECT_TRUE(PuiseuxPoly(P23).is_member());
}

TEST(Puiseux, ExponentCandidates) {
    // t^2 - X: root X^(1/2)
    std::vector<PuiseuxPoly> f = {PuiseuxPoly(P23, {{r(-1), r(1)}}), PuiseuxPoly(P23), PuiseuxPoly::constant(P23, 1)};
    EXPECT_EQ(exponent_candidates(f, 8), (std::set<Rational>{r(1, 2)}));
    // t^3 - X^(1/2) t - X
    std::vector<PuiseuxPoly> g = {PuiseuxPoly(P23, {{r(-1), r(1)}}), PuiseuxPoly(P23, {{r(-1), r(1, 2)}}),
                                  PuiseuxPoly(P23), PuiseuxPoly::constant(P23, 1)};
    EXPECT_EQ(exponent_candidates(g, 8), (std::set<Rational>{r(1, 2), r(1, 3), r(1, 4)}));
    EXPECT_THROW(exponent_candidates({PuiseuxPoly(P23)}, 8), std::invalid_argument);
    EXPECT_THROW(exponent_candidates(f, 1), std::invalid_argument);
}

TEST(Puiseux, CandidatesContainActualRootExponents) {
    // t^k - X^a has the root X^(a/k).
    for (long long k = 1; k <= 5; ++k)
        for (long long a = 0; a <= 5; ++a) {
            std::vector<PuiseuxPoly> f(static_cast<std::size_t>(k + 1), PuiseuxPoly({2, 3, 5}));
            f[0] = PuiseuxPoly({2, 3, 5}, {{r(-1), r(a)}});
            f[static_cast<std::size_t>(k)] = PuiseuxPoly::constant({2, 3, 5}, 1);
            EXPECT_TRUE(exponent_candidates(f, 8).contains(r(a, k))) << k << " " << a;
        }
}

TEST(Puiseux, IntegerPartExamples) {
    // X^(1/2) - 1/2 + ... -> X^(1/2) - 1
    auto s = puiseux_integer_part(root({{r(1, 2), r(1)}, {r(0), r(-1, 2)}}), P23);
    EXPECT_EQ(render(s), "X^(1/2) - 1");
    // 2X + 3 + X^(-1) -> 2X + 3
    EXPECT_EQ(puiseux_integer_part(root({{r(1), r(2)}, {r(0), r(3)}, {r(-1), r(1)}}), P23),
              PuiseuxPoly(P23, {{r(2), r(1)}, {r(3), r(0)}}));
    // 2X + 3 - X^(-1) -> 2X + 2
    EXPECT_EQ(puiseux_integer_part(root({{r(1), r(2)}, {r(0), r(3)}, {r(-1), r(-1)}}), P23),
              PuiseuxPoly(P23, {{r(2), r(1)}, {r(2), r(0)}}));
    // terminating X^(1/3) + 4 is its own integer part
    auto exact = root({{r(1, 3), r(1)}, {r(0), r(4)}}, true);
    EXPECT_EQ(puiseux_integer_part(exact, P23), PuiseuxPoly(P23, {{r(1), r(1, 3)}, {r(4), r(0)}}));
    // rational coefficients on positive exponents are kept
    EXPECT_EQ(puiseux_integer_part(root({{r(1), r(1, 2)}, {r(0), r(7, 3)}}), P23),
              PuiseuxPoly(P23, {{r(1, 2), r(1)}, {r(2), r(0)}}));
}

TEST(Puiseux, IntegerPartErrors) {
    EXPECT_THROW(puiseux_integer_part(root({{r(1), r(1)}, {r(0), r(3)}}), P23), TruncationError);
    EXPECT_THROW(puiseux_integer_part(root({{r(1), r(1)}}), P23), TruncationError);
    EXPECT_THROW(puiseux_integer_part(root({}), P23), TruncationError);
    EXPECT_TRUE(puiseux_integer_part(root({}, true), P23).is_zero());
    EXPECT_THROW(puiseux_integer_part(root({{r(1, 5), r(1)}, {r(0), r(1, 2)}}), P23), std::invalid_argument);
    EXPECT_THROW(puiseux_integer_part(root({{r(0), r(1)}, {r(1), r(1)}}), P23), std::invalid_argument);
}

TEST(Puiseux, IntegerPartsVerify) {
    Rng rng(71);
    int checked = 0;
    for (int i = 0; i < 500; ++i) {
        std::vector<std::pair<Rational, Rational>> terms;
        for (Rational e : {r(3, 2), r(1), r(2, 3), r(1, 2), r(0), r(-1, 3), r(-1)})
            if (rng.chance(1, 2)) terms.emplace_back(e, Rational(rng.uniform(-6, 6), rng.uniform(1, 3)));
        TruncatedRoot t = root(terms, rng.chance(1, 4));
        try {
            auto s = puiseux_integer_part(t, P23);
            ++checked;
            std::string listed;
            for (const auto& [e, c] : t.terms) listed += " " + to_string(c) + "X^" + to_string(e);
            EXPECT_TRUE(verify_integer_part(t, s)) << listed << (t.terminates ? " (exact)" : "") << " -> " << render(s);
            EXPECT_TRUE(is_integer(s.coefficient(0)));
            // s + 1 and s - 1 are not integer parts
            EXPECT_FALSE(verify_integer_part(t, s + PuiseuxPoly::constant(P23, 1)));
            EXPECT_FALSE(verify_integer_part(t, s - PuiseuxPoly::constant(P23, 1)));
        } catch (const TruncationError&) {
        }
    }
    EXPECT_GT(checked, 300);
}

TEST(Puiseux, SeriesSign) {
    EXPECT_EQ(series_sign({{r(1), r(0)}, {r(0), r(-2)}}, false), -1);
    EXPECT_EQ(series_sign({}, true), 0);
    EXPECT_FALSE(series_sign({}, false).has_value());
}
