#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace weakind;

namespace {

Decision decide_text(const char* s, const char* t) { return decide(parse_term(s), parse_term(t)); }

}  // namespace

TEST(Decider, ConstantSides) {
    auto d = decide_text("2 + 2", "4");
    EXPECT_EQ(d.verdict, Verdict::sat);
    EXPECT_EQ(d.case_tag, CaseTag::const_const);
    EXPECT_EQ(decide_text("2*2", "5").verdict, Verdict::unsat);
    // A variable under a zero factor leaves the side constant.
    auto z = decide_text("0*x", "0");
    EXPECT_EQ(z.verdict, Verdict::sat);
    EXPECT_EQ(z.case_tag, CaseTag::const_const);
    EXPECT_TRUE(verify_witness(parse_term("0*x"), parse_term("0"), z));
}

TEST(Decider, ConstantAgainstPolynomial) {
    auto d = decide_text("x*x + y", "5");
    EXPECT_EQ(d.verdict, Verdict::sat);
    EXPECT_EQ(d.case_tag, CaseTag::const_poly);
    EXPECT_TRUE(verify_witness(parse_term("x*x + y"), parse_term("5"), d));

    EXPECT_EQ(decide_text("2*x", "3").verdict, Verdict::unsat);
    EXPECT_EQ(decide_text("x*x + 2", "1").verdict, Verdict::unsat);
    EXPECT_EQ(decide_text("S(x)", "0").verdict, Verdict::unsat);
    EXPECT_EQ(decide_text("x*x*x", "27").verdict, Verdict::sat);
    EXPECT_EQ(decide_text("x*x*x", "26").verdict, Verdict::unsat);
}

TEST(Decider, TwoNonconstantSidesUseOmega) {
    auto d = decide_text("S(x)", "x");
    EXPECT_EQ(d.verdict, Verdict::sat);
    EXPECT_EQ(d.case_tag, CaseTag::poly_poly);
    EXPECT_TRUE(std::holds_alternative<AllOmega>(d.witness));
    EXPECT_TRUE(verify_witness(parse_term("S(x)"), parse_term("x"), d));
    EXPECT_EQ(std::string(case_name(d.case_tag)), "poly-poly");
}

TEST(Decider, VerifyWitnessRejectsWrongAssignment) {
    Term s = parse_term("2*x"), t = parse_term("4");
    Decision bad{Verdict::sat, Assignment{{"x", 3}}, CaseTag::const_poly};
    EXPECT_FALSE(verify_witness(s, t, bad));
    Decision missing{Verdict::sat, Assignment{}, CaseTag::const_poly};
    EXPECT_FALSE(verify_witness(s, t, missing));
    EXPECT_THROW(verify_witness(s, t, decide_text("1", "2")), std::invalid_argument);
}

TEST(Decider, SymmetricAndRenamingInvariant) {
    Rng rng(21);
    TermGenConfig cfg{4, {"x", "y"}, 3};
    for (int i = 0; i < 500; ++i) {
        Term s = random_term(rng, cfg), t = random_term(rng, cfg);
        auto d = decide(s, t);
        EXPECT_EQ(d.verdict, decide(t, s).verdict);
        Term s2 = substitute(substitute(substitute(s, "x", Term::var("tmp")), "y", Term::var("x")), "tmp", Term::var("y"));
        Term t2 = substitute(substitute(substitute(t, "x", Term::var("tmp")), "y", Term::var("x")), "tmp", Term::var("y"));
        EXPECT_EQ(d.verdict, decide(s2, t2).verdict) << render(s) << " = " << render(t);
        if (d.verdict == Verdict::sat) EXPECT_TRUE(verify_witness(s, t, d));
    }
}

TEST(Decider, AgreesWithBruteForceOracle) {
    Rng rng(22);
    TermGenConfig cfg{3, {"x", "y"}, 6};
    int checked = 0;
    while (checked < 500) {
        Term s = random_term(rng, cfg), t = random_term(rng, cfg);
        auto cs = oracle::constant_value(s), ct = oracle::constant_value(t);
        if ((cs && *cs > 12) || (ct && *ct > 12)) continue;
        ++checked;
        EXPECT_EQ(decide(s, t).verdict == Verdict::sat, oracle::brute_force_sat(s, t)) << render(s) << " = " << render(t);
    }
}
