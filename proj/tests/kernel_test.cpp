#include "test_support.hpp"

#include "tiltcert/interval.hpp"
#include "tiltcert/polynomial.hpp"
#include "tiltcert/rational.hpp"

#include <gtest/gtest.h>

namespace tiltcert {
namespace {

TEST(Rational, ParseCanonical) {
    EXPECT_EQ(Rational::parse("6/8").str(), "3/4");
    EXPECT_EQ(Rational::parse("-1/3").str(), "-1/3");
    EXPECT_EQ(Rational::parse("7").str(), "7");
    EXPECT_EQ(Rational::parse("-0").str(), "0");
    EXPECT_EQ(Rational::parse("4/2"), Rational(2));
}

TEST(Rational, ParseRejectsMalformed) {
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "abc", "1.5", "1/-2", "--1", " 1", "1/2/3", "+1"}) {
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Rational, Arithmetic) {
    const Rational a(1, 3);
    const Rational b(-1, 6);
    EXPECT_EQ(a + b, Rational(1, 6));
    EXPECT_EQ(a - b, Rational(1, 2));
    EXPECT_EQ(a * b, Rational(-1, 18));
    EXPECT_EQ(a / b, Rational(-2));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_THROW(a / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
    EXPECT_EQ(max(a, b), a);
    EXPECT_EQ(min(a, b), b);
}

TEST(Rational, ToFixedRoundsHalfAwayFromZero) {
    EXPECT_EQ(Rational(1, 3).to_fixed(6), "0.333333");
    EXPECT_EQ(Rational(2, 3).to_fixed(6), "0.666667");
    EXPECT_EQ(Rational(-2, 3).to_fixed(6), "-0.666667");
    EXPECT_EQ(Rational(1, 2).to_fixed(0), "1");
    EXPECT_EQ(Rational(-1, 2).to_fixed(0), "-1");
    EXPECT_EQ(Rational(250).to_fixed(6), "250.000000");
    EXPECT_EQ(Rational(-1, 10000000).to_fixed(6), "0.000000");
    EXPECT_EQ(Rational(1, 2000000).to_fixed(6), "0.000001");
}

TEST(Interval, BasicArithmetic) {
    const RationalInterval x(Rational(-1), Rational(2));
    const RationalInterval y(Rational(1, 2), Rational(1));
    EXPECT_EQ(x + y, RationalInterval(Rational(-1, 2), Rational(3)));
    EXPECT_EQ(x - y, RationalInterval(Rational(-2), Rational(3, 2)));
    EXPECT_EQ(x * y, RationalInterval(Rational(-1), Rational(2)));
    EXPECT_EQ(x.pow(2), RationalInterval(Rational(0), Rational(4)));
    EXPECT_EQ(x.pow(3), RationalInterval(Rational(-1), Rational(8)));
    EXPECT_EQ(Rational(-2) * y, RationalInterval(Rational(-2), Rational(-1)));
}

TEST(Interval, OpenEndpointsPropagate) {
    const RationalInterval a = RationalInterval::open(Rational(0), Rational(1, 3));
    EXPECT_TRUE(a.certainly_positive());
    EXPECT_FALSE(a.contains(Rational(0)));
    EXPECT_TRUE(a.contains(Rational(1, 6)));
    const RationalInterval sq = a.pow(2);
    EXPECT_TRUE(sq.lo_open());
    EXPECT_TRUE(sq.certainly_positive());
    // closed zero times open positive: zero is attained
    const RationalInterval b(Rational(0), Rational(1));
    EXPECT_FALSE((a * b).certainly_positive());
    EXPECT_TRUE((a * b).certainly_nonnegative());
    EXPECT_TRUE((-a).certainly_negative());
    EXPECT_EQ(a.str(), "(0, 1/3)");
    EXPECT_EQ(b.str(), "[0, 1]");
}

TEST(Interval, IntersectAndHalves) {
    const RationalInterval a(Rational(0), Rational(2), true, false);
    const RationalInterval b(Rational(1), Rational(3));
    const auto c = a.intersect(b);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, RationalInterval(Rational(1), Rational(2)));
    EXPECT_FALSE(RationalInterval(Rational(0), Rational(1), false, true)
                     .intersect(RationalInterval(Rational(1), Rational(2)))
                     .has_value());
    EXPECT_EQ(a.lower_half(), RationalInterval(Rational(0), Rational(1), true, false));
    EXPECT_EQ(a.upper_half(), RationalInterval(Rational(1), Rational(2)));
}

TEST(Polynomial, ParseAndCanonicalText) {
    const BivariatePoly p = BivariatePoly::parse("b + 1/3*a^2*b - 2*b + 1 + 0*a");
    EXPECT_EQ(p.str(), "1/3*a^2*b - b + 1");
    EXPECT_EQ(BivariatePoly::parse(p.str()), p);
    EXPECT_EQ(BivariatePoly::parse("(a - b)*(a + b)").str(), "a^2 - b^2");
    EXPECT_EQ(BivariatePoly::parse("-(1 - b)^2").str(), "-b^2 + 2*b - 1");
    EXPECT_EQ(BivariatePoly().str(), "0");
    EXPECT_EQ(BivariatePoly(Rational(-1, 6)).str(), "-1/6");
    for (const char* bad : {"", "a +", "c", "a^", "(a", "a**2", "1/0*a"}) {
        EXPECT_THROW(BivariatePoly::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(Polynomial, GradedLexOrder) {
    const BivariatePoly p = BivariatePoly::parse("b^3 + a + a^3 + a*b^2 + 1 + b");
    EXPECT_EQ(p.str(), "a^3 + a*b^2 + b^3 + a + b + 1");
    EXPECT_EQ(p.total_degree(), 3U);
    EXPECT_EQ(p.degree_alpha(), 3U);
    EXPECT_EQ(p.degree_beta(), 3U);
}

TEST(Polynomial, EvalAndDivide) {
    const BivariatePoly a = BivariatePoly::alpha();
    const BivariatePoly b = BivariatePoly::beta();
    const BivariatePoly p = a * (BivariatePoly(1) + 3 * (b.pow(2) - a.pow(2)));
    EXPECT_EQ(p.str(), "-3*a^3 + 3*a*b^2 + a");
    EXPECT_EQ(p.eval(Rational(1, 4), Rational(-1, 4)), Rational(1, 4));
    const auto q = p.divide_by_alpha_power(1);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(q->str(), "-3*a^2 + 3*b^2 + 1");
    EXPECT_FALSE(p.divide_by_alpha_power(2).has_value());
    EXPECT_EQ(poly_eval(p, Rational(0), Rational(5)), Rational(0));
    EXPECT_EQ(p.coefficient(1, 2), Rational(3));
    EXPECT_EQ(p.coefficient(2, 0), Rational(0));
}

TEST(Polynomial, HornerTightensCornerEnclosure) {
    // β² + β − α² on a small box at the corner (0, 0): the naive extension
    // straddles 0, the Horner form in β does not.
    const BivariatePoly f = BivariatePoly::parse("b^2 + b - a^2");
    const RationalInterval alpha = RationalInterval::open(Rational(0), Rational(1, 64));
    const RationalInterval beta(Rational(-1, 64), Rational(0));
    EXPECT_TRUE(f.enclosure(alpha, beta).certainly_nonpositive());
    EXPECT_TRUE(f.enclosure(alpha, beta).certainly_negative());
    EXPECT_FALSE(f.interval_eval(alpha, beta).certainly_negative());
}

TEST(Polynomial, EnclosureContainsSamples) {
    testing::RandomSource rs(7);
    for (int trial = 0; trial < 200; ++trial) {
        const BivariatePoly p = rs.poly(4, 6);
        const Rational alo = rs.rational(3, 4);
        const Rational blo = rs.rational(3, 4);
        const RationalInterval ai(alo, alo + Rational(rs.integer(1, 8), 8));
        const RationalInterval bi(blo, blo + Rational(rs.integer(1, 8), 8));
        const RationalInterval enc = p.enclosure(ai, bi);
        for (int k = 0; k < 10; ++k) {
            const Rational x = rs.rational_in(ai.lo(), ai.hi());
            const Rational y = rs.rational_in(bi.lo(), bi.hi());
            ASSERT_TRUE(enc.contains(p.eval(x, y))) << p.str() << " at " << x.str() << ", " << y.str();
        }
    }
}

}  // namespace
}  // namespace tiltcert
