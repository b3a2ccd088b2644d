#include "tiltcert/certify.hpp"

#include <gtest/gtest.h>

namespace tiltcert {
namespace {

using enum SignTarget;

BivariatePoly P(const char* text) { return BivariatePoly::parse(text); }

FactoredClaim single(const char* expr, SignTarget sign, Strategy strategy) {
    return {expr, P(expr), {{P(expr), sign, strategy}}, sign};
}

TEST(Certify, RegionBasics) {
    const Region r = Region::standard();
    EXPECT_EQ(r.str(), "beta in [-1/2, 0], alpha in (0, 1/3)");
    EXPECT_TRUE(r.contains({Rational(1, 4), Rational(0)}));
    EXPECT_FALSE(r.contains({Rational(0), Rational(-1, 4)}));
    EXPECT_FALSE(r.contains({Rational(1, 3), Rational(-1, 4)}));
    const Region b = r.with_side(SideConstraint::AlphaAtMostMinusBeta);
    EXPECT_TRUE(b.contains({Rational(1, 8), Rational(-1, 8)}));
    EXPECT_FALSE(b.contains({Rational(1, 4), Rational(-1, 8)}));
    EXPECT_EQ(region_vertices(b).size(), 4U);
    EXPECT_EQ(region_vertices(r).size(), 4U);
}

TEST(Certify, AffineVertex) {
    const FactoredClaim c = single("1 - b - a", Positive, Strategy::AffineVertex);
    const SignCertificate cert = certify_sign(c, Region::standard(), 4);
    EXPECT_EQ(cert.status, CertStatus::Certified);
    EXPECT_EQ(cert.evidence.at(0).vertices.size(), 4U);
    EXPECT_TRUE(check_certificate(c, Region::standard(), cert));
}

TEST(Certify, StrictSignToleratesZerosOnOpenEdge) {
    // α vanishes only on the excluded edge α = 0.
    const FactoredClaim c = single("a", Positive, Strategy::AffineVertex);
    EXPECT_EQ(certify_sign(c, Region::standard(), 0).status, CertStatus::Certified);
    // β vanishes on the included edge β = 0.
    const FactoredClaim d = single("b", Negative, Strategy::AffineVertex);
    const SignCertificate cert = certify_sign(d, Region::standard(), 0);
    EXPECT_EQ(cert.status, CertStatus::Failed);
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_EQ(cert.witness->beta, Rational(0));
    EXPECT_TRUE(Region::standard().contains(*cert.witness));
    EXPECT_TRUE(check_certificate(d, Region::standard(), cert));
}

TEST(Certify, RegionAtom) {
    const Region a_side = Region::standard().with_side(SideConstraint::AlphaAtLeastMinusBeta);
    const FactoredClaim c = single("a + b", NonNegative, Strategy::RegionAtom);
    const SignCertificate cert = certify_sign(c, a_side, 0);
    ASSERT_EQ(cert.status, CertStatus::Certified);
    EXPECT_FALSE(cert.evidence[0].atoms.empty());
    EXPECT_TRUE(check_certificate(c, a_side, cert));
    // a − b > 0 from α > 0 and β ≤ 0
    EXPECT_EQ(certify_sign(single("a - b", Positive, Strategy::RegionAtom), Region::standard(), 0).status,
              CertStatus::Certified);
    // not a combination: α + β has no sign on the whole region
    const SignCertificate bad = certify_sign(single("a + b", NonNegative, Strategy::RegionAtom), Region::standard(), 0);
    EXPECT_EQ(bad.status, CertStatus::Failed);
}

TEST(Certify, IntervalSubdivision) {
    // (1 + β)² − α² has minimum 1/4 − 1/9 at the corner (α, β) = (1/3, −1/2);
    // neither enclosure decides the root box.
    const FactoredClaim c = single("b^2 + 2*b + 1 - a^2", Positive, Strategy::IntervalSubdivision);
    const SignCertificate cert = certify_sign(c, Region::standard(), 16);
    ASSERT_EQ(cert.status, CertStatus::Certified);
    EXPECT_GT(cert.boxes, 1U);
    EXPECT_LE(cert.depth, 16U);
    EXPECT_EQ(cert.evidence[0].tree.front(), 'S');
    EXPECT_TRUE(check_certificate(c, Region::standard(), cert));
    // depth 0 cannot decide it, and there is no counterexample either
    const SignCertificate shallow = certify_sign(c, Region::standard(), 0);
    EXPECT_EQ(shallow.status, CertStatus::Inconclusive);
    EXPECT_FALSE(shallow.witness.has_value());
}

TEST(Certify, IntervalFailureHasWitness) {
    const FactoredClaim c = single("b^2 + b - a^2 + 1/8", Negative, Strategy::IntervalSubdivision);
    const SignCertificate cert = certify_sign(c, Region::standard(), 12);
    ASSERT_EQ(cert.status, CertStatus::Failed);
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_TRUE(Region::standard().contains(*cert.witness));
    EXPECT_GE(c.target.eval(cert.witness->alpha, cert.witness->beta).sign(), 0);
}

TEST(Certify, ProductMismatchIsNeverCertified) {
    FactoredClaim c{"mismatch", P("2*a"), {{P("a"), Positive, Strategy::AffineVertex}}, Positive};
    const SignCertificate cert = certify_sign(c, Region::standard(), 4);
    EXPECT_NE(cert.status, CertStatus::Certified);
    ASSERT_FALSE(cert.notes.empty());
}

TEST(Certify, MalformedClaimsThrow) {
    const Region r = Region::standard();
    EXPECT_THROW(certify_sign(single("a", Positive, Strategy::AffineVertex), r, -1), std::invalid_argument);
    EXPECT_THROW(certify_sign({"empty", P("a"), {}, Positive}, r, 4), std::invalid_argument);
    EXPECT_THROW(certify_sign(single("a^2", Positive, Strategy::AffineVertex), r, 4), std::invalid_argument);
    EXPECT_THROW(certify_sign(single("a*b", Positive, Strategy::RegionAtom), r, 4), std::invalid_argument);
    // ≥ 0 times > 0 does not give > 0
    FactoredClaim weak{"weak", P("a*(a + b)"),
                       {{P("a"), Positive, Strategy::RegionAtom}, {P("a + b"), NonNegative, Strategy::RegionAtom}},
                       Positive};
    EXPECT_THROW(certify_sign(weak, r, 4), std::invalid_argument);
}

TEST(Certify, SignAlgebraOfFactors) {
    // (−)·(−)·(≤0) = ≤0
    FactoredClaim c{"neg-neg-nonpos", P("(b - 1)*(b - a)*(b + a)"),
                    {{P("b - 1"), Negative, Strategy::AffineVertex},
                     {P("b - a"), Negative, Strategy::RegionAtom},
                     {P("b + a"), NonPositive, Strategy::RegionAtom}},
                    NonPositive};
    const Region r = Region::standard().with_side(SideConstraint::AlphaAtMostMinusBeta);
    const SignCertificate cert = certify_sign(c, r, 4);
    EXPECT_EQ(cert.status, CertStatus::Certified);
    EXPECT_TRUE(check_certificate(c, r, cert));
}

TEST(Certify, CornerNeedsOpenFlags) {
    // β² + β − α² < 0 is decided on the root box only because α = 0 is excluded.
    const FactoredClaim c = single("b^2 + b - a^2", Negative, Strategy::IntervalSubdivision);
    EXPECT_EQ(certify_sign(c, Region::standard(), 0).status, CertStatus::Certified);
    const Region closed{RationalInterval(Rational(-1, 2), Rational(0)), RationalInterval(Rational(0), Rational(1, 3))};
    const SignCertificate cert = certify_sign(c, closed, 8);
    EXPECT_EQ(cert.status, CertStatus::Failed);
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_EQ(cert.witness->alpha, Rational(0));
}

TEST(Certify, TamperedCertificateIsRejected) {
    const FactoredClaim c = single("b^2 + 2*b + 1 - a^2", Positive, Strategy::IntervalSubdivision);
    SignCertificate cert = certify_sign(c, Region::standard(), 16);
    ASSERT_TRUE(check_certificate(c, Region::standard(), cert));
    SignCertificate truncated = cert;
    truncated.evidence[0].tree = "C";
    EXPECT_FALSE(check_certificate(c, Region::standard(), truncated));
    const FactoredClaim v = single("1 - b - a", Positive, Strategy::AffineVertex);
    SignCertificate vc = certify_sign(v, Region::standard(), 0);
    vc.evidence[0].vertices[0].value = Rational(7);
    EXPECT_FALSE(check_certificate(v, Region::standard(), vc));
    // a fake witness must actually violate the claim
    SignCertificate fake = cert;
    fake.status = CertStatus::Failed;
    fake.witness = Point{Rational(1, 4), Rational(-1, 4)};
    ASSERT_GT(c.target.eval(fake.witness->alpha, fake.witness->beta).sign(), 0);
    EXPECT_FALSE(check_certificate(c, Region::standard(), fake));
}

TEST(Certify, ParallelTreesMatchSerial) {
    const FactoredClaim c = single("1 + 3*b^2 - 3*a^2", Positive, Strategy::IntervalSubdivision);
    const Region wide{RationalInterval(Rational(-1), Rational(1)), RationalInterval::open(Rational(0), Rational(1, 2))};
    const SignCertificate s1 = certify_sign(c, wide, 16, 1);
    for (unsigned t : {2U, 4U, 8U}) {
        const SignCertificate st = certify_sign(c, wide, 16, t);
        EXPECT_EQ(st.status, s1.status);
        EXPECT_EQ(st.evidence[0].tree, s1.evidence[0].tree);
        EXPECT_EQ(st.boxes, s1.boxes);
    }
}

}  // namespace
}  // namespace tiltcert
