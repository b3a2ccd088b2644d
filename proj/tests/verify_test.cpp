#include "tiltcert/verify.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

namespace tiltcert {
namespace {

const Report& default_report() {
    static const Report r = verify_all();
    return r;
}

TEST(Verify, DefaultRegionCertifies) {
    const Report& r = default_report();
    EXPECT_EQ(r.status, CertStatus::Certified);
    for (const ReportItem& item : r.items) EXPECT_EQ(item.status, CertStatus::Certified) << item.name;
}

TEST(Verify, ExpectedItemsPresent) {
    const Report& r = default_report();
    for (const char* name :
         {"resolution alternating sum vanishes", "spinor sequence ch(S(-1)) + ch(S) = 4ch(O)", "ch^beta(S(-1))",
          "nu(O(-1))", "Z(O(1)) imaginary part", "half-plane A: Re Z(S(-1)[2]) <= 0",
          "half-plane B: cross(Z(O[1]), Z(O(-1)[3])) <= 0", "Im Z(0,2,4,1) > 0 (base)", "Im Z(0,1,0,1) > 0 (base)",
          "reduction to base vectors covers all candidates", "Im Z(0,0,4,1) > 0 (direct)", "mu(S(-1)) <= 0",
          "mu(O) >= 0", "BG equality for line bundles"}) {
        EXPECT_NE(r.find(name), nullptr) << name;
    }
    std::size_t direct = 0;
    for (const ReportItem& item : r.items) direct += item.name.ends_with("(direct)") ? 1 : 0;
    EXPECT_EQ(direct, 11U);
}

TEST(Verify, DiscrepancyIsRecorded) {
    const ReportItem* item = default_report().find("table (0,1,0,1) matches additivity oracle");
    ASSERT_NE(item, nullptr);
    bool found = false;
    for (const std::string& n : item->notes) found = found || n.starts_with("discrepancy:");
    EXPECT_TRUE(found);
    EXPECT_NE(printed_table_0101(), heart_z_polynomials({0, 1, 0, 1}, Rational(1, 6), quadric_threefold()).im);
    EXPECT_EQ(printed_table_0241(), heart_z_polynomials({0, 2, 4, 1}, Rational(1, 6), quadric_threefold()).im);
}

TEST(Verify, CaseBOrientationNote) {
    const ReportItem* item = default_report().find("half-plane B: cross(Z(O[1]), Z(O(1))) <= 0");
    ASSERT_NE(item, nullptr);
    bool found = false;
    for (const std::string& n : item->notes) found = found || n.find("-5/512") != std::string::npos;
    EXPECT_TRUE(found);
}

TEST(Verify, DepthZeroIsInconclusive) {
    const Report r = verify_all(0);
    EXPECT_EQ(r.status, CertStatus::Inconclusive);
    const ReportItem* item = r.find("Im Z(0,2,4,1) > 0 (direct)");
    ASSERT_NE(item, nullptr);
    EXPECT_EQ(item->status, CertStatus::Inconclusive);
}

TEST(Verify, WidenedRegionFailsWithWitnesses) {
    VerifyOptions o;
    o.region = Region{RationalInterval(Rational(-1, 2), Rational(1, 2)), RationalInterval::open(Rational(0), Rational(1, 3))};
    const Report r = verify_all(o);
    EXPECT_EQ(r.status, CertStatus::Failed);
    for (const ReportItem& item : r.items) {
        if (item.status != CertStatus::Failed || !item.certificate) continue;
        ASSERT_TRUE(item.certificate->witness.has_value()) << item.name;
        ASSERT_TRUE(item.claim.has_value());
        const Point& w = *item.certificate->witness;
        EXPECT_TRUE(o.region.contains(w)) << item.name;
        EXPECT_FALSE(satisfies(item.claim->target.eval(w.alpha, w.beta), item.claim->overall)) << item.name;
    }
    const ReportItem* a = r.find("half-plane A: Re Z(O[1]) <= 0");
    ASSERT_NE(a, nullptr);
    EXPECT_EQ(a->status, CertStatus::Failed);
}

TEST(Verify, MutatedClosedFormFails) {
    auto forms = closed_forms();
    for (ObjectForms& f : forms) {
        if (f.label == "S(-1)") f.character.ch3 += Rational(1, 100);
    }
    const Report r = verify_closed_forms(forms);
    EXPECT_EQ(r.status, CertStatus::Failed);
    EXPECT_EQ(r.find("ch^beta(S(-1))")->status, CertStatus::Failed);
    EXPECT_EQ(r.find("Z(S(-1)) real part")->status, CertStatus::Failed);
    EXPECT_EQ(r.find("mu(S(-1))")->status, CertStatus::Certified);
    EXPECT_EQ(r.find("ch^beta(O)")->status, CertStatus::Certified);
}

TEST(Verify, OppositeMuOrientationFailsForO) {
    const BivariatePoly target = BivariatePoly::parse("-b");
    const FactoredClaim claim{"mu(O) <= 0", target, {{target, SignTarget::NonPositive, Strategy::RegionAtom}},
                              SignTarget::NonPositive};
    const SignCertificate cert = certify_sign(claim, Region::standard(), 16);
    EXPECT_EQ(cert.status, CertStatus::Failed);
    ASSERT_TRUE(cert.witness.has_value());
    EXPECT_TRUE(check_certificate(claim, Region::standard(), cert));
}

TEST(Verify, JsonReportShape) {
    const std::string text = report_to_json(default_report());
    const auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j.at("status"), "certified");
    ASSERT_TRUE(j.at("items").is_array());
    for (const auto& item : j.at("items")) {
        for (const char* key : {"name", "status", "factors", "witness", "boxes", "depth", "notes"}) {
            EXPECT_TRUE(item.contains(key)) << key;
        }
    }
    EXPECT_EQ(text, report_to_json(verify_all()));
    VerifyOptions o;
    o.threads = 4;
    EXPECT_EQ(text, report_to_json(verify_all(o)));
}

TEST(Verify, FailedReportJsonHasWitness) {
    VerifyOptions o;
    o.region = Region{RationalInterval(Rational(-1, 2), Rational(1, 2)), RationalInterval::open(Rational(0), Rational(1, 3))};
    const auto j = nlohmann::json::parse(report_to_json(verify_all(o)));
    EXPECT_EQ(j.at("status"), "failed");
    bool any = false;
    for (const auto& item : j.at("items")) {
        if (item.at("status") == "failed" && !item.at("witness").is_null()) {
            any = true;
            EXPECT_TRUE(item.at("witness").contains("alpha"));
        }
    }
    EXPECT_TRUE(any);
}

}  // namespace
}  // namespace tiltcert
