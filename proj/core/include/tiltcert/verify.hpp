#pragma once

#include "tiltcert/certify.hpp"
#include "tiltcert/chern.hpp"
#include "tiltcert/heart.hpp"
#include "tiltcert/tilt.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiltcert {

struct ReportItem {
    std::string name;
    CertStatus status = CertStatus::Inconclusive;
    std::optional<FactoredClaim> claim;
    std::optional<SignCertificate> certificate;
    std::vector<std::string> notes;
};

struct Report {
    CertStatus status = CertStatus::Certified;
    std::vector<ReportItem> items;

    /// Certified iff every item is; failed if any item failed.
    void aggregate();
    void append(const Report& other);
    const ReportItem* find(const std::string& name) const;
};

/// {"status": ..., "items": [{"name","status","factors","witness","boxes","depth","notes"}]}
std::string report_to_json(const Report& report);

/// num/den representation of a slope closed form.
struct SlopeForm {
    BivariatePoly num;
    BivariatePoly den;
};

/// Published closed forms for one object, checked against the computed side.
struct ObjectForms {
    std::string label;
    ChernCharacter character;        // untwisted, input to the computed side
    std::array<BivariatePoly, 4> twisted;
    SlopeForm mu;
    SlopeForm nu;
    ZPolynomials z;  // at s = 1/6
};

/// O(1), O, O(-1), S(-1) with their printed ch^β, μ, ν and Z.
std::vector<ObjectForms> closed_forms();

/// Published Im Z entries for the two base subobjects of k(x).
BivariatePoly printed_table_0241();
BivariatePoly printed_table_0101();

Report verify_structural_identities();
Report verify_closed_forms(const std::vector<ObjectForms>& forms = closed_forms());
Report verify_half_plane(const Region& region = Region::standard(), int max_depth = 16, unsigned threads = 1);
Report verify_skyscraper_condition(const Region& region = Region::standard(), int max_depth = 16, unsigned threads = 1);
Report verify_mu_signs(const Region& region = Region::standard(), int max_depth = 16, unsigned threads = 1);
Report verify_line_bundle_bg();

struct VerifyOptions {
    Region region = Region::standard();
    int max_depth = 16;
    unsigned threads = 1;
    std::vector<ObjectForms> forms = closed_forms();
};

Report verify_all(const VerifyOptions& options = {});
Report verify_all(int max_depth);

/// Sample point fixing the Case B half-plane orientation.
Point half_plane_orientation_point();

}  // namespace tiltcert
