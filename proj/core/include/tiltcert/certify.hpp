#pragma once

#include "tiltcert/interval.hpp"
#include "tiltcert/polynomial.hpp"
#include "tiltcert/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tiltcert {

enum class SignTarget { Positive, NonNegative, Negative, NonPositive };
enum class Strategy { AffineVertex, IntervalSubdivision, RegionAtom };
enum class SideConstraint { None, AlphaAtMostMinusBeta, AlphaAtLeastMinusBeta };
enum class CertStatus { Certified, Failed, Inconclusive };

std::string to_string(SignTarget s);
std::string to_string(Strategy s);
std::string to_string(SideConstraint s);
std::string to_string(CertStatus s);

/// True when `value` has the sign `target` asks for.
bool satisfies(const Rational& value, SignTarget target);

struct Point {
    Rational alpha;
    Rational beta;

    friend bool operator==(const Point&, const Point&) = default;
};

/// β-range × α-range with openness per endpoint, optionally cut by a side
/// constraint α ≤ −β or α ≥ −β (closed).
struct Region {
    RationalInterval beta;
    RationalInterval alpha;
    SideConstraint side = SideConstraint::None;

    /// Default region β ∈ [−1/2, 0], α ∈ (0, 1/3).
    static Region standard();

    Region with_side(SideConstraint s) const;
    bool contains(const Point& p) const;
    std::string str() const;
};

struct Factor {
    BivariatePoly expr;
    SignTarget sign = SignTarget::Positive;
    Strategy strategy = Strategy::IntervalSubdivision;
};

/// Claim "target has sign `overall` on the region", argued through a
/// factorisation target = Π factors with a sign per factor.
struct FactoredClaim {
    std::string name;
    BivariatePoly target;
    std::vector<Factor> factors;
    SignTarget overall = SignTarget::Positive;
};

struct VertexValue {
    Point point;
    Rational value;
    bool on_open_boundary = false;
};

struct AtomUse {
    std::string constraint;
    Rational multiplier;
    bool strict = false;
};

struct FactorEvidence {
    CertStatus status = CertStatus::Inconclusive;
    // affine-vertex
    std::vector<VertexValue> vertices;
    // region-atom: expr (or −expr) = constant + Σ multiplier·constraint
    Rational constant;
    std::vector<AtomUse> atoms;
    // interval-subdivision: preorder tree, S split, C certified, D discarded,
    // U undecided, X refuted at the box centre
    std::string tree;
    std::size_t boxes = 0;
    unsigned depth = 0;
    std::optional<Point> violation;
    std::string note;
};

struct SignCertificate {
    std::string name;
    CertStatus status = CertStatus::Inconclusive;
    std::vector<FactorEvidence> evidence;  // parallel to claim.factors
    std::optional<Point> witness;
    std::size_t boxes = 0;
    unsigned depth = 0;
    std::vector<std::string> notes;
};

/// Sound sign certification. Certified only with per-factor proofs;
/// failed only with a witness in the region violating the overall claim;
/// otherwise inconclusive. max_depth bounds the bisection depth (0 means
/// the root box only). Sub-boxes are processed on up to `threads` threads
/// with a deterministic merge. Throws std::invalid_argument for malformed
/// claims (factor signs not implying the overall sign, non-affine factor
/// under an affine strategy, negative depth).
SignCertificate certify_sign(const FactoredClaim& claim, const Region& region, int max_depth, unsigned threads = 1);

/// Independent re-check of a certificate: product identity, vertex values,
/// atom identities, interval tree replay, witness violation.
bool check_certificate(const FactoredClaim& claim, const Region& region, const SignCertificate& cert);

/// Vertices of the closed region hull (box ∩ side half-plane), in a fixed order.
std::vector<Point> region_vertices(const Region& region);

}  // namespace tiltcert
