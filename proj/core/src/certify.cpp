#include "tiltcert/certify.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

namespace tiltcert {

namespace {

constexpr std::size_t kMaxProbes = 64;
constexpr unsigned kWitnessGrid = 32;

// Bits marking which open boundary lines a point lies on.
constexpr unsigned kAlphaLoOpen = 1;
constexpr unsigned kAlphaHiOpen = 2;
constexpr unsigned kBetaLoOpen = 4;
constexpr unsigned kBetaHiOpen = 8;

struct SignClass {
    int sign;
    bool strict;
};

SignClass classify(SignTarget t) {
    switch (t) {
        case SignTarget::Positive: return {1, true};
        case SignTarget::NonNegative: return {1, false};
        case SignTarget::Negative: return {-1, true};
        case SignTarget::NonPositive: return {-1, false};
    }
    return {1, false};
}

bool product_implies(const std::vector<Factor>& factors, SignTarget overall) {
    int sign = 1;
    bool strict = true;
    for (const Factor& f : factors) {
        const SignClass c = classify(f.sign);
        sign *= c.sign;
        strict = strict && c.strict;
    }
    const SignClass want = classify(overall);
    return sign == want.sign && (strict || !want.strict);
}

bool side_ok(SideConstraint side, const Rational& alpha, const Rational& beta) {
    switch (side) {
        case SideConstraint::None: return true;
        case SideConstraint::AlphaAtLeastMinusBeta: return (alpha + beta).sign() >= 0;
        case SideConstraint::AlphaAtMostMinusBeta: return (alpha + beta).sign() <= 0;
    }
    return true;
}

unsigned open_mask(const Region& r, const Point& p) {
    unsigned m = 0;
    if (r.alpha.lo_open() && p.alpha == r.alpha.lo()) m |= kAlphaLoOpen;
    if (r.alpha.hi_open() && p.alpha == r.alpha.hi()) m |= kAlphaHiOpen;
    if (r.beta.lo_open() && p.beta == r.beta.lo()) m |= kBetaLoOpen;
    if (r.beta.hi_open() && p.beta == r.beta.hi()) m |= kBetaHiOpen;
    return m;
}

// ---- affine-vertex ---------------------------------------------------------

FactorEvidence prove_affine(const BivariatePoly& f, SignTarget target, const Region& region) {
    FactorEvidence ev;
    const SignClass want = classify(target);
    const std::vector<Point> verts = region_vertices(region);
    if (verts.empty()) {
        ev.status = CertStatus::Certified;
        ev.note = "region is empty";
        return ev;
    }
    unsigned zero_mask = ~0u;
    bool any_zero = false;
    bool violated = false;
    for (const Point& p : verts) {
        const Rational v = f.eval(p.alpha, p.beta);
        const unsigned mask = open_mask(region, p);
        ev.vertices.push_back({p, v, mask != 0});
        const int s = v.sign() * want.sign;
        if (s < 0) {
            violated = true;
            if (!ev.violation && region.contains(p)) ev.violation = p;
        } else if (s == 0) {
            any_zero = true;
            zero_mask &= mask;
        }
    }
    // A strict sign survives zeros only if the zero face lies on one open boundary line.
    if (!violated && want.strict && any_zero && zero_mask == 0) {
        violated = true;
        for (const VertexValue& vv : ev.vertices) {
            if (vv.value.is_zero() && !ev.violation && region.contains(vv.point)) ev.violation = vv.point;
        }
        ev.note = "vanishes on a face inside the region";
    }
    ev.status = violated ? CertStatus::Failed : CertStatus::Certified;
    return ev;
}

// ---- region-atom -----------------------------------------------------------

struct Atom {
    std::string name;
    BivariatePoly g;
    bool strict;
};

std::vector<Atom> region_atoms(const Region& r) {
    const BivariatePoly a = BivariatePoly::alpha();
    const BivariatePoly b = BivariatePoly::beta();
    std::vector<Atom> atoms;
    atoms.push_back({std::string("alpha ") + (r.alpha.lo_open() ? ">" : ">=") + " " + r.alpha.lo().str(),
                     a - r.alpha.lo(), r.alpha.lo_open()});
    atoms.push_back({std::string("alpha ") + (r.alpha.hi_open() ? "<" : "<=") + " " + r.alpha.hi().str(),
                     BivariatePoly(r.alpha.hi()) - a, r.alpha.hi_open()});
    atoms.push_back({std::string("beta ") + (r.beta.lo_open() ? ">" : ">=") + " " + r.beta.lo().str(),
                     b - r.beta.lo(), r.beta.lo_open()});
    atoms.push_back({std::string("beta ") + (r.beta.hi_open() ? "<" : "<=") + " " + r.beta.hi().str(),
                     BivariatePoly(r.beta.hi()) - b, r.beta.hi_open()});
    if (r.side == SideConstraint::AlphaAtLeastMinusBeta) atoms.push_back({"alpha + beta >= 0", a + b, false});
    if (r.side == SideConstraint::AlphaAtMostMinusBeta) atoms.push_back({"alpha + beta <= 0", -(a + b), false});
    return atoms;
}

struct Affine {
    Rational ca, cb, c0;
};

Affine affine_coeffs(const BivariatePoly& p) { return {p.coefficient(1, 0), p.coefficient(0, 1), p.coefficient(0, 0)}; }

// Tries f = c0 + Σ λ_i g_i with λ_i ≥ 0, c0 ≥ 0 over atom subsets of size ≤ 2.
std::optional<FactorEvidence> atom_combination(const BivariatePoly& f, bool need_strict, const std::vector<Atom>& atoms) {
    const Affine t = affine_coeffs(f);
    auto accept = [&](const Rational& c0, const std::vector<std::pair<std::size_t, Rational>>& uses)
        -> std::optional<FactorEvidence> {
        if (c0.sign() < 0) return std::nullopt;
        bool strict = c0.sign() > 0;
        for (const auto& [i, lam] : uses) {
            if (lam.sign() < 0) return std::nullopt;
            if (lam.sign() > 0 && atoms[i].strict) strict = true;
        }
        if (need_strict && !strict) return std::nullopt;
        FactorEvidence ev;
        ev.status = CertStatus::Certified;
        ev.constant = c0;
        for (const auto& [i, lam] : uses) {
            if (!lam.is_zero()) ev.atoms.push_back({atoms[i].name, lam, atoms[i].strict});
        }
        return ev;
    };
    if (t.ca.is_zero() && t.cb.is_zero()) {
        if (auto ev = accept(t.c0, {})) return ev;
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const Affine g = affine_coeffs(atoms[i].g);
        std::optional<Rational> lam;
        if (!g.ca.is_zero()) {
            lam = t.ca / g.ca;
        } else if (!g.cb.is_zero()) {
            lam = t.cb / g.cb;
        }
        if (!lam || *lam * g.ca != t.ca || *lam * g.cb != t.cb) continue;
        if (auto ev = accept(t.c0 - *lam * g.c0, {{i, *lam}})) return ev;
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < atoms.size(); ++j) {
            const Affine g = affine_coeffs(atoms[i].g);
            const Affine h = affine_coeffs(atoms[j].g);
            const Rational det = g.ca * h.cb - h.ca * g.cb;
            if (det.is_zero()) continue;
            const Rational li = (t.ca * h.cb - h.ca * t.cb) / det;
            const Rational lj = (g.ca * t.cb - t.ca * g.cb) / det;
            if (auto ev = accept(t.c0 - li * g.c0 - lj * h.c0, {{i, li}, {j, lj}})) return ev;
        }
    }
    return std::nullopt;
}

FactorEvidence prove_atom(const BivariatePoly& f, SignTarget target, const Region& region) {
    const SignClass want = classify(target);
    const BivariatePoly oriented = want.sign > 0 ? f : -f;
    if (auto ev = atom_combination(oriented, want.strict, region_atoms(region))) return *ev;
    // Not derivable from the constraints; look for a concrete refutation.
    FactorEvidence ev = prove_affine(f, target, region);
    ev.vertices.clear();
    ev.status = ev.status == CertStatus::Certified ? CertStatus::Inconclusive : CertStatus::Failed;
    ev.note = "not a nonnegative combination of region constraints";
    return ev;
}

// ---- interval-subdivision --------------------------------------------------

struct Box {
    RationalInterval alpha;
    RationalInterval beta;
};

enum class Axis { Alpha, Beta, None };

struct SubdivisionRule {
    Rational root_alpha_width;
    Rational root_beta_width;

    // Wider side relative to the root box; ties split β.
    Axis choose(const Box& box) const {
        const Rational ra = root_alpha_width.is_zero() ? Rational(0) : box.alpha.width() / root_alpha_width;
        const Rational rb = root_beta_width.is_zero() ? Rational(0) : box.beta.width() / root_beta_width;
        if (rb.sign() > 0 && rb >= ra) return Axis::Beta;
        if (ra.sign() > 0) return Axis::Alpha;
        return Axis::None;
    }

    static std::pair<Box, Box> split(const Box& box, Axis axis) {
        if (axis == Axis::Beta) return {{box.alpha, box.beta.lower_half()}, {box.alpha, box.beta.upper_half()}};
        return {{box.alpha.lower_half(), box.beta}, {box.alpha.upper_half(), box.beta}};
    }
};

bool decided(const RationalInterval& e, SignTarget t) {
    switch (t) {
        case SignTarget::Positive: return e.certainly_positive();
        case SignTarget::NonNegative: return e.certainly_nonnegative();
        case SignTarget::Negative: return e.certainly_negative();
        case SignTarget::NonPositive: return e.certainly_nonpositive();
    }
    return false;
}

bool outside_side(const Box& box, SideConstraint side) {
    switch (side) {
        case SideConstraint::None: return false;
        case SideConstraint::AlphaAtLeastMinusBeta: return (box.alpha.hi() + box.beta.hi()).sign() < 0;
        case SideConstraint::AlphaAtMostMinusBeta: return (box.alpha.lo() + box.beta.lo()).sign() > 0;
    }
    return false;
}

struct SubResult {
    std::string tree;
    std::size_t boxes = 0;
    unsigned depth = 0;
    bool certified = true;
    std::optional<Point> violation;
    std::vector<Point> probes;
};

class Subdivider {
public:
    Subdivider(const BivariatePoly& f, SignTarget target, const Region& region, int max_depth)
        : f_(f), target_(target), region_(region), max_depth_(max_depth),
          rule_{region.alpha.width(), region.beta.width()} {}

    SubResult run(const Box& box, int depth, int spawn_levels) const {
        SubResult r;
        r.boxes = 1;
        r.depth = static_cast<unsigned>(depth);
        if (outside_side(box, region_.side)) {
            r.tree = "D";
            return r;
        }
        if (decided(f_.enclosure(box.alpha, box.beta), target_)) {
            r.tree = "C";
            return r;
        }
        const Point centre{box.alpha.midpoint(), box.beta.midpoint()};
        if (region_.contains(centre) && !satisfies(f_.eval(centre.alpha, centre.beta), target_)) {
            r.tree = "X";
            r.certified = false;
            r.violation = centre;
            return r;
        }
        const Axis axis = rule_.choose(box);
        if (depth >= max_depth_ || axis == Axis::None) {
            r.tree = "U";
            r.certified = false;
            if (region_.contains(centre)) r.probes.push_back(centre);
            return r;
        }
        const auto [lo, hi] = SubdivisionRule::split(box, axis);
        SubResult left;
        SubResult right;
        if (spawn_levels > 0) {
            auto fut = std::async(std::launch::async, [&, lo = lo] { return run(lo, depth + 1, spawn_levels - 1); });
            right = run(hi, depth + 1, spawn_levels - 1);
            left = fut.get();
        } else {
            left = run(lo, depth + 1, 0);
            right = run(hi, depth + 1, 0);
        }
        r.tree = "S" + left.tree + right.tree;
        r.boxes += left.boxes + right.boxes;
        r.depth = std::max(left.depth, right.depth);
        r.certified = left.certified && right.certified;
        r.violation = left.violation ? left.violation : right.violation;
        r.probes = std::move(left.probes);
        for (Point& p : right.probes) {
            if (r.probes.size() >= kMaxProbes) break;
            r.probes.push_back(std::move(p));
        }
        return r;
    }

private:
    const BivariatePoly& f_;
    SignTarget target_;
    const Region& region_;
    int max_depth_;
    SubdivisionRule rule_;
};

int spawn_levels_for(unsigned threads) {
    int levels = 0;
    while (levels < 6 && (2u << levels) <= threads) ++levels;
    return levels;
}

FactorEvidence prove_interval(const BivariatePoly& f, SignTarget target, const Region& region, int max_depth,
                              unsigned threads, std::vector<Point>& probes) {
    const Subdivider sub(f, target, region, max_depth);
    SubResult r = sub.run({region.alpha, region.beta}, 0, spawn_levels_for(threads));
    FactorEvidence ev;
    ev.tree = std::move(r.tree);
    ev.boxes = r.boxes;
    ev.depth = r.depth;
    ev.violation = r.violation;
    if (r.certified) {
        ev.status = CertStatus::Certified;
    } else if (r.violation) {
        ev.status = CertStatus::Failed;
    } else {
        ev.status = CertStatus::Inconclusive;
        ev.note = "maximum depth exhausted";
    }
    probes.insert(probes.end(), r.probes.begin(), r.probes.end());
    return ev;
}

// Replays a recorded subdivision tree, re-evaluating every leaf.
class TreeReplay {
public:
    TreeReplay(const BivariatePoly& f, SignTarget target, const Region& region, const std::string& tree)
        : f_(f), target_(target), region_(region), tree_(tree), rule_{region.alpha.width(), region.beta.width()} {}

    bool check() {
        pos_ = 0;
        return node({region_.alpha, region_.beta}) && pos_ == tree_.size();
    }

private:
    bool node(const Box& box) {
        if (pos_ >= tree_.size()) return false;
        const char c = tree_[pos_++];
        switch (c) {
            case 'D': return outside_side(box, region_.side);
            case 'C': return decided(f_.enclosure(box.alpha, box.beta), target_);
            case 'S': {
                const Axis axis = rule_.choose(box);
                if (axis == Axis::None) return false;
                const auto [lo, hi] = SubdivisionRule::split(box, axis);
                return node(lo) && node(hi);
            }
            default: return false;
        }
    }

    const BivariatePoly& f_;
    SignTarget target_;
    const Region& region_;
    const std::string& tree_;
    SubdivisionRule rule_;
    std::size_t pos_ = 0;
};

// ---- witnesses -------------------------------------------------------------

std::vector<Rational> grid_axis(const RationalInterval& iv, unsigned n) {
    std::vector<Rational> out;
    if (iv.width().is_zero()) {
        out.push_back(iv.lo());
        return out;
    }
    for (unsigned i = 0; i <= n; ++i) {
        const Rational x = iv.lo() + iv.width() * Rational(i) / Rational(n);
        if (iv.contains(x)) out.push_back(x);
    }
    return out;
}

std::optional<Point> find_witness(const FactoredClaim& claim, const Region& region, const std::vector<Point>& seeds) {
    auto violates = [&](const Point& p) {
        return region.contains(p) && !satisfies(claim.target.eval(p.alpha, p.beta), claim.overall);
    };
    for (const Point& p : seeds) {
        if (violates(p)) return p;
    }
    for (const Rational& b : grid_axis(region.beta, kWitnessGrid)) {
        for (const Rational& a : grid_axis(region.alpha, kWitnessGrid)) {
            const Point p{a, b};
            if (violates(p)) return p;
        }
    }
    return std::nullopt;
}

void validate(const FactoredClaim& claim, int max_depth) {
    if (max_depth < 0) throw std::invalid_argument("certify_sign: max_depth must be nonnegative");
    if (claim.factors.empty()) throw std::invalid_argument("certify_sign: claim '" + claim.name + "' has no factors");
    if (!product_implies(claim.factors, claim.overall)) {
        throw std::invalid_argument("certify_sign: factor signs of '" + claim.name + "' do not imply " +
                                    to_string(claim.overall));
    }
    for (const Factor& f : claim.factors) {
        if (f.strategy != Strategy::IntervalSubdivision && !f.expr.is_affine()) {
            throw std::invalid_argument("certify_sign: " + to_string(f.strategy) + " needs an affine factor, got " +
                                        f.expr.str());
        }
    }
}

BivariatePoly product_of(const std::vector<Factor>& factors) {
    BivariatePoly p(1);
    for (const Factor& f : factors) p *= f.expr;
    return p;
}

}  // namespace

std::string to_string(SignTarget s) {
    switch (s) {
        case SignTarget::Positive: return ">0";
        case SignTarget::NonNegative: return ">=0";
        case SignTarget::Negative: return "<0";
        case SignTarget::NonPositive: return "<=0";
    }
    return "?";
}

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::AffineVertex: return "affine-vertex";
        case Strategy::IntervalSubdivision: return "interval-subdivision";
        case Strategy::RegionAtom: return "region-atom";
    }
    return "?";
}

std::string to_string(SideConstraint s) {
    switch (s) {
        case SideConstraint::None: return "none";
        case SideConstraint::AlphaAtMostMinusBeta: return "alpha <= -beta";
        case SideConstraint::AlphaAtLeastMinusBeta: return "alpha >= -beta";
    }
    return "?";
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "certified";
        case CertStatus::Failed: return "failed";
        case CertStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

bool satisfies(const Rational& value, SignTarget target) {
    switch (target) {
        case SignTarget::Positive: return value.sign() > 0;
        case SignTarget::NonNegative: return value.sign() >= 0;
        case SignTarget::Negative: return value.sign() < 0;
        case SignTarget::NonPositive: return value.sign() <= 0;
    }
    return false;
}

Region Region::standard() {
    return {RationalInterval(Rational(-1, 2), Rational(0)), RationalInterval::open(Rational(0), Rational(1, 3)),
            SideConstraint::None};
}

Region Region::with_side(SideConstraint s) const {
    Region r = *this;
    r.side = s;
    return r;
}

bool Region::contains(const Point& p) const {
    return alpha.contains(p.alpha) && beta.contains(p.beta) && side_ok(side, p.alpha, p.beta);
}

std::string Region::str() const {
    std::string s = "beta in " + beta.str() + ", alpha in " + alpha.str();
    if (side != SideConstraint::None) s += ", " + to_string(side);
    return s;
}

std::vector<Point> region_vertices(const Region& r) {
    const Rational& blo = r.beta.lo();
    const Rational& bhi = r.beta.hi();
    const Rational& alo = r.alpha.lo();
    const Rational& ahi = r.alpha.hi();
    std::vector<Point> cands{{alo, blo}, {alo, bhi}, {ahi, bhi}, {ahi, blo}};
    if (r.side != SideConstraint::None) {
        // Crossings of α + β = 0 with the four edges.
        for (const Rational& b : {blo, bhi}) {
            const Rational a = -b;
            if (a >= alo && a <= ahi) cands.push_back({a, b});
        }
        for (const Rational& a : {alo, ahi}) {
            const Rational b = -a;
            if (b >= blo && b <= bhi) cands.push_back({a, b});
        }
    }
    std::vector<Point> out;
    for (const Point& p : cands) {
        if (!side_ok(r.side, p.alpha, p.beta)) continue;
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    return out;
}

SignCertificate certify_sign(const FactoredClaim& claim, const Region& region, int max_depth, unsigned threads) {
    validate(claim, max_depth);
    SignCertificate cert;
    cert.name = claim.name;
    std::vector<Point> seeds;
    bool all_certified = true;
    for (const Factor& f : claim.factors) {
        FactorEvidence ev;
        switch (f.strategy) {
            case Strategy::AffineVertex: ev = prove_affine(f.expr, f.sign, region); break;
            case Strategy::RegionAtom: ev = prove_atom(f.expr, f.sign, region); break;
            case Strategy::IntervalSubdivision:
                ev = prove_interval(f.expr, f.sign, region, max_depth, std::max(1u, threads), seeds);
                break;
        }
        if (ev.violation) seeds.insert(seeds.begin(), *ev.violation);
        for (const VertexValue& vv : ev.vertices) seeds.push_back(vv.point);
        cert.boxes += ev.boxes;
        cert.depth = std::max(cert.depth, ev.depth);
        all_certified = all_certified && ev.status == CertStatus::Certified;
        cert.evidence.push_back(std::move(ev));
    }
    const bool product_ok = poly_equal(product_of(claim.factors), claim.target);
    if (!product_ok) cert.notes.push_back("product of factors differs from the claim polynomial");
    if (product_ok && all_certified) {
        cert.status = CertStatus::Certified;
        return cert;
    }
    cert.witness = find_witness(claim, region, seeds);
    cert.status = cert.witness ? CertStatus::Failed : CertStatus::Inconclusive;
    return cert;
}

bool check_certificate(const FactoredClaim& claim, const Region& region, const SignCertificate& cert) {
    switch (cert.status) {
        case CertStatus::Inconclusive: return !cert.witness.has_value();
        case CertStatus::Failed:
            return cert.witness && region.contains(*cert.witness) &&
                   !satisfies(claim.target.eval(cert.witness->alpha, cert.witness->beta), claim.overall);
        case CertStatus::Certified: break;
    }
    if (cert.evidence.size() != claim.factors.size()) return false;
    if (!product_implies(claim.factors, claim.overall)) return false;
    if (!poly_equal(product_of(claim.factors), claim.target)) return false;
    const std::vector<Atom> atoms = region_atoms(region);
    for (std::size_t i = 0; i < claim.factors.size(); ++i) {
        const Factor& f = claim.factors[i];
        const FactorEvidence& ev = cert.evidence[i];
        if (ev.status != CertStatus::Certified) return false;
        const SignClass want = classify(f.sign);
        switch (f.strategy) {
            case Strategy::AffineVertex: {
                if (!f.expr.is_affine()) return false;
                // Recorded vertices must be exactly the region's, with the right values.
                const std::vector<Point> verts = region_vertices(region);
                if (verts.size() != ev.vertices.size()) return false;
                unsigned zero_mask = ~0u;
                bool any_zero = false;
                for (std::size_t k = 0; k < verts.size(); ++k) {
                    if (!(ev.vertices[k].point == verts[k])) return false;
                    const Rational v = f.expr.eval(verts[k].alpha, verts[k].beta);
                    if (v != ev.vertices[k].value) return false;
                    const int s = v.sign() * want.sign;
                    if (s < 0) return false;
                    if (s == 0) {
                        any_zero = true;
                        zero_mask &= open_mask(region, verts[k]);
                    }
                }
                if (want.strict && any_zero && zero_mask == 0) return false;
                break;
            }
            case Strategy::RegionAtom: {
                BivariatePoly rhs(ev.constant);
                bool strict = ev.constant.sign() > 0;
                if (ev.constant.sign() < 0) return false;
                for (const AtomUse& use : ev.atoms) {
                    const auto it = std::find_if(atoms.begin(), atoms.end(),
                                                 [&](const Atom& a) { return a.name == use.constraint; });
                    if (it == atoms.end() || use.multiplier.sign() < 0) return false;
                    rhs += it->g * use.multiplier;
                    if (use.multiplier.sign() > 0 && it->strict) strict = true;
                }
                const BivariatePoly oriented = want.sign > 0 ? f.expr : -f.expr;
                if (!poly_equal(oriented, rhs)) return false;
                if (want.strict && !strict) return false;
                break;
            }
            case Strategy::IntervalSubdivision: {
                TreeReplay replay(f.expr, f.sign, region, ev.tree);
                if (!replay.check()) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace tiltcert
