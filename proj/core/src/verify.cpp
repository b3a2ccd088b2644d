#include "tiltcert/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace tiltcert {

namespace {

const Rational kSixth(1, 6);

BivariatePoly A() { return BivariatePoly::alpha(); }
BivariatePoly B() { return BivariatePoly::beta(); }

Factor constant(const Rational& c) {
    return {BivariatePoly(c), c.sign() > 0 ? SignTarget::Positive : SignTarget::Negative, Strategy::AffineVertex};
}
Factor affine(BivariatePoly p, SignTarget s) { return {std::move(p), s, Strategy::AffineVertex}; }
Factor atom(BivariatePoly p, SignTarget s) { return {std::move(p), s, Strategy::RegionAtom}; }
Factor interval(BivariatePoly p, SignTarget s) { return {std::move(p), s, Strategy::IntervalSubdivision}; }

ReportItem identity_item(std::string name, bool ok, std::vector<std::string> notes = {}) {
    ReportItem item;
    item.name = std::move(name);
    item.status = ok ? CertStatus::Certified : CertStatus::Failed;
    item.notes = std::move(notes);
    return item;
}

ReportItem certified_item(FactoredClaim claim, const Region& region, int max_depth, unsigned threads) {
    ReportItem item;
    item.name = claim.name;
    item.notes.push_back("region: " + region.str());
    try {
        item.certificate = certify_sign(claim, region, max_depth, threads);
        item.status = item.certificate->status;
        for (const std::string& n : item.certificate->notes) item.notes.push_back(n);
    } catch (const std::invalid_argument& e) {
        item.status = CertStatus::Failed;
        item.notes.push_back(std::string("malformed claim: ") + e.what());
    }
    item.claim = std::move(claim);
    return item;
}

const Threefold& quadric() {
    static const Threefold q = quadric_threefold();
    return q;
}

ZPolynomials generator_z(HeartGenerator g) { return z_polynomials(generator_ch(g, quadric()), kSixth, quadric()); }

bool slope_matches(const BivariatePoly& num, const BivariatePoly& den, const SlopeForm& form) {
    if (form.den.is_zero() || den.is_zero()) return false;
    return poly_equal(num * form.den, form.num * den);
}

// Im Z of a heart vector with the α factor split off, for direct certification.
FactoredClaim im_positive_claim(const DimensionVector& v, std::string name) {
    const BivariatePoly im = heart_z_polynomials(v, kSixth, quadric()).im;
    FactoredClaim claim{std::move(name), im, {}, SignTarget::Positive};
    const auto quotient = im.divide_by_alpha_power(1);
    if (quotient) {
        claim.factors = {atom(A(), SignTarget::Positive), interval(*quotient, SignTarget::Positive)};
    } else {
        claim.factors = {interval(im, SignTarget::Positive)};
    }
    return claim;
}

}  // namespace

void Report::aggregate() {
    status = CertStatus::Certified;
    for (const ReportItem& item : items) {
        if (item.status == CertStatus::Failed) {
            status = CertStatus::Failed;
            return;
        }
        if (item.status == CertStatus::Inconclusive) status = CertStatus::Inconclusive;
    }
}

void Report::append(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    aggregate();
}

const ReportItem* Report::find(const std::string& name) const {
    const auto it = std::find_if(items.begin(), items.end(), [&](const ReportItem& i) { return i.name == name; });
    return it == items.end() ? nullptr : &*it;
}

std::vector<ObjectForms> closed_forms() {
    const Threefold& q = quadric();
    const BivariatePoly a = A();
    const BivariatePoly b = B();
    const BivariatePoly one(1);
    const Rational third(1, 3);
    auto line = [&](int n) {
        const BivariatePoly t = BivariatePoly(n) - b;  // n − β
        ObjectForms f;
        f.label = n == 0 ? "O" : "O(" + std::to_string(n) + ")";
        f.character = line_bundle_ch(n, q);
        f.twisted = {one, t, t.pow(2) * Rational(1, 2), t.pow(3) * third};
        return f;
    };
    std::vector<ObjectForms> forms;

    ObjectForms o1 = line(1);
    o1.mu = {one - b, a};
    o1.nu = {(one - b).pow(2) - a.pow(2), 2 * a * (one - b)};
    o1.z = {third * ((one - b).pow(2) - a.pow(2)) * (b - 1), third * ((one - b).pow(2) - a.pow(2)) * (3 * a)};
    forms.push_back(o1);

    ObjectForms o0 = line(0);
    o0.mu = {-b, a};
    o0.nu = {a.pow(2) - b.pow(2), 2 * a * b};
    o0.z = {third * (b.pow(2) - a.pow(2)) * b, third * (b.pow(2) - a.pow(2)) * (3 * a)};
    forms.push_back(o0);

    ObjectForms om1 = line(-1);
    om1.mu = {-(b + 1), a};
    om1.nu = {a.pow(2) - (one + b).pow(2), 2 * a * (one + b)};
    om1.z = {third * ((one + b).pow(2) - a.pow(2)) * (b + 1), third * ((one + b).pow(2) - a.pow(2)) * (3 * a)};
    forms.push_back(om1);

    ObjectForms s;
    s.label = "S(-1)";
    s.character = spinor_minus_one_ch();
    s.twisted = {BivariatePoly(2), -(2 * b + 1), b * (b + 1),
                 BivariatePoly(Rational(1, 6)) - b.pow(2) - b.pow(3) * Rational(2, 3)};
    s.mu = {-(2 * b + 1), 2 * a};
    s.nu = {a.pow(2) - b * (b + 1), a * (2 * b + 1)};
    s.z = {Rational(1, 6) * (2 * b + 1) * (2 * b.pow(2) + 2 * b - 1 - 2 * a.pow(2)),
           2 * a * (b.pow(2) + b - a.pow(2))};
    forms.push_back(s);
    return forms;
}

BivariatePoly printed_table_0241() { return A() * ((BivariatePoly(1) + B()).pow(2) - A().pow(2)); }

BivariatePoly printed_table_0101() { return A() * (BivariatePoly(1) - 3 * (B().pow(2) - A().pow(2))); }

Point half_plane_orientation_point() { return {Rational(1, 8), Rational(-3, 8)}; }

Report verify_structural_identities() {
    const Threefold& q = quadric();
    const ChernCharacter kx{0, 0, 0, 1};
    const ChernCharacter o_m1 = line_bundle_ch(-1, q);
    const ChernCharacter o = line_bundle_ch(0, q);
    const ChernCharacter o1 = line_bundle_ch(1, q);
    const ChernCharacter sm1 = spinor_minus_one_ch();
    const ChernCharacter s = tensor_line(sm1, 1, q);
    Report r;
    const ChernCharacter alternating = o_m1 - Rational(2) * sm1 + Rational(4) * o - o1 + kx;
    r.items.push_back(identity_item("resolution alternating sum vanishes", alternating == ChernCharacter{},
                                    {"ch(O(-1)) - 2ch(S(-1)) + 4ch(O) - ch(O(1)) + ch(k(x)) = " + alternating.str()}));
    r.items.push_back(identity_item("ch(k(x)) from resolution", skyscraper_ch_from_resolution(q) == kx,
                                    {"computed " + skyscraper_ch_from_resolution(q).str()}));
    r.items.push_back(identity_item("spinor sequence ch(S(-1)) + ch(S) = 4ch(O)", sm1 + s == Rational(4) * o,
                                    {"ch(S) = ch(S(-1) x O(1)) = " + s.str()}));
    r.items.push_back(identity_item("heart dimension vector of k(x)",
                                    heart_ch(skyscraper_vector(), q) == kx,
                                    {"v(k(x)) = " + skyscraper_vector().str()}));
    r.aggregate();
    return r;
}

Report verify_closed_forms(const std::vector<ObjectForms>& forms) {
    const Threefold& q = quadric();
    const BivariatePoly a = A();
    Report r;
    for (const ObjectForms& f : forms) {
        const auto t = twist_symbolic(f.character, q);
        bool twisted_ok = true;
        std::vector<std::string> notes;
        for (std::size_t i = 0; i < 4; ++i) {
            if (!poly_equal(t[i], f.twisted[i])) {
                twisted_ok = false;
                notes.push_back("ch^beta_" + std::to_string(i) + ": computed " + t[i].str() + ", closed form " +
                                f.twisted[i].str());
            }
        }
        r.items.push_back(identity_item("ch^beta(" + f.label + ")", twisted_ok, notes));

        const BivariatePoly mu_num = t[1];
        const BivariatePoly mu_den = a * t[0];
        r.items.push_back(identity_item("mu(" + f.label + ")", slope_matches(mu_num, mu_den, f.mu),
                                        {"computed (" + mu_num.str() + ")/(" + mu_den.str() + ")"}));

        const BivariatePoly nu_num = t[2] - a.pow(2) * t[0] * Rational(1, 2);
        const BivariatePoly nu_den = a * t[1];
        r.items.push_back(identity_item("nu(" + f.label + ")", slope_matches(nu_num, nu_den, f.nu),
                                        {"computed (" + nu_num.str() + ")/(" + nu_den.str() + ")"}));

        const ZPolynomials z = z_polynomials(f.character, kSixth, q);
        r.items.push_back(identity_item("Z(" + f.label + ") real part", poly_equal(z.re, f.z.re),
                                        {"computed " + z.re.str()}));
        r.items.push_back(identity_item("Z(" + f.label + ") imaginary part", poly_equal(z.im, f.z.im),
                                        {"computed " + z.im.str()}));
    }
    r.aggregate();
    return r;
}

Report verify_half_plane(const Region& region, int max_depth, unsigned threads) {
    const BivariatePoly a = A();
    const BivariatePoly b = B();
    const BivariatePoly one(1);
    using enum SignTarget;
    Report r;

    // Case A: α ≥ −β, every generator has Re Z ≤ 0.
    const Region case_a = region.with_side(SideConstraint::AlphaAtLeastMinusBeta);
    const std::vector<std::pair<HeartGenerator, std::vector<Factor>>> re_factors{
        {HeartGenerator::OOne,
         {constant(Rational(1, 3)), affine(one - b - a, Positive), affine(one - b + a, Positive),
          affine(b - 1, Negative)}},
        {HeartGenerator::OShift1,
         {constant(Rational(1, 3)), atom(b, NonPositive), atom(a - b, Positive), atom(a + b, NonNegative)}},
        {HeartGenerator::SpinorShift2,
         {constant(Rational(1, 6)), affine(2 * b + 1, NonNegative),
          interval(2 * b.pow(2) + 2 * b - 1 - 2 * a.pow(2), Negative)}},
        {HeartGenerator::OMinusOneShift3,
         {constant(Rational(-1, 3)), affine(one + b - a, Positive), affine(one + b + a, Positive),
          affine(b + 1, Positive)}},
    };
    for (const auto& [g, factors] : re_factors) {
        FactoredClaim claim{"half-plane A: Re Z(" + generator_label(g) + ") <= 0", generator_z(g).re, factors,
                            NonPositive};
        r.items.push_back(certified_item(std::move(claim), case_a, max_depth, threads));
    }

    // Case B: α ≤ −β, every generator on one side of the line through Z(O[1]).
    const Region case_b = region.with_side(SideConstraint::AlphaAtMostMinusBeta);
    const Point sample = half_plane_orientation_point();
    const ChernCharacter o_shift = generator_ch(HeartGenerator::OShift1, quadric());
    const Rational orientation =
        cross_polynomial(o_shift, generator_ch(HeartGenerator::OOne, quadric()), kSixth, quadric())
            .eval(sample.alpha, sample.beta);
    const SignTarget side_sign = orientation.sign() <= 0 ? NonPositive : NonNegative;
    const std::string orientation_note = "orientation fixed at (alpha, beta) = (" + sample.alpha.str() + ", " +
                                         sample.beta.str() + "): cross(Z(O[1]), Z(O(1))) = " + orientation.str() +
                                         ", claims use " + to_string(side_sign);
    const std::vector<std::pair<HeartGenerator, std::vector<Factor>>> cross_factors{
        {HeartGenerator::OOne,
         {constant(Rational(-1, 3)), atom(a, Positive), atom(b - a, Negative), atom(b + a, NonPositive),
          affine(one - b - a, Positive), affine(one - b + a, Positive)}},
        {HeartGenerator::OShift1, {affine(BivariatePoly(), NonPositive)}},
        {HeartGenerator::SpinorShift2,
         {constant(Rational(1, 6)), atom(a, Positive), atom(b - a, Negative), atom(b + a, NonPositive),
          interval(2 * b.pow(2) - 2 * a.pow(2) - 1, Negative)}},
        {HeartGenerator::OMinusOneShift3,
         {constant(Rational(-1, 3)), atom(a, Positive), atom(b - a, Negative), atom(b + a, NonPositive),
          affine(one + b - a, Positive), affine(one + b + a, Positive)}},
    };
    for (const auto& [g, factors] : cross_factors) {
        const BivariatePoly target = cross_polynomial(o_shift, generator_ch(g, quadric()), kSixth, quadric());
        FactoredClaim claim{"half-plane B: cross(Z(O[1]), Z(" + generator_label(g) + ")) " +
                                (side_sign == NonPositive ? "<= 0" : ">= 0"),
                            target, factors, side_sign};
        ReportItem item = certified_item(std::move(claim), case_b, max_depth, threads);
        item.notes.push_back(orientation_note);
        r.items.push_back(std::move(item));
    }
    r.aggregate();
    return r;
}

Report verify_skyscraper_condition(const Region& region, int max_depth, unsigned threads) {
    const BivariatePoly a = A();
    const BivariatePoly b = B();
    const BivariatePoly one(1);
    using enum SignTarget;
    Report r;

    const ZPolynomials zk = heart_z_polynomials(skyscraper_vector(), kSixth, quadric());
    r.items.push_back(identity_item("Z(k(x)) = -1 in the heart", zk.im.is_zero() && poly_equal(zk.re, -1),
                                    {"Re " + zk.re.str() + ", Im " + zk.im.str()}));

    // Table entries: (0,2,4,1) exactly as printed; (0,1,0,1) from additivity.
    const DimensionVector v0241(0, 2, 4, 1);
    const DimensionVector v0101(0, 1, 0, 1);
    const BivariatePoly im0241 = heart_z_polynomials(v0241, kSixth, quadric()).im;
    r.items.push_back(identity_item("table (0,2,4,1) matches printed Im Z", poly_equal(im0241, printed_table_0241()),
                                    {"Im Z = " + im0241.str()}));
    const BivariatePoly im0101 = heart_z_polynomials(v0101, kSixth, quadric()).im;
    const BivariatePoly additive = generator_z(HeartGenerator::SpinorShift2).im + generator_z(HeartGenerator::OOne).im;
    const BivariatePoly additive_closed = a * (one + 3 * (b.pow(2) - a.pow(2)));
    std::vector<std::string> notes{"Im Z = " + im0101.str(),
                                   "additivity Im Z(S(-1)[2]) + Im Z(O(1)) = " + additive.str()};
    const std::string discrepancy =
        "discrepancy: printed table entry alpha*(1 - 3*(beta^2 - alpha^2)) = " + printed_table_0101().str() +
        " differs from the additivity value alpha*(1 + 3*(beta^2 - alpha^2)); both are certified positive on the "
        "region, so the conclusion is unaffected";
    if (!poly_equal(im0101, printed_table_0101())) notes.push_back(discrepancy);
    r.items.push_back(identity_item("table (0,1,0,1) matches additivity oracle",
                                    poly_equal(im0101, additive) && poly_equal(im0101, additive_closed), notes));

    // Base checks.
    ReportItem base0241 = certified_item(
        {"Im Z(0,2,4,1) > 0 (base)", im0241,
         {atom(a, Positive), affine(one + b - a, Positive), affine(one + b + a, Positive)}, Positive},
        region, max_depth, threads);
    r.items.push_back(std::move(base0241));
    ReportItem base0101 = certified_item(
        {"Im Z(0,1,0,1) > 0 (base)", im0101,
         {atom(a, Positive), interval(one + 3 * b.pow(2) - 3 * a.pow(2), Positive)}, Positive},
        region, max_depth, threads);
    base0101.notes.push_back(discrepancy);
    r.items.push_back(std::move(base0101));
    r.items.push_back(certified_item(
        {"printed form alpha*(1 - 3*(beta^2 - alpha^2)) > 0", printed_table_0101(),
         {atom(a, Positive), interval(one - 3 * b.pow(2) + 3 * a.pow(2), Positive)}, Positive},
        region, max_depth, threads));

    // Sign facts feeding the reduction.
    const ReportItem s_fact = certified_item(
        {"Im Z(S(-1)[2]) < 0", generator_z(HeartGenerator::SpinorShift2).im,
         {constant(Rational(2)), atom(a, Positive), interval(b.pow(2) + b - a.pow(2), Negative)}, Negative},
        region, max_depth, threads);
    const BivariatePoly im_o_shift = generator_z(HeartGenerator::OShift1).im;
    const ReportItem o_le = certified_item(
        {"Im Z(O[1]) <= 0 on alpha <= -beta", im_o_shift,
         {atom(a, Positive), atom(a - b, Positive), atom(a + b, NonPositive)}, NonPositive},
        region.with_side(SideConstraint::AlphaAtMostMinusBeta), max_depth, threads);
    const ReportItem o_ge = certified_item(
        {"Im Z(O[1]) >= 0 on alpha >= -beta", im_o_shift,
         {atom(a, Positive), atom(a - b, Positive), atom(a + b, NonNegative)}, NonNegative},
        region.with_side(SideConstraint::AlphaAtLeastMinusBeta), max_depth, threads);
    std::vector<SignFact> facts;
    if (s_fact.status == CertStatus::Certified) {
        facts.push_back({HeartGenerator::SpinorShift2, SignScope::FullRegion, true, true});
    }
    if (o_le.status == CertStatus::Certified) {
        facts.push_back({HeartGenerator::OShift1, SignScope::AlphaAtMostMinusBeta, true, false});
    }
    if (o_ge.status == CertStatus::Certified) {
        facts.push_back({HeartGenerator::OShift1, SignScope::AlphaAtLeastMinusBeta, false, false});
    }
    r.items.push_back(s_fact);
    r.items.push_back(o_le);
    r.items.push_back(o_ge);

    // Reduction to the two base vectors.
    const CandidateSet cands = skyscraper_candidates();
    const std::vector<DimensionVector> expected_base{v0241, v0101};
    {
        std::vector<std::string> notes;
        bool ok = cands.vectors.size() == 11;
        notes.push_back(std::to_string(cands.vectors.size()) + " candidate subobject dimension vectors");
        const std::vector<DimensionVector> base = derive_base(cands.vectors, facts);
        std::string base_text;
        for (const DimensionVector& v : base) base_text += " " + v.str();
        notes.push_back("derived base set:" + base_text);
        if (base != expected_base) {
            ok = false;
            notes.push_back("base set differs from {(0,2,4,1), (0,1,0,1)}");
        }
        try {
            const CandidateSet reduced = reduce_candidates(cands, facts, expected_base);
            for (const Derivation& d : reduced.derivations) {
                std::string delta;
                for (std::size_t i = 0; i < kHeartRank; ++i) {
                    delta += (i ? "," : "") + std::to_string(d.delta[i]);
                }
                notes.push_back(d.target.str() + " from " + d.base.str() + " + (" + delta + ") on " +
                                subregion_label(d.subregion));
            }
            if (reduced.derivations.size() != 2 * (cands.vectors.size() - expected_base.size())) ok = false;
        } catch (const DerivationGap& e) {
            ok = false;
            notes.push_back(e.what());
        }
        r.items.push_back(identity_item("reduction to base vectors covers all candidates", ok, notes));
    }

    // Every candidate, directly.
    for (const DimensionVector& v : cands.vectors) {
        r.items.push_back(
            certified_item(im_positive_claim(v, "Im Z" + v.str() + " > 0 (direct)"), region, max_depth, threads));
    }
    r.aggregate();
    return r;
}

Report verify_mu_signs(const Region& region, int max_depth, unsigned threads) {
    const Threefold& q = quadric();
    using enum SignTarget;
    Report r;
    // sign μ = sign(ch^β₁·ch0) because α > 0.
    const ChernCharacter sm1 = spinor_minus_one_ch();
    const BivariatePoly s_target = twist_symbolic(sm1, q)[1] * sm1.ch0;
    r.items.push_back(certified_item({"mu(S(-1)) <= 0", s_target, {affine(s_target, NonPositive)}, NonPositive},
                                     region, max_depth, threads));
    const ChernCharacter o = line_bundle_ch(0, q);
    const BivariatePoly o_target = twist_symbolic(o, q)[1] * o.ch0;
    // μ(O) = −β/α is nonnegative for β ≤ 0, so O lies in the torsion part.
    ReportItem o_item = certified_item({"mu(O) >= 0", o_target, {atom(o_target, NonNegative)}, NonNegative}, region,
                                       max_depth, threads);
    o_item.notes.push_back("the opposite orientation mu(O) <= 0 fails on beta < 0, e.g. mu(O) = 48 at (alpha, beta) = "
                           "(1/96, -1/2)");
    r.items.push_back(std::move(o_item));
    r.aggregate();
    return r;
}

Report verify_line_bundle_bg() {
    const Threefold& q = quadric();
    std::size_t checked = 0;
    std::vector<std::string> notes;
    for (int n = -3; n <= 3; ++n) {
        for (int k = 0; k < 50; ++k) {
            // (k − 25)/17 + 1/101 is never an integer, so α = |n − β| > 0.
            const Rational beta = Rational(k - 25, 17) + Rational(1, 101);
            const Rational alpha = (Rational(n) - beta).abs();
            const Rational m = bg_margin(line_bundle_ch(n, q), TiltParams(alpha, beta, kSixth), q);
            ++checked;
            if (!m.is_zero()) notes.push_back("O(" + std::to_string(n) + ") at beta " + beta.str() + ": margin " + m.str());
        }
    }
    const bool ok = notes.empty();
    notes.insert(notes.begin(), std::to_string(checked) + " (n, beta) pairs with alpha = |n - beta|, s = 1/6");
    Report r;
    r.items.push_back(identity_item("BG equality for line bundles", ok, notes));
    r.aggregate();
    return r;
}

Report verify_all(const VerifyOptions& options) {
    Report r;
    r.append(verify_structural_identities());
    r.append(verify_closed_forms(options.forms));
    r.append(verify_half_plane(options.region, options.max_depth, options.threads));
    r.append(verify_skyscraper_condition(options.region, options.max_depth, options.threads));
    r.append(verify_mu_signs(options.region, options.max_depth, options.threads));
    r.append(verify_line_bundle_bg());
    r.aggregate();
    return r;
}

Report verify_all(int max_depth) {
    VerifyOptions options;
    options.max_depth = max_depth;
    return verify_all(options);
}

}  // namespace tiltcert
