#include "tiltcert/heart.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace tiltcert {

namespace {

constexpr std::array<const char*, kHeartRank> kEntryNames{"a", "b", "c", "d"};

bool fact_applies(const SignFact& f, Subregion r) {
    switch (f.scope) {
        case SignScope::FullRegion: return true;
        case SignScope::AlphaAtMostMinusBeta: return r == Subregion::AlphaAtMostMinusBeta;
        case SignScope::AlphaAtLeastMinusBeta: return r == Subregion::AlphaAtLeastMinusBeta;
    }
    return false;
}

bool has_sign(std::span<const SignFact> facts, std::size_t generator, Subregion r, bool nonpositive) {
    return std::any_of(facts.begin(), facts.end(), [&](const SignFact& f) {
        return static_cast<std::size_t>(f.generator) == generator && f.nonpositive == nonpositive &&
               fact_applies(f, r);
    });
}

}  // namespace

std::string generator_label(HeartGenerator g) {
    switch (g) {
        case HeartGenerator::OMinusOneShift3: return "O(-1)[3]";
        case HeartGenerator::SpinorShift2: return "S(-1)[2]";
        case HeartGenerator::OShift1: return "O[1]";
        case HeartGenerator::OOne: return "O(1)";
    }
    return "?";
}

ChernCharacter generator_ch(HeartGenerator g, const Threefold& x) {
    switch (g) {
        case HeartGenerator::OMinusOneShift3: return shift(line_bundle_ch(-1, x), 3);
        case HeartGenerator::SpinorShift2: return shift(spinor_minus_one_ch(), 2);
        case HeartGenerator::OShift1: return shift(line_bundle_ch(0, x), 1);
        case HeartGenerator::OOne: return line_bundle_ch(1, x);
    }
    return {};
}

std::string DimensionVector::str() const {
    return "(" + std::to_string(entries[0]) + "," + std::to_string(entries[1]) + "," + std::to_string(entries[2]) +
           "," + std::to_string(entries[3]) + ")";
}

DimensionVector operator+(const DimensionVector& x, const DimensionVector& y) {
    DimensionVector r;
    for (std::size_t i = 0; i < kHeartRank; ++i) r[i] = x[i] + y[i];
    return r;
}

DimensionVector skyscraper_vector() { return {1, 2, 4, 1}; }

DimensionVector dimension_vector_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed dimension vector JSON: ") + e.what());
    }
    if (!doc.is_array() || doc.size() != kHeartRank) {
        throw std::invalid_argument("dimension vector must be a JSON array [a, b, c, d]");
    }
    DimensionVector v;
    for (std::size_t i = 0; i < kHeartRank; ++i) {
        if (!doc[i].is_number_integer() || doc[i].get<long long>() < 0 ||
            doc[i].get<long long>() > std::numeric_limits<unsigned>::max()) {
            throw std::invalid_argument("dimension vector entries must be nonnegative integers");
        }
        v[i] = doc[i].get<unsigned>();
    }
    return v;
}

std::string dimension_vector_to_json(const DimensionVector& v) {
    return nlohmann::json(std::vector<unsigned>(v.entries.begin(), v.entries.end())).dump();
}

ChernCharacter heart_ch(const DimensionVector& v, const Threefold& x) {
    ChernCharacter sum{};
    for (std::size_t i = 0; i < kHeartRank; ++i) {
        sum += Rational(v[i]) * generator_ch(static_cast<HeartGenerator>(i), x);
    }
    return sum;
}

ComplexRational heart_z(const DimensionVector& v, const TiltParams& p, const Threefold& x) {
    return central_charge(heart_ch(v, x), p, x);
}

ZPolynomials heart_z_polynomials(const DimensionVector& v, const Rational& s, const Threefold& x) {
    return z_polynomials(heart_ch(v, x), s, x);
}

bool CandidateRule::admits(const DimensionVector& v) const {
    switch (kind) {
        case Kind::UpperBound: return v[index] <= value;
        case Kind::ForcedValue: return v[index] == value;
        case Kind::Implication: return v[index] != value || v[then_index] == then_value;
    }
    return true;
}

std::string CandidateRule::str() const {
    const std::string lhs = kEntryNames[index];
    switch (kind) {
        case Kind::UpperBound: return lhs + " <= " + std::to_string(value);
        case Kind::ForcedValue: return lhs + " = " + std::to_string(value);
        case Kind::Implication:
            return lhs + " = " + std::to_string(value) + " => " + kEntryNames[then_index] + " = " +
                   std::to_string(then_value);
    }
    return {};
}

std::vector<CandidateRule> skyscraper_rules() {
    using K = CandidateRule::Kind;
    const DimensionVector k = skyscraper_vector();
    std::vector<CandidateRule> rules;
    for (std::size_t i = 0; i < kHeartRank; ++i) {
        rules.push_back({K::UpperBound, i, k[i], 0, 0, "subobject of k(x) has dimension vector below v(k(x))"});
    }
    rules.push_back({K::ForcedValue, 3, 1, 0, 0, "O(1) is the only simple object mapping nontrivially to k(x)"});
    rules.push_back({K::ForcedValue, 0, 0, 0, 0, "O(-1)[3] is the only simple quotient of k(x)"});
    rules.push_back({K::Implication, 1, 2, 2, 4, "Hom(k(x), O[1]) = 0 forces c = 4 when b = 2"});
    return rules;
}

std::vector<DimensionVector> enumerate_candidates(std::span<const CandidateRule> rules) {
    DimensionVector cap = skyscraper_vector();
    for (const CandidateRule& r : rules) {
        if (r.kind == CandidateRule::Kind::UpperBound) cap[r.index] = std::min(cap[r.index], r.value);
    }
    std::vector<DimensionVector> out;
    for (unsigned a = 0; a <= cap[0]; ++a) {
        for (unsigned b = 0; b <= cap[1]; ++b) {
            for (unsigned c = 0; c <= cap[2]; ++c) {
                for (unsigned d = 0; d <= cap[3]; ++d) {
                    const DimensionVector v(a, b, c, d);
                    if (std::all_of(rules.begin(), rules.end(), [&](const CandidateRule& r) { return r.admits(v); })) {
                        out.push_back(v);
                    }
                }
            }
        }
    }
    return out;
}

std::string subregion_label(Subregion r) {
    return r == Subregion::AlphaAtMostMinusBeta ? "alpha <= -beta" : "alpha >= -beta";
}

bool CandidateSet::is_base(const DimensionVector& v) const {
    return std::find(base.begin(), base.end(), v) != base.end();
}

const Derivation* CandidateSet::derivation_for(const DimensionVector& v, Subregion r) const {
    for (const Derivation& d : derivations) {
        if (d.target == v && d.subregion == r) return &d;
    }
    return nullptr;
}

CandidateSet skyscraper_candidates() {
    CandidateSet set;
    const auto rules = skyscraper_rules();
    set.vectors = enumerate_candidates(rules);
    return set;
}

bool dominates(const DimensionVector& base, const DimensionVector& target, std::span<const SignFact> facts,
               Subregion r) {
    for (std::size_t i = 0; i < kHeartRank; ++i) {
        const long delta = static_cast<long>(target[i]) - static_cast<long>(base[i]);
        // Adding a generator needs Im Z ≥ 0, removing one needs Im Z ≤ 0.
        if (delta > 0 && !has_sign(facts, i, r, false)) return false;
        if (delta < 0 && !has_sign(facts, i, r, true)) return false;
    }
    return true;
}

std::vector<DimensionVector> derive_base(std::span<const DimensionVector> vectors, std::span<const SignFact> facts) {
    std::vector<DimensionVector> base;
    for (const DimensionVector& v : vectors) {
        const bool source_somewhere = std::any_of(kSubregions.begin(), kSubregions.end(), [&](Subregion r) {
            return std::none_of(vectors.begin(), vectors.end(),
                                [&](const DimensionVector& u) { return u != v && dominates(u, v, facts, r); });
        });
        if (source_somewhere) base.push_back(v);
    }
    // Largest vectors first, matching the order the checks are usually stated in.
    std::sort(base.begin(), base.end(), std::greater<>());
    return base;
}

CandidateSet reduce_candidates(const CandidateSet& cands, std::span<const SignFact> facts,
                               std::span<const DimensionVector> checked) {
    CandidateSet out;
    out.vectors = cands.vectors;
    out.base.assign(checked.begin(), checked.end());
    for (const DimensionVector& v : cands.vectors) {
        if (out.is_base(v)) continue;
        for (Subregion r : kSubregions) {
            const DimensionVector* best = nullptr;
            long best_cost = 0;
            for (const DimensionVector& b : out.base) {
                if (!dominates(b, v, facts, r)) continue;
                long cost = 0;
                for (std::size_t i = 0; i < kHeartRank; ++i) cost += std::labs(long(v[i]) - long(b[i]));
                if (best == nullptr || cost < best_cost) {
                    best = &b;
                    best_cost = cost;
                }
            }
            if (best == nullptr) {
                throw DerivationGap("no derivation for " + v.str() + " on " + subregion_label(r));
            }
            Derivation d;
            d.target = v;
            d.base = *best;
            d.subregion = r;
            for (std::size_t i = 0; i < kHeartRank; ++i) d.delta[i] = int(v[i]) - int((*best)[i]);
            out.derivations.push_back(d);
        }
    }
    return out;
}

CandidateSet reduce_candidates(const CandidateSet& cands, std::span<const SignFact> facts) {
    const std::vector<DimensionVector> base = derive_base(cands.vectors, facts);
    return reduce_candidates(cands, facts, base);
}

}  // namespace tiltcert
