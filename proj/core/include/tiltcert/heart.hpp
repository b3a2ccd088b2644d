#pragma once

#include "tiltcert/chern.hpp"
#include "tiltcert/tilt.hpp"

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiltcert {

/// Generators of the heart C = ⟨O(-1)[3], S(-1)[2], O[1], O(1)⟩, in order.
enum class HeartGenerator { OMinusOneShift3 = 0, SpinorShift2 = 1, OShift1 = 2, OOne = 3 };

inline constexpr std::size_t kHeartRank = 4;

std::string generator_label(HeartGenerator g);

/// ch of the shifted generator (odd shifts negate).
ChernCharacter generator_ch(HeartGenerator g, const Threefold& x);

/// Multiplicities (a, b, c, d) of O(-1)[3], S(-1)[2], O[1], O(1).
struct DimensionVector {
    std::array<unsigned, kHeartRank> entries{};

    DimensionVector() = default;
    DimensionVector(unsigned a, unsigned b, unsigned c, unsigned d) : entries{a, b, c, d} {}

    unsigned operator[](std::size_t i) const { return entries[i]; }
    unsigned& operator[](std::size_t i) { return entries[i]; }

    std::string str() const;

    friend DimensionVector operator+(const DimensionVector& x, const DimensionVector& y);
    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
};

/// Dimension vector of k(x), read off the resolution.
DimensionVector skyscraper_vector();

/// Parses "[a, b, c, d]". Throws std::invalid_argument.
DimensionVector dimension_vector_from_json(std::string_view text);
std::string dimension_vector_to_json(const DimensionVector& v);

ChernCharacter heart_ch(const DimensionVector& v, const Threefold& x);
ComplexRational heart_z(const DimensionVector& v, const TiltParams& p, const Threefold& x);
ZPolynomials heart_z_polynomials(const DimensionVector& v, const Rational& s, const Threefold& x);

/// One constraint on subobject dimension vectors.
struct CandidateRule {
    enum class Kind { UpperBound, ForcedValue, Implication };

    Kind kind = Kind::UpperBound;
    std::size_t index = 0;
    unsigned value = 0;
    // Implication: entries[index] == value ⟹ entries[then_index] == then_value.
    std::size_t then_index = 0;
    unsigned then_value = 0;
    std::string reason;

    bool admits(const DimensionVector& v) const;
    std::string str() const;
};

/// Bounds from v(k(x)), then d = 1 (only O(1) maps to k(x)), a = 0 (only
/// O(-1)[3] is a quotient), and b = 2 ⟹ c = 4 (Hom(k(x), O[1]) = 0).
std::vector<CandidateRule> skyscraper_rules();

/// Enumerates vectors inside the upper bounds that satisfy every rule, in
/// lexicographic order. Without UpperBound rules each entry is capped by
/// v(k(x)).
std::vector<DimensionVector> enumerate_candidates(std::span<const CandidateRule> rules);

enum class Subregion { AlphaAtMostMinusBeta, AlphaAtLeastMinusBeta };
inline constexpr std::array<Subregion, 2> kSubregions{Subregion::AlphaAtMostMinusBeta,
                                                      Subregion::AlphaAtLeastMinusBeta};
std::string subregion_label(Subregion r);

enum class SignScope { FullRegion, AlphaAtMostMinusBeta, AlphaAtLeastMinusBeta };

/// Certified sign of Im Z of one generator on a scope: nonpositive or nonnegative.
struct SignFact {
    HeartGenerator generator = HeartGenerator::OOne;
    SignScope scope = SignScope::FullRegion;
    bool nonpositive = true;  // false means nonnegative
    bool strict = false;
};

/// Target = base + delta, with Im Z(target) ≥ Im Z(base) on the subregion.
struct Derivation {
    DimensionVector target;
    DimensionVector base;
    std::array<int, kHeartRank> delta{};
    Subregion subregion = Subregion::AlphaAtMostMinusBeta;
};

struct CandidateSet {
    std::vector<DimensionVector> vectors;
    std::vector<DimensionVector> base;
    std::vector<Derivation> derivations;  // one per non-base vector and subregion

    bool is_base(const DimensionVector& v) const;
    const Derivation* derivation_for(const DimensionVector& v, Subregion r) const;
};

CandidateSet skyscraper_candidates();

class DerivationGap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// True when Im Z cannot decrease going from `base` to `target` on `r`.
bool dominates(const DimensionVector& base, const DimensionVector& target, std::span<const SignFact> facts,
               Subregion r);

/// Vectors with no other candidate dominating them, on some subregion.
std::vector<DimensionVector> derive_base(std::span<const DimensionVector> vectors, std::span<const SignFact> facts);

/// Builds derivations of every non-checked vector from the `checked` set on
/// both subregions; throws DerivationGap naming the first uncovered vector.
CandidateSet reduce_candidates(const CandidateSet& cands, std::span<const SignFact> facts,
                               std::span<const DimensionVector> checked);

/// Same, with the checked set computed by derive_base.
CandidateSet reduce_candidates(const CandidateSet& cands, std::span<const SignFact> facts);

}  // namespace tiltcert
