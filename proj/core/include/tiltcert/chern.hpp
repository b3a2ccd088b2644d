#pragma once

#include "tiltcert/polynomial.hpp"
#include "tiltcert/rational.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tiltcert {

/// Smooth projective threefold of Picard rank one, known through H³.
struct Threefold {
    std::string name;
    int degree = 1;  // H³

    friend bool operator==(const Threefold&, const Threefold&) = default;
};

Threefold quadric_threefold();
Threefold projective_space();

/// Chern character (rank, H-coefficient, H²-coefficient, point degree).
///
/// ch3 is the degree of the 0-cycle, not a coefficient of H³.
struct ChernCharacter {
    Rational ch0;
    Rational ch1;
    Rational ch2;
    Rational ch3;

    ChernCharacter& operator+=(const ChernCharacter& o);
    ChernCharacter& operator-=(const ChernCharacter& o);
    ChernCharacter& operator*=(const Rational& c);

    friend ChernCharacter operator+(ChernCharacter a, const ChernCharacter& b) { return a += b; }
    friend ChernCharacter operator-(ChernCharacter a, const ChernCharacter& b) { return a -= b; }
    friend ChernCharacter operator*(const Rational& c, ChernCharacter a) { return a *= c; }
    friend ChernCharacter operator-(ChernCharacter a) { return a *= Rational(-1); }
    friend bool operator==(const ChernCharacter&, const ChernCharacter&) = default;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const ChernCharacter& v);

ChernCharacter line_bundle_ch(int n, const Threefold& x);

/// ch^B for B = βH, i.e. e^{-βH}·ch. The degree enters every term that
/// produces an H³.
ChernCharacter twist(const ChernCharacter& v, const Rational& beta, const Threefold& x);

/// v ⊗ O(n); equal to twist(v, -n).
ChernCharacter tensor_line(const ChernCharacter& v, int n, const Threefold& x);

/// Action of the shift [k] on ch.
ChernCharacter shift(const ChernCharacter& v, int k);

/// Twisted character with β kept symbolic: four polynomials in `b`.
std::array<BivariatePoly, 4> twist_symbolic(const ChernCharacter& v, const Threefold& x);

enum class ObjectKind { LineBundle, SpinorTwisted, Spinor, Skyscraper };

struct CatalogObject {
    std::string label;
    ObjectKind kind = ObjectKind::LineBundle;
    int twist = 0;  // n for O(n)
    ChernCharacter character;
    int shift = 0;  // position in the heart C (O(-1)[3], S(-1)[2], O[1], O(1)); 0 otherwise
    bool mu_stable = false;
};

/// Spinor bundle S(-1) on the quadric, ch = (2, -1, 0, 1/6).
ChernCharacter spinor_minus_one_ch();

/// ch(k(x)) computed as the alternating sum over the Kapranov resolution
/// 0 → O(-1) → S(-1)^2 → O^4 → O(1) → k(x) → 0.
ChernCharacter skyscraper_ch_from_resolution(const Threefold& x);

/// O(-1), S(-1), O, O(1), S, k(x) on the quadric.
std::vector<CatalogObject> quadric_catalog();

/// Looks up a quadric object by label. Accepts "O(n)"/"On", "S(-1)"/"S-1",
/// "S", "k(x)"/"kx". Throws std::invalid_argument for unknown labels.
CatalogObject find_quadric_object(std::string_view label);

/// {"ch0":"r","ch1":"a","ch2":"b","ch3":"c"} with optional "name".
/// Throws std::invalid_argument on malformed documents.
struct NamedCharacter {
    std::optional<std::string> name;
    ChernCharacter character;
};
NamedCharacter chern_from_json(std::string_view text);
std::string chern_to_json(const ChernCharacter& v, const std::optional<std::string>& name = std::nullopt);

}  // namespace tiltcert
