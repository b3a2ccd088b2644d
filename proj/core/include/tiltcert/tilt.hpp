#pragma once

#include "tiltcert/chern.hpp"
#include "tiltcert/polynomial.hpp"
#include "tiltcert/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace tiltcert {

/// ω = αH, B = βH and the BG parameter s. Construction enforces α > 0.
class TiltParams {
public:
    TiltParams(Rational alpha, Rational beta, Rational s = Rational(1, 6));

    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Rational& s() const { return s_; }

private:
    Rational alpha_;
    Rational beta_;
    Rational s_;
};

/// A rational slope or +∞ (dividing by zero).
class ExtendedSlope {
public:
    static ExtendedSlope infinity() { return ExtendedSlope(); }
    ExtendedSlope(Rational value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    bool is_infinite() const { return !value_.has_value(); }
    /// Precondition: finite.
    const Rational& value() const { return *value_; }

    std::string str() const { return value_ ? value_->str() : "+inf"; }

    friend bool operator==(const ExtendedSlope&, const ExtendedSlope&) = default;

private:
    ExtendedSlope() = default;
    std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedSlope& s);

struct ComplexRational {
    Rational re;
    Rational im;

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const Rational& c, const ComplexRational& z) { return {c * z.re, c * z.im}; }
    friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

/// Re·Im' − Im·Re'.
Rational cross(const ComplexRational& z, const ComplexRational& w);

/// Real and imaginary parts of a central charge as polynomials in (α, β).
struct ZPolynomials {
    BivariatePoly re;
    BivariatePoly im;
};

/// μ = (ch1 − β·ch0)/(α·ch0); +∞ for rank 0.
ExtendedSlope mu(const ChernCharacter& v, const TiltParams& p, const Threefold& x);

/// ν = (ch^β₂ − α²·ch0/2)/(α·ch^β₁); +∞ when ch^β₁ = 0.
ExtendedSlope nu(const ChernCharacter& v, const TiltParams& p, const Threefold& x);

/// Z = (−ch^β₃ + s·d·α²·ch^β₁) + i·(d·α·ch^β₂ − d·α³·ch0/2).
ComplexRational central_charge(const ChernCharacter& v, const TiltParams& p, const Threefold& x);

/// Symbolic Z in (α, β) for fixed s.
ZPolynomials z_polynomials(const ChernCharacter& v, const Rational& s, const Threefold& x);

/// λ = −Re Z / Im Z; +∞ when Im Z = 0.
ExtendedSlope lambda(const ChernCharacter& v, const TiltParams& p, const Threefold& x);

/// Re Z(v)·Im Z(w) − Im Z(v)·Re Z(w) as a polynomial in (α, β).
BivariatePoly cross_polynomial(const ChernCharacter& v, const ChernCharacter& w, const Rational& s,
                               const Threefold& x);

/// s·ω²·ch^β₁ − ch^β₃ = s·d·α²·ch^β₁ − ch^β₃.
Rational bg_margin(const ChernCharacter& v, const TiltParams& p, const Threefold& x);

/// The margin only depends on α²; used when α itself may be irrational.
Rational bg_margin_at_alpha_squared(const ChernCharacter& v, const Rational& alpha_squared, const Rational& beta,
                                    const Rational& s, const Threefold& x);

/// The non-strict inequality for s = 1/6 and the strict one for s > 1/6.
bool bg_inequality_holds(const Rational& margin, const Rational& s);

/// α² with ν(v) = 0 at β, i.e. 2·ch^β₂/ch0; absent for rank 0. The value
/// may be ≤ 0, meaning no real locus at this β.
std::optional<Rational> nu_zero_alpha_squared(const ChernCharacter& v, const Rational& beta, const Threefold& x);

/// Numerator of ν(v) − ν(w) after clearing α·ch^β₁ denominators:
/// (ch^β₂(v) − α²ch0(v)/2)·ch^β₁(w) − (ch^β₂(w) − α²ch0(w)/2)·ch^β₁(v).
BivariatePoly wall_polynomial(const ChernCharacter& v, const ChernCharacter& w, const Threefold& x);

}  // namespace tiltcert
