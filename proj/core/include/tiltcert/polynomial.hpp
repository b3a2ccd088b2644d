#pragma once

#include "tiltcert/interval.hpp"
#include "tiltcert/rational.hpp"

#include <compare>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tiltcert {

/// Exponent pair of the monomial α^alpha β^beta.
struct Monomial {
    unsigned alpha = 0;
    unsigned beta = 0;

    unsigned degree() const { return alpha + beta; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with α before β, highest first.
struct GradedLexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const {
        if (x.degree() != y.degree()) return x.degree() > y.degree();
        return x.alpha > y.alpha;
    }
};

/// Exact polynomial in (α, β) over the rationals.
///
/// No zero coefficients are ever stored and terms are kept in graded-lex
/// order, so equal polynomials have identical representations and text.
/// The text form spells α as `a` and β as `b`, e.g. `1/3*a^2*b - 2*b + 1`.
class BivariatePoly {
public:
    using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

    BivariatePoly() = default;
    BivariatePoly(Rational constant);  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    BivariatePoly(T constant) : BivariatePoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static BivariatePoly alpha();
    static BivariatePoly beta();
    static BivariatePoly monomial(Rational coeff, unsigned alpha_exp, unsigned beta_exp);

    /// Throws std::invalid_argument on malformed input.
    static BivariatePoly parse(std::string_view text);

    const TermMap& terms() const { return terms_; }
    Rational coefficient(unsigned alpha_exp, unsigned beta_exp) const;

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_affine() const { return total_degree() <= 1; }
    unsigned total_degree() const;
    unsigned degree_alpha() const;
    unsigned degree_beta() const;

    Rational eval(const Rational& alpha, const Rational& beta) const;

    /// Naive interval extension: each monomial enclosed by the product of
    /// exact power hulls, then summed.
    RationalInterval interval_eval(const RationalInterval& alpha, const RationalInterval& beta) const;

    /// Horner scheme in β whose coefficients are α-polynomials enclosed by
    /// the naive extension.
    RationalInterval horner_eval(const RationalInterval& alpha, const RationalInterval& beta) const;

    /// Intersection of `interval_eval` and `horner_eval`.
    RationalInterval enclosure(const RationalInterval& alpha, const RationalInterval& beta) const;

    /// Exact quotient by α^k, or nullopt when some term has a lower α power.
    std::optional<BivariatePoly> divide_by_alpha_power(unsigned k) const;

    BivariatePoly pow(unsigned k) const;

    /// Canonical text form; parse(str()) == *this.
    std::string str() const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    BivariatePoly& operator*=(const BivariatePoly& o);
    BivariatePoly& operator*=(const Rational& c);

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(BivariatePoly a, const BivariatePoly& b) { return a *= b; }
    friend BivariatePoly operator*(BivariatePoly a, const Rational& c) { return a *= c; }
    friend BivariatePoly operator*(const Rational& c, BivariatePoly a) { return a *= c; }
    template <std::integral T>
    friend BivariatePoly operator*(BivariatePoly a, T c) { return a *= Rational(c); }
    template <std::integral T>
    friend BivariatePoly operator*(T c, BivariatePoly a) { return a *= Rational(c); }
    friend BivariatePoly operator-(BivariatePoly a);

    friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p);

Rational poly_eval(const BivariatePoly& p, const Rational& alpha, const Rational& beta);
RationalInterval poly_interval_eval(const BivariatePoly& p, const RationalInterval& box_alpha,
                                    const RationalInterval& box_beta);
bool poly_equal(const BivariatePoly& p, const BivariatePoly& q);

}  // namespace tiltcert
