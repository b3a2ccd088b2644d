#include "tiltcert/tilt.hpp"

#include <ostream>
#include <stdexcept>

namespace tiltcert {

namespace {

// ch^β₂ − α²·ch0/2, the common numerator of ν and Im Z / (d·α).
BivariatePoly nu_numerator(const std::array<BivariatePoly, 4>& twisted) {
    return twisted[2] - BivariatePoly::alpha().pow(2) * twisted[0] * Rational(1, 2);
}

}  // namespace

TiltParams::TiltParams(Rational alpha, Rational beta, Rational s)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), s_(std::move(s)) {
    if (alpha_.sign() <= 0) throw std::invalid_argument("TiltParams: alpha must be positive, got " + alpha_.str());
}

std::ostream& operator<<(std::ostream& os, const ExtendedSlope& s) { return os << s.str(); }

std::string ComplexRational::str() const {
    return re.str() + (im.sign() < 0 ? " - " : " + ") + im.abs().str() + "i";
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) { return os << z.str(); }

Rational cross(const ComplexRational& z, const ComplexRational& w) { return z.re * w.im - z.im * w.re; }

ExtendedSlope mu(const ChernCharacter& v, const TiltParams& p, const Threefold& x) {
    if (v.ch0.is_zero()) return ExtendedSlope::infinity();
    const ChernCharacter t = twist(v, p.beta(), x);
    return t.ch1 / (p.alpha() * t.ch0);
}

ExtendedSlope nu(const ChernCharacter& v, const TiltParams& p, const Threefold& x) {
    const ChernCharacter t = twist(v, p.beta(), x);
    if (t.ch1.is_zero()) return ExtendedSlope::infinity();
    const Rational a2 = p.alpha() * p.alpha();
    return (t.ch2 - a2 * t.ch0 / 2) / (p.alpha() * t.ch1);
}

ComplexRational central_charge(const ChernCharacter& v, const TiltParams& p, const Threefold& x) {
    const ChernCharacter t = twist(v, p.beta(), x);
    const Rational d(x.degree);
    const Rational& a = p.alpha();
    return {
        -t.ch3 + p.s() * d * a * a * t.ch1,
        d * a * t.ch2 - d * a.pow(3) * t.ch0 / 2,
    };
}

ZPolynomials z_polynomials(const ChernCharacter& v, const Rational& s, const Threefold& x) {
    const auto t = twist_symbolic(v, x);
    const BivariatePoly a = BivariatePoly::alpha();
    const Rational d(x.degree);
    return {
        -t[3] + a.pow(2) * t[1] * (s * d),
        a * nu_numerator(t) * d,
    };
}

ExtendedSlope lambda(const ChernCharacter& v, const TiltParams& p, const Threefold& x) {
    const ComplexRational z = central_charge(v, p, x);
    if (z.im.is_zero()) return ExtendedSlope::infinity();
    return -z.re / z.im;
}

BivariatePoly cross_polynomial(const ChernCharacter& v, const ChernCharacter& w, const Rational& s,
                               const Threefold& x) {
    const ZPolynomials zv = z_polynomials(v, s, x);
    const ZPolynomials zw = z_polynomials(w, s, x);
    return zv.re * zw.im - zv.im * zw.re;
}

Rational bg_margin(const ChernCharacter& v, const TiltParams& p, const Threefold& x) {
    return bg_margin_at_alpha_squared(v, p.alpha() * p.alpha(), p.beta(), p.s(), x);
}

Rational bg_margin_at_alpha_squared(const ChernCharacter& v, const Rational& alpha_squared, const Rational& beta,
                                    const Rational& s, const Threefold& x) {
    const ChernCharacter t = twist(v, beta, x);
    return s * Rational(x.degree) * alpha_squared * t.ch1 - t.ch3;
}

bool bg_inequality_holds(const Rational& margin, const Rational& s) {
    return s == Rational(1, 6) ? margin.sign() >= 0 : margin.sign() > 0;
}

std::optional<Rational> nu_zero_alpha_squared(const ChernCharacter& v, const Rational& beta, const Threefold& x) {
    if (v.ch0.is_zero()) return std::nullopt;
    const ChernCharacter t = twist(v, beta, x);
    return Rational(2) * t.ch2 / t.ch0;
}

BivariatePoly wall_polynomial(const ChernCharacter& v, const ChernCharacter& w, const Threefold& x) {
    const auto tv = twist_symbolic(v, x);
    const auto tw = twist_symbolic(w, x);
    return nu_numerator(tv) * tw[1] - nu_numerator(tw) * tv[1];
}

}  // namespace tiltcert
