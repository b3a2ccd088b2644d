#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tiltcert {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Text form is "p/q" or "n" with an optional leading minus and no
/// whitespace; `str()` always emits the canonical form.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T n) : value_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)

    Rational(long num, long den);

    explicit Rational(mpq_class value);

    /// Throws std::invalid_argument on anything but the canonical grammar.
    static Rational parse(std::string_view text);

    std::string str() const;

    /// Exact decimal rounding to `digits` places (half away from zero).
    std::string to_fixed(int digits) const;

    double to_double() const { return value_.get_d(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;

    Rational abs() const;
    Rational pow(unsigned k) const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    std::size_t hash() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tiltcert
