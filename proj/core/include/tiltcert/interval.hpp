#pragma once

#include "tiltcert/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace tiltcert {

/// Closed, half-open or open interval with exact rational endpoints.
///
/// An open endpoint is an infimum/supremum that is not attained. All
/// operations return exact hulls; openness propagates only when it is
/// certain that the bound cannot be attained.
class RationalInterval {
public:
    RationalInterval() = default;
    explicit RationalInterval(Rational point);
    RationalInterval(Rational lo, Rational hi, bool lo_open = false, bool hi_open = false);

    static RationalInterval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool lo_open() const { return lo_open_; }
    bool hi_open() const { return hi_open_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    bool contains(const Rational& x) const;

    /// True when every element is strictly positive (resp. >= 0, < 0, <= 0).
    bool certainly_positive() const { return lo_ > 0 || (lo_ == 0 && lo_open_); }
    bool certainly_nonnegative() const { return lo_ >= 0; }
    bool certainly_negative() const { return hi_ < 0 || (hi_ == 0 && hi_open_); }
    bool certainly_nonpositive() const { return hi_ <= 0; }

    /// Exact hull of {x^k : x in this}.
    RationalInterval pow(unsigned k) const;

    /// Intersection of two enclosures of the same set; nullopt when disjoint.
    std::optional<RationalInterval> intersect(const RationalInterval& o) const;

    /// Lower half [lo, mid] and upper half [mid, hi]; the cut point is closed on both sides.
    RationalInterval lower_half() const { return {lo_, midpoint(), lo_open_, false}; }
    RationalInterval upper_half() const { return {midpoint(), hi_, false, hi_open_}; }

    std::string str() const;

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a);
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) { return a + (-b); }
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator*(const Rational& c, const RationalInterval& a);

    friend bool operator==(const RationalInterval&, const RationalInterval&) = default;

private:
    Rational lo_{0};
    Rational hi_{0};
    bool lo_open_ = false;
    bool hi_open_ = false;
};

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv);

}  // namespace tiltcert
