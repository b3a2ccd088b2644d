#include "tiltcert/interval.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace tiltcert {

namespace {

// A candidate extreme value together with whether it is attained.
struct Candidate {
    Rational value;
    bool attained;
};

// Picks min and max over candidates; a bound is open only if no candidate
// realising it is attained.
RationalInterval hull(const Candidate* first, const Candidate* last) {
    Rational lo = first->value;
    Rational hi = first->value;
    for (const Candidate* c = first; c != last; ++c) {
        lo = min(lo, c->value);
        hi = max(hi, c->value);
    }
    bool lo_attained = false;
    bool hi_attained = false;
    for (const Candidate* c = first; c != last; ++c) {
        if (c->value == lo && c->attained) lo_attained = true;
        if (c->value == hi && c->attained) hi_attained = true;
    }
    return {lo, hi, !lo_attained, !hi_attained};
}

}  // namespace

RationalInterval::RationalInterval(Rational point) : lo_(point), hi_(std::move(point)) {}

RationalInterval::RationalInterval(Rational lo, Rational hi, bool lo_open, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
    if (hi_ < lo_) throw std::invalid_argument("RationalInterval: lo > hi");
    if (lo_ == hi_ && (lo_open_ || hi_open_)) throw std::invalid_argument("RationalInterval: empty interval");
}

bool RationalInterval::contains(const Rational& x) const {
    const bool above = lo_open_ ? x > lo_ : x >= lo_;
    const bool below = hi_open_ ? x < hi_ : x <= hi_;
    return above && below;
}

RationalInterval RationalInterval::pow(unsigned k) const {
    if (k == 0) return RationalInterval(Rational(1));
    if (k % 2 == 1) return {lo_.pow(k), hi_.pow(k), lo_open_, hi_open_};
    // Even power: monotone on each sign side.
    if (lo_ >= 0) return {lo_.pow(k), hi_.pow(k), lo_open_, hi_open_};
    if (hi_ <= 0) return {hi_.pow(k), lo_.pow(k), hi_open_, lo_open_};
    // Straddles zero: 0 is an interior point, so it is attained.
    const Rational l = lo_.pow(k);
    const Rational h = hi_.pow(k);
    if (l > h) return {Rational(0), l, false, lo_open_};
    if (h > l) return {Rational(0), h, false, hi_open_};
    return {Rational(0), h, false, lo_open_ && hi_open_};
}

std::optional<RationalInterval> RationalInterval::intersect(const RationalInterval& o) const {
    Rational lo = lo_;
    bool lo_open = lo_open_;
    if (o.lo_ > lo) {
        lo = o.lo_;
        lo_open = o.lo_open_;
    } else if (o.lo_ == lo) {
        lo_open = lo_open || o.lo_open_;
    }
    Rational hi = hi_;
    bool hi_open = hi_open_;
    if (o.hi_ < hi) {
        hi = o.hi_;
        hi_open = o.hi_open_;
    } else if (o.hi_ == hi) {
        hi_open = hi_open || o.hi_open_;
    }
    if (hi < lo || (hi == lo && (lo_open || hi_open))) return std::nullopt;
    return RationalInterval(lo, hi, lo_open, hi_open);
}

std::string RationalInterval::str() const {
    return std::string(lo_open_ ? "(" : "[") + lo_.str() + ", " + hi_.str() + (hi_open_ ? ")" : "]");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_, a.lo_open_ || b.lo_open_, a.hi_open_ || b.hi_open_};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_, a.hi_open_, a.lo_open_}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    // A product of two endpoints is attained if both are, or if one of them
    // is an attained zero (then every element of the other side gives 0).
    const std::array<std::pair<const Rational*, bool>, 2> xs{{{&a.lo_, a.lo_open_}, {&a.hi_, a.hi_open_}}};
    const std::array<std::pair<const Rational*, bool>, 2> ys{{{&b.lo_, b.lo_open_}, {&b.hi_, b.hi_open_}}};
    std::array<Candidate, 4> cands;
    std::size_t n = 0;
    for (const auto& [x, xo] : xs) {
        for (const auto& [y, yo] : ys) {
            const bool attained = (!xo && !yo) || (!xo && x->is_zero()) || (!yo && y->is_zero());
            cands[n++] = {*x * *y, attained};
        }
    }
    return hull(cands.data(), cands.data() + n);
}

RationalInterval operator*(const Rational& c, const RationalInterval& a) {
    if (c.sign() >= 0) {
        if (c.is_zero()) return RationalInterval(Rational(0));
        return {c * a.lo_, c * a.hi_, a.lo_open_, a.hi_open_};
    }
    return {c * a.hi_, c * a.lo_, a.hi_open_, a.lo_open_};
}

std::ostream& operator<<(std::ostream& os, const RationalInterval& iv) { return os << iv.str(); }

}  // namespace tiltcert
