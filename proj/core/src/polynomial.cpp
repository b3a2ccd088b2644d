#include "tiltcert/polynomial.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace tiltcert {

BivariatePoly::BivariatePoly(Rational constant) { add_term({0, 0}, constant); }

BivariatePoly BivariatePoly::alpha() { return monomial(1, 1, 0); }

BivariatePoly BivariatePoly::beta() { return monomial(1, 0, 1); }

BivariatePoly BivariatePoly::monomial(Rational coeff, unsigned alpha_exp, unsigned beta_exp) {
    BivariatePoly p;
    p.add_term({alpha_exp, beta_exp}, coeff);
    return p;
}

void BivariatePoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational BivariatePoly::coefficient(unsigned alpha_exp, unsigned beta_exp) const {
    const auto it = terms_.find({alpha_exp, beta_exp});
    return it == terms_.end() ? Rational(0) : it->second;
}

bool BivariatePoly::is_constant() const { return total_degree() == 0; }

unsigned BivariatePoly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

unsigned BivariatePoly::degree_alpha() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.alpha);
    return d;
}

unsigned BivariatePoly::degree_beta() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.beta);
    return d;
}

Rational BivariatePoly::eval(const Rational& alpha, const Rational& beta) const {
    Rational sum(0);
    for (const auto& [m, c] : terms_) sum += c * alpha.pow(m.alpha) * beta.pow(m.beta);
    return sum;
}

RationalInterval BivariatePoly::interval_eval(const RationalInterval& alpha, const RationalInterval& beta) const {
    RationalInterval sum(Rational(0));
    for (const auto& [m, c] : terms_) {
        RationalInterval term = alpha.pow(m.alpha) * beta.pow(m.beta);
        sum = sum + c * term;
    }
    return sum;
}

RationalInterval BivariatePoly::horner_eval(const RationalInterval& alpha, const RationalInterval& beta) const {
    const unsigned db = degree_beta();
    std::vector<BivariatePoly> by_beta(db + 1);
    for (const auto& [m, c] : terms_) by_beta[m.beta].add_term({m.alpha, 0}, c);
    RationalInterval acc = by_beta[db].interval_eval(alpha, beta);
    for (unsigned k = db; k-- > 0;) {
        acc = acc * beta + by_beta[k].interval_eval(alpha, beta);
    }
    return acc;
}

RationalInterval BivariatePoly::enclosure(const RationalInterval& alpha, const RationalInterval& beta) const {
    const RationalInterval naive = interval_eval(alpha, beta);
    const RationalInterval horner = horner_eval(alpha, beta);
    // Both contain the true range, so they always intersect.
    return naive.intersect(horner).value_or(naive);
}

std::optional<BivariatePoly> BivariatePoly::divide_by_alpha_power(unsigned k) const {
    BivariatePoly q;
    for (const auto& [m, c] : terms_) {
        if (m.alpha < k) return std::nullopt;
        q.add_term({m.alpha - k, m.beta}, c);
    }
    return q;
}

BivariatePoly BivariatePoly::pow(unsigned k) const {
    BivariatePoly r(1);
    for (unsigned i = 0; i < k; ++i) r *= *this;
    return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const BivariatePoly& o) {
    BivariatePoly product;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) product.add_term({m1.alpha + m2.alpha, m1.beta + m2.beta}, c1 * c2);
    }
    terms_ = std::move(product.terms_);
    return *this;
}

BivariatePoly& BivariatePoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

BivariatePoly operator-(BivariatePoly a) { return a *= Rational(-1); }

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        const Rational mag = c.abs();
        std::string body;
        if (m.degree() == 0 || mag != 1) body = mag.str();
        auto append = [&body](const char* var, unsigned e) {
            if (e == 0) return;
            if (!body.empty()) body += "*";
            body += var;
            if (e > 1) body += "^" + std::to_string(e);
        };
        append("a", m.alpha);
        append("b", m.beta);
        out += body;
    }
    return out;
}

namespace {

// Recursive-descent parser for sums of products of rationals, a, b,
// parenthesised sums and powers.
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    BivariatePoly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        BivariatePoly p = parse_sum();
        if (!at_end()) fail("unbalanced ')'");
        return p;
    }

private:
    // Signed terms up to end of input or a closing parenthesis.
    BivariatePoly parse_sum() {
        BivariatePoly sum;
        bool first = true;
        while (!at_end() && peek() != ')') {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            sum += parse_term() * Rational(sign);
            skip_ws();
        }
        if (first) fail("empty expression");
        return sum;
    }

    BivariatePoly parse_term() {
        BivariatePoly term = parse_factor();
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            term *= parse_factor();
            skip_ws();
        }
        return term;
    }

    BivariatePoly parse_factor() {
        if (at_end()) fail("unexpected end of input");
        const char c = peek();
        if (c == '(') {
            ++pos_;
            skip_ws();
            BivariatePoly inner = parse_sum();
            if (at_end()) fail("missing ')'");
            ++pos_;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                inner = inner.pow(parse_uint());
            }
            return inner;
        }
        if (c == 'a' || c == 'b') {
            ++pos_;
            unsigned e = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                e = parse_uint();
            }
            return c == 'a' ? BivariatePoly::monomial(1, e, 0) : BivariatePoly::monomial(1, 0, e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            try {
                return BivariatePoly(Rational::parse(text_.substr(start, pos_ - start)));
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    unsigned parse_uint() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected exponent");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

BivariatePoly BivariatePoly::parse(std::string_view text) { return PolyParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.str(); }

Rational poly_eval(const BivariatePoly& p, const Rational& alpha, const Rational& beta) { return p.eval(alpha, beta); }

RationalInterval poly_interval_eval(const BivariatePoly& p, const RationalInterval& box_alpha,
                                    const RationalInterval& box_beta) {
    return p.interval_eval(box_alpha, box_beta);
}

bool poly_equal(const BivariatePoly& p, const BivariatePoly& q) { return (p - q).is_zero(); }

}  // namespace tiltcert
