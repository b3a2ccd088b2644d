#include "tiltcert/chern.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tiltcert {

Threefold quadric_threefold() { return {"quadric", 2}; }

Threefold projective_space() { return {"P3", 1}; }

ChernCharacter& ChernCharacter::operator+=(const ChernCharacter& o) {
    ch0 += o.ch0;
    ch1 += o.ch1;
    ch2 += o.ch2;
    ch3 += o.ch3;
    return *this;
}

ChernCharacter& ChernCharacter::operator-=(const ChernCharacter& o) {
    ch0 -= o.ch0;
    ch1 -= o.ch1;
    ch2 -= o.ch2;
    ch3 -= o.ch3;
    return *this;
}

ChernCharacter& ChernCharacter::operator*=(const Rational& c) {
    ch0 *= c;
    ch1 *= c;
    ch2 *= c;
    ch3 *= c;
    return *this;
}

std::string ChernCharacter::str() const {
    return "(" + ch0.str() + ", " + ch1.str() + ", " + ch2.str() + ", " + ch3.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const ChernCharacter& v) { return os << v.str(); }

ChernCharacter line_bundle_ch(int n, const Threefold& x) {
    const Rational r(n);
    return {1, r, r * r / 2, r.pow(3) * x.degree / 6};
}

ChernCharacter twist(const ChernCharacter& v, const Rational& beta, const Threefold& x) {
    const Rational d(x.degree);
    const Rational b2 = beta * beta;
    const Rational b3 = b2 * beta;
    return {
        v.ch0,
        v.ch1 - beta * v.ch0,
        v.ch2 - beta * v.ch1 + b2 * v.ch0 / 2,
        v.ch3 - d * beta * v.ch2 + d * b2 * v.ch1 / 2 - d * b3 * v.ch0 / 6,
    };
}

ChernCharacter tensor_line(const ChernCharacter& v, int n, const Threefold& x) { return twist(v, Rational(-n), x); }

ChernCharacter shift(const ChernCharacter& v, int k) { return k % 2 == 0 ? v : -v; }

std::array<BivariatePoly, 4> twist_symbolic(const ChernCharacter& v, const Threefold& x) {
    const BivariatePoly b = BivariatePoly::beta();
    const Rational d(x.degree);
    return {
        BivariatePoly(v.ch0),
        v.ch1 - b * v.ch0,
        v.ch2 - b * v.ch1 + b.pow(2) * (v.ch0 / 2),
        v.ch3 - b * (d * v.ch2) + b.pow(2) * (d * v.ch1 / 2) - b.pow(3) * (d * v.ch0 / 6),
    };
}

ChernCharacter spinor_minus_one_ch() { return {2, -1, 0, Rational(1, 6)}; }

ChernCharacter skyscraper_ch_from_resolution(const Threefold& x) {
    // Alternating sum read off the resolution, O(1) in degree 0.
    return line_bundle_ch(1, x) - Rational(4) * line_bundle_ch(0, x) + Rational(2) * spinor_minus_one_ch() -
           line_bundle_ch(-1, x);
}

std::vector<CatalogObject> quadric_catalog() {
    const Threefold q = quadric_threefold();
    const ChernCharacter s_minus_one = spinor_minus_one_ch();
    return {
        {"O(-1)", ObjectKind::LineBundle, -1, line_bundle_ch(-1, q), 3, true},
        {"S(-1)", ObjectKind::SpinorTwisted, -1, s_minus_one, 2, true},
        {"O", ObjectKind::LineBundle, 0, line_bundle_ch(0, q), 1, true},
        {"O(1)", ObjectKind::LineBundle, 1, line_bundle_ch(1, q), 0, true},
        {"S", ObjectKind::Spinor, 0, tensor_line(s_minus_one, 1, q), 0, true},
        {"k(x)", ObjectKind::Skyscraper, 0, skyscraper_ch_from_resolution(q), 0, false},
    };
}

CatalogObject find_quadric_object(std::string_view label) {
    std::string key;
    for (char c : label) {
        if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c))) key += c;
    }
    for (const CatalogObject& obj : quadric_catalog()) {
        std::string k;
        for (char c : obj.label) {
            if (c != '(' && c != ')') k += c;
        }
        if (k == key) return obj;
    }
    // Any other line bundle O(n).
    if (key.size() > 1 && key[0] == 'O') {
        std::size_t pos = 0;
        const std::string digits = key.substr(1);
        try {
            const int n = std::stoi(digits, &pos);
            if (pos == digits.size()) {
                return {"O(" + std::to_string(n) + ")", ObjectKind::LineBundle, n,
                        line_bundle_ch(n, quadric_threefold()), 0, true};
            }
        } catch (const std::exception&) {
        }
    }
    throw std::invalid_argument("unknown object label '" + std::string(label) + "'");
}

NamedCharacter chern_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed Chern character JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("Chern character JSON must be an object");
    auto field = [&doc](const char* key) {
        const auto it = doc.find(key);
        if (it == doc.end()) throw std::invalid_argument(std::string("Chern character JSON lacks \"") + key + "\"");
        if (it->is_string()) return Rational::parse(it->get<std::string>());
        if (it->is_number_integer()) return Rational(it->get<long>());
        throw std::invalid_argument(std::string("\"") + key + "\" must be a rational string");
    };
    NamedCharacter out;
    out.character = {field("ch0"), field("ch1"), field("ch2"), field("ch3")};
    if (const auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string()) throw std::invalid_argument("\"name\" must be a string");
        out.name = it->get<std::string>();
    }
    return out;
}

std::string chern_to_json(const ChernCharacter& v, const std::optional<std::string>& name) {
    nlohmann::ordered_json doc;
    if (name) doc["name"] = *name;
    doc["ch0"] = v.ch0.str();
    doc["ch1"] = v.ch1.str();
    doc["ch2"] = v.ch2.str();
    doc["ch3"] = v.ch3.str();
    return doc.dump();
}

}  // namespace tiltcert
