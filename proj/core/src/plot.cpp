#include "tiltcert/plot.hpp"

#include "tiltcert/heart.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace tiltcert {

namespace {

constexpr int kCanvas = 500;

std::string fx(const Rational& r) { return r.to_fixed(6); }

void svg_open(std::ostringstream& os) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas << "\" height=\"" << kCanvas
       << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
}

Point interpolate(const Point& p, const Point& q, const Rational& vp, const Rational& vq) {
    const Rational t = vp / (vp - vq);
    return {p.alpha + t * (q.alpha - p.alpha), p.beta + t * (q.beta - p.beta)};
}

}  // namespace

std::string emit_zvectors_svg(const TiltParams& p, const Threefold& x) {
    constexpr std::array gens{HeartGenerator::OMinusOneShift3, HeartGenerator::SpinorShift2, HeartGenerator::OShift1,
                              HeartGenerator::OOne};
    std::array<ComplexRational, 4> z;
    Rational extent(0);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        z[i] = central_charge(generator_ch(gens[i], x), p, x);
        extent = max(extent, max(z[i].re.abs(), z[i].im.abs()));
    }
    const Rational centre(kCanvas / 2);
    const Rational scale = extent.is_zero() ? Rational(1) : Rational(200) / extent;
    auto sx = [&](const Rational& re) { return fx(centre + re * scale); };
    auto sy = [&](const Rational& im) { return fx(centre - im * scale); };

    std::ostringstream os;
    svg_open(os);
    os << "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
          "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
    os << "  <line class=\"axis\" x1=\"20\" y1=\"250\" x2=\"480\" y2=\"250\" stroke=\"#bbb\"/>\n";
    os << "  <line class=\"axis\" x1=\"250\" y1=\"20\" x2=\"250\" y2=\"480\" stroke=\"#bbb\"/>\n";

    const bool case_a = p.alpha() >= -p.beta();
    if (case_a) {
        os << "  <line class=\"divider\" x1=\"250.000000\" y1=\"20.000000\" x2=\"250.000000\" y2=\"480.000000\""
              " stroke=\"#c33\" stroke-dasharray=\"6,4\"/>\n";
    } else {
        const ComplexRational& o = z[2];
        const Rational reach = Rational(230) / max(o.re.abs(), o.im.abs());
        os << "  <line class=\"divider\" x1=\"" << fx(centre - o.re * reach) << "\" y1=\"" << fx(centre + o.im * reach)
           << "\" x2=\"" << fx(centre + o.re * reach) << "\" y2=\"" << fx(centre - o.im * reach)
           << "\" stroke=\"#c33\" stroke-dasharray=\"6,4\"/>\n";
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        os << "  <line class=\"arrow\" data-label=\"" << generator_label(gens[i]) << "\" x1=\"250.000000\""
           << " y1=\"250.000000\" x2=\"" << sx(z[i].re) << "\" y2=\"" << sy(z[i].im)
           << "\" stroke=\"#000\" marker-end=\"url(#head)\"/>\n";
        os << "  <text x=\"" << sx(z[i].re) << "\" y=\"" << sy(z[i].im) << "\" font-size=\"12\">"
           << generator_label(gens[i]) << "</text>\n";
    }
    os << "  <text x=\"10\" y=\"490\" font-size=\"12\">alpha = " << p.alpha().str() << ", beta = " << p.beta().str()
       << (case_a ? " (alpha &gt;= -beta)" : " (alpha &lt; -beta)") << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

std::vector<Segment> wall_contour(const ChernCharacter& v, const ChernCharacter& w, int grid, const PlotBox& box,
                                  const Threefold& x) {
    if (grid < 16) throw std::invalid_argument("grid must be at least 16");
    if (box.beta_lo >= box.beta_hi || box.alpha_lo >= box.alpha_hi) throw std::invalid_argument("empty plot box");
    const BivariatePoly wall = wall_polynomial(v, w, x);
    std::vector<Segment> out;
    if (wall.is_zero()) return out;

    const auto n = static_cast<std::size_t>(grid);
    const Rational db = (box.beta_hi - box.beta_lo) / Rational(grid);
    const Rational da = (box.alpha_hi - box.alpha_lo) / Rational(grid);
    std::vector<Point> nodes((n + 1) * (n + 1));
    std::vector<Rational> values(nodes.size());
    auto at = [&](std::size_t i, std::size_t j) { return j * (n + 1) + i; };
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= n; ++i) {
            Point pt{box.alpha_lo + da * Rational(static_cast<long>(j)), box.beta_lo + db * Rational(static_cast<long>(i))};
            values[at(i, j)] = wall.eval(pt.alpha, pt.beta);
            nodes[at(i, j)] = std::move(pt);
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            // corners counter-clockwise from (β_lo, α_lo)
            const std::array<std::size_t, 4> c{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            unsigned code = 0;
            for (unsigned k = 0; k < 4; ++k) {
                if (values[c[k]].sign() > 0) code |= 1U << k;
            }
            if (code == 0 || code == 15) continue;
            auto edge = [&](unsigned e) {
                const std::size_t p = c[e];
                const std::size_t q = c[(e + 1) % 4];
                return interpolate(nodes[p], nodes[q], values[p], values[q]);
            };
            auto add = [&](unsigned e1, unsigned e2) { out.push_back({edge(e1), edge(e2)}); };
            if (code == 5 || code == 10) {
                const Point mid{box.alpha_lo + da * (Rational(static_cast<long>(j)) + Rational(1, 2)),
                                box.beta_lo + db * (Rational(static_cast<long>(i)) + Rational(1, 2))};
                const bool centre_positive = wall.eval(mid.alpha, mid.beta).sign() > 0;
                // Cut off the corners that are disconnected from the centre's class.
                const bool cut_odd = (code == 5) == centre_positive;
                if (cut_odd) {
                    add(0, 1);
                    add(2, 3);
                } else {
                    add(3, 0);
                    add(1, 2);
                }
                continue;
            }
            std::array<unsigned, 2> crossed{};
            std::size_t found = 0;
            for (unsigned e = 0; e < 4; ++e) {
                const bool a = (code >> e) & 1U;
                const bool b = (code >> ((e + 1) % 4)) & 1U;
                if (a != b) crossed[found++] = e;
            }
            add(crossed[0], crossed[1]);
        }
    }
    return out;
}

std::string emit_wall_svg(const ChernCharacter& v, const ChernCharacter& w, int grid, const PlotBox& box,
                          const Threefold& x) {
    const std::vector<Segment> segments = wall_contour(v, w, grid, box, x);
    const Rational width = box.beta_hi - box.beta_lo;
    const Rational height = box.alpha_hi - box.alpha_lo;
    const Rational scale = Rational(400) / max(width, height);
    const Rational left(50);
    const Rational bottom(450);
    auto sx = [&](const Rational& beta) { return fx(left + (beta - box.beta_lo) * scale); };
    auto sy = [&](const Rational& alpha) { return fx(bottom - (alpha - box.alpha_lo) * scale); };

    std::ostringstream os;
    svg_open(os);
    os << "  <rect class=\"frame\" x=\"" << sx(box.beta_lo) << "\" y=\"" << sy(box.alpha_hi) << "\" width=\""
       << fx(width * scale) << "\" height=\"" << fx(height * scale) << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
    for (const Segment& s : segments) {
        os << "  <line class=\"contour\" x1=\"" << sx(s.from.beta) << "\" y1=\"" << sy(s.from.alpha) << "\" x2=\""
           << sx(s.to.beta) << "\" y2=\"" << sy(s.to.alpha) << "\" stroke=\"#036\"/>\n";
    }
    os << "  <text x=\"10\" y=\"490\" font-size=\"12\">beta in [" << box.beta_lo.str() << ", " << box.beta_hi.str()
       << "], alpha in [" << box.alpha_lo.str() << ", " << box.alpha_hi.str() << "]</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace tiltcert
