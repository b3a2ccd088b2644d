#include "cli.hpp"

#include "tiltcert/chern.hpp"
#include "tiltcert/heart.hpp"
#include "tiltcert/plot.hpp"
#include "tiltcert/tilt.hpp"
#include "tiltcert/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tiltcert::cli {

namespace {

/// Input problem attributable to one flag; maps to exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational flag_rational(const std::string& flag, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw InputError(flag + ": not a rational number: '" + text + "'");
    }
}

std::string read_file(const std::string& flag, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError(flag + ": cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

NamedCharacter load_character(const std::string& flag, const std::string& path) {
    const std::string text = read_file(flag, path);
    try {
        return chern_from_json(text);
    } catch (const std::exception& e) {
        throw InputError(flag + ": " + e.what());
    }
}

void write_output(const std::string& flag, const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw InputError(flag + ": cannot write '" + path + "'");
}

std::pair<std::string, std::string> split_once(const std::string& flag, const std::string& s, char sep) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos || s.find(sep, pos + 1) != std::string::npos) {
        throw InputError(flag + ": expected \"blo:bhi,alo:ahi\", got '" + s + "'");
    }
    return {s.substr(0, pos), s.substr(pos + 1)};
}

struct Box {
    Rational blo, bhi, alo, ahi;
};

Box parse_box(const std::string& flag, const std::string& text) {
    const auto [b, a] = split_once(flag, text, ',');
    const auto [blo, bhi] = split_once(flag, b, ':');
    const auto [alo, ahi] = split_once(flag, a, ':');
    Box box{flag_rational(flag, blo), flag_rational(flag, bhi), flag_rational(flag, alo), flag_rational(flag, ahi)};
    if (box.blo > box.bhi || box.alo >= box.ahi) throw InputError(flag + ": empty range in '" + text + "'");
    if (box.alo.sign() < 0) throw InputError(flag + ": alpha range must lie in alpha >= 0");
    return box;
}

// β closed, α open, like the default region.
Region region_from(const std::string& flag, const std::string& text) {
    if (text.empty()) return Region::standard();
    const Box b = parse_box(flag, text);
    return Region{RationalInterval(b.blo, b.bhi), RationalInterval(b.alo, b.ahi, true, true)};
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string kind_label(ObjectKind k) {
    switch (k) {
        case ObjectKind::LineBundle: return "line bundle";
        case ObjectKind::SpinorTwisted: return "twisted spinor";
        case ObjectKind::Spinor: return "spinor";
        case ObjectKind::Skyscraper: return "skyscraper";
    }
    return "?";
}

int cmd_catalog(bool json, std::ostream& out) {
    const auto cat = quadric_catalog();
    if (json) {
        out << "[\n";
        for (std::size_t i = 0; i < cat.size(); ++i) {
            std::string doc = chern_to_json(cat[i].character, cat[i].label);
            while (!doc.empty() && doc.back() == '\n') doc.pop_back();
            out << doc << (i + 1 < cat.size() ? ",\n" : "\n");
        }
        out << "]\n";
        return kOk;
    }
    out << pad("object", 8) << pad("kind", 16) << pad("ch", 24) << pad("heart shift", 13) << "mu-stable\n";
    for (const CatalogObject& o : cat) {
        out << pad(o.label, 8) << pad(kind_label(o.kind), 16) << pad(o.character.str(), 24)
            << pad(o.label == "S" || o.label == "k(x)" ? "-" : std::to_string(o.shift), 13)
            << (o.mu_stable ? "yes" : "no") << '\n';
    }
    return kOk;
}

int cmd_slopes(const ChernCharacter& v, const std::string& label, const TiltParams& p, std::ostream& out) {
    const Threefold q = quadric_threefold();
    const ComplexRational z = central_charge(v, p, q);
    const Rational margin = bg_margin(v, p, q);
    out << "object   " << label << '\n'
        << "alpha    " << p.alpha().str() << '\n'
        << "beta     " << p.beta().str() << '\n'
        << "s        " << p.s().str() << '\n'
        << "ch       " << v.str() << '\n'
        << "ch^beta  " << twist(v, p.beta(), q).str() << '\n'
        << "mu       " << mu(v, p, q).str() << '\n'
        << "nu       " << nu(v, p, q).str() << '\n'
        << "Re Z     " << z.re.str() << '\n'
        << "Im Z     " << z.im.str() << '\n'
        << "lambda   " << lambda(v, p, q).str() << '\n'
        << "BG       " << margin.str() << (bg_inequality_holds(margin, p.s()) ? " (holds)" : " (violated)") << '\n';
    return kOk;
}

void print_report(const Report& r, std::ostream& out, bool with_notes) {
    for (const ReportItem& item : r.items) {
        out << pad(to_string(item.status), 13) << item.name << '\n';
        if (with_notes || item.status != CertStatus::Certified) {
            for (const std::string& n : item.notes) out << "    " << n << '\n';
            if (item.certificate && item.certificate->witness) {
                out << "    witness alpha = " << item.certificate->witness->alpha.str()
                    << ", beta = " << item.certificate->witness->beta.str() << '\n';
            }
        }
    }
    out << "aggregate: " << to_string(r.status) << " (" << r.items.size() << " items)\n";
}

int exit_for(const Report& r) { return r.status == CertStatus::Certified ? kOk : kNotCertified; }

int cmd_bg(const NamedCharacter& nc, const Rational& s, int grid, const Region& region, std::ostream& out) {
    const Threefold q = quadric_threefold();
    const ChernCharacter& v = nc.character;
    out << "character " << (nc.name ? *nc.name + " " : "") << v.str() << ", s = " << s.str() << '\n';
    if (v.ch0.is_zero()) {
        out << "rank 0: no nu = 0 locus\n";
        return kOk;
    }
    const Rational lo = region.beta.lo();
    const Rational step = grid > 0 ? (region.beta.hi() - lo) / Rational(grid) : Rational(0);
    std::optional<Rational> minimum;
    bool all_hold = true;
    for (int k = 0; k <= grid; ++k) {
        const Rational beta = lo + step * Rational(k);
        const auto a2 = nu_zero_alpha_squared(v, beta, q);
        if (!a2 || a2->sign() <= 0) {
            out << "beta " << pad(beta.str(), 10) << "no real locus\n";
            continue;
        }
        const Rational m = bg_margin_at_alpha_squared(v, *a2, beta, s, q);
        const bool holds = bg_inequality_holds(m, s);
        all_hold = all_hold && holds;
        if (!minimum || m < *minimum) minimum = m;
        out << "beta " << pad(beta.str(), 10) << "alpha^2 " << pad(a2->str(), 12) << "margin " << m.str()
            << (holds ? "" : "  VIOLATED") << '\n';
        if (step.is_zero()) break;
    }
    out << "minimum margin: " << (minimum ? minimum->str() : std::string("none")) << '\n';
    return all_hold ? kOk : kNotCertified;
}

int cmd_subobjects(const Region& region, int depth, unsigned threads, std::ostream& out) {
    out << "rules:\n";
    for (const CandidateRule& r : skyscraper_rules()) out << "  " << r.str() << '\n';
    const CandidateSet cands = skyscraper_candidates();
    const Threefold q = quadric_threefold();
    out << "candidates (Im Z at s = 1/6):\n";
    for (const DimensionVector& v : cands.vectors) {
        out << "  " << pad(v.str(), 11) << heart_z_polynomials(v, Rational(1, 6), q).im.str() << '\n';
    }
    const Report r = verify_skyscraper_condition(region, depth, threads);
    print_report(r, out, true);
    return exit_for(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact tilt-stability certificates on the quadric threefold", "tiltcert"};
    app.require_subcommand(1);

    std::string alpha_text;
    std::string beta_text;
    std::string s_text = "1/6";
    std::string object;
    std::string chern_path;
    std::string chern1_path;
    std::string chern2_path;
    std::string region_text;
    std::string json_path;
    std::string out_path;
    int max_depth = 16;
    int grid = -1;
    unsigned threads = 1;
    bool catalog_json = false;

    auto* catalog = app.add_subcommand("catalog", "Print the quadric object catalog");
    catalog->add_flag("--json", catalog_json, "Emit JSON");

    auto* slopes = app.add_subcommand("slopes", "Slopes, central charge and BG margin of one object");
    slopes->add_option("--alpha", alpha_text)->required();
    slopes->add_option("--beta", beta_text)->required();
    slopes->add_option("--s", s_text);
    auto* slopes_object = slopes->add_option("--object", object, "Catalog label, e.g. O(1), S-1, kx");
    slopes->add_option("--chern", chern_path, "Chern character JSON file")->excludes(slopes_object);

    auto* verify = app.add_subcommand("verify", "Run every certificate and identity check");
    verify->add_option("--region", region_text, "blo:bhi,alo:ahi");
    verify->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", threads)->check(CLI::Range(1U, 64U));
    verify->add_option("--json", json_path, "Write the JSON report here");

    auto* subobjects = app.add_subcommand("subobjects", "Subobject candidates of k(x) and their certificates");
    subobjects->add_option("--region", region_text);
    subobjects->add_option("--max-depth", max_depth)->check(CLI::NonNegativeNumber);
    subobjects->add_option("--threads", threads)->check(CLI::Range(1U, 64U));

    auto* bg = app.add_subcommand("bg", "BG margins along the nu = 0 locus");
    bg->add_option("--chern", chern_path)->required();
    bg->add_option("--s", s_text);
    bg->add_option("--grid", grid)->check(CLI::NonNegativeNumber);
    bg->add_option("--region", region_text);

    auto* plot = app.add_subcommand("plot", "SVG figures");
    plot->require_subcommand(1);
    auto* zvec = plot->add_subcommand("zvectors", "Central charges of the heart generators");
    zvec->add_option("--alpha", alpha_text)->required();
    zvec->add_option("--beta", beta_text)->required();
    zvec->add_option("-o,--out", out_path);
    auto* wall = plot->add_subcommand("wall", "Numerical wall between two characters");
    wall->add_option("--chern1", chern1_path)->required();
    wall->add_option("--chern2", chern2_path)->required();
    wall->add_option("--grid", grid);
    wall->add_option("--region", region_text, "plot box blo:bhi,alo:ahi");
    wall->add_option("-o,--out", out_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "tiltcert: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (catalog->parsed()) return cmd_catalog(catalog_json, out);

        if (slopes->parsed()) {
            const Rational a = flag_rational("--alpha", alpha_text);
            const Rational b = flag_rational("--beta", beta_text);
            const Rational s = flag_rational("--s", s_text);
            if (a.sign() <= 0) throw InputError("--alpha: must be positive");
            ChernCharacter v;
            std::string label;
            if (!chern_path.empty()) {
                const NamedCharacter nc = load_character("--chern", chern_path);
                v = nc.character;
                label = nc.name.value_or(chern_path);
            } else {
                if (object.empty()) throw InputError("--object: required unless --chern is given");
                try {
                    const CatalogObject o = find_quadric_object(object);
                    v = o.character;
                    label = o.label;
                } catch (const std::invalid_argument& e) {
                    throw InputError(std::string("--object: ") + e.what());
                }
            }
            return cmd_slopes(v, label, TiltParams(a, b, s), out);
        }

        if (verify->parsed()) {
            VerifyOptions options;
            options.region = region_from("--region", region_text);
            options.max_depth = max_depth;
            options.threads = threads;
            const Report r = verify_all(options);
            if (!json_path.empty()) write_output("--json", json_path, report_to_json(r), out);
            print_report(r, out, false);
            return exit_for(r);
        }

        if (subobjects->parsed()) {
            return cmd_subobjects(region_from("--region", region_text), max_depth, threads, out);
        }

        if (bg->parsed()) {
            const NamedCharacter nc = load_character("--chern", chern_path);
            const Rational s = flag_rational("--s", s_text);
            if (s.sign() <= 0) throw InputError("--s: must be positive");
            return cmd_bg(nc, s, grid < 0 ? 20 : grid, region_from("--region", region_text), out);
        }

        if (zvec->parsed()) {
            const Rational a = flag_rational("--alpha", alpha_text);
            const Rational b = flag_rational("--beta", beta_text);
            if (a.sign() <= 0) throw InputError("--alpha: must be positive");
            write_output("--out", out_path, emit_zvectors_svg(TiltParams(a, b)), out);
            return kOk;
        }

        if (wall->parsed()) {
            const NamedCharacter v = load_character("--chern1", chern1_path);
            const NamedCharacter w = load_character("--chern2", chern2_path);
            const int g = grid < 0 ? 64 : grid;
            if (g < 16) throw InputError("--grid: must be at least 16");
            const Box b = parse_box("--region", region_text.empty() ? "-1:1,0:1" : region_text);
            if (b.blo >= b.bhi) throw InputError("--region: empty beta range");
            const PlotBox box{b.blo, b.bhi, b.alo, b.ahi};
            write_output("--out", out_path, emit_wall_svg(v.character, w.character, g, box), out);
            return kOk;
        }
    } catch (const InputError& e) {
        err << "tiltcert: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "tiltcert: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace tiltcert::cli
