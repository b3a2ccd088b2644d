#include "tiltcert/verify.hpp"

#include <nlohmann/json.hpp>

namespace tiltcert {

namespace {

using json = nlohmann::ordered_json;

json point_json(const Point& p) { return json{{"alpha", p.alpha.str()}, {"beta", p.beta.str()}}; }

json evidence_json(const Factor& f, const FactorEvidence* ev) {
    json j{{"expr", f.expr.str()}, {"sign", to_string(f.sign)}, {"strategy", to_string(f.strategy)}};
    if (!ev) {
        j["status"] = to_string(CertStatus::Inconclusive);
        return j;
    }
    j["status"] = to_string(ev->status);
    json e = json::object();
    switch (f.strategy) {
        case Strategy::AffineVertex: {
            json verts = json::array();
            for (const VertexValue& v : ev->vertices) {
                verts.push_back({{"alpha", v.point.alpha.str()},
                                 {"beta", v.point.beta.str()},
                                 {"value", v.value.str()},
                                 {"open_boundary", v.on_open_boundary}});
            }
            e["vertices"] = std::move(verts);
            break;
    }
    case Strategy::RegionAtom: {
        e["constant"] = ev->constant.str();
        json atoms = json::array();
        for (const AtomUse& a : ev->atoms) {
            atoms.push_back({{"constraint", a.constraint}, {"multiplier", a.multiplier.str()}, {"strict", a.strict}});
        }
        e["atoms"] = std::move(atoms);
        break;
    }
    case Strategy::IntervalSubdivision:
        e["tree"] = ev->tree;
        e["boxes"] = ev->boxes;
        e["depth"] = ev->depth;
        break;
    }
    if (ev->violation) e["violation"] = point_json(*ev->violation);
    if (!ev->note.empty()) e["note"] = ev->note;
    j["evidence"] = std::move(e);
    return j;
}

}  // namespace

std::string report_to_json(const Report& report) {
    json items = json::array();
    for (const ReportItem& item : report.items) {
        json j{{"name", item.name}, {"status", to_string(item.status)}};
        json factors = json::array();
        if (item.claim) {
            j["target"] = item.claim->target.str();
            j["overall"] = to_string(item.claim->overall);
            for (std::size_t i = 0; i < item.claim->factors.size(); ++i) {
                const FactorEvidence* ev = nullptr;
                if (item.certificate && i < item.certificate->evidence.size()) ev = &item.certificate->evidence[i];
                factors.push_back(evidence_json(item.claim->factors[i], ev));
            }
        }
        j["factors"] = std::move(factors);
        if (item.certificate && item.certificate->witness) {
            j["witness"] = point_json(*item.certificate->witness);
        } else {
            j["witness"] = nullptr;
        }
        j["boxes"] = item.certificate ? item.certificate->boxes : 0;
        j["depth"] = item.certificate ? item.certificate->depth : 0U;
        j["notes"] = item.notes;
        items.push_back(std::move(j));
    }
    json root{{"status", to_string(report.status)}, {"items", std::move(items)}};
    return root.dump(2) + "\n";
}

}  // namespace tiltcert
