#include "gssp/docs.hpp"

#include <stdexcept>

#include "gssp/matrix.hpp"

namespace gssp {

using nlohmann::json;

namespace {

json pairs_json(const std::vector<std::pair<int, int>>& ps) {
    json a = json::array();
    for (auto [u, v] : ps) a.push_back({u, v});
    return a;
}

std::vector<std::pair<int, int>> pairs_from(const json& j) {
    std::vector<std::pair<int, int>> out;
    if (!j.is_array()) throw std::invalid_argument("document: pair list expected");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("document: pair expected");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(std::string("document: ") + what);
}

}  // namespace

json witness_doc(const Witness& w) {
    return json{{"type", "witness"},
                {"graph6", encode_graph6(w.graph)},
                {"provenance", w.provenance},
                {"A", format_matrix(w.A)},
                {"X", format_matrix(w.X)}};
}

Witness witness_from_doc(const json& j) {
    require(j.is_object() && j.value("type", "") == "witness", "not a witness document");
    require(j.contains("graph6") && j.contains("A") && j.contains("X"), "witness fields missing");
    Witness w;
    w.graph = parse_graph6(j.at("graph6").get<std::string>());
    w.A = parse_matrix(j.at("A").get<std::string>());
    w.X = parse_matrix(j.at("X").get<std::string>());
    w.provenance = j.value("provenance", "");
    return w;
}

json certificate_doc(const ForcingCertificate& c) {
    json steps = json::array();
    for (const ForcingStep& s : c.steps) {
        if (const auto* e = std::get_if<EdgeForce>(&s)) {
            steps.push_back({{"rule", "edge"},
                             {"via", {e->via.first, e->via.second}},
                             {"pivot", e->pivot},
                             {"added", pairs_json({e->added})}});
        } else if (const auto* o = std::get_if<OddCycleForce>(&s)) {
            steps.push_back({{"rule", "odd_cycle"},
                             {"vertex", o->vertex},
                             {"cycle", o->cycle},
                             {"added", pairs_json(o->added)}});
        } else {
            const auto& sp = std::get<SpiderForce>(s);
            steps.push_back({{"rule", "spider"},
                             {"center", sp.center},
                             {"legs", {sp.legs[0], sp.legs[1], sp.legs[2]}},
                             {"h", sp.h},
                             {"added", pairs_json(sp.added)}});
        }
    }
    return json{{"type", "forcing_certificate"},
                {"base", encode_graph6(c.base)},
                {"final", encode_graph6(c.final)},
                {"steps", steps}};
}

ForcingCertificate certificate_from_doc(const json& j) {
    require(j.is_object() && j.value("type", "") == "forcing_certificate",
            "not a forcing certificate document");
    require(j.contains("base") && j.contains("final") && j.contains("steps"),
            "certificate fields missing");
    ForcingCertificate c;
    c.base = parse_graph6(j.at("base").get<std::string>());
    c.final = parse_graph6(j.at("final").get<std::string>());
    require(j.at("steps").is_array(), "steps must be a list");
    for (const auto& s : j.at("steps")) {
        std::string rule = s.value("rule", "");
        if (rule == "edge") {
            auto via = s.at("via");
            require(via.is_array() && via.size() == 2, "edge via");
            auto added = pairs_from(s.at("added"));
            require(added.size() == 1, "edge rule adds one pair");
            c.steps.push_back(EdgeForce{{via[0].get<int>(), via[1].get<int>()},
                                        s.at("pivot").get<int>(), added[0]});
        } else if (rule == "odd_cycle") {
            c.steps.push_back(OddCycleForce{s.at("vertex").get<int>(),
                                            s.at("cycle").get<std::vector<int>>(),
                                            pairs_from(s.at("added"))});
        } else if (rule == "spider") {
            auto legs = s.at("legs");
            require(legs.is_array() && legs.size() == 3, "spider legs");
            c.steps.push_back(SpiderForce{
                s.at("center").get<int>(),
                {legs[0].get<std::vector<int>>(), legs[1].get<std::vector<int>>(),
                 legs[2].get<std::vector<int>>()},
                s.at("h").get<int>(), pairs_from(s.at("added"))});
        } else {
            throw std::invalid_argument("document: unknown rule '" + rule + "'");
        }
    }
    return c;
}

json verdict_doc(const Graph& g, const Verdict& v, std::uint64_t seed) {
    json j{{"type", "verdict"},
           {"graph6", encode_graph6(g)},
           {"stage", v.stage},
           {"tag", v.tag},
           {"seed", seed}};
    switch (v.kind) {
        case VerdictKind::In: j["verdict"] = "in"; break;
        case VerdictKind::Out: j["verdict"] = "out"; break;
        case VerdictKind::Unknown:
            j["verdict"] = "unknown";
            j["samples_passed"] = v.samples_passed;
            break;
    }
    if (v.certificate) j["certificate"] = certificate_doc(*v.certificate);
    if (v.witness) j["witness"] = witness_doc(*v.witness);
    return j;
}

}  // namespace gssp
