#pragma once

#include "stab/gadgets.hpp"
#include "stab/laws.hpp"
#include "stab/stability.hpp"

#include <json.hpp>

namespace stab {

inline nlohmann::json element_to_json(const ElementStatus& s)
{
    nlohmann::json e;
    switch (s.element.kind) {
    case ElementKind::Vertex:
        e["kind"] = "vertex";
        e["ids"] = {s.element.a};
        break;
    case ElementKind::Edge:
        e["kind"] = "edge";
        e["ids"] = {s.element.a, s.element.b};
        break;
    default:
        e["kind"] = "nonedge";
        e["ids"] = {s.element.a, s.element.b};
    }
    e["status"] = s.status_word();
    e["delta"] = s.delta;
    return e;
}

inline nlohmann::json report_to_json(const StabilityReport& r)
{
    nlohmann::json j;
    j["xi"] = to_string(r.xi);
    j["value"] = r.value;
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& s : r.edge_statuses)
        elements.push_back(element_to_json(s));
    for (const auto& s : r.vertex_statuses)
        elements.push_back(element_to_json(s));
    for (const auto& s : r.nonedge_statuses)
        elements.push_back(element_to_json(s));
    j["elements"] = std::move(elements);
    nlohmann::json v;
    v["stable"] = r.verdicts.stable;
    v["vertex_stable"] = r.verdicts.vertex_stable;
    v["unfrozen"] = r.verdicts.unfrozen;
    v["vertex_unfrozen"] = r.verdicts.vertex_unfrozen;
    v["two_way_stable"] = r.verdicts.two_way_stable;
    v["vertex_two_way_stable"] = r.verdicts.vertex_two_way_stable;
    if (r.verdicts.k) {
        v["k"] = *r.verdicts.k;
        v["k_stable"] = r.verdicts.k_stable;
        v["k_vertex_stable"] = r.verdicts.k_vertex_stable;
        v["k_unfrozen"] = r.verdicts.k_unfrozen;
        v["k_vertex_unfrozen"] = r.verdicts.k_vertex_unfrozen;
        v["k_two_way_stable"] = r.verdicts.k_two_way_stable;
        v["k_vertex_two_way_stable"] = r.verdicts.k_vertex_two_way_stable;
    }
    j["verdicts"] = std::move(v);
    j["stats"] = {{"nodes", r.stats.nodes}};
    return j;
}

// Re-reads a serialized report; used to validate round-trips offline.
inline StabilityReport report_from_json(const nlohmann::json& j)
{
    StabilityReport r;
    r.xi = parse_graph_number(j.at("xi").get<std::string>());
    r.value = j.at("value").get<int>();
    for (const auto& e : j.at("elements")) {
        ElementStatus s;
        std::string kind = e.at("kind").get<std::string>();
        auto ids = e.at("ids");
        if (kind == "vertex")
            s.element = ElementRef::vertex(ids.at(0).get<int>());
        else if (kind == "edge")
            s.element
                = ElementRef::edge(ids.at(0).get<int>(), ids.at(1).get<int>());
        else
            s.element = ElementRef::nonedge(
                ids.at(0).get<int>(), ids.at(1).get<int>());
        s.delta = e.at("delta").get<int>();
        if (kind == "vertex")
            r.vertex_statuses.push_back(s);
        else if (kind == "edge")
            r.edge_statuses.push_back(s);
        else
            r.nonedge_statuses.push_back(s);
    }
    const auto& v = j.at("verdicts");
    r.verdicts.stable = v.at("stable").get<bool>();
    r.verdicts.vertex_stable = v.at("vertex_stable").get<bool>();
    r.verdicts.unfrozen = v.at("unfrozen").get<bool>();
    r.verdicts.vertex_unfrozen = v.at("vertex_unfrozen").get<bool>();
    r.verdicts.two_way_stable = v.at("two_way_stable").get<bool>();
    r.verdicts.vertex_two_way_stable
        = v.at("vertex_two_way_stable").get<bool>();
    if (v.contains("k")) {
        r.verdicts.k = v.at("k").get<int>();
        r.verdicts.k_stable = v.at("k_stable").get<bool>();
        r.verdicts.k_vertex_stable = v.at("k_vertex_stable").get<bool>();
        r.verdicts.k_unfrozen = v.at("k_unfrozen").get<bool>();
        r.verdicts.k_vertex_unfrozen = v.at("k_vertex_unfrozen").get<bool>();
        r.verdicts.k_two_way_stable = v.at("k_two_way_stable").get<bool>();
        r.verdicts.k_vertex_two_way_stable
            = v.at("k_vertex_two_way_stable").get<bool>();
    }
    return r;
}

inline nlohmann::json provenance_to_json(const ConstructionResult& r)
{
    nlohmann::json j;
    j["notes"] = r.notes;
    j["value_shift"] = r.value_shift;
    nlohmann::json elements = nlohmann::json::array();
    for (const auto& [ref, tag] : r.element_provenance) {
        nlohmann::json e;
        e["kind"] = ref.kind == ElementKind::Vertex
            ? "vertex"
            : (ref.kind == ElementKind::Edge ? "edge" : "nonedge");
        if (ref.kind == ElementKind::Vertex)
            e["ids"] = {ref.a};
        else
            e["ids"] = {ref.a, ref.b};
        e["origin"] = to_string(tag.origin);
        if (tag.source) {
            nlohmann::json src;
            src["kind"] = tag.source->kind == ElementKind::Vertex
                ? "vertex"
                : (tag.source->kind == ElementKind::Edge ? "edge" : "nonedge");
            if (tag.source->kind == ElementKind::Vertex)
                src["ids"] = {tag.source->a};
            else
                src["ids"] = {tag.source->a, tag.source->b};
            e["source"] = std::move(src);
        }
        elements.push_back(std::move(e));
    }
    j["elements"] = std::move(elements);
    return j;
}

inline nlohmann::json law_report_to_json(const LawReport& r)
{
    nlohmann::json j;
    j["law"] = r.id;
    j["instances"] = r.instances;
    j["passed"] = r.passed();
    j["elapsed_seconds"] = r.elapsed_seconds;
    nlohmann::json vs = nlohmann::json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"instance", v.instance}, {"detail", v.detail}});
    j["violations"] = std::move(vs);
    return j;
}

} // namespace stab
