#include "trop/json_io.hpp"

#include <algorithm>
#include <cstdint>

namespace trop {

namespace {

Json length_to_json(const EdgeLength& len) {
    switch (len.kind) {
        case EdgeLength::Kind::Unset: return nullptr;
        case EdgeLength::Kind::Infinite: return "inf";
        case EdgeLength::Kind::Finite: return len.value.str();
    }
    return nullptr;
}

EdgeLength length_from_json(const Json& j) {
    if (j.is_null()) return EdgeLength::unset();
    if (j.is_number_integer()) return EdgeLength::finite(Rational(j.get<std::int64_t>()));
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return EdgeLength::infinite();
        size_t slash = s.find('/');
        if (slash == std::string::npos) return EdgeLength::finite(Rational(std::stoll(s)));
        return EdgeLength::finite(Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))));
    }
    fail(errk::ParseError, "bad edge length");
}

Json int_map_to_json(const std::map<int, int>& m) {
    Json j = Json::object();
    for (const auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

std::map<int, int> int_map_from_json(const Json& j) {
    std::map<int, int> m;
    for (const auto& [k, v] : j.items()) m[std::stoi(k)] = v.get<int>();
    return m;
}

} // namespace

Json curve_to_json(const TropicalCurve& curve) {
    Json j;
    j["vertices"] = Json::array();
    std::vector<Vertex> vs = curve.vertices();
    std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : vs) j["vertices"].push_back({{"id", v.id}, {"genus", v.genus}});
    j["edges"] = Json::array();
    std::vector<BoundedEdge> es = curve.edges();
    std::sort(es.begin(), es.end(),
              [](const BoundedEdge& a, const BoundedEdge& b) { return a.id < b.id; });
    for (const auto& e : es)
        j["edges"].push_back(
            {{"id", e.id}, {"ends", Json::array({e.a, e.b})}, {"length", length_to_json(e.length)}});
    j["punctures"] = Json::array();
    std::vector<Puncture> ps = curve.punctures();
    std::sort(ps.begin(), ps.end(), [](const Puncture& a, const Puncture& b) { return a.id < b.id; });
    for (const auto& p : ps) j["punctures"].push_back({{"id", p.id}, {"at", p.at}});
    return j;
}

TropicalCurve curve_from_json(const Json& j) {
    TropicalCurve c;
    for (const auto& v : j.at("vertices"))
        c.add_vertex_with_id(v.at("id").get<int>(), v.value("genus", 0));
    for (const auto& e : j.at("edges"))
        c.add_edge_with_id(e.at("id").get<int>(), e.at("ends")[0].get<int>(), e.at("ends")[1].get<int>(),
                           length_from_json(e.value("length", Json(nullptr))));
    for (const auto& p : j.at("punctures")) c.add_puncture_with_id(p.at("id").get<int>(), p.at("at").get<int>());
    c.validate();
    return c;
}

Json divisor_to_json(const Divisor& d) {
    Json j;
    j["vertices"] = int_map_to_json(d.vertex_coeffs());
    j["punctures"] = int_map_to_json(d.puncture_coeffs());
    return j;
}

Divisor divisor_from_json(const Json& j, const TropicalCurve& curve) {
    Divisor d(curve);
    for (const auto& [k, v] : int_map_from_json(j.at("vertices"))) d.add_at_vertex(k, v);
    for (const auto& [k, v] : int_map_from_json(j.at("punctures"))) d.add_at_puncture(k, v);
    return d;
}

Json morphism_to_json(const WeightedMorphism& m) {
    Json j;
    j["source"] = curve_to_json(m.source);
    j["target"] = curve_to_json(m.target);
    j["vertex_map"] = int_map_to_json(m.vertex_map);
    j["edge_map"] = int_map_to_json(m.edge_map);
    j["puncture_map"] = int_map_to_json(m.puncture_map);
    j["edge_weights"] = int_map_to_json(m.edge_weights);
    j["puncture_weights"] = int_map_to_json(m.puncture_weights);
    return j;
}

WeightedMorphism morphism_from_json(const Json& j) {
    WeightedMorphism m;
    m.source = curve_from_json(j.at("source"));
    m.target = curve_from_json(j.at("target"));
    m.vertex_map = int_map_from_json(j.at("vertex_map"));
    m.edge_map = int_map_from_json(j.at("edge_map"));
    m.puncture_map = int_map_from_json(j.at("puncture_map"));
    m.edge_weights = int_map_from_json(j.at("edge_weights"));
    m.puncture_weights = int_map_from_json(j.at("puncture_weights"));
    return m;
}

std::string dot_export(const WeightedMorphism& m) {
    std::string out = "graph cover {\n";
    out += "  subgraph cluster_source {\n    label=\"source\";\n";
    std::vector<Vertex> vs = m.source.vertices();
    std::sort(vs.begin(), vs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : vs)
        out += "    s_v" + std::to_string(v.id) + " [label=\"v" + std::to_string(v.id) + " g=" +
               std::to_string(v.genus) + " -> t_v" + std::to_string(m.vertex_map.at(v.id)) + "\"];\n";
    std::vector<BoundedEdge> es = m.source.edges();
    std::sort(es.begin(), es.end(),
              [](const BoundedEdge& a, const BoundedEdge& b) { return a.id < b.id; });
    for (const auto& e : es)
        out += "    s_v" + std::to_string(e.a) + " -- s_v" + std::to_string(e.b) + " [label=\"w=" +
               std::to_string(m.edge_weights.at(e.id)) + " -> t_e" + std::to_string(m.edge_map.at(e.id)) +
               "\"];\n";
    std::vector<Puncture> ps = m.source.punctures();
    std::sort(ps.begin(), ps.end(), [](const Puncture& a, const Puncture& b) { return a.id < b.id; });
    for (const auto& p : ps) {
        out += "    s_p" + std::to_string(p.id) + " [shape=none,label=\"p" + std::to_string(p.id) +
               " -> t_p" + std::to_string(m.puncture_map.at(p.id)) + "\"];\n";
        out += "    s_v" + std::to_string(p.at) + " -- s_p" + std::to_string(p.id) + " [label=\"w=" +
               std::to_string(m.puncture_weights.at(p.id)) + "\",style=dashed];\n";
    }
    out += "  }\n  subgraph cluster_target {\n    label=\"target\";\n";
    std::vector<Vertex> tvs = m.target.vertices();
    std::sort(tvs.begin(), tvs.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : tvs) out += "    t_v" + std::to_string(v.id) + ";\n";
    std::vector<BoundedEdge> tes = m.target.edges();
    std::sort(tes.begin(), tes.end(),
              [](const BoundedEdge& a, const BoundedEdge& b) { return a.id < b.id; });
    for (const auto& e : tes)
        out += "    t_v" + std::to_string(e.a) + " -- t_v" + std::to_string(e.b) + " [label=\"e" +
               std::to_string(e.id) + "\"];\n";
    std::vector<Puncture> tps = m.target.punctures();
    std::sort(tps.begin(), tps.end(), [](const Puncture& a, const Puncture& b) { return a.id < b.id; });
    for (const auto& p : tps) {
        out += "    t_p" + std::to_string(p.id) + " [shape=none,label=\"p" + std::to_string(p.id) + "\"];\n";
        out += "    t_v" + std::to_string(p.at) + " -- t_p" + std::to_string(p.id) + " [style=dashed];\n";
    }
    out += "  }\n}\n";
    return out;
}

std::string form_digest(const std::string& canonical_form) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_form) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "cf_";
    for (int i = 15; i >= 0; --i) out += hex[(h >> (4 * i)) & 0xf];
    return out;
}

} // namespace trop
