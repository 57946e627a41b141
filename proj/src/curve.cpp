#include "trop/curve.hpp"

#include <algorithm>

namespace trop {

int TropicalCurve::add_vertex(int genus) {
    int id = next_vertex_id_;
    add_vertex_with_id(id, genus);
    return id;
}

int TropicalCurve::add_edge(int a, int b, EdgeLength length) {
    int id = next_edge_id_;
    add_edge_with_id(id, a, b, length);
    return id;
}

int TropicalCurve::add_puncture(int at) {
    int id = next_puncture_id_;
    add_puncture_with_id(id, at);
    return id;
}

void TropicalCurve::add_vertex_with_id(int id, int genus) {
    if (vertex_index_.count(id)) fail(errk::InvalidCurve, "duplicate vertex id " + std::to_string(id));
    vertex_index_[id] = vertices_.size();
    vertices_.push_back({id, genus});
    next_vertex_id_ = std::max(next_vertex_id_, id + 1);
}

void TropicalCurve::add_edge_with_id(int id, int a, int b, EdgeLength length) {
    if (edge_index_.count(id)) fail(errk::InvalidCurve, "duplicate edge id " + std::to_string(id));
    edge_index_[id] = edges_.size();
    edges_.push_back({id, a, b, length});
    next_edge_id_ = std::max(next_edge_id_, id + 1);
}

void TropicalCurve::add_puncture_with_id(int id, int at) {
    if (puncture_index_.count(id)) fail(errk::InvalidCurve, "duplicate puncture id " + std::to_string(id));
    puncture_index_[id] = punctures_.size();
    punctures_.push_back({id, at});
    next_puncture_id_ = std::max(next_puncture_id_, id + 1);
}

void TropicalCurve::validate(bool allow_loops) const {
    if (vertices_.empty()) fail(errk::InvalidCurve, "curve has no vertices");
    for (const auto& v : vertices_)
        if (v.genus < 0) fail(errk::InvalidCurve, "negative genus label at vertex " + std::to_string(v.id));
    for (const auto& e : edges_) {
        if (!has_vertex(e.a) || !has_vertex(e.b))
            fail(errk::InvalidCurve, "edge " + std::to_string(e.id) + " references missing vertex");
        if (e.a == e.b && !allow_loops)
            fail(errk::InvalidCurve, "loop at vertex " + std::to_string(e.a) + " (loops not enabled)");
    }
    for (const auto& p : punctures_)
        if (!has_vertex(p.at))
            fail(errk::InvalidCurve, "puncture " + std::to_string(p.id) + " references missing vertex");

    // connectivity of the underlying multigraph
    std::map<int, int> comp;
    for (const auto& v : vertices_) comp[v.id] = v.id;
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : edges_) {
        int ra = find(e.a), rb = find(e.b);
        if (ra != rb) comp[rb] = ra;
    }
    int root = find(vertices_.front().id);
    for (const auto& v : vertices_)
        if (find(v.id) != root) fail(errk::InvalidCurve, "curve is not connected");
}

bool TropicalCurve::has_vertex(int id) const { return vertex_index_.count(id) != 0; }
bool TropicalCurve::has_edge(int id) const { return edge_index_.count(id) != 0; }
bool TropicalCurve::has_puncture(int id) const { return puncture_index_.count(id) != 0; }

const Vertex& TropicalCurve::vertex(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) fail(errk::UnknownId, "unknown vertex id " + std::to_string(id));
    return vertices_[it->second];
}

const BoundedEdge& TropicalCurve::edge(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) fail(errk::UnknownId, "unknown edge id " + std::to_string(id));
    return edges_[it->second];
}

const Puncture& TropicalCurve::puncture(int id) const {
    auto it = puncture_index_.find(id);
    if (it == puncture_index_.end()) fail(errk::UnknownId, "unknown puncture id " + std::to_string(id));
    return punctures_[it->second];
}

int TropicalCurve::genus_sum() const {
    int s = 0;
    for (const auto& v : vertices_) s += v.genus;
    return s;
}

int vertex_degree(const TropicalCurve& curve, int v) {
    curve.vertex(v);
    int deg = 0;
    for (const auto& e : curve.edges()) {
        if (e.a == v) ++deg;
        if (e.b == v) ++deg;
    }
    for (const auto& p : curve.punctures())
        if (p.at == v) ++deg;
    return deg;
}

int first_betti(const TropicalCurve& curve) {
    return static_cast<int>(curve.edges().size()) - static_cast<int>(curve.vertices().size()) + 1;
}

int arithmetic_genus(const TropicalCurve& curve) {
    return first_betti(curve) + curve.genus_sum();
}

Stability stability_status(const TropicalCurve& curve) {
    for (const auto& v : curve.vertices()) {
        int deg = vertex_degree(curve, v.id);
        if (v.genus == 0 && deg < 3) return Stability::Unstable;
        if (v.genus == 1 && deg < 1) return Stability::Unstable;
    }
    for (const auto& e : curve.edges())
        if (e.length.is_infinite()) return Stability::Stable;
    return Stability::Smooth;
}

const char* stability_name(Stability s) {
    switch (s) {
        case Stability::Unstable: return "unstable";
        case Stability::Stable: return "stable";
        case Stability::Smooth: return "smooth";
    }
    return "?";
}

void Divisor::add_at_vertex(int id, int c) {
    if (curve_) curve_->vertex(id);
    int& slot = vertex_coeffs_[id];
    slot += c;
    if (slot == 0) vertex_coeffs_.erase(id);
}

void Divisor::add_at_puncture(int id, int c) {
    if (curve_) curve_->puncture(id);
    int& slot = puncture_coeffs_[id];
    slot += c;
    if (slot == 0) puncture_coeffs_.erase(id);
}

int Divisor::at_vertex(int id) const {
    auto it = vertex_coeffs_.find(id);
    return it == vertex_coeffs_.end() ? 0 : it->second;
}

int Divisor::at_puncture(int id) const {
    auto it = puncture_coeffs_.find(id);
    return it == puncture_coeffs_.end() ? 0 : it->second;
}

Divisor operator+(Divisor a, const Divisor& b) {
    for (const auto& [id, c] : b.vertex_coeffs_) a.add_at_vertex(id, c);
    for (const auto& [id, c] : b.puncture_coeffs_) a.add_at_puncture(id, c);
    return a;
}

Divisor operator-(Divisor a, const Divisor& b) {
    for (const auto& [id, c] : b.vertex_coeffs_) a.add_at_vertex(id, -c);
    for (const auto& [id, c] : b.puncture_coeffs_) a.add_at_puncture(id, -c);
    return a;
}

std::string Divisor::str() const {
    std::string s;
    for (const auto& [id, c] : vertex_coeffs_)
        s += (s.empty() ? "" : " + ") + std::to_string(c) + "[v" + std::to_string(id) + "]";
    for (const auto& [id, c] : puncture_coeffs_)
        s += (s.empty() ? "" : " + ") + std::to_string(c) + "[p" + std::to_string(id) + "]";
    return s.empty() ? "0" : s;
}

Divisor canonical_divisor(const TropicalCurve& curve) {
    Divisor k(curve);
    for (const auto& v : curve.vertices()) k.add_at_vertex(v.id, vertex_degree(curve, v.id) - 2);
    for (const auto& p : curve.punctures()) k.add_at_puncture(p.id, -1);
    return k;
}

int divisor_degree(const Divisor& d) {
    int s = 0;
    for (const auto& [id, c] : d.vertex_coeffs()) s += c;
    for (const auto& [id, c] : d.puncture_coeffs()) s += c;
    return s;
}

bool is_effective(const Divisor& d) {
    for (const auto& [id, c] : d.vertex_coeffs())
        if (c < 0) return false;
    for (const auto& [id, c] : d.puncture_coeffs())
        if (c < 0) return false;
    return true;
}

Divisor part_at_infinity(const Divisor& d) {
    Divisor out;
    if (d.curve()) out = Divisor(*d.curve());
    for (const auto& [id, c] : d.puncture_coeffs()) out.add_at_puncture(id, c);
    return out;
}

} // namespace trop
