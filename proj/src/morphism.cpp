#include "trop/morphism.hpp"

#include <algorithm>

namespace trop {

namespace {

std::vector<Direction> directions_at(const TropicalCurve& curve, int v) {
    std::vector<Direction> out;
    for (const auto& e : curve.edges())
        if (e.a == v || e.b == v) out.push_back({false, e.id});
    for (const auto& p : curve.punctures())
        if (p.at == v) out.push_back({true, p.id});
    return out;
}

int weight_of_edge(const WeightedMorphism& m, int e) {
    auto it = m.edge_weights.find(e);
    if (it == m.edge_weights.end())
        fail(errk::IncidenceViolation, "missing weight for edge " + std::to_string(e));
    if (it->second < 1) fail(errk::IncidenceViolation, "non-positive weight on edge " + std::to_string(e));
    return it->second;
}

int weight_of_puncture(const WeightedMorphism& m, int p) {
    auto it = m.puncture_weights.find(p);
    if (it == m.puncture_weights.end())
        fail(errk::IncidenceViolation, "missing weight for puncture " + std::to_string(p));
    if (it->second < 1) fail(errk::IncidenceViolation, "non-positive weight on puncture " + std::to_string(p));
    return it->second;
}

int mapped_vertex(const WeightedMorphism& m, int v) {
    auto it = m.vertex_map.find(v);
    if (it == m.vertex_map.end())
        fail(errk::IncidenceViolation, "vertex " + std::to_string(v) + " has no image");
    return it->second;
}

// Weight sum at source vertex v over one target direction; a loop over the
// direction contributes once per endpoint incidence.
int direction_sum(const WeightedMorphism& m, int v, const Direction& dir) {
    int sum = 0;
    for (const auto& e : m.source.edges()) {
        if (e.a != v && e.b != v) continue;
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end()) continue;
        if (dir.puncture || it->second != dir.id) continue;
        int inc = (e.a == v) + (e.b == v);
        sum += inc * weight_of_edge(m, e.id);
    }
    if (dir.puncture) {
        for (const auto& p : m.source.punctures()) {
            if (p.at != v) continue;
            auto it = m.puncture_map.find(p.id);
            if (it == m.puncture_map.end()) continue;
            if (it->second == dir.id) sum += weight_of_puncture(m, p.id);
        }
    }
    return sum;
}

} // namespace

int validate_morphism(const WeightedMorphism& m) {
    m.source.validate(true);
    m.target.validate(true);

    // totality
    for (const auto& v : m.source.vertices()) {
        int tv = mapped_vertex(m, v.id);
        m.target.vertex(tv);
    }
    for (const auto& e : m.source.edges()) {
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end())
            fail(errk::IncidenceViolation, "edge " + std::to_string(e.id) + " has no image");
        const BoundedEdge& te = m.target.edge(it->second);
        // endpoint multisets must agree
        int ia = mapped_vertex(m, e.a), ib = mapped_vertex(m, e.b);
        std::pair<int, int> got = std::minmax(ia, ib);
        std::pair<int, int> want = std::minmax(te.a, te.b);
        if (got != want)
            fail(errk::IncidenceViolation,
                 "edge " + std::to_string(e.id) + " maps to edge " + std::to_string(te.id) +
                     " but endpoint images do not match");
        weight_of_edge(m, e.id);
    }
    for (const auto& p : m.source.punctures()) {
        auto it = m.puncture_map.find(p.id);
        if (it == m.puncture_map.end())
            fail(errk::IncidenceViolation, "puncture " + std::to_string(p.id) + " has no image");
        const Puncture& tp = m.target.puncture(it->second);
        if (mapped_vertex(m, p.at) != tp.at)
            fail(errk::IncidenceViolation,
                 "puncture " + std::to_string(p.id) + " attaches at the wrong fiber");
        weight_of_puncture(m, p.id);
    }

    // harmonicity vertex by vertex
    for (const auto& v : m.source.vertices()) {
        int tv = m.vertex_map.at(v.id);
        std::vector<Direction> dirs = directions_at(m.target, tv);
        if (dirs.empty())
            fail(errk::DegreeInconsistent, "target vertex " + std::to_string(tv) + " has no directions");
        int first = direction_sum(m, v.id, dirs.front());
        for (size_t i = 1; i < dirs.size(); ++i) {
            int s = direction_sum(m, v.id, dirs[i]);
            if (s != first)
                fail(errk::NotHarmonic, "vertex " + std::to_string(v.id) + ": direction " +
                                            dirs.front().str() + " sums to " + std::to_string(first) +
                                            " but " + dirs[i].str() + " sums to " + std::to_string(s));
        }
        if (first <= 0)
            fail(errk::NotHarmonic, "vertex " + std::to_string(v.id) + " has zero local multiplicity");
    }

    // equal fiber sums over all target edges and punctures
    int degree = -1;
    Direction witness{};
    auto check_dir = [&](const Direction& dir, int sum) {
        if (degree == -1) {
            degree = sum;
            witness = dir;
        } else if (sum != degree) {
            fail(errk::DegreeInconsistent, "fiber over " + witness.str() + " sums to " +
                                               std::to_string(degree) + " but over " + dir.str() +
                                               " sums to " + std::to_string(sum));
        }
    };
    for (const auto& te : m.target.edges()) {
        int sum = 0;
        for (const auto& [e, img] : m.edge_map)
            if (img == te.id) sum += weight_of_edge(m, e);
        check_dir({false, te.id}, sum);
    }
    for (const auto& tp : m.target.punctures()) {
        int sum = 0;
        for (const auto& [p, img] : m.puncture_map)
            if (img == tp.id) sum += weight_of_puncture(m, p);
        check_dir({true, tp.id}, sum);
    }
    if (degree <= 0) fail(errk::DegreeInconsistent, "morphism has no positive degree");
    return degree;
}

int local_multiplicity(const WeightedMorphism& m, int v) {
    int tv = mapped_vertex(m, v);
    std::vector<Direction> dirs = directions_at(m.target, tv);
    if (dirs.empty()) fail(errk::DegreeInconsistent, "target vertex has no directions");
    return direction_sum(m, v, dirs.front());
}

int local_multiplicity_at_puncture_end(const WeightedMorphism& m, int p) {
    m.source.puncture(p);
    auto it = m.puncture_weights.find(p);
    if (it == m.puncture_weights.end()) fail(errk::UnknownId, "puncture has no weight");
    return it->second;
}

Divisor pushforward(const WeightedMorphism& m, const Divisor& d) {
    Divisor out(m.target);
    for (const auto& [v, c] : d.vertex_coeffs()) out.add_at_vertex(m.vertex_map.at(v), c);
    for (const auto& [p, c] : d.puncture_coeffs()) out.add_at_puncture(m.puncture_map.at(p), c);
    return out;
}

Divisor pullback(const WeightedMorphism& m, const Divisor& d_target) {
    Divisor out(m.source);
    for (const auto& v : m.source.vertices()) {
        int c = d_target.at_vertex(m.vertex_map.at(v.id));
        if (c != 0) out.add_at_vertex(v.id, local_multiplicity(m, v.id) * c);
    }
    for (const auto& p : m.source.punctures()) {
        int c = d_target.at_puncture(m.puncture_map.at(p.id));
        if (c != 0) out.add_at_puncture(p.id, local_multiplicity_at_puncture_end(m, p.id) * c);
    }
    return out;
}

Divisor ramification_divisor(const WeightedMorphism& m) {
    Divisor algebraic = canonical_divisor(m.source) - pullback(m, canonical_divisor(m.target));

    Divisor closed_form(m.source);
    for (const auto& v : m.source.vertices()) {
        int mult = local_multiplicity(m, v.id);
        int deg = vertex_degree(m.source, v.id);
        int deg_w = mult * vertex_degree(m.target, m.vertex_map.at(v.id));
        closed_form.add_at_vertex(v.id, 2 * mult - 2 - (deg_w - deg));
    }
    for (const auto& p : m.source.punctures())
        closed_form.add_at_puncture(p.id, local_multiplicity_at_puncture_end(m, p.id) - 1);

    if (!(algebraic == closed_form))
        fail(errk::RHViolation, "ramification divisor mismatch between divisor algebra (" +
                                    algebraic.str() + ") and closed form (" + closed_form.str() + ")");
    return algebraic;
}

Divisor branch_divisor(const WeightedMorphism& m) { return pushforward(m, ramification_divisor(m)); }

RHReport check_riemann_hurwitz(const WeightedMorphism& m) {
    RHReport r;
    r.degree = validate_morphism(m);
    Divisor ram = ramification_divisor(m);
    r.deg_ramification = divisor_degree(ram);
    r.betti_source = first_betti(m.source);
    r.betti_target = first_betti(m.target);
    r.lhs = 2 * r.betti_source - 2;
    r.rhs = (2 * r.betti_target - 2) * r.degree + r.deg_ramification;
    r.betti_ok = r.betti_target <= r.betti_source;
    if (r.lhs != r.rhs)
        fail(errk::RHViolation, "2b1-2 = " + std::to_string(r.lhs) + " but (2b1'-2)d + deg R = " +
                                    std::to_string(r.rhs));
    if (!r.betti_ok)
        fail(errk::RHViolation, "first Betti number decreases along the morphism");
    if (r.deg_ramification < 0 || r.deg_ramification % 2 != 0)
        fail(errk::RHViolation, "deg R = " + std::to_string(r.deg_ramification) + " is not even and non-negative");
    return r;
}

namespace {

// Finite-part coefficient of R_phi at v: 2m-2-(deg_w - deg).
int local_defect(const WeightedMorphism& m, int v) {
    int mult = local_multiplicity(m, v);
    int deg = vertex_degree(m.source, v);
    int deg_w = mult * vertex_degree(m.target, m.vertex_map.at(v));
    return 2 * mult - 2 - (deg_w - deg);
}

} // namespace

bool is_mumford(const WeightedMorphism& m) {
    for (const auto& v : m.source.vertices()) {
        int defect = local_defect(m, v.id);
        if (defect % 2 != 0)
            fail(errk::OddLocalDefect, "vertex " + std::to_string(v.id) + " has odd local defect " +
                                           std::to_string(defect) + "; not the tropicalisation of a curve cover");
    }
    return is_effective(ramification_divisor(m));
}

std::map<int, int> infer_genus_labels(const WeightedMorphism& m) {
    std::map<int, int> labels;
    for (const auto& v : m.source.vertices()) {
        int defect = local_defect(m, v.id);
        if (defect % 2 != 0)
            fail(errk::OddLocalDefect, "vertex " + std::to_string(v.id) + " has odd local defect");
        if (defect > 0)
            fail(errk::OddLocalDefect, "vertex " + std::to_string(v.id) + " has positive local defect " +
                                           std::to_string(defect) + "; no curve cover yields it");
        labels[v.id] = -defect / 2;
    }
    return labels;
}

std::map<Direction, Partition> star_profiles(const WeightedMorphism& m, int v) {
    int tv = mapped_vertex(m, v);
    std::map<Direction, std::vector<int>> acc;
    for (const Direction& dir : directions_at(m.target, tv)) acc[dir] = {};
    for (const auto& e : m.source.edges()) {
        if (e.a != v && e.b != v) continue;
        Direction dir{false, m.edge_map.at(e.id)};
        int inc = (e.a == v) + (e.b == v);
        for (int i = 0; i < inc; ++i) acc[dir].push_back(m.edge_weights.at(e.id));
    }
    for (const auto& p : m.source.punctures()) {
        if (p.at != v) continue;
        Direction dir{true, m.puncture_map.at(p.id)};
        acc[dir].push_back(m.puncture_weights.at(p.id));
    }
    std::map<Direction, Partition> out;
    for (auto& [dir, weights] : acc) out.emplace(dir, Partition(std::move(weights)));
    return out;
}

bool harbater_mumford_check(const std::map<Direction, Partition>& star, int m) {
    if (star.size() != 3)
        fail(errk::WrongArity, "Harbater-Mumford check needs exactly 3 directions, got " +
                                   std::to_string(star.size()));
    for (const auto& [dir, part] : star)
        if (part.sum() != m)
            fail(errk::UnequalSums, "direction " + dir.str() + " does not sum to " + std::to_string(m));
    if (m == 1) return true;
    int full = 0, trivial = 0;
    for (const auto& [dir, part] : star) {
        if (part.length() == 1) ++full;
        else if (part.parts().front() == 1) ++trivial;
    }
    return full == 2 && trivial == 1;
}

} // namespace trop
