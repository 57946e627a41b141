#ifndef TROP_TEST_FIXTURES_HPP
#define TROP_TEST_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>

#include "trop/curve.hpp"
#include "trop/morphism.hpp"

namespace fixtures {

using namespace trop;

// One vertex, two punctures: the tropical line.
inline TropicalCurve tropical_line() {
    TropicalCurve c;
    int v = c.add_vertex();
    c.add_puncture(v);
    c.add_puncture(v);
    c.validate();
    return c;
}

// Two vertices joined by two parallel edges.
inline TropicalCurve wiener() {
    TropicalCurve c;
    int a = c.add_vertex();
    int b = c.add_vertex();
    c.add_edge(a, b);
    c.add_edge(a, b);
    c.validate();
    return c;
}

inline TropicalCurve theta_graph() {
    TropicalCurve c;
    int a = c.add_vertex();
    int b = c.add_vertex();
    c.add_edge(a, b);
    c.add_edge(a, b);
    c.add_edge(a, b);
    c.validate();
    return c;
}

// Caterpillar target: backbone v_1..v_n, one tooth puncture per vertex, a
// handle puncture at each end. Puncture ids: 0 = left handle, 1..n = teeth,
// n+1 = right handle.
inline TropicalCurve comb(int n) {
    TropicalCurve c;
    std::vector<int> backbone;
    for (int i = 0; i < n; ++i) backbone.push_back(c.add_vertex());
    for (int i = 0; i + 1 < n; ++i) c.add_edge(backbone[i], backbone[i + 1]);
    c.add_puncture(backbone.front());
    for (int i = 0; i < n; ++i) c.add_puncture(backbone[i]);
    c.add_puncture(backbone.back());
    c.validate();
    return c;
}

inline WeightedMorphism identity_morphism(const TropicalCurve& c) {
    WeightedMorphism m;
    m.source = c;
    m.target = c;
    for (const auto& v : c.vertices()) m.vertex_map[v.id] = v.id;
    for (const auto& e : c.edges()) {
        m.edge_map[e.id] = e.id;
        m.edge_weights[e.id] = 1;
    }
    for (const auto& p : c.punctures()) {
        m.puncture_map[p.id] = p.id;
        m.puncture_weights[p.id] = 1;
    }
    return m;
}

// One vertex over the tropical line, both punctures of weight 2.
inline WeightedMorphism weight2_line_cover() {
    WeightedMorphism m;
    m.target = tropical_line();
    int v = m.source.add_vertex();
    int p0 = m.source.add_puncture(v);
    int p1 = m.source.add_puncture(v);
    m.source.validate();
    m.vertex_map[v] = m.target.vertices()[0].id;
    m.puncture_map[p0] = m.target.punctures()[0].id;
    m.puncture_map[p1] = m.target.punctures()[1].id;
    m.puncture_weights[p0] = 2;
    m.puncture_weights[p1] = 2;
    return m;
}

// Target: segment with two punctures at each end (the 4-leaf binary tree
// seen side-on). Source: wiener with a weight-2 puncture over each target
// puncture. Tropicalisation of a Tate elliptic curve double cover.
inline WeightedMorphism elliptic_wiener_cover() {
    WeightedMorphism m;
    int t1 = m.target.add_vertex();
    int t2 = m.target.add_vertex();
    int te = m.target.add_edge(t1, t2);
    int tp0 = m.target.add_puncture(t1);
    int tp1 = m.target.add_puncture(t1);
    int tp2 = m.target.add_puncture(t2);
    int tp3 = m.target.add_puncture(t2);
    m.target.validate();

    int a = m.source.add_vertex();
    int b = m.source.add_vertex();
    int e1 = m.source.add_edge(a, b);
    int e2 = m.source.add_edge(a, b);
    int pa0 = m.source.add_puncture(a);
    int pa1 = m.source.add_puncture(a);
    int pb0 = m.source.add_puncture(b);
    int pb1 = m.source.add_puncture(b);
    m.source.validate();

    m.vertex_map[a] = t1;
    m.vertex_map[b] = t2;
    m.edge_map[e1] = te;
    m.edge_map[e2] = te;
    m.edge_weights[e1] = 1;
    m.edge_weights[e2] = 1;
    m.puncture_map[pa0] = tp0;
    m.puncture_map[pa1] = tp1;
    m.puncture_map[pb0] = tp2;
    m.puncture_map[pb1] = tp3;
    m.puncture_weights[pa0] = 2;
    m.puncture_weights[pa1] = 2;
    m.puncture_weights[pb0] = 2;
    m.puncture_weights[pb1] = 2;
    return m;
}

// Single vertex with four weight-2 punctures over the 4-punctured line: the
// good-reduction elliptic configuration, not Mumford.
inline WeightedMorphism one_vertex_elliptic_cover() {
    WeightedMorphism m;
    int tv = m.target.add_vertex();
    std::vector<int> tps;
    for (int i = 0; i < 4; ++i) tps.push_back(m.target.add_puncture(tv));
    m.target.validate();

    int v = m.source.add_vertex();
    m.vertex_map[v] = tv;
    for (int i = 0; i < 4; ++i) {
        int p = m.source.add_puncture(v);
        m.puncture_map[p] = tps[static_cast<size_t>(i)];
        m.puncture_weights[p] = 2;
    }
    m.source.validate();
    return m;
}

// Rebuild a structurally identical cover with shuffled source ids.
inline WeightedMorphism relabel_source(const WeightedMorphism& m, std::mt19937& rng) {
    std::vector<int> vids, eids, pids;
    for (const auto& v : m.source.vertices()) vids.push_back(v.id);
    for (const auto& e : m.source.edges()) eids.push_back(e.id);
    for (const auto& p : m.source.punctures()) pids.push_back(p.id);
    std::vector<int> vperm = vids, eperm = eids, pperm = pids;
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(eperm.begin(), eperm.end(), rng);
    std::shuffle(pperm.begin(), pperm.end(), rng);
    std::map<int, int> vmap, emap, pmap;
    for (size_t i = 0; i < vids.size(); ++i) vmap[vids[i]] = vperm[i];
    for (size_t i = 0; i < eids.size(); ++i) emap[eids[i]] = eperm[i];
    for (size_t i = 0; i < pids.size(); ++i) pmap[pids[i]] = pperm[i];

    WeightedMorphism out;
    out.target = m.target;
    std::vector<Vertex> verts;
    for (const auto& v : m.source.vertices()) verts.push_back({vmap[v.id], v.genus});
    std::sort(verts.begin(), verts.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (const auto& v : verts) out.source.add_vertex_with_id(v.id, v.genus);
    std::vector<BoundedEdge> edges;
    for (const auto& e : m.source.edges()) edges.push_back({emap[e.id], vmap[e.a], vmap[e.b], e.length});
    std::sort(edges.begin(), edges.end(),
              [](const BoundedEdge& a, const BoundedEdge& b) { return a.id < b.id; });
    for (const auto& e : edges) out.source.add_edge_with_id(e.id, e.a, e.b, e.length);
    std::vector<Puncture> puncts;
    for (const auto& p : m.source.punctures()) puncts.push_back({pmap[p.id], vmap[p.at]});
    std::sort(puncts.begin(), puncts.end(),
              [](const Puncture& a, const Puncture& b) { return a.id < b.id; });
    for (const auto& p : puncts) out.source.add_puncture_with_id(p.id, p.at);

    for (const auto& [v, tv] : m.vertex_map) out.vertex_map[vmap[v]] = tv;
    for (const auto& [e, te] : m.edge_map) out.edge_map[emap[e]] = te;
    for (const auto& [p, tp] : m.puncture_map) out.puncture_map[pmap[p]] = tp;
    for (const auto& [e, w] : m.edge_weights) out.edge_weights[emap[e]] = w;
    for (const auto& [p, w] : m.puncture_weights) out.puncture_weights[pmap[p]] = w;
    return out;
}

// Random connected tropical curve for property tests.
inline TropicalCurve random_curve(std::mt19937& rng) {
    TropicalCurve c;
    std::uniform_int_distribution<int> nv(1, 7);
    int n = nv(rng);
    std::vector<int> ids;
    std::uniform_int_distribution<int> genus(0, 2);
    for (int i = 0; i < n; ++i) ids.push_back(c.add_vertex(genus(rng)));
    // spanning tree first, extra edges after
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        c.add_edge(ids[static_cast<size_t>(pick(rng))], ids[static_cast<size_t>(i)]);
    }
    std::uniform_int_distribution<int> extra(0, 4);
    int extras = extra(rng);
    std::uniform_int_distribution<int> anyv(0, n - 1);
    for (int i = 0; i < extras && n >= 2; ++i) {
        int a = anyv(rng), b = anyv(rng);
        if (a == b) continue;
        c.add_edge(ids[static_cast<size_t>(a)], ids[static_cast<size_t>(b)]);
    }
    std::uniform_int_distribution<int> np(0, 4);
    int punct = np(rng);
    for (int i = 0; i < punct; ++i) c.add_puncture(ids[static_cast<size_t>(anyv(rng))]);
    c.validate();
    return c;
}

} // namespace fixtures

#endif
