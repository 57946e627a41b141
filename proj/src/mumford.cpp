#include "trop/mumford.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace trop {

namespace {

struct Preimage {
    std::set<int> vertices;              // source vertex ids over the closure
    std::vector<int> edges;              // source edge ids over E
    std::map<int, int> component_of;     // vertex id -> component representative
    int components = 0;
};

Preimage preimage_of_closure(const WeightedMorphism& m, const std::vector<int>& target_edges) {
    std::set<int> eset(target_edges.begin(), target_edges.end());
    std::set<int> closure_vertices;
    for (int te : eset) {
        const BoundedEdge& e = m.target.edge(te);
        closure_vertices.insert(e.a);
        closure_vertices.insert(e.b);
    }
    Preimage pre;
    for (const auto& v : m.source.vertices())
        if (closure_vertices.count(m.vertex_map.at(v.id))) pre.vertices.insert(v.id);
    for (const auto& e : m.source.edges())
        if (eset.count(m.edge_map.at(e.id))) pre.edges.push_back(e.id);

    std::map<int, int> parent;
    for (int v : pre.vertices) parent[v] = v;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int eid : pre.edges) {
        const BoundedEdge& e = m.source.edge(eid);
        int a = find(e.a), b = find(e.b);
        if (a != b) parent[b] = a;
    }
    std::set<int> reps;
    for (int v : pre.vertices) {
        pre.component_of[v] = find(v);
        reps.insert(pre.component_of[v]);
    }
    pre.components = static_cast<int>(reps.size());
    return pre;
}

} // namespace

int preimage_betti(const WeightedMorphism& m, const std::vector<int>& target_edges) {
    if (target_edges.empty()) return 0;
    Preimage pre = preimage_of_closure(m, target_edges);
    return static_cast<int>(pre.edges.size()) - static_cast<int>(pre.vertices.size()) + pre.components;
}

TropicalCurve contract_edges(const WeightedMorphism& m, const std::vector<int>& target_edges) {
    int genus_before = arithmetic_genus(m.source);
    if (target_edges.empty()) {
        TropicalCurve same = m.source;
        return same;
    }
    Preimage pre = preimage_of_closure(m, target_edges);

    // component stats: b1 + swallowed labels
    std::map<int, int> comp_edges, comp_verts, comp_genus;
    for (int v : pre.vertices) {
        int c = pre.component_of.at(v);
        comp_verts[c] += 1;
        comp_genus[c] += m.source.vertex(v).genus;
    }
    for (int eid : pre.edges) comp_edges[pre.component_of.at(m.source.edge(eid).a)] += 1;

    TropicalCurve out;
    std::map<int, int> vertex_image; // source vertex -> contracted vertex id
    int next = 0;
    // collapsed components first, keyed by smallest member for determinism
    std::map<int, std::vector<int>> members;
    for (int v : pre.vertices) members[pre.component_of.at(v)].push_back(v);
    for (auto& [rep, vs] : members) {
        std::sort(vs.begin(), vs.end());
        int b1 = comp_edges[rep] - comp_verts[rep] + 1;
        int id = next++;
        out.add_vertex_with_id(id, b1 + comp_genus[rep]);
        for (int v : vs) vertex_image[v] = id;
    }
    for (const auto& v : m.source.vertices()) {
        if (vertex_image.count(v.id)) continue;
        int id = next++;
        out.add_vertex_with_id(id, v.genus);
        vertex_image[v.id] = id;
    }
    std::set<int> contracted(pre.edges.begin(), pre.edges.end());
    int next_edge = 0;
    for (const auto& e : m.source.edges()) {
        if (contracted.count(e.id)) continue;
        out.add_edge_with_id(next_edge++, vertex_image.at(e.a), vertex_image.at(e.b), e.length);
    }
    int next_punct = 0;
    for (const auto& p : m.source.punctures())
        out.add_puncture_with_id(next_punct++, vertex_image.at(p.at));

    out.validate();
    if (arithmetic_genus(out) != genus_before)
        fail(errk::InternalInconsistency, "edge contraction changed the arithmetic genus");
    return out;
}

TropicalCurve contract_edges(const CoverClass& cls, const std::vector<int>& target_edges) {
    return contract_edges(cls.morphism, target_edges);
}

namespace {

Rational wiener_weight_over(const Refinement& refinement, const OracleGuard& guard) {
    std::vector<CoverClass> classes = enumerate_binary_tree_covers(refinement.tree, guard);
    Rational w(0);
    for (const auto& cls : classes) {
        if (cls.multiplicity.is_zero()) continue;
        if (cls.genus_sum > 0 || preimage_betti(cls.morphism, refinement.contracted) > 0)
            w += cls.multiplicity;
    }
    return w;
}

} // namespace

Rational wiener_weight(int d, const std::vector<Partition>& profiles, const BranchTree& tree,
                       const OracleGuard& guard) {
    if (profiles != tree.profiles)
        fail(errk::LeafProfileMismatch, "profiles do not match the branch tree");
    if (d != tree.degree) fail(errk::UnequalSums, "degree does not match the profiles");
    GenusResult g = genus_from_profiles(d, profiles);
    if (!g.ok()) return Rational(0);
    return wiener_weight_over(binary_refinement(tree), guard);
}

Rational mumford_hurwitz(int d, const std::vector<Partition>& profiles, const BranchTree& tree,
                         const OracleGuard& guard) {
    Rational classical = classical_hurwitz(d, profiles, guard);
    Rational w = wiener_weight(d, profiles, tree, guard);
    Rational result = classical - w;
    if (result < Rational(0) || classical < result)
        fail(errk::InternalInconsistency, "Mumford count must lie between 0 and the classical count");
    return result;
}

bool refinement_independence_check(int d, const std::vector<Partition>& profiles,
                                   const BranchTree& tree, size_t trials,
                                   const OracleGuard& guard) {
    if (profiles != tree.profiles)
        fail(errk::LeafProfileMismatch, "profiles do not match the branch tree");
    GenusResult g = genus_from_profiles(d, profiles);
    if (!g.ok()) return true;
    std::vector<Refinement> refinements = all_binary_refinements(tree, trials);
    if (refinements.size() <= 1) return true;
    Rational first = wiener_weight_over(refinements.front(), guard);
    for (size_t i = 1; i < refinements.size(); ++i)
        if (!(wiener_weight_over(refinements[i], guard) == first)) return false;
    return true;
}

} // namespace trop
