#include "trop/branch_tree.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <functional>
#include <set>

namespace trop {

namespace {

// Mutable scratch representation used by the parser and by refinements.
struct Scratch {
    struct V { int id; };
    struct E { int id, a, b; EdgeLength len; };
    struct P { int id, at; };
    std::vector<V> verts;
    std::vector<E> edges;
    std::vector<P> puncts;
    int next_vid = 0;
    int next_eid = 0;

    int add_vertex() {
        verts.push_back({next_vid});
        return next_vid++;
    }
    int add_edge(int a, int b, EdgeLength len = EdgeLength::unset()) {
        edges.push_back({next_eid, a, b, len});
        return next_eid++;
    }
    void add_puncture(int leaf, int at) { puncts.push_back({leaf, at}); }

    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges) d += (e.a == v) + (e.b == v);
        for (const auto& p : puncts) d += (p.at == v);
        return d;
    }

    TropicalCurve to_curve() const {
        TropicalCurve c;
        for (const auto& v : verts) c.add_vertex_with_id(v.id, 0);
        for (const auto& e : edges) c.add_edge_with_id(e.id, e.a, e.b, e.len);
        for (const auto& p : puncts) c.add_puncture_with_id(p.id, p.at);
        return c;
    }

    static Scratch from_curve(const TropicalCurve& c) {
        Scratch s;
        for (const auto& v : c.vertices()) {
            s.verts.push_back({v.id});
            s.next_vid = std::max(s.next_vid, v.id + 1);
        }
        for (const auto& e : c.edges()) {
            s.edges.push_back({e.id, e.a, e.b, e.length});
            s.next_eid = std::max(s.next_eid, e.id + 1);
        }
        for (const auto& p : c.punctures()) s.puncts.push_back({p.id, p.at});
        return s;
    }

    // Smooth away degree-2 vertices: merge their two incident half-edges.
    void smooth() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& v : verts) {
                if (degree(v.id) != 2) continue;
                std::vector<size_t> ei, pi;
                for (size_t i = 0; i < edges.size(); ++i)
                    if (edges[i].a == v.id || edges[i].b == v.id) ei.push_back(i);
                for (size_t i = 0; i < puncts.size(); ++i)
                    if (puncts[i].at == v.id) pi.push_back(i);
                if (ei.size() == 2) {
                    int far1 = edges[ei[0]].a == v.id ? edges[ei[0]].b : edges[ei[0]].a;
                    int far2 = edges[ei[1]].a == v.id ? edges[ei[1]].b : edges[ei[1]].a;
                    EdgeLength len = EdgeLength::unset();
                    const EdgeLength& l1 = edges[ei[0]].len;
                    const EdgeLength& l2 = edges[ei[1]].len;
                    if (l1.is_infinite() || l2.is_infinite()) len = EdgeLength::infinite();
                    else if (l1.kind == EdgeLength::Kind::Finite && l2.kind == EdgeLength::Kind::Finite)
                        len = EdgeLength::finite(l1.value + l2.value);
                    edges[ei[0]] = {edges[ei[0]].id, far1, far2, len};
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(ei[1]));
                } else if (ei.size() == 1 && pi.size() == 1) {
                    int far = edges[ei[0]].a == v.id ? edges[ei[0]].b : edges[ei[0]].a;
                    puncts[pi[0]].at = far;
                    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(ei[0]));
                } else {
                    fail(errk::ParseError, "tree degenerates to fewer than 3 leaves");
                }
                verts.erase(std::find_if(verts.begin(), verts.end(),
                                         [&](const V& w) { return w.id == v.id; }));
                changed = true;
                break;
            }
        }
    }
};

int far_min_leaf(const Scratch& s, int from_vertex, bool via_puncture, int via_id) {
    if (via_puncture) return via_id;
    // walk the component on the far side of the edge
    int best = INT_MAX;
    std::set<int> seen{from_vertex};
    std::function<void(int)> walk = [&](int v) {
        for (const auto& p : s.puncts)
            if (p.at == v) best = std::min(best, p.id);
        for (const auto& e : s.edges) {
            if (e.a != v && e.b != v) continue;
            int other = e.a == v ? e.b : e.a;
            if (seen.insert(other).second) walk(other);
        }
    };
    const auto& e0 = *std::find_if(s.edges.begin(), s.edges.end(),
                                   [&](const Scratch::E& e) { return e.id == via_id; });
    int start = e0.a == from_vertex ? e0.b : e0.a;
    seen.insert(start);
    walk(start);
    return best;
}

} // namespace

BranchTree make_branch_tree(TropicalCurve curve, std::vector<Partition> profiles) {
    curve.validate();
    if (first_betti(curve) != 0) fail(errk::ParseError, "branch tree must be acyclic");
    for (const auto& v : curve.vertices()) {
        if (v.genus != 0) fail(errk::ParseError, "branch tree vertices carry genus 0");
        if (vertex_degree(curve, v.id) < 3)
            fail(errk::ParseError, "internal vertex " + std::to_string(v.id) + " has degree < 3");
    }
    int n_leaves = static_cast<int>(curve.punctures().size());
    if (n_leaves < 3) fail(errk::ParseError, "branch tree needs at least 3 leaves");
    if (static_cast<int>(profiles.size()) != n_leaves)
        fail(errk::LeafProfileMismatch, std::to_string(profiles.size()) + " profiles for " +
                                            std::to_string(n_leaves) + " leaves");
    for (int i = 0; i < n_leaves; ++i)
        if (!curve.has_puncture(i))
            fail(errk::ParseError, "leaf labels must be exactly 0.." + std::to_string(n_leaves - 1));
    if (profiles.empty()) fail(errk::LeafProfileMismatch, "no profiles");
    int d = profiles.front().sum();
    for (const auto& p : profiles)
        if (p.sum() != d) fail(errk::UnequalSums, "profile sums differ: " + p.str());
    BranchTree t;
    t.curve = std::move(curve);
    t.profiles = std::move(profiles);
    t.degree = d;
    return t;
}

BranchTree caterpillar_tree(std::vector<Partition> profiles) {
    int n = static_cast<int>(profiles.size()) - 2;
    if (n < 1) fail(errk::LeafProfileMismatch, "caterpillar needs at least 3 profiles");
    TropicalCurve c;
    std::vector<int> backbone;
    for (int i = 0; i < n; ++i) backbone.push_back(c.add_vertex());
    for (int i = 0; i + 1 < n; ++i) c.add_edge(backbone[static_cast<size_t>(i)], backbone[static_cast<size_t>(i) + 1]);
    c.add_puncture_with_id(0, backbone.front());
    for (int i = 1; i <= n; ++i) c.add_puncture_with_id(i, backbone[static_cast<size_t>(i - 1)]);
    c.add_puncture_with_id(n + 1, backbone.back());
    return make_branch_tree(std::move(c), std::move(profiles));
}

BranchTree star_tree(std::vector<Partition> profiles) {
    if (profiles.size() < 3) fail(errk::LeafProfileMismatch, "star needs at least 3 profiles");
    TropicalCurve c;
    int v = c.add_vertex();
    for (int i = 0; i < static_cast<int>(profiles.size()); ++i) c.add_puncture_with_id(i, v);
    return make_branch_tree(std::move(c), std::move(profiles));
}

bool is_binary(const BranchTree& tree) {
    for (const auto& v : tree.curve.vertices())
        if (vertex_degree(tree.curve, v.id) != 3) return false;
    return true;
}

bool is_caterpillar(const BranchTree& tree) {
    // internal vertices with their bounded edges form a path
    for (const auto& v : tree.curve.vertices()) {
        int bounded = 0;
        for (const auto& e : tree.curve.edges()) bounded += (e.a == v.id) + (e.b == v.id);
        if (bounded > 2) return false;
    }
    return true;
}

namespace {

struct NewickNode {
    int leaf = -1;
    std::vector<NewickNode> children;
    EdgeLength length = EdgeLength::unset();
};

struct NewickParser {
    const std::string& s;
    size_t pos = 0;

    explicit NewickParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void err(const std::string& why) {
        fail(errk::ParseError, why + " at offset " + std::to_string(pos));
    }

    std::int64_t parse_int() {
        skip_ws();
        bool neg = pos < s.size() && s[pos] == '-';
        if (neg) ++pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) err("expected number");
        std::int64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            v = v * 10 + (s[pos++] - '0');
        return neg ? -v : v;
    }

    EdgeLength parse_length() {
        std::int64_t num = parse_int();
        std::int64_t den = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            den = parse_int();
        }
        return EdgeLength::finite(Rational(num, den));
    }

    NewickNode parse_node() {
        skip_ws();
        NewickNode n;
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            n.children.push_back(parse_node());
            skip_ws();
            while (pos < s.size() && s[pos] == ',') {
                ++pos;
                n.children.push_back(parse_node());
                skip_ws();
            }
            if (pos >= s.size() || s[pos] != ')') err("expected ')'");
            ++pos;
        } else {
            std::int64_t leaf = parse_int();
            if (leaf < 0) err("negative leaf label");
            n.leaf = static_cast<int>(leaf);
        }
        skip_ws();
        if (pos < s.size() && s[pos] == ':') {
            ++pos;
            n.length = parse_length();
        }
        return n;
    }

    NewickNode parse_top() {
        NewickNode n = parse_node();
        skip_ws();
        if (pos < s.size() && s[pos] == ';') ++pos;
        skip_ws();
        if (pos != s.size()) err("trailing input");
        return n;
    }
};

void build_scratch(const NewickNode& node, int parent_vertex, Scratch& s, std::set<int>& leaves_seen) {
    if (node.leaf >= 0) {
        if (!leaves_seen.insert(node.leaf).second)
            fail(errk::DuplicateLeaf, "leaf " + std::to_string(node.leaf) + " appears twice");
        s.add_puncture(node.leaf, parent_vertex);
        return;
    }
    if (node.children.empty()) fail(errk::ParseError, "empty group");
    int v = s.add_vertex();
    if (parent_vertex >= 0) s.add_edge(parent_vertex, v, node.length);
    for (const auto& c : node.children) build_scratch(c, v, s, leaves_seen);
}

} // namespace

BranchTree parse_newick(const std::string& text, std::vector<Partition> profiles) {
    NewickParser parser(text);
    NewickNode top = parser.parse_top();
    if (top.leaf >= 0) fail(errk::ParseError, "tree is a single leaf");
    Scratch s;
    std::set<int> leaves_seen;
    build_scratch(top, -1, s, leaves_seen);
    s.smooth();
    return make_branch_tree(s.to_curve(), std::move(profiles));
}

RootedView root_at_leaf0(const BranchTree& tree) {
    RootedView view;
    view.root_vertex = tree.curve.puncture(0).at;

    Scratch s = Scratch::from_curve(tree.curve);

    std::function<void(int, int)> build = [&](int v, int parent_edge) {
        std::vector<RootedChild> kids;
        for (const auto& p : tree.curve.punctures()) {
            if (p.at != v) continue;
            if (v == view.root_vertex && p.id == 0) continue; // the root's parent direction
            RootedChild c;
            c.is_leaf = true;
            c.leaf_id = p.id;
            c.min_leaf = p.id;
            kids.push_back(c);
        }
        for (const auto& e : tree.curve.edges()) {
            if (e.a != v && e.b != v) continue;
            if (e.id == parent_edge) continue;
            RootedChild c;
            c.edge_id = e.id;
            c.vertex = e.a == v ? e.b : e.a;
            c.min_leaf = far_min_leaf(s, v, false, e.id);
            kids.push_back(c);
        }
        std::sort(kids.begin(), kids.end(),
                  [](const RootedChild& a, const RootedChild& b) { return a.min_leaf < b.min_leaf; });
        view.pre_order.push_back(v);
        view.children[v] = kids;
        for (const auto& c : view.children[v]) {
            if (c.is_leaf) {
                view.leaf_position[c.leaf_id] = static_cast<int>(view.dfs_leaves.size());
                view.dfs_leaves.push_back(c.leaf_id);
            } else {
                int first = static_cast<int>(view.dfs_leaves.size());
                view.parent_edge[c.vertex] = c.edge_id;
                build(c.vertex, c.edge_id);
                int last = static_cast<int>(view.dfs_leaves.size()) - 1;
                view.edge_span[c.edge_id] = {first, last};
            }
        }
    };

    view.leaf_position[0] = 0;
    view.dfs_leaves.push_back(0);
    build(view.root_vertex, -1);
    return view;
}

std::string to_newick(const BranchTree& tree) {
    RootedView view = root_at_leaf0(tree);
    std::function<std::string(int)> emit = [&](int v) -> std::string {
        std::string out = "(";
        bool first = true;
        if (v == view.root_vertex) {
            out += "0";
            first = false;
        }
        for (const auto& c : view.children.at(v)) {
            if (!first) out += ",";
            first = false;
            out += c.is_leaf ? std::to_string(c.leaf_id) : emit(c.vertex);
        }
        return out + ")";
    };
    return emit(view.root_vertex) + ";";
}

namespace {

// A direction at a vertex being resolved: an incident bounded edge (with its
// far endpoint fixed) or an incident leaf puncture.
struct Slot {
    bool is_puncture;
    int id;
    int min_leaf;
};

// Local binary tree on k slots: internal nodes 0..k-3, links between internal
// nodes, and slot attachment per internal node.
struct LocalTree {
    std::vector<std::pair<int, int>> internal_edges;
    std::vector<std::pair<int, int>> slot_at; // (slot index, internal node)
    int nodes = 0;
};

std::vector<LocalTree> all_local_trees(int k) {
    std::vector<LocalTree> trees;
    LocalTree base;
    base.nodes = 1;
    base.slot_at = {{0, 0}, {1, 0}, {2, 0}};
    trees.push_back(base);
    for (int s = 3; s < k; ++s) {
        std::vector<LocalTree> next;
        for (const LocalTree& t : trees) {
            // insert slot s on each internal edge
            for (size_t i = 0; i < t.internal_edges.size(); ++i) {
                LocalTree u = t;
                auto [a, b] = u.internal_edges[i];
                int m = u.nodes++;
                u.internal_edges.erase(u.internal_edges.begin() + static_cast<std::ptrdiff_t>(i));
                u.internal_edges.push_back({a, m});
                u.internal_edges.push_back({m, b});
                u.slot_at.push_back({s, m});
                next.push_back(std::move(u));
            }
            // or on each slot pendant edge
            for (size_t i = 0; i < t.slot_at.size(); ++i) {
                LocalTree u = t;
                auto [slot, node] = u.slot_at[i];
                int m = u.nodes++;
                u.slot_at[i] = {slot, m};
                u.internal_edges.push_back({node, m});
                u.slot_at.push_back({s, m});
                next.push_back(std::move(u));
            }
        }
        trees = std::move(next);
    }
    return trees;
}

LocalTree caterpillar_local_tree(int k) {
    LocalTree t;
    t.nodes = k - 2;
    for (int i = 0; i + 1 < k - 2; ++i) t.internal_edges.push_back({i, i + 1});
    t.slot_at.push_back({0, 0});
    t.slot_at.push_back({1, 0});
    for (int s = 2; s <= k - 2; ++s) t.slot_at.push_back({s, s - 1});
    t.slot_at.push_back({k - 1, k - 3});
    return t;
}

// Replace vertex v by the local tree; returns ids of the new internal edges.
std::vector<int> apply_local_tree(Scratch& s, int v, const std::vector<Slot>& slots, const LocalTree& lt) {
    std::vector<int> node_vertex(static_cast<size_t>(lt.nodes));
    for (int i = 0; i < lt.nodes; ++i) node_vertex[static_cast<size_t>(i)] = s.add_vertex();
    std::vector<int> new_edges;
    for (auto [a, b] : lt.internal_edges)
        new_edges.push_back(s.add_edge(node_vertex[static_cast<size_t>(a)], node_vertex[static_cast<size_t>(b)]));
    for (auto [slot_idx, node] : lt.slot_at) {
        const Slot& slot = slots[static_cast<size_t>(slot_idx)];
        int nv = node_vertex[static_cast<size_t>(node)];
        if (slot.is_puncture) {
            for (auto& p : s.puncts)
                if (p.id == slot.id) p.at = nv;
        } else {
            for (auto& e : s.edges) {
                if (e.id != slot.id) continue;
                if (e.a == v) e.a = nv;
                if (e.b == v) e.b = nv;
            }
        }
    }
    s.verts.erase(std::find_if(s.verts.begin(), s.verts.end(),
                               [&](const Scratch::V& w) { return w.id == v; }));
    return new_edges;
}

std::vector<Slot> slots_at(const Scratch& s, int v) {
    std::vector<Slot> slots;
    for (const auto& p : s.puncts)
        if (p.at == v) slots.push_back({true, p.id, p.id});
    for (const auto& e : s.edges)
        if (e.a == v || e.b == v) slots.push_back({false, e.id, far_min_leaf(s, v, false, e.id)});
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.min_leaf < b.min_leaf; });
    return slots;
}

} // namespace

Refinement binary_refinement(const BranchTree& tree) {
    Scratch s = Scratch::from_curve(tree.curve);
    std::vector<int> contracted;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& v : s.verts) {
            int deg = s.degree(v.id);
            if (deg <= 3) continue;
            std::vector<Slot> slots = slots_at(s, v.id);
            std::vector<int> fresh = apply_local_tree(s, v.id, slots, caterpillar_local_tree(deg));
            contracted.insert(contracted.end(), fresh.begin(), fresh.end());
            changed = true;
            break;
        }
    }
    Refinement r;
    r.tree = make_branch_tree(s.to_curve(), tree.profiles);
    r.contracted = contracted;
    return r;
}

std::vector<Refinement> all_binary_refinements(const BranchTree& tree, size_t limit) {
    std::vector<int> high_degree;
    Scratch base = Scratch::from_curve(tree.curve);
    for (const auto& v : base.verts)
        if (base.degree(v.id) > 3) high_degree.push_back(v.id);

    std::vector<Refinement> out;
    if (high_degree.empty()) {
        out.push_back({tree, {}});
        return out;
    }

    // local choices per high-degree vertex
    std::vector<std::vector<LocalTree>> choices;
    for (int v : high_degree) choices.push_back(all_local_trees(base.degree(v)));

    std::vector<size_t> idx(high_degree.size(), 0);
    while (true) {
        Scratch s = base;
        std::vector<int> contracted;
        for (size_t i = 0; i < high_degree.size(); ++i) {
            std::vector<Slot> slots = slots_at(s, high_degree[i]);
            std::vector<int> fresh =
                apply_local_tree(s, high_degree[i], slots, choices[i][idx[i]]);
            contracted.insert(contracted.end(), fresh.begin(), fresh.end());
        }
        Refinement r;
        r.tree = make_branch_tree(s.to_curve(), tree.profiles);
        r.contracted = contracted;
        out.push_back(std::move(r));
        if (limit && out.size() >= limit) break;

        size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }

    // canonical refinement first
    std::string canon = to_newick(binary_refinement(tree).tree);
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Refinement& r) { return to_newick(r.tree) == canon; });
    if (it != out.end()) std::iter_swap(out.begin(), it);
    return out;
}

std::vector<BranchTree> all_binary_tree_shapes(const std::vector<Partition>& profiles) {
    int k = static_cast<int>(profiles.size());
    if (k < 3) fail(errk::LeafProfileMismatch, "need at least 3 leaves");
    std::vector<Scratch> shapes;
    {
        Scratch s;
        int v = s.add_vertex();
        for (int i = 0; i < 3; ++i) s.add_puncture(i, v);
        shapes.push_back(std::move(s));
    }
    for (int leaf = 3; leaf < k; ++leaf) {
        std::vector<Scratch> next;
        for (const Scratch& s : shapes) {
            for (size_t i = 0; i < s.puncts.size(); ++i) {
                Scratch u = s;
                int w = u.add_vertex();
                int old_at = u.puncts[i].at;
                u.puncts[i].at = w;
                u.add_edge(old_at, w);
                u.add_puncture(leaf, w);
                next.push_back(std::move(u));
            }
            for (size_t i = 0; i < s.edges.size(); ++i) {
                Scratch u = s;
                int w = u.add_vertex();
                int b = u.edges[i].b;
                u.edges[i].b = w;
                u.add_edge(w, b);
                u.add_puncture(leaf, w);
                next.push_back(std::move(u));
            }
        }
        shapes = std::move(next);
    }
    std::vector<BranchTree> out;
    out.reserve(shapes.size());
    for (const Scratch& s : shapes) out.push_back(make_branch_tree(s.to_curve(), profiles));
    return out;
}

} // namespace trop
