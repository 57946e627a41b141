#include "trop/cover.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace trop {

namespace {

struct PartialVert {
    int target;
    int genus;
};
struct PartialEdge {
    int u, v, te, w;
};
struct PartialPunct {
    int v, tp, w;
};

// Strand waiting to be consumed: weight plus the fiber vertex it comes from
// (-1 while it is still a handle strand over leaf 0).
struct Strand {
    int w;
    int origin;
};

struct BuildState {
    std::vector<PartialVert> verts;
    std::vector<PartialEdge> edges;
    std::vector<PartialPunct> puncts;
    int genus_sum = 0;

    // b1 of the partial graph; both it and genus_sum only ever grow, so
    // exceeding the target genus is a dead end.
    int partial_betti() const {
        std::vector<int> parent(verts.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x)
                x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        int components = static_cast<int>(verts.size());
        for (const auto& e : edges) {
            int a = find(e.u), b = find(e.v);
            if (a != b) {
                parent[static_cast<size_t>(b)] = a;
                --components;
            }
        }
        return static_cast<int>(edges.size()) - static_cast<int>(verts.size()) + components;
    }

    bool connected() const {
        if (verts.empty()) return false;
        std::vector<int> parent(verts.size());
        for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        auto find = [&](int x) {
            while (parent[static_cast<size_t>(x)] != x)
                x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            return x;
        };
        for (const auto& e : edges) {
            int a = find(e.u), b = find(e.v);
            if (a != b) parent[static_cast<size_t>(b)] = a;
        }
        int root = find(0);
        for (size_t i = 0; i < verts.size(); ++i)
            if (find(static_cast<int>(i)) != root) return false;
        return true;
    }
};

WeightedMorphism assemble(const BuildState& st, const TropicalCurve& target) {
    WeightedMorphism m;
    m.target = target;
    for (const auto& v : st.verts) {
        int id = m.source.add_vertex(v.genus);
        m.vertex_map[id] = v.target;
    }
    for (const auto& e : st.edges) {
        int id = m.source.add_edge(e.u, e.v);
        m.edge_map[id] = e.te;
        m.edge_weights[id] = e.w;
    }
    for (const auto& p : st.puncts) {
        int id = m.source.add_puncture(p.v);
        m.puncture_map[id] = p.tp;
        m.puncture_weights[id] = p.w;
    }
    m.source.validate();
    return m;
}

void record(std::map<std::string, CoverClass>& found, const BuildState& st,
            const TropicalCurve& target, int forced_genus) {
    if (!st.connected()) return;
    WeightedMorphism m = assemble(st, target);
    validate_morphism(m);
    check_riemann_hurwitz(m);
    int b1 = first_betti(m.source);
    if (b1 + m.source.genus_sum() != forced_genus)
        fail(errk::InternalInconsistency, "enumerated cover misses the forced arithmetic genus");
    CanonicalResult canon = canonicalize_cover(m);
    if (found.count(canon.form)) return;
    CoverClass cls;
    cls.morphism = std::move(m);
    cls.aut_count = canon.aut;
    cls.canonical_form = canon.form;
    cls.betti = b1;
    cls.genus_sum = st.genus_sum;
    found.emplace(canon.form, std::move(cls));
}

// All set partitions of {0..k-1} as restricted growth strings.
void for_each_set_partition(int k, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> assign(static_cast<size_t>(k), 0);
    auto rec = [&](auto&& self, int pos, int blocks) -> void {
        if (pos == k) {
            fn(assign, blocks);
            return;
        }
        for (int b = 0; b <= blocks; ++b) {
            assign[static_cast<size_t>(pos)] = b;
            self(self, pos + 1, std::max(blocks, b + 1));
        }
    };
    if (k == 0) return;
    rec(rec, 0, 0);
}

std::vector<CoverClass> sorted_classes(std::map<std::string, CoverClass>&& found) {
    std::vector<CoverClass> out;
    out.reserve(found.size());
    for (auto& [form, cls] : found) out.push_back(std::move(cls));
    return out; // map iteration is already canonical-form order
}

// ---- comb enumeration ------------------------------------------------------

struct CombEnumerator {
    int d;
    int n; // internal vertices
    std::vector<Partition> profiles;
    int forced_genus;
    TropicalCurve target;
    std::map<std::string, CoverClass> found;
    BuildState st;

    void run() {
        std::vector<Strand> open;
        for (int w : profiles[0].parts()) open.push_back({w, -1});
        at_vertex(1, open);
    }

    // Processing backbone vertex v_i (1-based); its curve vertex id is i-1,
    // the edge arriving from the left has id i-2, the edge leaving id i-1.
    void at_vertex(int i, const std::vector<Strand>& open) {
        if (st.genus_sum + st.partial_betti() > forced_genus) return;
        for_each_set_partition(static_cast<int>(open.size()), [&](const std::vector<int>& assign, int blocks) {
            std::vector<std::vector<int>> block_members(static_cast<size_t>(blocks));
            for (size_t j = 0; j < assign.size(); ++j)
                block_members[static_cast<size_t>(assign[j])].push_back(static_cast<int>(j));
            std::vector<Strand> next_open;
            std::vector<int> tooth_pool = profiles[static_cast<size_t>(i)].parts();
            std::vector<int> right_pool =
                i == n ? profiles[static_cast<size_t>(n + 1)].parts() : std::vector<int>{};
            do_block(i, open, block_members, 0, tooth_pool, right_pool, next_open);
        });
    }

    void do_block(int i, const std::vector<Strand>& open,
                  const std::vector<std::vector<int>>& blocks, size_t b,
                  std::vector<int>& tooth_pool, std::vector<int>& right_pool,
                  std::vector<Strand>& next_open) {
        if (b == blocks.size()) {
            if (i < n) at_vertex(i + 1, next_open);
            else record(found, st, target, forced_genus);
            return;
        }
        const std::vector<int>& members = blocks[b];
        int m_b = 0;
        for (int j : members) m_b += open[static_cast<size_t>(j)].w;

        for (const auto& tooth : submultisets_with_sum(tooth_pool, m_b)) {
            std::vector<int> tooth_rest = multiset_minus(tooth_pool, tooth);
            std::vector<std::vector<int>> outs;
            if (i < n) {
                for (const auto& p : partitions_of(m_b)) outs.push_back(p.parts());
            } else {
                outs = submultisets_with_sum(right_pool, m_b);
            }
            for (const auto& out : outs) {
                int degree_count = static_cast<int>(members.size() + tooth.size() + out.size());
                int two_g = m_b + 2 - degree_count;
                if (two_g < 0 || two_g % 2 != 0) continue;

                size_t save_v = st.verts.size(), save_e = st.edges.size(), save_p = st.puncts.size();
                int save_g = st.genus_sum;
                size_t save_open = next_open.size();

                int vid = static_cast<int>(st.verts.size());
                st.verts.push_back({i - 1, two_g / 2});
                st.genus_sum += two_g / 2;
                for (int j : members) {
                    const Strand& s = open[static_cast<size_t>(j)];
                    if (s.origin < 0) st.puncts.push_back({vid, 0, s.w});
                    else st.edges.push_back({s.origin, vid, i - 2, s.w});
                }
                for (int w : tooth) st.puncts.push_back({vid, i, w});
                if (i < n) {
                    for (int w : out) next_open.push_back({w, vid});
                } else {
                    for (int w : out) st.puncts.push_back({vid, n + 1, w});
                }

                std::vector<int> right_rest =
                    i == n ? multiset_minus(right_pool, out) : right_pool;
                do_block(i, open, blocks, b + 1, tooth_rest, right_rest, next_open);

                st.verts.resize(save_v);
                st.edges.resize(save_e);
                st.puncts.resize(save_p);
                st.genus_sum = save_g;
                next_open.resize(save_open);
            }
        }
    }
};

// ---- binary tree enumeration ----------------------------------------------

struct TreeEnumerator {
    const BranchTree& tree;
    RootedView view;
    int forced_genus;
    std::map<std::string, CoverClass> found;
    BuildState st;

    struct Task {
        int vertex;
        std::vector<Strand> strands;
    };
    std::vector<Task> tasks;

    explicit TreeEnumerator(const BranchTree& t) : tree(t), view(root_at_leaf0(t)) {}

    void run() {
        Task root;
        root.vertex = view.root_vertex;
        for (int w : tree.profile(0).parts()) root.strands.push_back({w, -1});
        tasks.push_back(std::move(root));
        at_task(0);
    }

    void at_task(size_t ti) {
        if (ti == tasks.size()) {
            record(found, st, tree.curve, forced_genus);
            return;
        }
        if (st.genus_sum + st.partial_betti() > forced_genus) return;
        const Task task = tasks[ti]; // copy: tasks may grow below
        const auto& kids = view.children.at(task.vertex);

        for_each_set_partition(static_cast<int>(task.strands.size()),
                               [&](const std::vector<int>& assign, int blocks) {
            std::vector<std::vector<int>> block_members(static_cast<size_t>(blocks));
            for (size_t j = 0; j < assign.size(); ++j)
                block_members[static_cast<size_t>(assign[j])].push_back(static_cast<int>(j));

            std::vector<std::vector<int>> leaf_pools(kids.size());
            for (size_t c = 0; c < kids.size(); ++c)
                if (kids[c].is_leaf) leaf_pools[c] = tree.profile(kids[c].leaf_id).parts();
            std::vector<std::vector<Strand>> child_strands(kids.size());

            do_block(ti, task, block_members, 0, leaf_pools, child_strands);
        });
    }

    void do_block(size_t ti, const Task& task, const std::vector<std::vector<int>>& blocks,
                  size_t b, std::vector<std::vector<int>>& leaf_pools,
                  std::vector<std::vector<Strand>>& child_strands) {
        const auto& kids = view.children.at(task.vertex);
        if (b == blocks.size()) {
            size_t save_tasks = tasks.size();
            for (size_t c = 0; c < kids.size(); ++c)
                if (!kids[c].is_leaf) tasks.push_back({kids[c].vertex, child_strands[c]});
            at_task(ti + 1);
            tasks.resize(save_tasks);
            return;
        }
        const std::vector<int>& members = blocks[b];
        int m_b = 0;
        for (int j : members) m_b += task.strands[static_cast<size_t>(j)].w;

        // choices per child direction for this block
        std::vector<std::vector<std::vector<int>>> options(kids.size());
        for (size_t c = 0; c < kids.size(); ++c) {
            if (kids[c].is_leaf) {
                options[c] = submultisets_with_sum(leaf_pools[c], m_b);
            } else {
                for (const auto& p : partitions_of(m_b)) options[c].push_back(p.parts());
            }
        }

        std::vector<size_t> pick(kids.size(), 0);
        auto rec = [&](auto&& self, size_t c) -> void {
            if (c == kids.size()) {
                int degree_count = static_cast<int>(members.size());
                for (size_t k = 0; k < kids.size(); ++k)
                    degree_count += static_cast<int>(options[k][pick[k]].size());
                int two_g = m_b + 2 - degree_count;
                if (two_g < 0 || two_g % 2 != 0) return;

                size_t save_v = st.verts.size(), save_e = st.edges.size(), save_p = st.puncts.size();
                int save_g = st.genus_sum;
                std::vector<size_t> save_cs(kids.size());
                for (size_t k = 0; k < kids.size(); ++k) save_cs[k] = child_strands[k].size();
                std::vector<std::vector<int>> save_pools = leaf_pools;

                int vid = static_cast<int>(st.verts.size());
                st.verts.push_back({task.vertex, two_g / 2});
                st.genus_sum += two_g / 2;
                for (int j : members) {
                    const Strand& s = task.strands[static_cast<size_t>(j)];
                    if (s.origin < 0) st.puncts.push_back({vid, 0, s.w});
                    else st.edges.push_back({s.origin, vid, view.parent_edge.at(task.vertex), s.w});
                }
                for (size_t k = 0; k < kids.size(); ++k) {
                    const std::vector<int>& chosen = options[k][pick[k]];
                    if (kids[k].is_leaf) {
                        leaf_pools[k] = multiset_minus(leaf_pools[k], chosen);
                        for (int w : chosen) st.puncts.push_back({vid, kids[k].leaf_id, w});
                    } else {
                        for (int w : chosen) child_strands[k].push_back({w, vid});
                    }
                }

                do_block(ti, task, blocks, b + 1, leaf_pools, child_strands);

                st.verts.resize(save_v);
                st.edges.resize(save_e);
                st.puncts.resize(save_p);
                st.genus_sum = save_g;
                for (size_t k = 0; k < kids.size(); ++k) child_strands[k].resize(save_cs[k]);
                leaf_pools = std::move(save_pools);
                return;
            }
            for (pick[c] = 0; pick[c] < options[c].size(); ++pick[c]) self(self, c + 1);
        };
        rec(rec, 0);
    }
};

} // namespace

std::vector<CoverClass> enumerate_comb_covers_raw(int d, const std::vector<Partition>& profiles) {
    if (profiles.size() < 3) fail(errk::WrongArity, "a comb needs at least 3 profiles");
    GenusResult g = genus_from_profiles(d, profiles);
    if (!g.ok()) return {};

    CombEnumerator en;
    en.d = d;
    en.n = static_cast<int>(profiles.size()) - 2;
    en.profiles = profiles;
    en.forced_genus = g.genus;
    en.target = caterpillar_tree(profiles).curve;
    en.run();
    return sorted_classes(std::move(en.found));
}

std::vector<CoverClass> enumerate_binary_tree_covers_raw(const BranchTree& tree) {
    if (!is_binary(tree)) fail(errk::NotBinary, "tree has an internal vertex of degree > 3");
    GenusResult g = genus_from_profiles(tree.degree, tree.profiles);
    if (!g.ok()) return {};

    TreeEnumerator en(tree);
    en.forced_genus = g.genus;
    en.run();
    return sorted_classes(std::move(en.found));
}

void assign_multiplicities(std::vector<CoverClass>& classes, int d,
                           const std::vector<Partition>& profiles, const BranchTree& tree,
                           const OracleGuard& guard) {
    OracleCoverMap oracle = hurwitz_by_tropical_type(d, profiles, tree, guard);
    std::map<std::string, const CoverClass*> by_form;
    for (auto& cls : classes) {
        cls.multiplicity = Rational(0);
        auto it = oracle.classes.find(cls.canonical_form);
        if (it != oracle.classes.end()) cls.multiplicity = it->second.multiplicity;
        by_form[cls.canonical_form] = &cls;
    }
    for (const auto& [form, ocls] : oracle.classes)
        if (!by_form.count(form))
            fail(errk::EnumerationIncomplete,
                 "oracle produced a cover class the enumeration missed: " + form);
    Rational sum(0);
    for (const auto& cls : classes) sum += cls.multiplicity;
    if (!(sum == oracle.total))
        fail(errk::InternalInconsistency, "class multiplicities do not sum to the classical count");
}

std::vector<CoverClass> enumerate_comb_covers(int d, const std::vector<Partition>& profiles,
                                              std::optional<int> genus, const OracleGuard& guard) {
    GenusResult g = genus_from_profiles(d, profiles);
    if (genus && (!g.ok() || g.genus != *genus))
        fail(errk::GenusMismatch, "supplied genus " + std::to_string(*genus) +
                                      " differs from the Riemann-Hurwitz value");
    std::vector<CoverClass> classes = enumerate_comb_covers_raw(d, profiles);
    if (g.ok()) assign_multiplicities(classes, d, profiles, caterpillar_tree(profiles), guard);
    return classes;
}

std::vector<CoverClass> enumerate_binary_tree_covers(const BranchTree& tree, const OracleGuard& guard) {
    std::vector<CoverClass> classes = enumerate_binary_tree_covers_raw(tree);
    GenusResult g = genus_from_profiles(tree.degree, tree.profiles);
    if (g.ok()) assign_multiplicities(classes, tree.degree, tree.profiles, tree, guard);
    return classes;
}

namespace {

// The monodromy-graph view of a cover of a comb: teeth removed, 2-valent
// vertices smoothed (their two incidences carry equal weight by
// harmonicity). Mass = product of interior edge weights / #automorphisms.
Rational monodromy_graph_mass(const WeightedMorphism& cover) {
    int leaves = static_cast<int>(cover.target.punctures().size());
    struct E {
        int a, b, w;
    };
    struct P {
        int at, tp, w;
    };
    std::map<int, int> vert_target;
    std::vector<E> edges;
    std::vector<P> ends;
    for (const auto& v : cover.source.vertices()) vert_target[v.id] = cover.vertex_map.at(v.id);
    for (const auto& e : cover.source.edges())
        edges.push_back({e.a, e.b, cover.edge_weights.at(e.id)});
    for (const auto& p : cover.source.punctures()) {
        int tp = cover.puncture_map.at(p.id);
        if (tp == 0 || tp == leaves - 1) ends.push_back({p.at, tp, cover.puncture_weights.at(p.id)});
    }

    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [v, tv] : vert_target) {
            std::vector<size_t> ei, pi;
            for (size_t i = 0; i < edges.size(); ++i)
                if (edges[i].a == v || edges[i].b == v) ei.push_back(i);
            for (size_t i = 0; i < ends.size(); ++i)
                if (ends[i].at == v) pi.push_back(i);
            if (ei.size() + pi.size() != 2) continue;
            if (ei.size() == 2) {
                if (edges[ei[0]].w != edges[ei[1]].w)
                    fail(errk::InternalInconsistency, "pass-through vertex with unequal weights");
                int far1 = edges[ei[0]].a == v ? edges[ei[0]].b : edges[ei[0]].a;
                int far2 = edges[ei[1]].a == v ? edges[ei[1]].b : edges[ei[1]].a;
                edges[ei[0]] = {far1, far2, edges[ei[0]].w};
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(ei[1]));
            } else if (ei.size() == 1 && pi.size() == 1) {
                if (edges[ei[0]].w != ends[pi[0]].w)
                    fail(errk::InternalInconsistency, "pass-through vertex with unequal weights");
                int far = edges[ei[0]].a == v ? edges[ei[0]].b : edges[ei[0]].a;
                ends[pi[0]].at = far;
                edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(ei[0]));
            } else {
                // two ends, no edge: a sheet untouched by every interior
                // branch point, impossible for connected simple covers
                fail(errk::InternalInconsistency, "bare strand in monodromy graph");
            }
            vert_target.erase(v);
            changed = true;
            break;
        }
    }

    Rational weight(1);
    WeightedMorphism graph;
    graph.target = cover.target;
    for (const auto& [v, tv] : vert_target) {
        graph.source.add_vertex_with_id(v, 0);
        graph.vertex_map[v] = tv;
        // after smoothing, every surviving vertex is trivalent
        int strands = 0;
        for (const auto& e : edges) strands += (e.a == v) + (e.b == v);
        for (const auto& p : ends) strands += (p.at == v);
        if (strands != 3)
            fail(errk::InternalInconsistency, "monodromy-graph vertex is not trivalent");
    }
    int next_id = 0;
    for (const auto& e : edges) {
        int id = next_id++;
        graph.source.add_edge_with_id(id, e.a, e.b);
        graph.edge_map[id] = 0; // over a line, parallel edges span the same stretch
        graph.edge_weights[id] = e.w;
        weight *= Rational(e.w);
    }
    int next_pid = 0;
    for (const auto& p : ends) {
        int id = next_pid++;
        graph.source.add_puncture_with_id(id, p.at);
        graph.puncture_map[id] = p.tp;
        graph.puncture_weights[id] = p.w;
    }
    return weight / Rational(canonicalize_cover(graph).aut);
}

TropicalHurwitzResult summarize(std::vector<CoverClass>&& classes) {
    TropicalHurwitzResult r;
    r.weighted = Rational(0);
    for (const auto& cls : classes) {
        if (!cls.multiplicity.is_zero()) ++r.raw_count;
        r.weighted += cls.multiplicity;
    }
    r.classes = std::move(classes);
    return r;
}

} // namespace

TropicalHurwitzResult tropical_hurwitz(const BranchTree& tree, const OracleGuard& guard) {
    return summarize(enumerate_binary_tree_covers(tree, guard));
}

TropicalHurwitzResult tropical_hurwitz(int d, const std::vector<Partition>& profiles,
                                       const OracleGuard& guard) {
    return summarize(enumerate_comb_covers(d, profiles, std::nullopt, guard));
}

Rational cjm_double_hurwitz(int d, const Partition& eta, const Partition& nu, int g,
                            const OracleGuard& guard) {
    if (eta.sum() != d || nu.sum() != d) fail(errk::UnequalSums, "end profiles must sum to the degree");
    int n = 2 * g - 2 + eta.length() + nu.length();
    if (n < 1) fail(errk::WrongArity, "need 2g-2+l(eta)+l(nu) >= 1 interior branch points");

    std::vector<Partition> profiles;
    profiles.push_back(eta);
    for (int i = 0; i < n; ++i) profiles.push_back(Partition::simple(d));
    profiles.push_back(nu);

    TropicalHurwitzResult r = tropical_hurwitz(d, profiles, guard);

    // Simple interior ramification admits no positive genus labels, and each
    // class obeys the monodromy-graph product formula. The graph in that
    // model is the cover with its teeth contracted and pass-through vertices
    // smoothed away; its class mass is the product of the interior strand
    // weights over its automorphism count, end strands swappable as
    // multisets. The sum recovers the fiber count exactly.
    Rational product_total(0);
    for (const auto& cls : r.classes) {
        if (cls.genus_sum != 0)
            fail(errk::InternalInconsistency, "simple ramification produced a genus label");
        product_total += monodromy_graph_mass(cls.morphism);
    }
    if (!(product_total == r.weighted))
        fail(errk::InternalInconsistency, "product-formula total " + product_total.str() +
                                              " disagrees with the fiber count " + r.weighted.str());
    return r.weighted;
}

} // namespace trop
