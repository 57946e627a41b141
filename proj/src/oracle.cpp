#include "trop/oracle.hpp"

#include <algorithm>

#include "trop/canonical.hpp"

namespace trop {

GenusResult genus_from_profiles(int d, const std::vector<Partition>& profiles) {
    for (const auto& p : profiles)
        if (p.sum() != d) fail(errk::UnequalSums, "profile " + p.str() + " is not a partition of " + std::to_string(d));
    int ram = 0;
    for (const auto& p : profiles) ram += d - p.length();
    if (ram % 2 != 0) return {GenusResult::Kind::ParityObstruction, 0};
    int two_g = 2 - 2 * d + ram;
    if (two_g < 0) return {GenusResult::Kind::NegativeGenus, 0};
    return {GenusResult::Kind::Genus, two_g / 2};
}

std::int64_t enumerate_rep_factorizations(int d, const std::vector<Partition>& profiles,
                                          const OracleGuard& guard,
                                          const std::function<void(const std::vector<Perm>&)>& visit) {
    const int k = static_cast<int>(profiles.size());
    if (k < 2) fail(errk::WrongArity, "need at least 2 ramification profiles");
    if (d < 1) fail(errk::MalformedProfile, "degree must be positive");
    if (d > guard.max_degree)
        fail(errk::ResourceExceeded, "degree " + std::to_string(d) + " exceeds ceiling " + std::to_string(guard.max_degree));
    for (const auto& p : profiles)
        if (p.sum() != d) fail(errk::UnequalSums, "profile " + p.str() + " is not a partition of " + std::to_string(d));

    std::int64_t work = 1;
    for (int i = 1; i + 1 < k; ++i) {
        work *= class_size(d, profiles[static_cast<size_t>(i)]);
        if (work > guard.max_work)
            fail(errk::ResourceExceeded, "estimated search size exceeds --max-work ceiling");
    }

    // Orbit slack: a permutation with l cycles can merge at most d - l orbits.
    // suffix_slack[i] = sum over positions >= i.
    std::vector<int> suffix_slack(static_cast<size_t>(k) + 1, 0);
    for (int i = k - 1; i >= 0; --i)
        suffix_slack[static_cast<size_t>(i)] =
            suffix_slack[static_cast<size_t>(i) + 1] + (d - profiles[static_cast<size_t>(i)].length());

    std::vector<std::vector<Perm>> classes;
    for (int i = 1; i + 1 < k; ++i) classes.push_back(class_members(d, profiles[static_cast<size_t>(i)]));

    std::vector<Perm> tuple(static_cast<size_t>(k));
    tuple[0] = canonical_of_type(d, profiles[0]);

    std::int64_t found = 0;
    // level = next free position to fill, in 1..k-2; position k-1 is forced.
    auto rec = [&](auto&& self, int level, const Perm& prefix_product, const OrbitTracker& orbits) -> void {
        if (level == k - 1) {
            Perm last = inverse(prefix_product);
            if (cycle_type(last) != profiles[static_cast<size_t>(k - 1)]) return;
            OrbitTracker all = orbits;
            all.absorb(last);
            if (all.orbit_count() != 1) return;
            tuple[static_cast<size_t>(k - 1)] = std::move(last);
            ++found;
            if (visit) visit(tuple);
            return;
        }
        for (const Perm& s : classes[static_cast<size_t>(level - 1)]) {
            OrbitTracker next = orbits;
            next.absorb(s);
            if (next.orbit_count() - 1 > suffix_slack[static_cast<size_t>(level) + 1]) continue;
            tuple[static_cast<size_t>(level)] = s;
            self(self, level + 1, compose(prefix_product, s), next);
        }
    };

    OrbitTracker orbits(d);
    orbits.absorb(tuple[0]);
    if (orbits.orbit_count() - 1 <= suffix_slack[1]) rec(rec, 1, tuple[0], orbits);
    return found;
}

Rational classical_hurwitz(int d, const std::vector<Partition>& profiles, const OracleGuard& guard) {
    GenusResult g = genus_from_profiles(d, profiles);
    if (!g.ok()) return Rational(0);
    std::int64_t reps = enumerate_rep_factorizations(d, profiles, guard, nullptr);
    // total tuples = reps * |class(profiles[0])|; divide by d!.
    return Rational(reps, profiles[0].centralizer_order());
}

Rational local_triple_hurwitz(int m, const Partition& a, const Partition& b, const Partition& c,
                              const OracleGuard& guard) {
    std::vector<Partition> profiles{a, b, c};
    GenusResult g = genus_from_profiles(m, profiles);
    if (!g.ok() || g.genus != 0) return Rational(0);
    return classical_hurwitz(m, profiles, guard);
}

namespace {

// Cycles of p that lie inside the orbit with representative `rep` under the
// given orbit partition.
std::vector<std::vector<int>> cycles_in_orbit(const Perm& p, const std::vector<int>& orbit_of, int rep) {
    std::vector<std::vector<int>> out;
    for (auto& c : cycles_of(p))
        if (orbit_of[static_cast<size_t>(c.front())] == rep) out.push_back(std::move(c));
    return out;
}

} // namespace

WeightedMorphism factorization_to_cover(const std::vector<Perm>& by_leaf, const BranchTree& tree) {
    const int d = tree.degree;
    const int n_leaves = tree.leaf_count();
    if (static_cast<int>(by_leaf.size()) != n_leaves)
        fail(errk::InvalidFactorization, "tuple size does not match leaf count");
    for (int i = 0; i < n_leaves; ++i) {
        if (static_cast<int>(by_leaf[static_cast<size_t>(i)].size()) != d)
            fail(errk::InvalidFactorization, "permutation " + std::to_string(i) + " is not on " +
                                                 std::to_string(d) + " points");
        if (!(cycle_type(by_leaf[static_cast<size_t>(i)]) == tree.profile(i)))
            fail(errk::InvalidFactorization,
                 "permutation " + std::to_string(i) + " has the wrong cycle type");
    }

    RootedView view = root_at_leaf0(tree);

    Perm product = identity_perm(d);
    for (int leaf : view.dfs_leaves) product = compose(product, by_leaf[static_cast<size_t>(leaf)]);
    if (!is_identity(product))
        fail(errk::InvalidFactorization, "product is not the identity in the tree's leaf order");
    if (!tuple_transitive(d, by_leaf))
        fail(errk::InvalidFactorization, "factorization is not transitive; the cover would be disconnected");

    // side monodromy per bounded edge: ordered product over the positions below
    std::map<int, Perm> beta;
    for (const auto& [eid, span] : view.edge_span) {
        Perm b = identity_perm(d);
        for (int k = span.first; k <= span.second; ++k)
            b = compose(b, by_leaf[static_cast<size_t>(view.dfs_leaves[static_cast<size_t>(k)])]);
        beta[eid] = b;
    }

    // per internal vertex: orbit partition of the local monodromies
    std::map<int, std::vector<int>> orbit_of;     // vertex -> point -> orbit representative
    std::map<std::pair<int, int>, int> fiber_id;  // (vertex, orbit rep) -> source vertex id
    WeightedMorphism m;
    m.target = tree.curve;

    for (int u : view.pre_order) {
        // direction monodromies at u: parent first, then children in order
        std::vector<Perm> dir_perms;
        dir_perms.push_back(u == view.root_vertex ? inverse(by_leaf[0]) : beta.at(view.parent_edge.at(u)));
        for (const auto& c : view.children.at(u))
            dir_perms.push_back(c.is_leaf ? by_leaf[static_cast<size_t>(c.leaf_id)] : beta.at(c.edge_id));

        OrbitTracker orbits(d);
        for (size_t i = 1; i < dir_perms.size(); ++i) orbits.absorb(dir_perms[i]);

        std::vector<int> reps(static_cast<size_t>(d));
        for (int x = 0; x < d; ++x) reps[static_cast<size_t>(x)] = orbits.find(x);
        orbit_of[u] = reps;

        for (int rep = 0; rep < d; ++rep) {
            if (reps[static_cast<size_t>(rep)] != rep) continue;
            int size = 0;
            for (int x = 0; x < d; ++x) size += (reps[static_cast<size_t>(x)] == rep);
            // local Riemann-Hurwitz: 2g - 2 = -2|O| + sum_dirs (|O| - #cycles)
            int slack = 0;
            for (const Perm& perm : dir_perms)
                slack += size - static_cast<int>(cycles_in_orbit(perm, reps, rep).size());
            int two_g = 2 - 2 * size + slack;
            if (two_g < 0 || two_g % 2 != 0)
                fail(errk::InternalInconsistency, "impossible local genus at a fiber vertex");
            int vid = m.source.add_vertex(two_g / 2);
            fiber_id[{u, rep}] = vid;
            m.vertex_map[vid] = u;
        }
    }

    // strands over bounded edges
    for (const auto& e : tree.curve.edges()) {
        const Perm& b = beta.at(e.id);
        // the child-side endpoint is the one whose parent edge this is
        int child = view.parent_edge.count(e.a) && view.parent_edge.at(e.a) == e.id ? e.a : e.b;
        int parent = child == e.a ? e.b : e.a;
        for (const auto& cyc : cycles_of(b)) {
            int pu = fiber_id.at({parent, orbit_of.at(parent)[static_cast<size_t>(cyc.front())]});
            int cv = fiber_id.at({child, orbit_of.at(child)[static_cast<size_t>(cyc.front())]});
            int eid = m.source.add_edge(pu, cv);
            m.edge_map[eid] = e.id;
            m.edge_weights[eid] = static_cast<int>(cyc.size());
        }
    }

    // strands over the leaves
    for (const auto& p : tree.curve.punctures()) {
        int at = p.at;
        for (const auto& cyc : cycles_of(by_leaf[static_cast<size_t>(p.id)])) {
            int v = fiber_id.at({at, orbit_of.at(at)[static_cast<size_t>(cyc.front())]});
            int pid = m.source.add_puncture(v);
            m.puncture_map[pid] = p.id;
            m.puncture_weights[pid] = static_cast<int>(cyc.size());
        }
    }

    m.source.validate();
    int deg = validate_morphism(m);
    if (deg != d) fail(errk::InternalInconsistency, "constructed cover has the wrong degree");
    check_riemann_hurwitz(m);
    return m;
}

OracleCoverMap hurwitz_by_tropical_type(int d, const std::vector<Partition>& profiles,
                                        const BranchTree& tree, const OracleGuard& guard) {
    if (profiles != tree.profiles)
        fail(errk::LeafProfileMismatch, "profiles do not match the branch tree");
    if (d != tree.degree) fail(errk::UnequalSums, "degree does not match the profiles");

    RootedView view = root_at_leaf0(tree);
    std::vector<Partition> by_position;
    for (int leaf : view.dfs_leaves) by_position.push_back(tree.profile(leaf));

    OracleCoverMap out;
    out.total = Rational(0);
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, WeightedMorphism> reps;

    out.tuples = enumerate_rep_factorizations(
        d, by_position, guard, [&](const std::vector<Perm>& tuple) {
            std::vector<Perm> by_leaf(static_cast<size_t>(tree.leaf_count()));
            for (size_t k = 0; k < tuple.size(); ++k)
                by_leaf[static_cast<size_t>(view.dfs_leaves[k])] = tuple[k];
            WeightedMorphism cover = factorization_to_cover(by_leaf, tree);
            std::string form = canonical_form(cover);
            if (++counts[form] == 1) reps.emplace(form, std::move(cover));
        });

    std::int64_t z = by_position.front().centralizer_order();
    for (auto& [form, count] : counts) {
        OracleClass cls;
        cls.representative = std::move(reps.at(form));
        cls.multiplicity = Rational(count, z);
        out.total += cls.multiplicity;
        out.classes.emplace(form, std::move(cls));
    }
    return out;
}

} // namespace trop
