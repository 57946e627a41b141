#include "trop/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace trop {

namespace {

struct FlatCover {
    std::vector<int> tvert;  // per vertex index: target vertex id
    std::vector<int> genus;
    struct E {
        int u, v, te, w;
    };
    std::vector<E> edges;
    struct P {
        int v, tp, w;
    };
    std::vector<P> puncts;

    size_t size() const { return tvert.size(); }
};

FlatCover flatten(const WeightedMorphism& m) {
    FlatCover g;
    std::map<int, int> idx;
    for (const auto& v : m.source.vertices()) {
        idx[v.id] = static_cast<int>(g.tvert.size());
        g.tvert.push_back(m.vertex_map.at(v.id));
        g.genus.push_back(v.genus);
    }
    for (const auto& e : m.source.edges())
        g.edges.push_back({idx.at(e.a), idx.at(e.b), m.edge_map.at(e.id), m.edge_weights.at(e.id)});
    for (const auto& p : m.source.punctures())
        g.puncts.push_back({idx.at(p.at), m.puncture_map.at(p.id), m.puncture_weights.at(p.id)});
    return g;
}

// Color refinement to a fixpoint; colors are re-ranked to 0..k-1 preserving
// key order, so the partition ordering is canonical.
void refine(const FlatCover& g, std::vector<long long>& color) {
    const size_t n = g.size();
    while (true) {
        std::vector<std::vector<std::tuple<int, int, long long>>> sig(n);
        for (const auto& e : g.edges) {
            sig[static_cast<size_t>(e.u)].push_back({e.te, e.w, color[static_cast<size_t>(e.v)]});
            sig[static_cast<size_t>(e.v)].push_back({e.te, e.w, color[static_cast<size_t>(e.u)]});
        }
        for (auto& s : sig) std::sort(s.begin(), s.end());

        std::vector<std::pair<long long, std::vector<std::tuple<int, int, long long>>>> keys(n);
        for (size_t i = 0; i < n; ++i) keys[i] = {color[i], sig[i]};
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });

        std::vector<long long> next(n);
        long long rank = 0;
        for (size_t i = 0; i < n; ++i) {
            if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
            next[order[i]] = rank;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

std::string serialize(const FlatCover& g, const std::vector<long long>& color) {
    const size_t n = g.size();
    std::vector<int> pos(n);
    for (size_t i = 0; i < n; ++i) pos[i] = static_cast<int>(color[i]);

    std::string s = "V";
    std::vector<size_t> by_pos(n);
    for (size_t i = 0; i < n; ++i) by_pos[static_cast<size_t>(pos[i])] = i;
    for (size_t p = 0; p < n; ++p) {
        size_t i = by_pos[p];
        s += " " + std::to_string(g.tvert[i]) + ":" + std::to_string(g.genus[i]);
    }
    std::vector<std::tuple<int, int, int, int>> erecs;
    for (const auto& e : g.edges) {
        int a = pos[static_cast<size_t>(e.u)], b = pos[static_cast<size_t>(e.v)];
        erecs.push_back({std::min(a, b), std::max(a, b), e.te, e.w});
    }
    std::sort(erecs.begin(), erecs.end());
    s += " E";
    for (const auto& [a, b, te, w] : erecs)
        s += " " + std::to_string(a) + "-" + std::to_string(b) + "/" + std::to_string(te) + ":" +
             std::to_string(w);
    std::vector<std::tuple<int, int, int>> precs;
    for (const auto& p : g.puncts) precs.push_back({pos[static_cast<size_t>(p.v)], p.tp, p.w});
    std::sort(precs.begin(), precs.end());
    s += " P";
    for (const auto& [v, tp, w] : precs)
        s += " " + std::to_string(v) + "/" + std::to_string(tp) + ":" + std::to_string(w);
    return s;
}

// Strands with identical endpoints, target direction and weight can be
// permuted freely by any automorphism; vertex labelings never see that.
std::int64_t parallel_factor(const FlatCover& g) {
    std::map<std::tuple<int, int, int, int>, std::int64_t> eruns;
    for (const auto& e : g.edges)
        ++eruns[{std::min(e.u, e.v), std::max(e.u, e.v), e.te, e.w}];
    std::map<std::tuple<int, int, int>, std::int64_t> pruns;
    for (const auto& p : g.puncts) ++pruns[{p.v, p.tp, p.w}];
    std::int64_t f = 1;
    for (const auto& [k, c] : eruns)
        for (std::int64_t i = 2; i <= c; ++i) f *= i;
    for (const auto& [k, c] : pruns)
        for (std::int64_t i = 2; i <= c; ++i) f *= i;
    return f;
}

struct Search {
    const FlatCover& g;
    std::string best;
    std::int64_t best_count = 0;

    explicit Search(const FlatCover& graph) : g(graph) {}

    void run(std::vector<long long> color) {
        refine(g, color);
        // first cell (by color value) with more than one member
        std::map<long long, std::vector<size_t>> cells;
        for (size_t i = 0; i < g.size(); ++i) cells[color[i]].push_back(i);
        const std::vector<size_t>* split = nullptr;
        for (const auto& [c, members] : cells) {
            if (members.size() > 1) {
                split = &members;
                break;
            }
        }
        if (!split) {
            std::string s = serialize(g, color);
            if (best_count == 0 || s < best) {
                best = s;
                best_count = 1;
            } else if (s == best) {
                ++best_count;
            }
            return;
        }
        for (size_t member : *split) {
            std::vector<long long> next(color);
            for (size_t i = 0; i < next.size(); ++i) next[i] *= 2;
            next[member] -= 1;
            run(std::move(next));
        }
    }
};

} // namespace

CanonicalResult canonicalize_cover(const WeightedMorphism& m) {
    FlatCover g = flatten(m);
    const size_t n = g.size();

    // initial colors from vertex-local invariants
    std::vector<std::pair<std::tuple<int, int>, std::vector<std::tuple<int, int, int>>>> keys(n);
    for (size_t i = 0; i < n; ++i) keys[i].first = {g.tvert[i], g.genus[i]};
    for (const auto& e : g.edges) {
        keys[static_cast<size_t>(e.u)].second.push_back({0, e.te, e.w});
        keys[static_cast<size_t>(e.v)].second.push_back({0, e.te, e.w});
    }
    for (const auto& p : g.puncts) keys[static_cast<size_t>(p.v)].second.push_back({1, p.tp, p.w});
    for (auto& k : keys) std::sort(k.second.begin(), k.second.end());

    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });
    std::vector<long long> color(n);
    long long rank = 0;
    for (size_t i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
        color[order[i]] = rank;
    }

    Search search(g);
    search.run(color);

    CanonicalResult r;
    r.form = search.best;
    r.aut = search.best_count * parallel_factor(g);
    return r;
}

} // namespace trop
