#ifndef TROP_PERMUTATION_HPP
#define TROP_PERMUTATION_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "trop/partition.hpp"

namespace trop {

// Permutation of {0..d-1} as an image array. Points act on the right:
// x.sigma = sigma[x], and products read left to right, so compose(a,b) means
// "apply a, then b". This convention is fixed project-wide.
using Perm = std::vector<int>;

inline Perm identity_perm(int d) {
    Perm p(static_cast<size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<size_t>(a[i])];
    return r;
}

inline Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return r;
}

inline bool is_identity(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != static_cast<int>(i)) return false;
    return true;
}

// Cycles sorted by smallest element, each rotated to start at its smallest.
inline std::vector<std::vector<int>> cycles_of(const Perm& p) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int x = static_cast<int>(i);
        do {
            cyc.push_back(x);
            seen[static_cast<size_t>(x)] = true;
            x = p[static_cast<size_t>(x)];
        } while (x != static_cast<int>(i));
        out.push_back(std::move(cyc));
    }
    return out;
}

inline Partition cycle_type(const Perm& p) {
    std::vector<int> lens;
    for (const auto& c : cycles_of(p)) lens.push_back(static_cast<int>(c.size()));
    return Partition(std::move(lens));
}

// One fixed representative of a cycle type: consecutive cycles
// (0 1 .. k1-1)(k1 ..)...
inline Perm canonical_of_type(int d, const Partition& t) {
    Perm p = identity_perm(d);
    int base = 0;
    for (int len : t.parts()) {
        for (int i = 0; i < len; ++i) p[static_cast<size_t>(base + i)] = base + (i + 1) % len;
        base += len;
    }
    return p;
}

// All elements of S_d with the given cycle type. d stays tiny here, so a
// filtered scan of S_d is plenty.
inline std::vector<Perm> class_members(int d, const Partition& t) {
    std::vector<Perm> out;
    Perm p = identity_perm(d);
    do {
        if (cycle_type(p) == t) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::int64_t class_size(int d, const Partition& t) {
    return factorial(d) / t.centralizer_order();
}

// Union-find over {0..d-1}; used for orbit bookkeeping during backtracking.
class OrbitTracker {
public:
    explicit OrbitTracker(int d) : parent_(static_cast<size_t>(d)), count_(d) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<size_t>(x)] != x) {
            parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
            x = parent_[static_cast<size_t>(x)];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[static_cast<size_t>(b)] = a;
            --count_;
        }
    }

    void absorb(const Perm& p) {
        for (size_t i = 0; i < p.size(); ++i) unite(static_cast<int>(i), p[i]);
    }

    int orbit_count() const { return count_; }

private:
    std::vector<int> parent_;
    int count_;
};

inline bool tuple_transitive(int d, const std::vector<Perm>& perms) {
    OrbitTracker orb(d);
    for (const auto& p : perms) orb.absorb(p);
    return orb.orbit_count() == 1;
}

} // namespace trop

#endif
