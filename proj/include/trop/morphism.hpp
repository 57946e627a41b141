#ifndef TROP_MORPHISM_HPP
#define TROP_MORPHISM_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "trop/curve.hpp"
#include "trop/partition.hpp"

namespace trop {

// A direction at a target vertex: one of the incident bounded edges or
// punctures.
struct Direction {
    bool puncture = false;
    int id = 0;

    friend bool operator<(const Direction& a, const Direction& b) {
        return std::tie(a.puncture, a.id) < std::tie(b.puncture, b.id);
    }
    friend bool operator==(const Direction& a, const Direction& b) {
        return a.puncture == b.puncture && a.id == b.id;
    }
    std::string str() const { return (puncture ? "p" : "e") + std::to_string(id); }
};

// Weighted morphism of tropical curves. Weights live on the source (bounded
// edges and punctures); the target is unweighted. Bounded edges map to
// bounded edges and punctures to punctures.
struct WeightedMorphism {
    TropicalCurve source;
    TropicalCurve target;
    std::map<int, int> vertex_map;
    std::map<int, int> edge_map;
    std::map<int, int> puncture_map;
    std::map<int, int> edge_weights;
    std::map<int, int> puncture_weights;
};

// Full structural check: totality, incidence compatibility, harmonicity at
// every vertex, and equal fiber weight sums over every target direction.
// Returns the common fiber sum, i.e. the degree.
int validate_morphism(const WeightedMorphism& m);

// m_phi(v): weight sum at v over any one direction at phi(v).
int local_multiplicity(const WeightedMorphism& m, int v);

// Multiplicity at the completion vertex of a source puncture: its weight.
int local_multiplicity_at_puncture_end(const WeightedMorphism& m, int p);

Divisor pushforward(const WeightedMorphism& m, const Divisor& d);
Divisor pullback(const WeightedMorphism& m, const Divisor& d_target);

// K_src - pullback(K_tgt), cross-checked coefficient by coefficient against
// the closed forms 2m(v)-2-(deg_w(v)-deg(v)) and w(p)-1.
Divisor ramification_divisor(const WeightedMorphism& m);

Divisor branch_divisor(const WeightedMorphism& m);

struct RHReport {
    int degree = 0;
    int lhs = 0;  // 2 b1(source) - 2
    int rhs = 0;  // (2 b1(target) - 2) * degree + deg R
    int deg_ramification = 0;
    int betti_source = 0;
    int betti_target = 0;
    bool betti_ok = false;
};

// Asserts 2b1-2 = (2b1'-2)d + deg R, deg R even and >= 0, b1' <= b1; throws
// RHViolation otherwise (only malformed inputs can trip it).
RHReport check_riemann_hurwitz(const WeightedMorphism& m);

// RHM criterion: true iff the ramification divisor is effective; for covers
// arising from curves the finite coefficients are -2 g_v, so this means every
// local defect vanishes. Odd defects cannot arise from curve covers at all.
bool is_mumford(const WeightedMorphism& m);

// g_v = -R_phi(v)/2 per finite vertex; throws on odd or positive defects.
std::map<int, int> infer_genus_labels(const WeightedMorphism& m);

// For each direction at phi(v), the weakly decreasing weights of the source
// edges/punctures at v lying over it. Every partition sums to m_phi(v).
std::map<Direction, Partition> star_profiles(const WeightedMorphism& m, int v);

// Harbater-Mumford shape: exactly two of the three directions fully ramified
// (single part m) and the third unramified (all ones). m = 1 passes.
bool harbater_mumford_check(const std::map<Direction, Partition>& star, int m);

} // namespace trop

#endif
