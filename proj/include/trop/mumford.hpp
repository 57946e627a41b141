#ifndef TROP_MUMFORD_HPP
#define TROP_MUMFORD_HPP

#include "trop/cover.hpp"

namespace trop {

// b1 of the preimage of the closure of the target edge set: all source
// vertices over the endpoints together with all strands over the edges.
int preimage_betti(const WeightedMorphism& m, const std::vector<int>& target_edges);

// Contract the preimage of the closure of E component-wise in the source.
// Each collapsed component becomes one vertex labeled with its first Betti
// number plus the labels it swallowed; arithmetic genus is preserved.
TropicalCurve contract_edges(const WeightedMorphism& m, const std::vector<int>& target_edges);
TropicalCurve contract_edges(const CoverClass& cls, const std::vector<int>& target_edges);

// Mass of covers of the canonical binary refinement that stop being Mumford
// after contracting back: b1 over the contracted closure positive, or a
// genus label already positive. Agrees with the wiener/multi-wiener count on
// every instance whose covers all have genus-0 labels.
Rational wiener_weight(int d, const std::vector<Partition>& profiles, const BranchTree& tree,
                       const OracleGuard& guard = {});

// classical - wiener_weight; the count of Mumford-curve covers over the
// branch configuration of the tree.
Rational mumford_hurwitz(int d, const std::vector<Partition>& profiles, const BranchTree& tree,
                         const OracleGuard& guard = {});

// Recomputes the wiener weight over binary refinements (all of them when
// trials = 0, else at most `trials`); true iff every value agrees.
bool refinement_independence_check(int d, const std::vector<Partition>& profiles,
                                   const BranchTree& tree, size_t trials = 0,
                                   const OracleGuard& guard = {});

} // namespace trop

#endif
