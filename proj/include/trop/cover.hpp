#ifndef TROP_COVER_HPP
#define TROP_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "trop/canonical.hpp"
#include "trop/oracle.hpp"

namespace trop {

// An isomorphism class of covers of a branch tree.
struct CoverClass {
    WeightedMorphism morphism;
    std::int64_t aut_count = 1;
    Rational multiplicity;       // fiber-count mass; zero until assigned
    std::string canonical_form;
    int betti = 0;               // b1 of the source
    int genus_sum = 0;           // sum of source genus labels; 0 iff Mumford
};

// Graph-theoretic enumeration over the caterpillar in backbone order:
// strands over the left handle carry eta_0, each backbone vertex groups
// incoming strands into fiber vertices with tooth and outgoing strands of
// equal weight sum, and deg(v) = m_v + 2 - 2 g_v with the genus label forced
// by the direction counts (g_v = 0 everywhere is the smooth-cover case).
// Connected covers only; multiplicities are not assigned here.
std::vector<CoverClass> enumerate_comb_covers_raw(int d, const std::vector<Partition>& profiles);

// Same local rules processed down an arbitrary binary branch tree rooted at
// leaf 0.
std::vector<CoverClass> enumerate_binary_tree_covers_raw(const BranchTree& tree);

// Matches classes against the factorization oracle by canonical form.
// Classes the oracle never realizes keep multiplicity 0; oracle classes the
// enumeration missed are a hard failure (EnumerationIncomplete).
void assign_multiplicities(std::vector<CoverClass>& classes, int d,
                           const std::vector<Partition>& profiles, const BranchTree& tree,
                           const OracleGuard& guard = {});

// Enumeration plus multiplicities over the caterpillar of the profiles.
// A caller-supplied genus must match the value forced by Riemann-Hurwitz.
std::vector<CoverClass> enumerate_comb_covers(int d, const std::vector<Partition>& profiles,
                                              std::optional<int> genus = std::nullopt,
                                              const OracleGuard& guard = {});

std::vector<CoverClass> enumerate_binary_tree_covers(const BranchTree& tree,
                                                     const OracleGuard& guard = {});

struct TropicalHurwitzResult {
    std::int64_t raw_count = 0;  // classes with nonzero multiplicity
    Rational weighted;           // sum of multiplicities = classical count
    std::vector<CoverClass> classes;
};

// Over an explicit binary branch tree.
TropicalHurwitzResult tropical_hurwitz(const BranchTree& tree, const OracleGuard& guard = {});

// Over the caterpillar of the profiles.
TropicalHurwitzResult tropical_hurwitz(int d, const std::vector<Partition>& profiles,
                                       const OracleGuard& guard = {});

// Double Hurwitz number: profiles eta and nu at the handles and
// n = 2g - 2 + l(eta) + l(nu) simple interior profiles. Every class is
// checked against the product formula (prod of interior strand weights over
// |Aut|) and for the trivalent-or-pass-through backbone shape.
Rational cjm_double_hurwitz(int d, const Partition& eta, const Partition& nu, int g,
                            const OracleGuard& guard = {});

} // namespace trop

#endif
