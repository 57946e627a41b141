#ifndef TROP_ORACLE_HPP
#define TROP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "trop/branch_tree.hpp"
#include "trop/morphism.hpp"
#include "trop/partition.hpp"
#include "trop/permutation.hpp"
#include "trop/rational.hpp"

namespace trop {

struct GenusResult {
    enum class Kind { Genus, ParityObstruction, NegativeGenus };
    Kind kind = Kind::Genus;
    int genus = 0;

    bool ok() const { return kind == Kind::Genus; }
};

// Genus forced by Riemann-Hurwitz over the line:
// 2g - 2 = -2d + sum_i (d - l(eta_i)).
GenusResult genus_from_profiles(int d, const std::vector<Partition>& profiles);

// Ceilings for the factorization search. The defaults admit everything the
// test suites touch with lots of headroom.
struct OracleGuard {
    int max_degree = 6;
    std::int64_t max_work = 50'000'000;
};

// Enumerates factorization tuples (s_0,...,s_{k-1}) with s_0 fixed to the
// canonical representative of profiles[0], cycle_type(s_i) = profiles[i],
// s_0 s_1 ... s_{k-1} = id and the generated group transitive. Returns the
// number of tuples visited; the full count over all s_0 is that number times
// |class(profiles[0])|.
std::int64_t enumerate_rep_factorizations(int d, const std::vector<Partition>& profiles,
                                          const OracleGuard& guard,
                                          const std::function<void(const std::vector<Perm>&)>& visit);

// Classical Hurwitz number: (1/d!) * #{transitive factorizations with the
// given cycle types}, exact. Zero on parity obstruction or negative genus.
Rational classical_hurwitz(int d, const std::vector<Partition>& profiles,
                           const OracleGuard& guard = {});

// classical_hurwitz restricted to genus 0; the local vertex count used when
// glueing covers along a three-ended star.
Rational local_triple_hurwitz(int m, const Partition& a, const Partition& b, const Partition& c,
                              const OracleGuard& guard = {});

// The tropical cover induced by a factorization tuple, indexed by leaf label.
// Rooted at leaf 0 with children ordered by smallest descendant leaf, the
// side monodromy of an edge is the ordered product of the leaf permutations
// below it; strands over an edge are its cycles with weights the cycle
// lengths, fiber vertices are the orbits of the local monodromies, and genus
// labels come from the local Riemann-Hurwitz count. The tuple must have
// product identity in that leaf order and generate a transitive group.
WeightedMorphism factorization_to_cover(const std::vector<Perm>& by_leaf, const BranchTree& tree);

struct OracleClass {
    WeightedMorphism representative;
    Rational multiplicity;
};

struct OracleCoverMap {
    std::map<std::string, OracleClass> classes; // keyed by canonical form
    Rational total;                             // equals the classical count
    std::int64_t tuples = 0;                    // representative tuples visited
};

// Partitions all qualifying factorization tuples by the isomorphism class of
// their induced tropical cover; multiplicities sum to classical_hurwitz.
OracleCoverMap hurwitz_by_tropical_type(int d, const std::vector<Partition>& profiles,
                                        const BranchTree& tree, const OracleGuard& guard = {});

} // namespace trop

#endif
