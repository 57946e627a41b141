#ifndef TROP_CANONICAL_HPP
#define TROP_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "trop/morphism.hpp"

namespace trop {

// Canonical form of a cover and its automorphism count. Cover isomorphism
// means: bijection of source vertices, edges and punctures over the identity
// of the target, preserving genus labels, weights and all maps. Two covers
// have equal `form` iff isomorphic; `aut` counts fiber-preserving source
// automorphisms, parallel-strand swaps included.
struct CanonicalResult {
    std::string form;
    std::int64_t aut = 1;
};

CanonicalResult canonicalize_cover(const WeightedMorphism& m);

inline std::string canonical_form(const WeightedMorphism& m) { return canonicalize_cover(m).form; }
inline std::int64_t cover_automorphisms(const WeightedMorphism& m) { return canonicalize_cover(m).aut; }

} // namespace trop

#endif
