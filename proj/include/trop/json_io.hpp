#ifndef TROP_JSON_IO_HPP
#define TROP_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "trop/curve.hpp"
#include "trop/morphism.hpp"

namespace trop {

using Json = nlohmann::ordered_json;

// Canonical JSON shapes: arrays sorted by id, map keys in numeric order,
// rationals as "p/q" strings. Serializing twice is byte-identical.
Json curve_to_json(const TropicalCurve& curve);
TropicalCurve curve_from_json(const Json& j);

Json divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const Json& j, const TropicalCurve& curve);

Json morphism_to_json(const WeightedMorphism& m);
WeightedMorphism morphism_from_json(const Json& j);

// Graphviz view of a cover: source and target clusters, node names prefixed
// "s_" and "t_", deterministic ordering.
std::string dot_export(const WeightedMorphism& m);

// Stable 64-bit digest used to key cover classes in reports and file names.
std::string form_digest(const std::string& canonical_form);

} // namespace trop

#endif
