#pragma once

#include <vector>

#include "preord/space.hpp"

namespace preord {

// Smallest closed preorder containing R: alternate reflexive-transitive
// closure with closure in the product topology until both fix. Non-reflexive
// input is reflexivized first.
Relation smallest_closed_preorder(const FiniteTopology& top, const Relation& r);

// True iff the space's order is the smallest closed preorder containing R.
// The image-compactness half of the definition is automatic on finite
// spaces. Throws NotASubrelation when R is not below the order.
bool is_generated_by(const PreorderedSpace& s, const Relation& r);

// A function into the chain {0..levels-1}, one value per point.
using ChainFn = std::vector<int>;

// All f : E -> {0..levels-1} that are continuous for the space topology
// (constant on every minimal open set, equivalently all threshold preimages
// open on both sides) and isotone for R. Throws InstanceTooLarge when
// levels^n exceeds the cap.
std::vector<ChainFn> isotone_functions_to_chain(const PreorderedSpace& s, const Relation& r, int levels,
                                                size_t cap = (1u << 24));

// Equality of the enumerated families for R and for the space order.
// Requires R below the order and the order generated by R.
bool isotone_sets_coincide(const PreorderedSpace& s, const Relation& r, int levels);

}  // namespace preord
