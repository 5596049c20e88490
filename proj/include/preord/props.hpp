#pragma once

#include <optional>
#include <string>
#include <vector>

#include "preord/space.hpp"

namespace preord {

// Evidence attached to a false verdict. Points/sets carry whatever the
// property needs to re-check the violation; `note` is for humans.
struct Witness {
  std::vector<int> points;
  std::vector<Bits> sets;
  std::string note;
};

struct PropertyReport {
  std::string property;
  bool verdict = false;
  std::optional<Witness> witness;  // present iff verdict is false

  static PropertyReport pass(std::string name) { return {std::move(name), true, std::nullopt}; }
  static PropertyReport fail(std::string name, Witness w) {
    return {std::move(name), false, std::move(w)};
  }
};

enum class ConvKind { convex, weak, local };

PropertyReport is_T1_preordered(const PreorderedSpace& s);
PropertyReport is_T2_preordered(const PreorderedSpace& s);
PropertyReport is_normally_preordered(const PreorderedSpace& s, size_t cap = (1u << 20));
PropertyReport is_regularly_preordered(const PreorderedSpace& s, size_t cap = (1u << 20));

// Convexity in the given open neighborhood O of x; the property is antitone
// in O, so the public entry point fixes O = minopen(x).
bool convexity_at_in_nbhd(const PreorderedSpace& s, int x, const Bits& nbhd, ConvKind kind);
PropertyReport convexity_at(const PreorderedSpace& s, int x, ConvKind kind);

PropertyReport is_convex(const PreorderedSpace& s);
PropertyReport is_weakly_convex(const PreorderedSpace& s);
PropertyReport is_locally_convex(const PreorderedSpace& s);

PropertyReport is_I_space(const PreorderedSpace& s);
PropertyReport is_C_space(const PreorderedSpace& s);

// Trivially true on finite spaces (every subset is compact); kept for API
// uniformity with the grid engine where the window semantics is nontrivial.
PropertyReport is_k_preserving(const PreorderedSpace& s);

// True iff all points of [x] = d(x) /\ i(x) share one minimal open set.
bool class_indistinguishable(const PreorderedSpace& s, int x);

// Re-checks a failed report's witness against the space from scratch;
// returns true if it still demonstrates a genuine violation.
bool revalidate_witness(const PreorderedSpace& s, const PropertyReport& report);

// Full battery in a fixed order (used by the CLI and the lab).
std::vector<PropertyReport> property_battery(const PreorderedSpace& s);

}  // namespace preord
