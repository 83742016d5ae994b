#ifndef MIXEDTORI_LATTICE_HPP
#define MIXEDTORI_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <set>

namespace mixedtori {

/// A point of the exponent lattice: x is the total u-degree ν₁+μ₁, y the
/// total v-degree ν₂+μ₂.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

using PointSet = std::set<LatticePoint>;

/// z-component of (b - a) × (c - a).
inline std::int64_t cross(const LatticePoint& a, const LatticePoint& b,
                          const LatticePoint& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace mixedtori

#endif  // MIXEDTORI_LATTICE_HPP
