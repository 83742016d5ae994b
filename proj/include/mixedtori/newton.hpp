#ifndef MIXEDTORI_NEWTON_HPP
#define MIXEDTORI_NEWTON_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "mixedtori/error.hpp"
#include "mixedtori/lattice.hpp"
#include "mixedtori/mixed_polynomial.hpp"

namespace mixedtori {

/// A compact 1-face of the Newton boundary: the segment from `left` to
/// `right` together with every support point lying on it (endpoints
/// included).
struct NewtonFace {
  LatticePoint left;
  LatticePoint right;
  PointSet points;

  /// Primitive inward normal (w1, w2) with w1, w2 > 0; the face minimizes
  /// w1 x + w2 y over the support.
  std::pair<std::int64_t, std::int64_t> normal() const {
    const std::int64_t a = left.y - right.y, b = right.x - left.x;
    const std::int64_t g = std::gcd(a, b);
    return {a / g, b / g};
  }
};

/// Vertices Δ₀ … Δ_N from the vertical axis side to the horizontal axis side,
/// and faces Δ¹₁ … Δ¹_N where face i joins vertices i-1 and i.
struct NewtonBoundary {
  std::vector<LatticePoint> vertices;
  std::vector<NewtonFace> faces;

  std::size_t face_count() const { return faces.size(); }
};

inline PointSet support(const MixedPolynomial& p) {
  PointSet out;
  for (const auto& m : p.monomials()) out.insert(m.lattice_point());
  return out;
}

/// Compact faces of conv(∪ ω + ℝ²₊). Collinear points stay attached to their
/// face and are never vertices. Exact integer arithmetic throughout.
inline NewtonBoundary newton_boundary(const PointSet& s) {
  if (s.empty()) throw Error(ErrorKind::EmptySupport, "Newton boundary of empty support");

  // Lowest point per column; the set iterates in (x, y) order.
  std::vector<LatticePoint> columns;
  for (const auto& p : s) {
    if (columns.empty() || columns.back().x != p.x) columns.push_back(p);
  }

  // Lower hull, left to right, collinear points dropped.
  std::vector<LatticePoint> hull;
  for (const auto& p : columns) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  // Keep the strictly descending part: stop at the first vertex of minimal y.
  NewtonBoundary b;
  b.vertices.push_back(hull.front());
  for (std::size_t k = 1; k < hull.size(); ++k) {
    if (hull[k].y >= b.vertices.back().y) break;
    b.vertices.push_back(hull[k]);
  }

  for (std::size_t k = 1; k < b.vertices.size(); ++k) {
    NewtonFace face{b.vertices[k - 1], b.vertices[k], {}};
    for (const auto& p : s) {
      if (p.x < face.left.x || p.x > face.right.x) continue;
      if (cross(face.left, face.right, p) == 0) face.points.insert(p);
    }
    b.faces.push_back(std::move(face));
  }
  return b;
}

/// Γ(f) meets both coordinate axes.
inline bool is_convenient(const NewtonBoundary& b) {
  return !b.vertices.empty() && b.vertices.front().x == 0 && b.vertices.back().y == 0;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_NEWTON_HPP
