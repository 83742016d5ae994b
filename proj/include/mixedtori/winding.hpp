#ifndef MIXEDTORI_WINDING_HPP
#define MIXEDTORI_WINDING_HPP

#include <cmath>
#include <numbers>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mixedtori/config.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/mixed_polynomial.hpp"
#include "mixedtori/multiplicity.hpp"
#include "mixedtori/newton.hpp"

namespace mixedtori {

/// One cell of the vertex table: m_s at 0 of the restriction of f_{Δᵢ} to one
/// side, identical over every accepted angle.
struct TableEntry {
  int ms = 0;
  MultiplicityMethod method = MultiplicityMethod::constant;
  std::vector<double> angles;  // accepted samples
  int rejected = 0;            // angles discarded for a bi-degree drop
};

/// ms_t[i] = m_s(f^t_{Δᵢ}, 0) and ms_phi[i] = m_s(f^φ_{Δᵢ}, 0) for i = 0 … N.
struct MultiplicityTable {
  std::vector<int> ms_t;
  std::vector<int> ms_phi;
  std::vector<TableEntry> t_entries;
  std::vector<TableEntry> phi_entries;

  int face_count() const { return static_cast<int>(ms_t.size()) - 1; }
};

/// Winding data per face i = 1 … N, stored at index i - 1.
struct WindingProfile {
  std::vector<int> w;       // w(Lᵢ) in Vᵢ
  std::vector<int> wprime;  // w'(Lᵢ) in W_{i-1}
  std::vector<int> w_in;    // w(L₁ ∪ … ∪ Lᵢ) = ms_t[i]
  std::vector<int> w_out;   // w'(Lᵢ ∪ … ∪ L_N) = ms_phi[i-1]
  std::set<int> certified_nonempty;

  int face_count() const { return static_cast<int>(w.size()); }
  int w_at(int i) const { return w.at(i - 1); }
  int wprime_at(int i) const { return wprime.at(i - 1); }
};

/// Angle k of the sampling sequence: 0, then golden-ratio steps around the
/// circle.
inline double sample_angle(int k) {
  const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
  const double frac = k * golden - std::floor(k * golden);
  return 2.0 * std::numbers::pi * frac;
}

namespace detail {

inline TableEntry vertex_entry(const MixedPolynomial& face_fn, const LatticePoint& vertex,
                               int vertex_index, Side side, const Config& cfg) {
  const int degree = static_cast<int>(side == Side::u ? vertex.x : vertex.y);
  int hi = -1, lo = -1;
  for (const auto& m : face_fn.monomials()) {
    const int nu = side == Side::u ? m.nu1 : m.nu2;
    hi = std::max(hi, nu);
    lo = lo < 0 ? nu : std::min(lo, nu);
  }
  const std::pair<int, int> predicted{hi, degree - lo};

  TableEntry entry;
  std::vector<int> values;
  for (int k = 0; static_cast<int>(entry.angles.size()) < cfg.angle_samples; ++k) {
    if (entry.rejected >= cfg.max_angle_rejections) {
      Error e(ErrorKind::InconsistentAcrossAngles,
              "bi-degree of vertex " + std::to_string(vertex_index) +
                  " restriction cancelled at too many sampled angles");
      e.vertex = vertex_index;
      e.side = side == Side::u ? "t" : "phi";
      throw e;
    }
    const double angle = sample_angle(k);
    const UniMixedPoly h = side == Side::u ? specialize_t(face_fn, angle, cfg.tol_zero)
                                           : specialize_phi(face_fn, angle, cfg.tol_zero);
    const HomUniMixedPoly hom = to_homogeneous(h, degree);
    if (hom.is_zero() || hom.bi_degree() != predicted) {
      ++entry.rejected;
      continue;
    }
    try {
      const MultiplicityResult r = signed_multiplicity_at_zero(hom, cfg);
      values.push_back(r.ms);
      entry.method = r.method;
    } catch (Error& e) {
      e.vertex = vertex_index;
      e.angle = angle;
      e.side = side == Side::u ? "t" : "phi";
      throw;
    }
    entry.angles.push_back(angle);
  }
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] != values[0]) {
      Error e(ErrorKind::InconsistentAcrossAngles,
              "signed multiplicity at vertex " + std::to_string(vertex_index) +
                  " differs between angles " + std::to_string(entry.angles[0]) + " and " +
                  std::to_string(entry.angles[k]));
      e.vertex = vertex_index;
      e.angle = entry.angles[k];
      e.side = side == Side::u ? "t" : "phi";
      throw e;
    }
  }
  entry.ms = values.empty() ? 0 : values[0];
  return entry;
}

}  // namespace detail

/// Signed multiplicities of every vertex restriction, each sampled at
/// cfg.angle_samples angles that must all agree.
inline MultiplicityTable multiplicity_table(const MixedPolynomial& p, const NewtonBoundary& b,
                                            const Config& cfg = {}) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "multiplicity table of the zero polynomial");
  if (!is_convenient(b)) {
    throw Error(ErrorKind::NotConvenient, "Newton boundary does not meet both coordinate axes");
  }
  MultiplicityTable tab;
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    const MixedPolynomial face_fn = face_function(p, {b.vertices[i]});
    const int idx = static_cast<int>(i);
    tab.t_entries.push_back(detail::vertex_entry(face_fn, b.vertices[i], idx, Side::u, cfg));
    tab.phi_entries.push_back(detail::vertex_entry(face_fn, b.vertices[i], idx, Side::v, cfg));
    tab.ms_t.push_back(tab.t_entries.back().ms);
    tab.ms_phi.push_back(tab.phi_entries.back().ms);
  }
  return tab;
}

inline WindingProfile winding_profile(const MultiplicityTable& tab) {
  WindingProfile prof;
  const int n = tab.face_count();
  for (int i = 1; i <= n; ++i) {
    prof.w.push_back(tab.ms_t[i] - tab.ms_t[i - 1]);
    prof.wprime.push_back(tab.ms_phi[i - 1] - tab.ms_phi[i]);
    prof.w_in.push_back(tab.ms_t[i]);
    prof.w_out.push_back(tab.ms_phi[i - 1]);
    if (std::max(std::abs(prof.w.back()), std::abs(prof.wprime.back())) > 0) {
      prof.certified_nonempty.insert(i);
    }
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Annulus oracle

/// Lower bound for |h| on the unit circle: |lead| ∏ ||ς| - 1| over the
/// associated roots. Zero when a root sits on the circle.
inline double circle_modulus_lower_bound(const HomUniMixedPoly& h, const Config& cfg = {}) {
  if (h.is_zero()) return 0.0;
  const double lead = std::abs(h.coeffs().rbegin()->second);
  double bound = lead;
  for (const Complex& s : associated_roots(h, cfg)) bound *= std::abs(std::abs(s) - 1.0);
  return bound;
}

/// Radii r < R such that every zero of g in ℂ* lies strictly between them and
/// the lowest (highest) homogeneous part of g dominates on |w| = r (= R).
inline std::pair<double, double> root_annulus(const UniMixedPoly& g, const Config& cfg = {}) {
  const int k0 = g.min_degree();
  const int k1 = g.max_degree();
  const double m_low = circle_modulus_lower_bound(to_homogeneous(g.part(k0), k0), cfg);
  const double m_high = circle_modulus_lower_bound(to_homogeneous(g.part(k1), k1), cfg);
  if (!(m_low > 0.0) || !(m_high > 0.0)) {
    throw Error(ErrorKind::VanishesOnCircle,
                "extreme homogeneous part vanishes on the unit circle; no root annulus");
  }
  double rest_low = 0.0, rest_high = 0.0;
  for (int k = k0 + 1; k <= k1; ++k) rest_low += g.coefficient_norm(k);
  for (int k = k0; k < k1; ++k) rest_high += g.coefficient_norm(k);
  const double r = 0.5 * std::min(1.0, rest_low > 0.0 ? m_low / rest_low : 1.0);
  const double big = 2.0 * std::max(1.0, rest_high > 0.0 ? rest_high / m_high : 1.0);
  return {r, big};
}

/// degree_oracle with the sample count doubled on aliasing.
inline int adaptive_degree(const UniMixedPoly& g, double radius, const Config& cfg = {}) {
  for (int samples = cfg.oracle_samples;; samples *= 2) {
    try {
      return degree_oracle(g, radius, samples, cfg);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AliasingSuspected || samples * 2 > cfg.oracle_samples_max) throw;
    }
  }
}

/// Algebraic count of the zeros of gᵢᵗ = f_{Δ¹ᵢ}(·, e^{it}) in ℂ*, as the
/// difference of circle degrees outside and inside all of them. Independent of
/// the vertex table; equals w(Lᵢ).
inline int winding_oracle(const MixedPolynomial& p, const NewtonBoundary& b, int face_index,
                          double t, const Config& cfg = {}) {
  const auto& face = b.faces.at(face_index - 1);
  const UniMixedPoly g = specialize_t(face_function(p, face.points), t, cfg.tol_zero);
  const auto [r, big] = root_annulus(g, cfg);
  return adaptive_degree(g, big, cfg) - adaptive_degree(g, r, cfg);
}

inline int winding_oracle(const MixedPolynomial& p, int face_index, double t,
                          const Config& cfg = {}) {
  return winding_oracle(p, newton_boundary(support(p)), face_index, t, cfg);
}

/// Mirror of winding_oracle on the v side: zeros of f_{Δ¹ᵢ}(e^{iφ}, ·);
/// equals w'(Lᵢ).
inline int winding_oracle_phi(const MixedPolynomial& p, const NewtonBoundary& b, int face_index,
                              double phi, const Config& cfg = {}) {
  const auto& face = b.faces.at(face_index - 1);
  const UniMixedPoly g = specialize_phi(face_function(p, face.points), phi, cfg.tol_zero);
  const auto [r, big] = root_annulus(g, cfg);
  return adaptive_degree(g, big, cfg) - adaptive_degree(g, r, cfg);
}

/// Distinct zeros of gᵢᵗ in ℂ* (numerical; see find_mixed_roots).
inline std::vector<Complex> face_roots(const MixedPolynomial& p, const NewtonBoundary& b,
                                       int face_index, double t, const Config& cfg = {}) {
  const auto& face = b.faces.at(face_index - 1);
  const UniMixedPoly g = specialize_t(face_function(p, face.points), t, cfg.tol_zero);
  const auto [r, big] = root_annulus(g, cfg);
  return find_mixed_roots(g, r, big, cfg);
}

}  // namespace mixedtori

#endif  // MIXEDTORI_WINDING_HPP
