#ifndef MIXEDTORI_TORUS_CHECK_HPP
#define MIXEDTORI_TORUS_CHECK_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mixedtori/config.hpp"
#include "mixedtori/mixed_polynomial.hpp"
#include "mixedtori/multiplicity.hpp"
#include "mixedtori/newton.hpp"
#include "mixedtori/roots.hpp"
#include "mixedtori/winding.hpp"

namespace mixedtori {

enum class VertexStatus { certified_exact, certified_numeric, violated, inconclusive };

inline std::string_view to_string(VertexStatus s) {
  switch (s) {
    case VertexStatus::certified_exact: return "certified-exact";
    case VertexStatus::certified_numeric: return "certified-numeric";
    case VertexStatus::violated: return "violated";
    case VertexStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

enum class FaceStatus { no_violation_found, violated };

inline std::string_view to_string(FaceStatus s) {
  return s == FaceStatus::violated ? "violated" : "no-violation-found";
}

struct TorusMinimum {
  double min_modulus = 0.0;
  double phi = 0.0;
  double t = 0.0;
};

struct VertexCheck {
  int index = 0;
  LatticePoint vertex;
  VertexStatus status = VertexStatus::inconclusive;
  double min_modulus = 0.0;
  std::optional<std::pair<double, double>> witness;  // (φ, t)
};

struct FaceCheck {
  int index = 0;  // 1-based face number
  FaceStatus status = FaceStatus::no_violation_found;
  int zeros_examined = 0;
  std::optional<std::pair<Complex, double>> witness;  // (u, t) with v = e^{it}
};

struct HypothesisReport {
  std::vector<VertexCheck> vertices;
  std::vector<FaceCheck> faces;
  bool convenient = false;
  bool gamma_nice = false;
  bool nondegeneracy_asserted = false;
};

/// Minimum of |f(e^{iφ}, e^{it})| over a grid × grid lattice of angles, then
/// refined by coordinate bisection from the best grid point. The refinement
/// only accepts improvements, so the result never exceeds a visited value.
inline TorusMinimum torus_min_modulus(const MixedPolynomial& face_fn, int grid) {
  auto at = [&](double phi, double t) {
    return std::abs(evaluate(face_fn, std::polar(1.0, phi), std::polar(1.0, t)));
  };
  const double step0 = 2.0 * std::numbers::pi / grid;
  TorusMinimum best{at(0.0, 0.0), 0.0, 0.0};
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double val = at(i * step0, j * step0);
      if (val < best.min_modulus) best = {val, i * step0, j * step0};
    }
  }
  double step = step0;
  for (int iter = 0; iter < 50; ++iter) {
    bool moved = false;
    for (const auto& [dphi, dt] : std::array<std::pair<double, double>, 4>{
             {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}}) {
      const double val = at(best.phi + dphi, best.t + dt);
      if (val < best.min_modulus) {
        best = {val, best.phi + dphi, best.t + dt};
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return best;
}

namespace detail {

inline double coefficient_norm(const MixedPolynomial& p) {
  double s = 0.0;
  for (const auto& m : p.monomials()) s += std::abs(m.coeff);
  return s;
}

// f_Δ restricted to one variable pair when the other pair enters only as a
// single power; nullopt when neither pair is semiholomorphic.
struct SemiholoFactor {
  HomUniMixedPoly factor;
  Side side;  // variable the factor depends on
};

inline std::optional<SemiholoFactor> semiholomorphic_factor(const MixedPolynomial& f,
                                                            const LatticePoint& vertex) {
  const VarSet kind = semiholomorphic_kind(f);
  if (kind.contains(Var::u) || kind.contains(Var::ubar)) {
    std::map<int, Complex> coeffs;
    for (const auto& m : f.monomials()) coeffs[m.nu2] += m.coeff;
    return SemiholoFactor{HomUniMixedPoly(static_cast<int>(vertex.y), coeffs), Side::v};
  }
  if (kind.contains(Var::v) || kind.contains(Var::vbar)) {
    std::map<int, Complex> coeffs;
    for (const auto& m : f.monomials()) coeffs[m.nu1] += m.coeff;
    return SemiholoFactor{HomUniMixedPoly(static_cast<int>(vertex.x), coeffs), Side::u};
  }
  return std::nullopt;
}

// Wirtinger derivatives (f_u, f_ū, f_v, f_v̄) at (u, v).
inline std::array<Complex, 4> mixed_partials(const MixedPolynomial& f, Complex u, Complex v) {
  const Complex ub = std::conj(u), vb = std::conj(v);
  std::array<Complex, 4> d{};
  for (const auto& m : f.monomials()) {
    const Complex pu = ipow(u, m.nu1), pub = ipow(ub, m.mu1);
    const Complex pv = ipow(v, m.nu2), pvb = ipow(vb, m.mu2);
    if (m.nu1) d[0] += m.coeff * double(m.nu1) * ipow(u, m.nu1 - 1) * pub * pv * pvb;
    if (m.mu1) d[1] += m.coeff * double(m.mu1) * pu * ipow(ub, m.mu1 - 1) * pv * pvb;
    if (m.nu2) d[2] += m.coeff * double(m.nu2) * pu * pub * ipow(v, m.nu2 - 1) * pvb;
    if (m.mu2) d[3] += m.coeff * double(m.mu2) * pu * pub * pv * ipow(vb, m.mu2 - 1);
  }
  return d;
}

// Smallest singular value of the real 2×4 Jacobian of f at (u, v).
inline double jacobian_min_singular(const MixedPolynomial& f, Complex u, Complex v) {
  const auto d = mixed_partials(f, u, v);
  const Complex I{0.0, 1.0};
  const std::array<Complex, 4> cols{d[0] + d[1], I * (d[0] - d[1]), d[2] + d[3], I * (d[2] - d[3])};
  double a = 0.0, b = 0.0, c = 0.0;  // J Jᵀ = [[a, b], [b, c]]
  for (const auto& col : cols) {
    a += col.real() * col.real();
    b += col.real() * col.imag();
    c += col.imag() * col.imag();
  }
  const double mean = 0.5 * (a + c);
  const double rad = std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return std::sqrt(std::max(0.0, mean - rad));
}

// Natural size of |∇f| near (u, v): Σ |c| · deg · max(|u|, |v|, 1)^{deg-1}.
inline double gradient_scale(const MixedPolynomial& f, Complex u, Complex v) {
  const double r = std::max({1.0, std::abs(u), std::abs(v)});
  double s = 0.0;
  for (const auto& m : f.monomials()) {
    const int deg = m.nu1 + m.mu1 + m.nu2 + m.mu2;
    s += std::abs(m.coeff) * deg * std::pow(r, deg - 1);
  }
  return s;
}

}  // namespace detail

/// Heuristic check that f_{Δ¹} has no singular zeros in (ℂ*)². Zeros are
/// sampled on |v| = 1 at several angles (weighted homogeneity makes this
/// enough to meet every orbit) and the real Jacobian rank is tested at each.
/// A clean result is "asserted (spot-checked)", not a proof.
inline FaceCheck spot_check_face_nondegeneracy(const MixedPolynomial& p, const NewtonFace& face,
                                               int face_index, const Config& cfg = {}) {
  FaceCheck out;
  out.index = face_index;
  const MixedPolynomial f = face_function(p, face.points);
  if (f.size() <= 1) return out;  // a monomial has no zeros in (ℂ*)²
  for (int k = 0; k < cfg.spot_check_angles; ++k) {
    const double t = 2.0 * std::numbers::pi * k / cfg.spot_check_angles + 0.3;
    const UniMixedPoly g = specialize_t(f, t, cfg.tol_zero);
    if (g.is_zero()) continue;
    std::pair<double, double> annulus{1e-4, 1e4};
    try {
      annulus = root_annulus(g, cfg);
    } catch (const Error&) {
      // Extreme parts vanish somewhere on the circle; fall back to a fixed
      // window.
    }
    const Complex v = std::polar(1.0, t);
    for (const Complex& u : find_mixed_roots(g, annulus.first, annulus.second, cfg)) {
      ++out.zeros_examined;
      const double ratio = detail::jacobian_min_singular(f, u, v) / detail::gradient_scale(f, u, v);
      if (ratio < cfg.tol_degenerate) {
        out.status = FaceStatus::violated;
        out.witness = std::pair{u, t};
        return out;
      }
    }
  }
  return out;
}

/// Checks that every vertex face function is nonzero on the unit torus and
/// spot-checks 1-face non-degeneracy. Vertex functions that are
/// semiholomorphic in one variable pair factor through a homogeneous
/// polynomial in the other pair, whose zeros on the torus are exactly the
/// associated roots on the unit circle; everything else is sampled.
inline HypothesisReport check_gamma_nice(const MixedPolynomial& p, const NewtonBoundary& b,
                                         const Config& cfg = {}) {
  HypothesisReport rep;
  rep.convenient = is_convenient(b);
  const int last = static_cast<int>(b.vertices.size()) - 1;
  rep.gamma_nice = true;
  for (int i = 0; i <= last; ++i) {
    VertexCheck vc;
    vc.index = i;
    vc.vertex = b.vertices[i];
    const MixedPolynomial f = face_function(p, {vc.vertex});
    const double norm = detail::coefficient_norm(f);
    const TorusMinimum tm = torus_min_modulus(f, cfg.grid);
    vc.min_modulus = tm.min_modulus;

    if (auto sf = detail::semiholomorphic_factor(f, vc.vertex)) {
      vc.status = VertexStatus::certified_exact;
      for (const Complex& s : associated_roots(sf->factor, cfg)) {
        if (std::abs(std::abs(s) - 1.0) <= cfg.tol_unit) {
          vc.status = VertexStatus::violated;
          const double theta = 0.5 * std::arg(s);
          vc.witness = sf->side == Side::u ? std::pair{theta, 0.0} : std::pair{0.0, theta};
          const double at_witness = std::abs(evaluate(f, std::polar(1.0, vc.witness->first),
                                                      std::polar(1.0, vc.witness->second)));
          vc.min_modulus = std::min(vc.min_modulus, at_witness);
          break;
        }
      }
    } else if (tm.min_modulus < cfg.tol_vanish * norm) {
      vc.status = VertexStatus::violated;
      vc.witness = std::pair{tm.phi, tm.t};
    } else if (tm.min_modulus < cfg.tol_inconclusive * norm) {
      vc.status = VertexStatus::inconclusive;
    } else {
      vc.status = VertexStatus::certified_numeric;
    }
    const bool extreme = i == 0 || i == last;
    if (!extreme && (vc.status == VertexStatus::violated || vc.status == VertexStatus::inconclusive)) {
      rep.gamma_nice = false;
    }
    rep.vertices.push_back(vc);
  }

  rep.nondegeneracy_asserted = true;
  for (std::size_t k = 0; k < b.faces.size(); ++k) {
    rep.faces.push_back(spot_check_face_nondegeneracy(p, b.faces[k], static_cast<int>(k) + 1, cfg));
    if (rep.faces.back().status == FaceStatus::violated) rep.nondegeneracy_asserted = false;
  }
  return rep;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_TORUS_CHECK_HPP
