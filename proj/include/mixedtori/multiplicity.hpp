#ifndef MIXEDTORI_MULTIPLICITY_HPP
#define MIXEDTORI_MULTIPLICITY_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mixedtori/config.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/mixed_polynomial.hpp"
#include "mixedtori/roots.hpp"

namespace mixedtori {

enum class MultiplicityMethod { lemma51, semiholo_fast, constant };

inline std::string_view to_string(MultiplicityMethod m) {
  switch (m) {
    case MultiplicityMethod::lemma51: return "lemma51";
    case MultiplicityMethod::semiholo_fast: return "semiholo-fast";
    case MultiplicityMethod::constant: return "constant";
  }
  return "unknown";
}

struct ClassifiedRoot {
  Complex value;
  bool inside = false;  // |ς| < 1
};

/// Signed multiplicity at the origin of a homogeneous h = c w^{d-n} w̄^{d-m}
/// ∏(w - ς_i w̄), with ms = m - n + Σ ε(ς_i).
struct MultiplicityResult {
  int ms = 0;
  int m = 0;
  int n = 0;
  int d = 0;
  std::vector<ClassifiedRoot> roots;
  int epsilon_sum = 0;
  MultiplicityMethod method = MultiplicityMethod::lemma51;
};

/// Coefficients (ascending) of P(ς) = Σ_{ν=νmin}^{νmax} c_ν ς^{ν-νmin}.
inline std::vector<Complex> associated_polynomial(const HomUniMixedPoly& h) {
  std::vector<Complex> c;
  if (h.is_zero()) return c;
  const int lo = h.coeffs().begin()->first;
  const int hi = h.coeffs().rbegin()->first;
  c.assign(hi - lo + 1, Complex{0.0, 0.0});
  for (const auto& [nu, coef] : h.coeffs()) c[nu - lo] = coef;
  return c;
}

/// The m+n-d nonzero roots ς_i of the associated polynomial. Empty when
/// m+n-d = 0.
inline std::vector<Complex> associated_roots(const HomUniMixedPoly& h, const Config& cfg = {}) {
  return polynomial_roots(associated_polynomial(h), cfg);
}

/// Multiplicity read off directly when h involves only w (ms = d) or only w̄
/// (ms = -d). Nullopt for any other h.
inline std::optional<int> semiholomorphic_multiplicity(const HomUniMixedPoly& h) {
  if (h.is_zero()) return std::nullopt;
  const auto [m, n] = h.bi_degree();
  if (n == 0) return m;
  if (m == 0) return -n;
  return std::nullopt;
}

/// The general factorization route, used for every h including the ones the
/// fast path could handle.
inline MultiplicityResult lemma51_multiplicity(const HomUniMixedPoly& h, const Config& cfg = {}) {
  if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "signed multiplicity of the zero polynomial");
  MultiplicityResult r;
  r.method = MultiplicityMethod::lemma51;
  r.d = h.degree();
  std::tie(r.m, r.n) = h.bi_degree();
  if (r.m + r.n - r.d == 0) {
    r.ms = r.m - r.n;
    return r;
  }
  for (const Complex& s : associated_roots(h, cfg)) {
    const double gap = std::abs(s) - 1.0;
    if (std::abs(gap) <= cfg.tol_unit) {
      throw Error(ErrorKind::RootOnUnitCircle,
                  "associated root with |ς| = " + std::to_string(std::abs(s)) +
                      " lies on the unit circle");
    }
    r.roots.push_back({s, gap < 0});
    r.epsilon_sum += gap < 0 ? 1 : -1;
  }
  r.ms = r.m - r.n + r.epsilon_sum;
  return r;
}

/// m_s(h, 0) for a nonzero homogeneous h. Constants give 0, pure w^d / w̄^d
/// powers take the fast path, everything else goes through the factorization.
inline MultiplicityResult signed_multiplicity_at_zero(const HomUniMixedPoly& h,
                                                      const Config& cfg = {}) {
  if (h.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "signed multiplicity of the zero polynomial");
  if (h.degree() == 0) {
    MultiplicityResult r;
    r.method = MultiplicityMethod::constant;
    return r;
  }
  if (auto fast = semiholomorphic_multiplicity(h)) {
    MultiplicityResult r;
    r.method = MultiplicityMethod::semiholo_fast;
    r.d = h.degree();
    std::tie(r.m, r.n) = h.bi_degree();
    r.ms = *fast;
    return r;
  }
  return lemma51_multiplicity(h, cfg);
}

/// Rotation number of h/|h| along |w| = radius, from principal-branch argument
/// increments over `samples` uniform steps.
inline int degree_oracle(const UniMixedPoly& h, double radius, int samples,
                         const Config& cfg = {}) {
  if (h.is_zero()) throw Error(ErrorKind::VanishesOnCircle, "zero polynomial vanishes everywhere");
  const double floor = cfg.tol_vanish * h.scale_at(radius);
  std::vector<Complex> values(samples);
  for (int k = 0; k < samples; ++k) {
    values[k] = h(std::polar(radius, 2.0 * std::numbers::pi * k / samples));
    if (!(std::abs(values[k]) > floor)) {
      throw Error(ErrorKind::VanishesOnCircle,
                  "polynomial (nearly) vanishes on the circle of radius " + std::to_string(radius));
    }
  }
  double total = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double inc = std::arg(values[(k + 1) % samples] / values[k]);
    if (std::abs(inc) >= std::numbers::pi / 2) {
      throw Error(ErrorKind::AliasingSuspected,
                  "argument step of " + std::to_string(inc) + " rad; increase samples");
    }
    total += inc;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) >= 0.1) {
    throw Error(ErrorKind::AliasingSuspected, "winding total far from an integer");
  }
  return static_cast<int>(rounded);
}

/// Sign of a simple root: +1 when |∂h/∂w| > |∂h/∂w̄| at α, -1 when smaller.
inline int simple_root_sign(const UniMixedPoly& h, Complex alpha, const Config& cfg = {}) {
  const double scale = std::max(1.0, h.scale_at(std::abs(alpha)));
  if (!(std::abs(h(alpha)) < cfg.tol_root * scale)) {
    throw Error(ErrorKind::NotARoot, "point is not a root of the polynomial");
  }
  const auto [dw, dwb] = wirtinger_at(h, alpha);
  const double diff = std::abs(dw) - std::abs(dwb);
  if (std::abs(diff) <= cfg.tol_sign * std::max(1.0, std::abs(dw) + std::abs(dwb))) {
    throw Error(ErrorKind::IndeterminateSign, "Wirtinger moduli coincide; root is degenerate");
  }
  return diff > 0 ? 1 : -1;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_MULTIPLICITY_HPP
