#ifndef MIXEDTORI_ROOTS_HPP
#define MIXEDTORI_ROOTS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "mixedtori/config.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/mixed_polynomial.hpp"

namespace mixedtori {

/// Horner evaluation; coefficients in ascending order.
inline Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline Complex horner_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

/// |P(z)| / (1 + ‖c‖₁ · max(1, |z|)^deg)
inline double scaled_residual(const std::vector<Complex>& c, Complex z) {
  double norm = 0.0;
  for (const auto& x : c) norm += std::abs(x);
  const int deg = static_cast<int>(c.size()) - 1;
  return std::abs(horner(c, z)) / (1.0 + norm * std::pow(std::max(1.0, std::abs(z)), deg));
}

namespace detail {

inline std::vector<Complex> companion_roots(const std::vector<Complex>& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 1; k < n; ++k) m(k, k - 1) = 1.0;
  for (int k = 0; k < n; ++k) m(k, n - 1) = -c[k] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::RootFindingFailed, "companion eigenvalue solver did not converge");
  }
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return roots;
}

// Aberth–Ehrlich simultaneous iteration.
inline std::vector<Complex> aberth_roots(const std::vector<Complex>& c, int max_iter = 1000) {
  const int n = static_cast<int>(c.size()) - 1;
  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k] / c[n]));
  radius = 1.0 + radius;  // Cauchy bound
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(0.5 * radius, 2.0 * std::numbers::pi * (k + 0.25) / n + 0.4);
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    double largest = 0.0;
    for (int k = 0; k < n; ++k) {
      const Complex pk = horner(c, z[k]);
      if (pk == Complex{0.0, 0.0}) continue;
      const Complex ratio = pk / horner_derivative(c, z[k]);
      Complex repulsion{0.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex step = ratio / (1.0 - ratio * repulsion);
      z[k] -= step;
      largest = std::max(largest, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (largest < 1e-15) break;
  }
  return z;
}

}  // namespace detail

/// All complex roots of Σ c[k] z^k (ascending coefficients, leading one
/// nonzero). Companion-matrix eigenvalues up to cfg.companion_max_degree,
/// Aberth iteration above; each root gets one Newton polish step and must meet
/// cfg.tol_residual.
inline std::vector<Complex> polynomial_roots(std::vector<Complex> c, const Config& cfg = {}) {
  while (!c.empty() && c.back() == Complex{0.0, 0.0}) c.pop_back();
  if (c.size() <= 1) return {};
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> roots =
      n <= cfg.companion_max_degree ? detail::companion_roots(c) : detail::aberth_roots(c);
  for (auto& z : roots) {
    const Complex d = horner_derivative(c, z);
    if (d != Complex{0.0, 0.0}) {
      const Complex polished = z - horner(c, z) / d;
      if (std::isfinite(polished.real()) && std::isfinite(polished.imag()) &&
          std::abs(horner(c, polished)) <= std::abs(horner(c, z))) {
        z = polished;
      }
    }
    if (!(scaled_residual(c, z) < cfg.tol_residual)) {
      throw Error(ErrorKind::RootFindingFailed,
                  "root residual above tolerance (scaled residual " +
                      std::to_string(scaled_residual(c, z)) + ")");
    }
  }
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

// ---------------------------------------------------------------------------
// Zeros of a (non-holomorphic) mixed univariate polynomial

namespace detail {

// Damped Gauss-Newton on the real 2x2 system Re g = Im g = 0.
inline Complex mixed_newton(const UniMixedPoly& g, Complex z, int iterations = 80) {
  for (int it = 0; it < iterations; ++it) {
    const Complex val = g(z);
    const auto [a, b] = wirtinger_at(g, z);
    const Complex gx = a + b;                     // ∂g/∂x
    const Complex gy = Complex{0.0, 1.0} * (a - b);  // ∂g/∂y
    const double j11 = gx.real(), j12 = gy.real();
    const double j21 = gx.imag(), j22 = gy.imag();
    const double r1 = val.real(), r2 = val.imag();
    // (JᵀJ + λI) δ = -Jᵀ r
    const double a11 = j11 * j11 + j21 * j21;
    const double a12 = j11 * j12 + j21 * j22;
    const double a22 = j12 * j12 + j22 * j22;
    const double lambda = 1e-14 * (a11 + a22) + 1e-300;
    const double b1 = -(j11 * r1 + j21 * r2);
    const double b2 = -(j12 * r1 + j22 * r2);
    const double m11 = a11 + lambda, m22 = a22 + lambda;
    const double det = m11 * m22 - a12 * a12;
    if (!(det > 0.0) || !std::isfinite(det)) break;
    Complex step{(m22 * b1 - a12 * b2) / det, (m11 * b2 - a12 * b1) / det};
    // Backtrack so |g| does not grow.
    double t = 1.0;
    Complex next = z + step;
    while (t > 1e-6 && std::abs(g(next)) > std::abs(val)) {
      t *= 0.5;
      next = z + t * step;
    }
    if (std::abs(g(next)) > std::abs(val)) break;
    const double move = std::abs(next - z);
    z = next;
    if (move <= 1e-16 * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

}  // namespace detail

/// Zeros of g in the closed annulus r_min <= |w| <= r_max, found by Newton
/// refinement from the local minima of |g| on a log-polar grid and then
/// deduplicated. Intended for the small-degree face polynomials of this
/// library; not a certified solver.
inline std::vector<Complex> find_mixed_roots(const UniMixedPoly& g, double r_min, double r_max,
                                             const Config& cfg = {}, int radial = 64,
                                             int angular = 128) {
  std::vector<Complex> found;
  if (g.is_zero()) return found;
  const double lr0 = std::log(r_min);
  const double lr1 = std::log(r_max);
  std::vector<double> value(static_cast<std::size_t>(radial) * angular);
  auto point = [&](int i, int j) {
    const double r = std::exp(lr0 + (lr1 - lr0) * i / (radial - 1));
    return std::polar(r, 2.0 * std::numbers::pi * j / angular);
  };
  for (int i = 0; i < radial; ++i) {
    for (int j = 0; j < angular; ++j) {
      const Complex z = point(i, j);
      value[i * angular + j] = std::abs(g(z)) / g.scale_at(std::abs(z));
    }
  }
  for (int i = 0; i < radial; ++i) {
    for (int j = 0; j < angular; ++j) {
      const double here = value[i * angular + j];
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          if (ii < 0 || ii >= radial) continue;
          const int jj = (j + dj + angular) % angular;
          if (value[ii * angular + jj] < here) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;
      const Complex z = detail::mixed_newton(g, point(i, j));
      const double r = std::abs(z);
      if (!(r >= 0.5 * r_min && r <= 2.0 * r_max)) continue;
      if (std::abs(g(z)) > cfg.tol_root * g.scale_at(r)) continue;
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](Complex w) {
        return std::abs(w - z) <= 1e-6 * std::max(1.0, r);
      });
      if (!duplicate) found.push_back(z);
    }
  }
  std::sort(found.begin(), found.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return std::arg(a) < std::arg(b);
  });
  return found;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_ROOTS_HPP
