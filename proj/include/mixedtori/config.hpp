#ifndef MIXEDTORI_CONFIG_HPP
#define MIXEDTORI_CONFIG_HPP

#include <cstddef>

namespace mixedtori {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kSchema = "mixedtori/1";

/// Numerical knobs shared by every stage of the analysis. Defaults are the
/// values the tool ships with; the CLI exposes the most relevant ones.
struct Config {
  // Coefficients whose modulus falls below this after a specialization are
  // treated as cancelled.
  double tol_zero = 1e-12;

  // |ς| is classified against 1 only outside the band ||ς| - 1| <= tol_unit.
  double tol_unit = 1e-8;

  // Scaled residual bound accepted from the root finder.
  double tol_residual = 1e-10;

  // Relative vanishing threshold for torus / circle sampling.
  double tol_vanish = 1e-9;

  // Torus minima in [tol_vanish, tol_inconclusive) are neither certified nor
  // violated.
  double tol_inconclusive = 1e-6;

  // Simple-root tests.
  double tol_root = 1e-8;
  double tol_sign = 1e-9;

  // Ratio of singular values below which a real Jacobian counts as rank < 2.
  double tol_degenerate = 1e-6;

  // Torus grid per angle for non-semiholomorphic vertex functions.
  int grid = 256;

  // Accepted angle samples per vertex and the replacement budget.
  int angle_samples = 7;
  int max_angle_rejections = 20;

  // Circle samples used by the winding oracle; doubled on aliasing up to the
  // cap.
  int oracle_samples = 4096;
  int oracle_samples_max = 1 << 18;

  // Angles (v = e^{it}) probed by the 1-face non-degeneracy spot check.
  int spot_check_angles = 6;

  // Above this degree the root finder switches from the companion matrix to
  // Aberth iteration.
  int companion_max_degree = 30;
};

}  // namespace mixedtori

#endif  // MIXEDTORI_CONFIG_HPP
