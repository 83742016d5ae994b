#ifndef MIXEDTORI_TESTS_FIXTURES_HPP
#define MIXEDTORI_TESTS_FIXTURES_HPP

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "mixedtori/mixedtori.hpp"

namespace fixtures {

inline const std::string kEx53 = "u^4 + ~u u^2 v + u^2 ~v^2 + v^6";
inline const std::string kEx54 = "u^5 + u^2 ~u^2 v + u^3 v^2 - i u ~u^2 v^2 + u^2 ~u v^2 + ~u v^6 + v^9";
inline const std::string kEx55 = "u^4 - u^3 v ~v + u^2 v^3 ~v^3 - u v^6 ~v^6 + v^10 ~v^10";

inline const std::vector<std::string>& all() {
  static const std::vector<std::string> polys{kEx53, kEx54, kEx55};
  return polys;
}

inline std::complex<double> random_coeff(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return {d(rng), d(rng)};
}

/// Random homogeneous c_ν w^ν w̄^{d-ν} with degree in [1, max_degree].
inline mixedtori::HomUniMixedPoly random_homogeneous(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::bernoulli_distribution keep(0.7);
  const int d = deg(rng);
  std::map<int, std::complex<double>> coeffs;
  while (coeffs.empty()) {
    for (int nu = 0; nu <= d; ++nu) {
      if (keep(rng)) coeffs[nu] = random_coeff(rng);
    }
  }
  return mixedtori::HomUniMixedPoly(d, coeffs);
}

/// True when every associated root keeps at least `gap` from the unit circle.
inline bool roots_clear_of_circle(const mixedtori::HomUniMixedPoly& h, double gap) {
  for (const auto& s : mixedtori::associated_roots(h)) {
    if (std::abs(std::abs(s) - 1.0) < gap) return false;
  }
  return true;
}

inline mixedtori::HomUniMixedPoly random_clear_homogeneous(std::mt19937_64& rng, int max_degree,
                                                           double gap = 0.02) {
  for (;;) {
    auto h = random_homogeneous(rng, max_degree);
    if (roots_clear_of_circle(h, gap)) return h;
  }
}

}  // namespace fixtures

#endif
