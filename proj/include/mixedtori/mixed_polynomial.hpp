#ifndef MIXEDTORI_MIXED_POLYNOMIAL_HPP
#define MIXEDTORI_MIXED_POLYNOMIAL_HPP

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mixedtori/config.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/lattice.hpp"

namespace mixedtori {

using Complex = std::complex<double>;

/// z^k for k >= 0 by repeated squaring; exact for unit-modulus inputs up to
/// rounding.
inline Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

/// c · u^{nu1} v^{nu2} ū^{mu1} v̄^{mu2}
struct MixedMonomial {
  Complex coeff;
  int nu1 = 0;
  int nu2 = 0;
  int mu1 = 0;
  int mu2 = 0;

  std::array<int, 4> key() const { return {nu1, nu2, mu1, mu2}; }
  LatticePoint lattice_point() const { return {nu1 + mu1, nu2 + mu2}; }
  bool operator==(const MixedMonomial&) const = default;
};

/// A mixed polynomial f(u, ū, v, v̄) with complex coefficients. Monomials are
/// unique per exponent quadruple, nonzero, and sorted in descending
/// lexicographic order of (nu1, nu2, mu1, mu2). The constant term is always
/// absent.
class MixedPolynomial {
 public:
  MixedPolynomial() = default;

  /// Collects like terms and drops exact zeros. Throws NonzeroConstantTerm if
  /// a nonzero constant survives collection.
  static MixedPolynomial from_terms(const std::vector<MixedMonomial>& terms) {
    std::map<std::array<int, 4>, Complex> collected;
    for (const auto& m : terms) {
      if (m.nu1 < 0 || m.nu2 < 0 || m.mu1 < 0 || m.mu2 < 0) {
        throw Error(ErrorKind::NegativeExponent, "negative exponent in monomial");
      }
      collected[m.key()] += m.coeff;
    }
    MixedPolynomial p;
    for (auto it = collected.rbegin(); it != collected.rend(); ++it) {
      const auto& [k, c] = *it;
      if (c == Complex{0.0, 0.0}) continue;
      if (k == std::array<int, 4>{0, 0, 0, 0}) {
        throw Error(ErrorKind::NonzeroConstantTerm,
                    "mixed polynomial must have zero constant term");
      }
      p.monomials_.push_back({c, k[0], k[1], k[2], k[3]});
    }
    return p;
  }

  const std::vector<MixedMonomial>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }
  std::size_t size() const { return monomials_.size(); }

  bool operator==(const MixedPolynomial&) const = default;

 private:
  std::vector<MixedMonomial> monomials_;
};

inline Complex evaluate(const MixedPolynomial& p, Complex u, Complex v) {
  const Complex ub = std::conj(u);
  const Complex vb = std::conj(v);
  Complex sum{0.0, 0.0};
  for (const auto& m : p.monomials()) {
    sum += m.coeff * ipow(u, m.nu1) * ipow(ub, m.mu1) * ipow(v, m.nu2) *
           ipow(vb, m.mu2);
  }
  return sum;
}

/// Sub-sum of the monomials whose lattice point lies in `points`.
inline MixedPolynomial face_function(const MixedPolynomial& p,
                                     const PointSet& points) {
  std::vector<MixedMonomial> kept;
  for (const auto& m : p.monomials()) {
    if (points.count(m.lattice_point())) kept.push_back(m);
  }
  return MixedPolynomial::from_terms(kept);
}

/// Coefficient conjugation combined with the swaps u ↔ ū, v ↔ v̄, so that
/// evaluate(conj(p), u, v) == conj(evaluate(p, u, v)).
inline MixedPolynomial conj(const MixedPolynomial& p) {
  std::vector<MixedMonomial> terms;
  for (const auto& m : p.monomials()) {
    terms.push_back({std::conj(m.coeff), m.mu1, m.mu2, m.nu1, m.nu2});
  }
  return MixedPolynomial::from_terms(terms);
}

// ---------------------------------------------------------------------------
// Univariate restrictions

enum class Side { u, v };

/// Mixed polynomial in a single complex variable w: Σ c_{p,q} w^p w̄^q.
struct UniMixedPoly {
  Side side = Side::u;
  std::map<std::pair<int, int>, Complex> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const UniMixedPoly&) const = default;

  Complex operator()(Complex w) const {
    const Complex wb = std::conj(w);
    Complex sum{0.0, 0.0};
    for (const auto& [pq, c] : terms) {
      sum += c * ipow(w, pq.first) * ipow(wb, pq.second);
    }
    return sum;
  }

  /// Sum of coefficient moduli of the terms of total degree k (all terms when
  /// k < 0).
  double coefficient_norm(int k = -1) const {
    double s = 0.0;
    for (const auto& [pq, c] : terms) {
      if (k < 0 || pq.first + pq.second == k) s += std::abs(c);
    }
    return s;
  }

  /// Upper bound Σ |c| r^{p+q} for |h| on the circle of radius r.
  double scale_at(double r) const {
    double s = 0.0;
    for (const auto& [pq, c] : terms) s += std::abs(c) * std::pow(r, pq.first + pq.second);
    return s;
  }

  int min_degree() const {
    int d = -1;
    for (const auto& [pq, c] : terms) {
      const int k = pq.first + pq.second;
      if (d < 0 || k < d) d = k;
    }
    return d;
  }

  int max_degree() const {
    int d = -1;
    for (const auto& [pq, c] : terms) d = std::max(d, pq.first + pq.second);
    return d;
  }

  /// Homogeneous part h_k (terms with p + q == k).
  UniMixedPoly part(int k) const {
    UniMixedPoly out{side, {}};
    for (const auto& [pq, c] : terms) {
      if (pq.first + pq.second == k) out.terms.emplace(pq, c);
    }
    return out;
  }
};

/// Homogeneous mixed univariate polynomial Σ_ν c_ν w^ν w̄^{d-ν}. The empty
/// coefficient map is the zero value.
class HomUniMixedPoly {
 public:
  HomUniMixedPoly() = default;

  HomUniMixedPoly(int degree, std::map<int, Complex> coeffs)
      : degree_(degree) {
    if (degree < 0) {
      throw Error(ErrorKind::NotHomogeneous, "negative degree");
    }
    for (const auto& [nu, c] : coeffs) {
      if (nu < 0 || nu > degree) {
        throw Error(ErrorKind::NotHomogeneous,
                    "exponent outside [0, degree] in homogeneous polynomial");
      }
      if (c != Complex{0.0, 0.0}) coeffs_.emplace(nu, c);
    }
  }

  int degree() const { return degree_; }
  const std::map<int, Complex>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Bi-degree (m, n) = (max ν, d - min ν).
  std::pair<int, int> bi_degree() const {
    if (coeffs_.empty()) return {0, 0};
    return {coeffs_.rbegin()->first, degree_ - coeffs_.begin()->first};
  }

  UniMixedPoly to_uni(Side side = Side::u) const {
    UniMixedPoly out{side, {}};
    for (const auto& [nu, c] : coeffs_) out.terms.emplace(std::pair{nu, degree_ - nu}, c);
    return out;
  }

  Complex operator()(Complex w) const { return to_uni()(w); }

  bool operator==(const HomUniMixedPoly&) const = default;

 private:
  int degree_ = 0;
  std::map<int, Complex> coeffs_;
};

/// Reads a univariate polynomial as homogeneous of the given degree; a zero
/// input yields the zero value of that degree.
inline HomUniMixedPoly to_homogeneous(const UniMixedPoly& h, int degree) {
  std::map<int, Complex> coeffs;
  for (const auto& [pq, c] : h.terms) {
    if (pq.first + pq.second != degree) {
      throw Error(ErrorKind::NotHomogeneous,
                  "term of degree " + std::to_string(pq.first + pq.second) +
                      " in polynomial expected homogeneous of degree " +
                      std::to_string(degree));
    }
    coeffs.emplace(pq.first, c);
  }
  return HomUniMixedPoly(degree, coeffs);
}

inline HomUniMixedPoly to_homogeneous(const UniMixedPoly& h) {
  return to_homogeneous(h, std::max(h.max_degree(), 0));
}

/// conj swaps w ↔ w̄ and conjugates coefficients.
inline HomUniMixedPoly conj(const HomUniMixedPoly& h) {
  std::map<int, Complex> coeffs;
  for (const auto& [nu, c] : h.coeffs()) coeffs.emplace(h.degree() - nu, std::conj(c));
  return HomUniMixedPoly(h.degree(), coeffs);
}

/// Product of two homogeneous polynomials (convolution of coefficient maps).
inline HomUniMixedPoly operator*(const HomUniMixedPoly& a, const HomUniMixedPoly& b) {
  std::map<int, Complex> coeffs;
  for (const auto& [na, ca] : a.coeffs()) {
    for (const auto& [nb, cb] : b.coeffs()) coeffs[na + nb] += ca * cb;
  }
  return HomUniMixedPoly(a.degree() + b.degree(), coeffs);
}

namespace detail {

inline UniMixedPoly collect(Side side,
                            const std::map<std::pair<int, int>, std::pair<Complex, double>>& acc,
                            double tol_zero) {
  UniMixedPoly out{side, {}};
  for (const auto& [pq, sum_and_scale] : acc) {
    const auto& [sum, scale] = sum_and_scale;
    if (std::abs(sum) < tol_zero * std::max(scale, 1.0)) continue;
    out.terms.emplace(pq, sum);
  }
  return out;
}

}  // namespace detail

/// f(u, ū, e^{it}, e^{-it}) as a polynomial in u.
inline UniMixedPoly specialize_t(const MixedPolynomial& p, double t,
                                 double tol_zero = Config{}.tol_zero) {
  std::map<std::pair<int, int>, std::pair<Complex, double>> acc;
  for (const auto& m : p.monomials()) {
    auto& [sum, scale] = acc[{m.nu1, m.mu1}];
    sum += m.coeff * std::polar(1.0, (m.nu2 - m.mu2) * t);
    scale += std::abs(m.coeff);
  }
  return detail::collect(Side::u, acc, tol_zero);
}

/// f(e^{iφ}, e^{-iφ}, v, v̄) as a polynomial in v.
inline UniMixedPoly specialize_phi(const MixedPolynomial& p, double phi,
                                   double tol_zero = Config{}.tol_zero) {
  std::map<std::pair<int, int>, std::pair<Complex, double>> acc;
  for (const auto& m : p.monomials()) {
    auto& [sum, scale] = acc[{m.nu2, m.mu2}];
    sum += m.coeff * std::polar(1.0, (m.nu1 - m.mu1) * phi);
    scale += std::abs(m.coeff);
  }
  return detail::collect(Side::v, acc, tol_zero);
}

/// (∂h/∂w (α), ∂h/∂w̄ (α)), term-wise.
inline std::pair<Complex, Complex> wirtinger_at(const UniMixedPoly& h, Complex alpha) {
  const Complex ab = std::conj(alpha);
  Complex dw{0.0, 0.0};
  Complex dwb{0.0, 0.0};
  for (const auto& [pq, c] : h.terms) {
    const auto [p, q] = pq;
    if (p > 0) dw += static_cast<double>(p) * c * ipow(alpha, p - 1) * ipow(ab, q);
    if (q > 0) dwb += static_cast<double>(q) * c * ipow(alpha, p) * ipow(ab, q - 1);
  }
  return {dw, dwb};
}

// ---------------------------------------------------------------------------
// Semiholomorphy

enum class Var : unsigned { u = 1, ubar = 2, v = 4, vbar = 8 };

/// Set of variables x for which p does not depend on the conjugate partner of
/// x (u-semiholomorphic means no ū, and so on).
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var x : vars) bits_ |= static_cast<unsigned>(x);
  }
  constexpr bool contains(Var x) const { return bits_ & static_cast<unsigned>(x); }
  constexpr void insert(Var x) { bits_ |= static_cast<unsigned>(x); }
  constexpr bool operator==(const VarSet&) const = default;

  std::string str() const {
    std::string out = "{";
    const std::pair<Var, const char*> names[] = {
        {Var::u, "u"}, {Var::ubar, "~u"}, {Var::v, "v"}, {Var::vbar, "~v"}};
    for (const auto& [x, name] : names) {
      if (!contains(x)) continue;
      if (out.size() > 1) out += ",";
      out += name;
    }
    return out + "}";
  }

 private:
  unsigned bits_ = 0;
};

inline VarSet semiholomorphic_kind(const MixedPolynomial& p) {
  bool no_mu1 = true, no_nu1 = true, no_mu2 = true, no_nu2 = true;
  for (const auto& m : p.monomials()) {
    no_mu1 = no_mu1 && m.mu1 == 0;
    no_nu1 = no_nu1 && m.nu1 == 0;
    no_mu2 = no_mu2 && m.mu2 == 0;
    no_nu2 = no_nu2 && m.nu2 == 0;
  }
  VarSet out;
  if (no_mu1) out.insert(Var::u);
  if (no_nu1) out.insert(Var::ubar);
  if (no_mu2) out.insert(Var::v);
  if (no_nu2) out.insert(Var::vbar);
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace detail {

/// Shortest fixed-notation decimal that reads back to the same double; the
/// polynomial grammar has no exponent syntax.
inline std::string format_decimal(double x) {
  char buf[512];
  auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

inline std::string var_power(const char* name, int k) {
  if (k == 0) return {};
  std::string s = name;
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

inline std::string monomial_vars(const MixedMonomial& m) {
  std::string s;
  for (const auto& piece : {var_power("u", m.nu1), var_power("~u", m.mu1),
                            var_power("v", m.nu2), var_power("~v", m.mu2)}) {
    if (piece.empty()) continue;
    if (!s.empty()) s += ' ';
    s += piece;
  }
  return s;
}

}  // namespace detail

/// Canonical text form accepted by parse(); parse(to_string(p)) == p.
inline std::string to_string(const MixedPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& m : p.monomials()) {
    const double re = m.coeff.real();
    const double im = m.coeff.imag();
    const std::string vars = detail::monomial_vars(m);
    bool negative = false;
    std::string body;
    if (im == 0.0) {
      negative = re < 0;
      const double mag = std::abs(re);
      if (first && negative) {
        body = "(-" + detail::format_decimal(mag) + ") " + vars;
      } else {
        body = (mag == 1.0 ? std::string{} : detail::format_decimal(mag) + " ") + vars;
      }
    } else if (re == 0.0) {
      negative = im < 0;
      const double mag = std::abs(im);
      const std::string num = mag == 1.0 ? std::string{} : detail::format_decimal(mag);
      if (first && negative) {
        body = "(0-" + num + "i) " + vars;
      } else {
        body = (num.empty() ? std::string{} : num + " ") + "i " + vars;
      }
    } else {
      const double mag = std::abs(im);
      body = "(" + std::string(re < 0 ? "-" : "") + detail::format_decimal(std::abs(re)) +
             (im < 0 ? "-" : "+") +
             (mag == 1.0 ? std::string{} : detail::format_decimal(mag)) + "i) " + vars;
    }
    if (first) {
      out = body;
    } else {
      out += (negative ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_MIXED_POLYNOMIAL_HPP
