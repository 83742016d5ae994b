#ifndef MIXEDTORI_ANALYSIS_HPP
#define MIXEDTORI_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "mixedtori/config.hpp"
#include "mixedtori/criteria.hpp"
#include "mixedtori/error.hpp"
#include "mixedtori/newton.hpp"
#include "mixedtori/parser.hpp"
#include "mixedtori/torus_check.hpp"
#include "mixedtori/winding.hpp"

namespace mixedtori {

/// Error captured during an analysis, with whatever context the failing
/// stage attached.
struct ErrorRecord {
  ErrorKind kind = ErrorKind::SyntaxError;
  std::string message;
  std::optional<std::size_t> position;
  std::string expected;
  std::optional<int> vertex;
  std::optional<double> angle;
  std::string side;

  static ErrorRecord from(const Error& e) {
    return {e.kind(), e.what(), e.position, e.expected, e.vertex, e.angle, e.side};
  }
};

/// Everything computed for one input polynomial. Later stages are empty when
/// an earlier one failed; `error` then says why.
struct Analysis {
  std::string input;
  Config cfg;
  std::optional<MixedPolynomial> poly;
  PointSet support_points;
  std::optional<NewtonBoundary> boundary;
  std::optional<HypothesisReport> hypotheses;
  std::optional<MultiplicityTable> table;
  std::optional<WindingProfile> profile;
  std::optional<Verdict> verdict;
  std::optional<ErrorRecord> error;
};

inline bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError:
    case ErrorKind::NonzeroConstantTerm:
    case ErrorKind::NegativeExponent:
    case ErrorKind::EmptySupport:
    case ErrorKind::ZeroPolynomial:
    case ErrorKind::NotConvenient:
      return true;
    default:
      return false;
  }
}

/// 0 on success, 1 for input errors, 2 for hypothesis violations (including
/// a vertex face function with a witnessed zero on the unit torus) and for
/// numerical failures of the analysis itself.
inline int exit_code(const Analysis& a) {
  if (a.error) return is_input_error(a.error->kind) ? 1 : 2;
  if (a.hypotheses) {
    for (const auto& vc : a.hypotheses->vertices) {
      if (vc.status == VertexStatus::violated && vc.witness) return 2;
    }
  }
  return 0;
}

/// Parse, build the Newton boundary, check hypotheses, tabulate signed
/// multiplicities and evaluate every criterion.
inline Analysis analyze(const std::string& text, const Config& cfg = {}) {
  Analysis a;
  a.input = text;
  a.cfg = cfg;
  try {
    a.poly = parse(text);
    a.support_points = support(*a.poly);
    a.boundary = newton_boundary(a.support_points);
    if (!is_convenient(*a.boundary)) {
      throw Error(ErrorKind::NotConvenient, "Newton boundary does not meet both coordinate axes");
    }
    a.hypotheses = check_gamma_nice(*a.poly, *a.boundary, cfg);
    a.table = multiplicity_table(*a.poly, *a.boundary, cfg);
    a.profile = winding_profile(*a.table);

    std::vector<CriterionOutcome> outcomes;
    outcomes.push_back(fast_criterion(*a.table));
    for (auto& o : general_criterion(*a.table, *a.profile)) outcomes.push_back(std::move(o));
    outcomes.push_back(count_criterion(*a.profile));
    a.verdict = assemble_verdict(*a.table, *a.profile, std::move(outcomes), *a.hypotheses);
  } catch (const Error& e) {
    a.error = ErrorRecord::from(e);
  }
  return a;
}

}  // namespace mixedtori

#endif  // MIXEDTORI_ANALYSIS_HPP
