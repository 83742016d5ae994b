#ifndef MIXEDTORI_ERROR_HPP
#define MIXEDTORI_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mixedtori {

enum class ErrorKind {
  SyntaxError,
  NonzeroConstantTerm,
  NegativeExponent,
  EmptySupport,
  ZeroPolynomial,
  NotHomogeneous,
  RootOnUnitCircle,
  RootFindingFailed,
  VanishesOnCircle,
  AliasingSuspected,
  NotARoot,
  IndeterminateSign,
  InconsistentAcrossAngles,
  NotConvenient,
  InvalidSpec,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::EmptySupport: return "EmptySupport";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::RootOnUnitCircle: return "RootOnUnitCircle";
    case ErrorKind::RootFindingFailed: return "RootFindingFailed";
    case ErrorKind::VanishesOnCircle: return "VanishesOnCircle";
    case ErrorKind::AliasingSuspected: return "AliasingSuspected";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::IndeterminateSign: return "IndeterminateSign";
    case ErrorKind::InconsistentAcrossAngles: return "InconsistentAcrossAngles";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

/// Errors that signal a violated analysis hypothesis rather than bad input.
inline bool is_hypothesis_violation(ErrorKind kind) {
  return kind == ErrorKind::RootOnUnitCircle ||
         kind == ErrorKind::InconsistentAcrossAngles;
}

/// Every failure in the library is reported through this type. Optional
/// context fields are filled in by whichever layer knows them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Parser context.
  std::optional<std::size_t> position;
  std::string expected;

  // Analysis context.
  std::optional<int> vertex;
  std::optional<double> angle;
  std::string side;  // "t" or "phi"

 private:
  ErrorKind kind_;
};

}  // namespace mixedtori

#endif  // MIXEDTORI_ERROR_HPP
