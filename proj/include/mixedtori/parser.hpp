#ifndef MIXEDTORI_PARSER_HPP
#define MIXEDTORI_PARSER_HPP

// Recursive-descent reader for mixed polynomials in plain text.
//
//   poly   := ws [sign] term (ws ('+'|'-') ws term)* ws
//   term   := factor (ws '*'? ws factor)*
//   factor := coeff | var power?
//   var    := 'u' | 'v' | '~u' | '~v' | 'ub' | 'vb'
//   power  := '^' uint
//   coeff  := number | 'i' | '(' signedNumber (('+'|'-') number? 'i')? ')'
//   number := uint ('.' digits)?
//
// Juxtaposition multiplies. A leading sign on the first term is accepted, as
// are "(2i)" and "(-i)" inside parentheses.

#include <cctype>
#include <charconv>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "mixedtori/error.hpp"
#include "mixedtori/mixed_polynomial.hpp"

namespace mixedtori {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MixedPolynomial run() {
    std::vector<MixedMonomial> terms;
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1.0 : 1.0;
      skip_ws();
    }
    terms.push_back(term(sign));
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("'+', '-' or end of input");
      get();
      skip_ws();
      terms.push_back(term(c == '-' ? -1.0 : 1.0));
    }
    return MixedPolynomial::from_terms(terms);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, peek()) + "'";
    Error e(ErrorKind::SyntaxError, "syntax error at position " + std::to_string(pos_) +
                                        ": expected " + expected + ", found " + found);
    e.position = pos_;
    e.expected = expected;
    throw e;
  }

  bool starts_factor() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'i' ||
           c == 'u' || c == 'v' || c == '~';
  }

  MixedMonomial term(double sign) {
    MixedMonomial m{Complex{sign, 0.0}};
    factor(m);
    for (;;) {
      const std::size_t save = pos_;
      skip_ws();
      if (peek() == '*') {
        get();
        skip_ws();
        if (!starts_factor()) fail("factor after '*'");
        factor(m);
        continue;
      }
      if (starts_factor()) {
        factor(m);
        continue;
      }
      pos_ = save;
      return m;
    }
  }

  void factor(MixedMonomial& m) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      m.coeff *= number();
    } else if (c == 'i') {
      get();
      m.coeff *= Complex{0.0, 1.0};
    } else if (c == '(') {
      m.coeff *= paren_coeff();
    } else if (c == 'u' || c == 'v' || c == '~') {
      variable(m);
    } else {
      fail("number, 'i', '(', or variable");
    }
  }

  void variable(MixedMonomial& m) {
    bool conjugate = false;
    if (peek() == '~') {
      get();
      conjugate = true;
    }
    const char name = peek();
    if (name != 'u' && name != 'v') fail("'u' or 'v'");
    get();
    if (!conjugate && peek() == 'b') {
      get();
      conjugate = true;
    }
    int k = 1;
    const std::size_t save = pos_;
    skip_ws();
    if (peek() == '^') {
      get();
      skip_ws();
      if (peek() == '-') {
        Error e(ErrorKind::NegativeExponent,
                "negative exponent at position " + std::to_string(pos_));
        e.position = pos_;
        throw e;
      }
      k = uint_value();
    } else {
      pos_ = save;
    }
    int& slot = name == 'u' ? (conjugate ? m.mu1 : m.nu1) : (conjugate ? m.mu2 : m.nu2);
    slot += k;
  }

  int uint_value() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("unsigned integer exponent");
    int value = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{} || value > 100000) {
      pos_ = start;
      fail("exponent no larger than 100000");
    }
    return value;
  }

  double number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("number");
    if (peek() == '.') {
      ++pos_;
      const std::size_t frac = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == frac) fail("digits after '.'");
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value,
                               std::chars_format::fixed);
    if (res.ec != std::errc{}) {
      pos_ = start;
      fail("representable number");
    }
    return value;
  }

  // '(' [sign] (number ['i'] | 'i') [ ('+'|'-') [number] 'i' ] ')'
  Complex paren_coeff() {
    get();  // '('
    skip_ws();
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = get() == '-' ? -1.0 : 1.0;
      skip_ws();
    }
    Complex value;
    if (peek() == 'i') {
      get();
      value = Complex{0.0, sign};
    } else {
      const double first = sign * number();
      skip_ws();
      if (peek() == 'i') {
        get();
        value = Complex{0.0, first};
      } else {
        value = Complex{first, 0.0};
        if (peek() == '+' || peek() == '-') {
          const double isign = get() == '-' ? -1.0 : 1.0;
          skip_ws();
          double mag = 1.0;
          if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mag = number();
            skip_ws();
          }
          if (peek() != 'i') fail("'i'");
          get();
          value += Complex{0.0, isign * mag};
        }
      }
    }
    skip_ws();
    if (peek() != ')') fail("')'");
    get();
    return value;
  }
};

}  // namespace detail

/// Parses the textual form of a mixed polynomial. Throws Error with kind
/// SyntaxError (position and expected token filled in), NonzeroConstantTerm
/// or NegativeExponent.
inline MixedPolynomial parse(std::string_view text) {
  return detail::PolyParser(text).run();
}

}  // namespace mixedtori

#endif  // MIXEDTORI_PARSER_HPP
