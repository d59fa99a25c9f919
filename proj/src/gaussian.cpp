#include "spectracert/gaussian.hpp"

#include <ostream>

namespace spectracert {

namespace {

// Parses one additive term: a rational, or a rational followed by 'i'.
struct Term {
  Rational value;
  bool imaginary;
};

Term parse_term(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty term in '" + std::string(whole) + "'");
  if (text.back() == 'i') {
    std::string_view body = text.substr(0, text.size() - 1);
    if (body.empty() || body == "+") return {Rational(1), true};
    if (body == "-") return {Rational(-1), true};
    return {Rational::parse(body), true};
  }
  return {Rational::parse(text), false};
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal");
  // Split at the first '+'/'-' that is not the leading sign; rational
  // literals contain signs only at the front, so this is unambiguous.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = 1; k < text.size(); ++k) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    Term t = parse_term(text, text);
    return t.imaginary ? GaussianRational(Rational(0), t.value)
                       : GaussianRational(t.value);
  }
  Term first = parse_term(text.substr(0, split), text);
  Term second = parse_term(text.substr(split), text);
  if (first.imaginary || !second.imaginary) {
    throw ParseError("complex literal must be 'a+bi' or 'a-bi', got '" +
                     std::string(text) + "'");
  }
  return {first.value, second.value};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  if (im_.sign() > 0) return re_.str() + "+" + im_.str() + "i";
  return re_.str() + "-" + im_.abs().str() + "i";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.str();
}

}  // namespace spectracert
