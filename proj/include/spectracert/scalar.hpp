#pragma once

#include <concepts>
#include <string_view>

#include "spectracert/gaussian.hpp"
#include "spectracert/rational.hpp"

namespace spectracert {

// The two exact scalar fields everything downstream is written against.
template <class S>
concept Scalar =
    std::same_as<S, Rational> || std::same_as<S, GaussianRational>;

template <Scalar S>
inline constexpr bool is_complex_v = std::same_as<S, GaussianRational>;

inline const Rational& conj(const Rational& x) { return x; }
inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

inline Rational abs_sq(const Rational& x) { return x * x; }
inline Rational abs_sq(const GaussianRational& x) { return x.abs_sq(); }

inline const Rational& real_part(const Rational& x) { return x; }
inline const Rational& real_part(const GaussianRational& x) { return x.re(); }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const GaussianRational& x) { return x.is_real(); }

// Rational upper bound on the modulus: exact |x| for rationals,
// |re| + |im| for Gaussian rationals (the modulus itself is irrational).
inline Rational entry_bound(const Rational& x) { return x.abs(); }
inline Rational entry_bound(const GaussianRational& x) {
  return x.re().abs() + x.im().abs();
}

template <Scalar S>
S scalar_parse(std::string_view text) {
  if constexpr (is_complex_v<S>) {
    return GaussianRational::parse(text);
  } else {
    return Rational::parse(text);
  }
}

template <Scalar S>
std::string scalar_str(const S& x) {
  return x.str();
}

}  // namespace spectracert
