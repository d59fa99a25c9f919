#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "spectracert/errors.hpp"

namespace spectracert {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero stored as 0/1. Every operation returns a canonical value.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long num, long den) {
    if (den == 0) throw SpectraError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  Rational(mpz_class num, mpz_class den) {
    if (den == 0) throw SpectraError("zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
  }
  explicit Rational(const mpz_class& v) : q_(v) {}

  // Accepts "p" and "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw SpectraError("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& a) { return a.abs(); }

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace spectracert
