#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "spectracert/rational.hpp"

namespace spectracert {

// Complex number with rational real and imaginary parts. Conjugation is an
// involution and |z|^2 = re^2 + im^2 is a nonnegative Rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(Rational re) : re_(std::move(re)) {}
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  // Accepts "a", "bi", "a+bi", "a-bi" with rational a, b, plus "i" / "-i".
  static GaussianRational parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational abs_sq() const { return re_ * re_ + im_ * im_; }

  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw SpectraError("division by zero");
    Rational d = o.abs_sq();
    Rational re = (re_ * o.re_ + im_ * o.im_) / d;
    Rational im = (im_ * o.re_ - re_ * o.im_) / d;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    return a /= b;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace spectracert
