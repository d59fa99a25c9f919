#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "spectracert/errors.hpp"
#include "spectracert/scalar.hpp"

namespace spectracert {

template <Scalar S>
class Vector {
 public:
  explicit Vector(std::vector<S> entries) : e_(std::move(entries)) {
    if (e_.empty()) throw DimensionMismatch("vector must have length >= 1");
  }
  Vector(std::initializer_list<S> init) : Vector(std::vector<S>(init)) {}

  static Vector zero(std::size_t n) { return Vector(std::vector<S>(n, S(0))); }
  static Vector unit(std::size_t n, std::size_t i) {
    Vector v = zero(n);
    v[i] = S(1);
    return v;
  }

  std::size_t size() const { return e_.size(); }
  const S& operator[](std::size_t i) const { return e_[i]; }
  S& operator[](std::size_t i) { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const {
    for (const S& x : e_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  friend Vector operator*(const S& c, const Vector& v) {
    std::vector<S> out;
    out.reserve(v.size());
    for (const S& x : v.e_) out.push_back(c * x);
    return Vector(std::move(out));
  }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<S> e_;
};

template <Scalar S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols)
      : r_(rows), c_(cols), e_(rows * cols, S(0)) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("empty matrix");
  }
  explicit Matrix(const std::vector<std::vector<S>>& rows)
      : Matrix(rows.size(), rows.empty() ? 0 : rows.front().size()) {
    for (std::size_t i = 0; i < r_; ++i) {
      if (rows[i].size() != c_) throw DimensionMismatch("ragged matrix rows");
      for (std::size_t j = 0; j < c_; ++j) (*this)(i, j) = rows[i][j];
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  const S& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }
  S& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Transpose in the rational field, conjugate transpose over the Gaussians.
  Matrix conj_transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = conj((*this)(i, j));
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const S& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_, c_;
  std::vector<S> e_;
};

// Square matrix with the (conjugate-)symmetry invariant a_ij = conj(a_ji),
// which over the Gaussians also forces a real diagonal.
template <Scalar S>
class SymMatrix {
 public:
  explicit SymMatrix(Matrix<S> m) : m_(std::move(m)) { validate(); }
  explicit SymMatrix(const std::vector<std::vector<S>>& rows) : m_(rows) {
    validate();
  }

  static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix<S>::identity(n)); }
  static SymMatrix zero(std::size_t n) { return SymMatrix(Matrix<S>(n, n)); }
  static SymMatrix diagonal(const std::vector<Rational>& d) {
    Matrix<S> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = S(d[i]);
    return SymMatrix(std::move(m));
  }

  std::size_t n() const { return m_.rows(); }
  const S& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const Matrix<S>& matrix() const { return m_; }

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  void validate() const {
    if (m_.rows() != m_.cols()) throw DimensionMismatch("matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i; j < m_.cols(); ++j)
        if (m_(i, j) != conj(m_(j, i))) throw SymmetryError(i + 1, j + 1);
  }

  Matrix<S> m_;
};

// A - t*I, the shift at the heart of eigenvalue counting.
template <Scalar S>
SymMatrix<S> shift_diag(const SymMatrix<S>& a, const Rational& t) {
  Matrix<S> m = a.matrix();
  for (std::size_t i = 0; i < a.n(); ++i) m(i, i) -= S(t);
  return SymMatrix<S>(std::move(m));
}

// (below, at) counts relative to a probe value t.
struct EigenCount {
  int below = 0;
  int at = 0;
  friend bool operator==(const EigenCount&, const EigenCount&) = default;
};

template <Scalar S>
S inner_product(const Vector<S>& v, const Vector<S>& w) {
  if (v.size() != w.size()) throw DimensionMismatch("vector length mismatch");
  S acc(0);
  for (std::size_t i = 0; i < v.size(); ++i) acc += conj(v[i]) * w[i];
  return acc;
}

template <Scalar S>
Rational norm_sq(const Vector<S>& v) {
  Rational acc;
  for (const S& x : v) acc += abs_sq(x);
  return acc;
}

// max |x_i| over the rationals; max |x_i|^2 over the Gaussians, where the
// modulus itself would be irrational.
template <Scalar S>
Rational max_abs(const Vector<S>& v) {
  Rational best;
  for (const S& x : v) {
    Rational m = is_complex_v<S> ? abs_sq(x) : real_part(x).abs();
    if (m > best) best = m;
  }
  return best;
}

template <Scalar S>
Rational max_abs(const Matrix<S>& a) {
  Rational best;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational m = is_complex_v<S> ? abs_sq(a(i, j)) : real_part(a(i, j)).abs();
      if (m > best) best = m;
    }
  return best;
}

template <Scalar S>
Rational max_abs(const SymMatrix<S>& a) {
  return max_abs(a.matrix());
}

// Largest rational modulus bound over the entries; equals max_abs over the
// rationals and max(|re|+|im|) over the Gaussians.
template <Scalar S>
Rational max_entry_bound(const Matrix<S>& a) {
  Rational best;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Rational m = entry_bound(a(i, j));
      if (m > best) best = m;
    }
  return best;
}

template <Scalar S>
Vector<S> mat_vec(const Matrix<S>& a, const Vector<S>& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix/vector shape mismatch");
  std::vector<S> out(a.rows(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
  return Vector<S>(std::move(out));
}

template <Scalar S>
Vector<S> mat_vec(const SymMatrix<S>& a, const Vector<S>& v) {
  return mat_vec(a.matrix(), v);
}

// The norm inequality in squared form: ||A.v||^2 <= n^3 |A|inf^2 ||v||^2.
// This is a theorem, so the result is true for every valid input; it is
// exposed so tests can exercise it in exact arithmetic.
template <Scalar S>
bool check_dagger(const SymMatrix<S>& a, const Vector<S>& v) {
  if (a.n() != v.size()) throw DimensionMismatch("matrix/vector shape mismatch");
  Rational lhs = norm_sq(mat_vec(a, v));
  Rational n(static_cast<long>(a.n()));
  Rational inf_sq = is_complex_v<S> ? max_abs(a) : max_abs(a) * max_abs(a);
  Rational rhs = n * n * n * inf_sq * norm_sq(v);
  return lhs <= rhs;
}

}  // namespace spectracert
