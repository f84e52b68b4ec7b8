#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace qw {

using cplx = std::complex<double>;

// Two-component coin-space amplitude (up, down).
using Spinor = std::array<cplx, 2>;

inline cplx dot(const Spinor& bra, const Spinor& ket) {
  return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

inline double norm2(const Spinor& s) { return std::norm(s[0]) + std::norm(s[1]); }

inline Spinor normalized(const Spinor& s) {
  const double n = std::sqrt(norm2(s));
  return {s[0] / n, s[1] / n};
}

// Dense 2x2 complex matrix, enough linear algebra for coin-space work.
struct Mat2 {
  cplx a11{0.0}, a12{0.0}, a21{0.0}, a22{0.0};

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  static Mat2 diag(cplx d1, cplx d2) { return {d1, 0.0, 0.0, d2}; }

  Mat2 operator*(const Mat2& o) const {
    return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22,
            a21 * o.a11 + a22 * o.a21, a21 * o.a12 + a22 * o.a22};
  }

  Mat2 operator+(const Mat2& o) const {
    return {a11 + o.a11, a12 + o.a12, a21 + o.a21, a22 + o.a22};
  }

  Mat2 operator-(const Mat2& o) const {
    return {a11 - o.a11, a12 - o.a12, a21 - o.a21, a22 - o.a22};
  }

  Mat2 operator*(cplx s) const { return {a11 * s, a12 * s, a21 * s, a22 * s}; }

  Spinor apply(const Spinor& v) const {
    return {a11 * v[0] + a12 * v[1], a21 * v[0] + a22 * v[1]};
  }

  Mat2 adjoint() const {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }

  cplx trace() const { return a11 + a22; }

  cplx det() const { return a11 * a22 - a12 * a21; }

  double max_abs() const {
    return std::max(std::max(std::abs(a11), std::abs(a12)),
                    std::max(std::abs(a21), std::abs(a22)));
  }

  bool is_unitary(double tol = 1e-12) const {
    const Mat2 g = adjoint() * (*this);
    return (g - identity()).max_abs() <= tol;
  }
};

inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

}  // namespace qw
