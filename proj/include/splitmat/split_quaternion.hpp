#pragma once

// Split-quaternions p = p0 + i*p1 + j*p2 + k*p3 with i*i = -1 and
// j*j = k*k = i*j*k = +1.  These relations force the full table
//   ij = k,  ji = -k,  jk = -i,  kj = i,  ki = j,  ik = -j,
// which is hard-coded in operator* below and validated in the tests
// against products of the 2x2 complex representation.

#include <cmath>
#include <complex>
#include <ostream>

#include <Eigen/Core>

#include "splitmat/split_complex.hpp"

namespace splitmat {

template <typename T>
struct SplitQuaternion {
  T p0{};  // coefficient of 1
  T p1{};  // coefficient of i
  T p2{};  // coefficient of j
  T p3{};  // coefficient of k

  constexpr SplitQuaternion() = default;
  constexpr SplitQuaternion(T a, T b, T c, T d) : p0(a), p1(b), p2(c), p3(d) {}
  // Embeds a real scalar as p0 + 0i + 0j + 0k.
  constexpr explicit SplitQuaternion(T a) : p0(a) {}
  // Embeds x + j*y in the subalgebra spanned by {1, j}.
  constexpr explicit SplitQuaternion(const SplitComplex<T>& z) : p0(z.x), p2(z.y) {}

  constexpr SplitQuaternion& operator+=(const SplitQuaternion& o) {
    p0 += o.p0;
    p1 += o.p1;
    p2 += o.p2;
    p3 += o.p3;
    return *this;
  }
  constexpr SplitQuaternion& operator-=(const SplitQuaternion& o) {
    p0 -= o.p0;
    p1 -= o.p1;
    p2 -= o.p2;
    p3 -= o.p3;
    return *this;
  }
  constexpr SplitQuaternion& operator*=(T s) {
    p0 *= s;
    p1 *= s;
    p2 *= s;
    p3 *= s;
    return *this;
  }
};

template <typename T>
constexpr SplitQuaternion<T> operator+(SplitQuaternion<T> a, const SplitQuaternion<T>& b) {
  return a += b;
}

template <typename T>
constexpr SplitQuaternion<T> operator-(SplitQuaternion<T> a, const SplitQuaternion<T>& b) {
  return a -= b;
}

template <typename T>
constexpr SplitQuaternion<T> operator-(const SplitQuaternion<T>& a) {
  return {-a.p0, -a.p1, -a.p2, -a.p3};
}

// Non-commutative product; expand (p0 + p1 i + p2 j + p3 k)(q0 + q1 i + q2 j + q3 k)
// and collect with the table above.
template <typename T>
constexpr SplitQuaternion<T> operator*(const SplitQuaternion<T>& p, const SplitQuaternion<T>& q) {
  return {p.p0 * q.p0 - p.p1 * q.p1 + p.p2 * q.p2 + p.p3 * q.p3,
          p.p0 * q.p1 + p.p1 * q.p0 - p.p2 * q.p3 + p.p3 * q.p2,
          p.p0 * q.p2 - p.p1 * q.p3 + p.p2 * q.p0 + p.p3 * q.p1,
          p.p0 * q.p3 + p.p1 * q.p2 - p.p2 * q.p1 + p.p3 * q.p0};
}

template <typename T>
constexpr SplitQuaternion<T> operator*(T s, SplitQuaternion<T> a) {
  return a *= s;
}

template <typename T>
constexpr SplitQuaternion<T> operator*(SplitQuaternion<T> a, T s) {
  return a *= s;
}

// Conjugate p0 - i*p1 - j*p2 - k*p3.
template <typename T>
constexpr SplitQuaternion<T> conj(const SplitQuaternion<T>& p) {
  return {p.p0, -p.p1, -p.p2, -p.p3};
}

// Conjugates the i-component only; together with matrix transposition this
// builds the adjoint under which Gaussian weights become positive definite.
template <typename T>
constexpr SplitQuaternion<T> conj_i(const SplitQuaternion<T>& p) {
  return {p.p0, -p.p1, p.p2, p.p3};
}

// Indefinite squared norm conj(p) * p = p0^2 + p1^2 - p2^2 - p3^2.
template <typename T>
constexpr T norm_sq(const SplitQuaternion<T>& p) {
  return p.p0 * p.p0 + p.p1 * p.p1 - p.p2 * p.p2 - p.p3 * p.p3;
}

template <typename T>
constexpr T scalar_part(const SplitQuaternion<T>& p) {
  return p.p0;
}

// Sum of squares of all four components (positive definite, unlike norm_sq).
template <typename T>
constexpr T component_sum_sq(const SplitQuaternion<T>& p) {
  return p.p0 * p.p0 + p.p1 * p.p1 + p.p2 * p.p2 + p.p3 * p.p3;
}

// Faithful representation
//   p -> [[p0 + i p1, p2 + i p3], [p2 - i p3, p0 - i p1]];
// multiplicative, with det = norm_sq and trace = 2 p0.
template <typename T>
Eigen::Matrix<std::complex<T>, 2, 2> complex_rep(const SplitQuaternion<T>& p) {
  Eigen::Matrix<std::complex<T>, 2, 2> m;
  m << std::complex<T>(p.p0, p.p1), std::complex<T>(p.p2, p.p3),
       std::complex<T>(p.p2, -p.p3), std::complex<T>(p.p0, -p.p1);
  return m;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const SplitQuaternion<T>& p) {
  return os << "(" << p.p0 << " + " << p.p1 << "i + " << p.p2 << "j + " << p.p3 << "k)";
}

using SplitQuaterniond = SplitQuaternion<double>;

}  // namespace splitmat
