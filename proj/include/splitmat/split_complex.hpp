#pragma once

// Split-complex numbers z = x + j*y with j*j = +1.  The indefinite norm
// x^2 - y^2 can be positive, zero, or negative; nonzero elements with
// norm_sq == 0 are zero divisors, so there is no general division.

#include <cmath>
#include <ostream>

#include <Eigen/Core>

namespace splitmat {

template <typename T>
struct SplitComplex {
  T x{};  // coefficient of 1
  T y{};  // coefficient of j

  constexpr SplitComplex() = default;
  constexpr SplitComplex(T x_, T y_) : x(x_), y(y_) {}

  constexpr SplitComplex& operator+=(const SplitComplex& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr SplitComplex& operator-=(const SplitComplex& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr SplitComplex& operator*=(T s) {
    x *= s;
    y *= s;
    return *this;
  }
};

template <typename T>
constexpr SplitComplex<T> operator+(SplitComplex<T> a, const SplitComplex<T>& b) {
  return a += b;
}

template <typename T>
constexpr SplitComplex<T> operator-(SplitComplex<T> a, const SplitComplex<T>& b) {
  return a -= b;
}

template <typename T>
constexpr SplitComplex<T> operator-(const SplitComplex<T>& a) {
  return {-a.x, -a.y};
}

template <typename T>
constexpr SplitComplex<T> operator*(const SplitComplex<T>& a, const SplitComplex<T>& b) {
  return {a.x * b.x + a.y * b.y, a.x * b.y + a.y * b.x};
}

template <typename T>
constexpr SplitComplex<T> operator*(T s, SplitComplex<T> a) {
  return a *= s;
}

template <typename T>
constexpr SplitComplex<T> operator*(SplitComplex<T> a, T s) {
  return a *= s;
}

template <typename T>
constexpr SplitComplex<T> conj(const SplitComplex<T>& a) {
  return {a.x, -a.y};
}

// Indefinite squared norm z * conj(z) = x^2 - y^2.
template <typename T>
constexpr T norm_sq(const SplitComplex<T>& a) {
  return a.x * a.x - a.y * a.y;
}

// Faithful representation x + j*y -> [[x, y], [y, x]]; multiplicative,
// with trace/2 = x and det = norm_sq.
template <typename T>
Eigen::Matrix<T, 2, 2> real_rep(const SplitComplex<T>& a) {
  Eigen::Matrix<T, 2, 2> m;
  m << a.x, a.y, a.y, a.x;
  return m;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const SplitComplex<T>& a) {
  return os << "(" << a.x << " + " << a.y << "j)";
}

using SplitComplexd = SplitComplex<double>;

}  // namespace splitmat
