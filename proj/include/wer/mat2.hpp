#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace wer {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Two-component complex vector (kets; also used for covector storage).
struct Vec2 {
  cplx a{0.0, 0.0};
  cplx b{0.0, 0.0};

  Vec2 operator*(cplx s) const { return {a * s, b * s}; }
  Vec2 operator+(const Vec2& o) const { return {a + o.a, b + o.b}; }
  Vec2 operator-(const Vec2& o) const { return {a - o.a, b - o.b}; }
  double norm2() const { return std::norm(a) + std::norm(b); }
  double norm() const { return std::sqrt(norm2()); }
};

/// Plain bilinear pairing l·r (row covector times column vector, no conjugation).
/// This is the biorthogonal inner product used throughout.
inline cplx pair(const Vec2& l, const Vec2& r) { return l.a * r.a + l.b * r.b; }

/// Hermitian inner product <x|y> = conj(x)·y.
inline cplx hdot(const Vec2& x, const Vec2& y) {
  return std::conj(x.a) * y.a + std::conj(x.b) * y.b;
}

/// 2x2 complex matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> m{};  // [ m00 m01 ; m10 m11 ]

  cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const cplx& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(1)}}; }
  static Mat2 zero() { return Mat2{}; }
  static Mat2 diag(cplx d0, cplx d1) { return Mat2{{d0, cplx(0), cplx(0), d1}}; }
  /// Outer product r·l (column times row); the biorthogonal projector when l·r = 1.
  static Mat2 outer(const Vec2& r, const Vec2& l) {
    return Mat2{{r.a * l.a, r.a * l.b, r.b * l.a, r.b * l.b}};
  }

  Mat2 operator+(const Mat2& o) const {
    return Mat2{{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
  }
  Mat2 operator-(const Mat2& o) const {
    return Mat2{{m[0] - o.m[0], m[1] - o.m[1], m[2] - o.m[2], m[3] - o.m[3]}};
  }
  Mat2 operator*(const Mat2& o) const {
    return Mat2{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                 m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
  }
  Mat2 operator*(cplx s) const { return Mat2{{m[0] * s, m[1] * s, m[2] * s, m[3] * s}}; }
  Vec2 operator*(const Vec2& v) const {
    return {m[0] * v.a + m[1] * v.b, m[2] * v.a + m[3] * v.b};
  }

  cplx trace() const { return m[0] + m[3]; }
  cplx det() const { return m[0] * m[3] - m[1] * m[2]; }
  Mat2 adjoint() const {
    return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }
  Mat2 transpose() const { return Mat2{{m[0], m[2], m[1], m[3]}}; }

  double frobenius_norm() const {
    return std::sqrt(std::norm(m[0]) + std::norm(m[1]) + std::norm(m[2]) + std::norm(m[3]));
  }
  double max_abs() const {
    double v = 0.0;
    for (const auto& e : m) v = std::max(v, std::abs(e));
    return v;
  }
};

inline Mat2 operator*(cplx s, const Mat2& a) { return a * s; }
inline double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

/// Larger/smaller singular values via the closed form on T†T eigenvalues.
inline std::array<double, 2> singular_values(const Mat2& t) {
  const double f = std::norm(t.m[0]) + std::norm(t.m[1]) + std::norm(t.m[2]) + std::norm(t.m[3]);
  const double d = std::abs(t.det());
  const double disc = std::max(0.0, f * f - 4.0 * d * d);
  const double s = std::sqrt(disc);
  const double hi = std::sqrt(0.5 * (f + s));
  const double lo2 = 0.5 * (f - s);
  return {hi, std::sqrt(std::max(0.0, lo2))};
}

/// Pauli matrices in the |H>,|V> basis.
inline Mat2 sigma_x() { return Mat2{{cplx(0), cplx(1), cplx(1), cplx(0)}}; }
inline Mat2 sigma_y() { return Mat2{{cplx(0), cplx(0, -1), cplx(0, 1), cplx(0)}}; }
inline Mat2 sigma_z() { return Mat2{{cplx(1), cplx(0), cplx(0), cplx(-1)}}; }

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  return a;
}

/// Circular distance between two phases (result in [0, pi]).
inline double phase_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

}  // namespace wer
