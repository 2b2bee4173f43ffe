#pragma once

// Scalar arithmetic for the three real division rings R, C, H under one
// generic interface, plus the faithful real-matrix embedding used as the
// cross-check oracle for everything quaternionic.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace starlat {

enum class Ring : std::uint8_t { R, C, H };

inline constexpr int real_dim(Ring k) {
  return k == Ring::R ? 1 : k == Ring::C ? 2 : 4;
}

inline const char* ring_name(Ring k) {
  switch (k) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    default: return "H";
  }
}

inline Ring ring_from_name(const std::string& s) {
  if (s == "R" || s == "r") return Ring::R;
  if (s == "C" || s == "c") return Ring::C;
  if (s == "H" || s == "h") return Ring::H;
  throw std::invalid_argument("unknown ring '" + s + "' (expected R, C or H)");
}

// Tag + real dimension, kept together so callers can't mix them up.
struct ScalarRing {
  Ring tag = Ring::R;
  int dim() const { return real_dim(tag); }
  bool operator==(const ScalarRing&) const = default;
};

struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  // real scalars embed on the w axis
  Quaternion(double w_) : w(w_) {}

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& q) {
    w += q.w; x += q.x; y += q.y; z += q.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& q) {
    w -= q.w; x -= q.x; y -= q.y; z -= q.z;
    return *this;
  }
};

inline Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
inline Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }

// Hamilton product; bilinear over R, associative, not commutative.
inline Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

inline Quaternion operator*(double a, const Quaternion& q) { return {a * q.w, a * q.x, a * q.y, a * q.z}; }
inline Quaternion operator*(const Quaternion& q, double a) { return a * q; }

inline Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
inline double abs2(const Quaternion& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }
inline double abs(const Quaternion& q) { return std::sqrt(abs2(q)); }
inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }

using Complex = std::complex<double>;

// Uniform scalar interface; all matrix code below is written once against it.
template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Ring ring = Ring::R;
  static constexpr int dim = 1;
  static double conjugate(double s) { return s; }
  static double real_part(double s) { return s; }
  static double abs2(double s) { return s * s; }
  static double unit(int t) {
    if (t != 0) throw std::out_of_range("real unit index");
    return 1.0;
  }
  static double from_coeffs(const double* c) { return c[0]; }
  static void to_coeffs(double s, double* c) { c[0] = s; }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr Ring ring = Ring::C;
  static constexpr int dim = 2;
  static Complex conjugate(const Complex& s) { return std::conj(s); }
  static double real_part(const Complex& s) { return s.real(); }
  static double abs2(const Complex& s) { return std::norm(s); }
  static Complex unit(int t) {
    switch (t) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      default: throw std::out_of_range("complex unit index");
    }
  }
  static Complex from_coeffs(const double* c) { return {c[0], c[1]}; }
  static void to_coeffs(const Complex& s, double* c) {
    c[0] = s.real();
    c[1] = s.imag();
  }
};

template <>
struct ScalarTraits<Quaternion> {
  static constexpr Ring ring = Ring::H;
  static constexpr int dim = 4;
  static Quaternion conjugate(const Quaternion& s) { return conj(s); }
  static double real_part(const Quaternion& s) { return s.w; }
  static double abs2(const Quaternion& s) { return starlat::abs2(s); }
  static Quaternion unit(int t) {
    switch (t) {
      case 0: return {1, 0, 0, 0};
      case 1: return {0, 1, 0, 0};
      case 2: return {0, 0, 1, 0};
      case 3: return {0, 0, 0, 1};
      default: throw std::out_of_range("quaternion unit index");
    }
  }
  static Quaternion from_coeffs(const double* c) { return {c[0], c[1], c[2], c[3]}; }
  static void to_coeffs(const Quaternion& s, double* c) {
    c[0] = s.w; c[1] = s.x; c[2] = s.y; c[3] = s.z;
  }
};

// Left-multiplication matrix of s on K viewed as R^d: an injective real-algebra
// homomorphism with conj(s) mapping to the transpose.
template <class K>
Eigen::MatrixXd embed_real(const K& s) {
  using T = ScalarTraits<K>;
  constexpr int d = T::dim;
  Eigen::MatrixXd m(d, d);
  for (int t = 0; t < d; ++t) {
    K col = s * T::unit(t);
    std::array<double, 4> c{};
    T::to_coeffs(col, c.data());
    for (int r = 0; r < d; ++r) m(r, t) = c[r];
  }
  return m;
}

// Product of two ring basis units as (index, sign); single-term in R, C and H.
inline std::pair<int, double> unit_product(Ring k, int r, int s) {
  switch (k) {
    case Ring::R:
      return {0, 1.0};
    case Ring::C: {
      // basis 1, i
      static constexpr int idx[2][2] = {{0, 1}, {1, 0}};
      static constexpr double sgn[2][2] = {{1, 1}, {1, -1}};
      return {idx[r][s], sgn[r][s]};
    }
    default: {
      // basis 1, i, j, k
      static constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static constexpr double sgn[4][4] = {
          {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
      return {idx[r][s], sgn[r][s]};
    }
  }
}

// conj(u_t) = unit_conj_sign(k, t) * u_t for every ring basis unit.
inline double unit_conj_sign(Ring, int t) { return t == 0 ? 1.0 : -1.0; }

}  // namespace starlat
