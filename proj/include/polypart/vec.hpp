#ifndef POLYPART_VEC_HPP
#define POLYPART_VEC_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>

namespace polypart {

// Point / direction in R^2 or R^3. 2D data keeps z == 0; the ambient
// dimension is carried by the containing object.
struct Vec {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr Vec() = default;
  constexpr Vec(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  Vec operator+(const Vec& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec operator-(const Vec& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec operator-() const { return {-x, -y, -z}; }
  Vec operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec& operator+=(const Vec& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec& operator-=(const Vec& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

inline double dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec cross(const Vec& a, const Vec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec& v) { return dot(v, v); }
inline double norm(const Vec& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }
inline Vec normalized(const Vec& v) { return v / norm(v); }
// counterclockwise quarter turn in the plane
inline Vec perp2(const Vec& v) { return {-v.y, v.x, 0.0}; }
inline double cross2(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

// Row-major 3x3 matrix; 2D isometries embed in the upper-left block with
// m[2][2] = 1.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

  static Mat3 identity() { return Mat3{}; }

  std::array<double, 3>& operator[](int i) { return m[i]; }
  const std::array<double, 3>& operator[](int i) const { return m[i]; }

  Vec apply(const Vec& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Vec apply_transposed(const Vec& v) const {
    return {m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
            m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
            m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z};
  }
  Mat3 transposed() const {
    Mat3 t;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) t.m[i][j] = m[j][i];
    return t;
  }
  Mat3 mul(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }
  double det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
};

// rotation taking unit vector `from` to unit vector `to` (2D: in-plane turn;
// 3D: rotation about from x to)
Mat3 rotation_between(const Vec& from, const Vec& to, int dim);

// planar rotation by angle (2D helper)
inline Mat3 rotation2(double angle) {
  Mat3 r;
  const double c = std::cos(angle), s = std::sin(angle);
  r[0][0] = c; r[0][1] = -s; r[1][0] = s; r[1][1] = c;
  return r;
}

struct BBox {
  Vec lo, hi;
  void expand(const Vec& p) {
    lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
  }
  void inflate(double t) { lo -= Vec{t, t, t}; hi += Vec{t, t, t}; }
  bool contains(const Vec& p, double tol = 0.0) const {
    return p.x >= lo.x - tol && p.x <= hi.x + tol && p.y >= lo.y - tol &&
           p.y <= hi.y + tol && p.z >= lo.z - tol && p.z <= hi.z + tol;
  }
  static BBox empty() {
    const double inf = 1e300;
    return {{inf, inf, inf}, {-inf, -inf, -inf}};
  }
};

std::ostream& operator<<(std::ostream& os, const Vec& v);

}  // namespace polypart

#endif
