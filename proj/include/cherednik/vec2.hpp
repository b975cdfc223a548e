#pragma once

// Coordinates on a* and a for rank <= 2. Rank-1 systems use the first slot
// only; the second coordinate is identically zero.

#include <array>
#include <string>

#include "cherednik/scalars.hpp"

namespace cherednik {

using Vec2 = std::array<QuadExt, 2>;

inline QuadExt dot(const Vec2& y, const Vec2& x) { return y[0] * x[0] + y[1] * x[1]; }

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline Vec2 operator*(const QuadExt& c, const Vec2& a) { return {c * a[0], c * a[1]}; }

inline bool is_zero(const Vec2& v) { return v[0].is_zero() && v[1].is_zero(); }

// Row-major 2x2 matrix.
struct Mat2 {
  std::array<std::array<QuadExt, 2>, 2> m{};

  static Mat2 identity() {
    Mat2 r;
    r.m[0][0] = QuadExt(1);
    r.m[1][1] = QuadExt(1);
    return r;
  }

  const QuadExt& operator()(int i, int j) const { return m[i][j]; }
  QuadExt& operator()(int i, int j) { return m[i][j]; }

  Vec2 apply(const Vec2& v) const {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
  }

  Mat2 transpose() const {
    Mat2 t;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) t.m[i][j] = m[j][i];
    return t;
  }

  QuadExt trace() const { return m[0][0] + m[1][1]; }
  QuadExt det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    Mat2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }

  friend bool operator==(const Mat2& a, const Mat2& b) { return a.m == b.m; }
};

inline std::string vec_str(const Vec2& v, int rank) {
  return rank == 1 ? "(" + v[0].str() + ")" : "(" + v[0].str() + ", " + v[1].str() + ")";
}

}  // namespace cherednik
