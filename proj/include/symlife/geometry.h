// Copyright 2026 The symlife Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Planar points, isometries of the Euclidean plane and the angular wedges
// V_m / V_m^- / V_m^+ used to describe rotationally symmetric layouts.

#ifndef SYMLIFE_GEOMETRY_H_
#define SYMLIFE_GEOMETRY_H_

#include <numbers>

namespace symlife {

// Absolute-plus-relative tolerance for geometric comparisons.
inline constexpr double kGeoEps = 1e-9;

// Orthogonality tolerance for the linear part of an isometry.
inline constexpr double kOrthoEps = 1e-12;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point a, Point b) = default;
};

bool IsFinite(Point p);

double Distance(Point a, Point b);
double Norm(Point p);

// |a - b| <= eps * (1 + max(|a|, |b|)).
bool NearlyEqual(double a, double b, double eps = kGeoEps);

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Point operator*(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
            c * o.b + d * o.d};
  }
  Mat2 Transposed() const { return {a, c, b, d}; }
  double Determinant() const { return a * d - b * c; }
};

// p -> linear * p + shift, with an orthogonal linear part.
class Isometry {
 public:
  // Identity.
  Isometry() = default;

  // Throws Error(kInvalidArgument) unless `linear` is orthogonal within
  // kOrthoEps entrywise.
  Isometry(const Mat2& linear, Point shift);

  static Isometry Identity() { return {}; }
  static Isometry Translation(Point shift);
  // Counterclockwise rotation by `angle` radians about `center`.
  static Isometry Rotation(double angle, Point center = {});
  // Reflection across the line through `through` with direction angle
  // `line_angle`.
  static Isometry Reflection(double line_angle, Point through = {});

  const Mat2& linear() const { return linear_; }
  Point shift() const { return shift_; }

  Point Apply(Point p) const { return linear_ * p + shift_; }
  Point operator()(Point p) const { return Apply(p); }

  bool IsReflection() const { return linear_.Determinant() < 0.0; }

  // (this * other)(p) = this(other(p)).
  Isometry Compose(const Isometry& other) const;
  Isometry Inverse() const;

 private:
  Mat2 linear_;
  Point shift_;
};

// Free-function spelling of Isometry::Apply.
inline Point ApplyIsometry(const Isometry& g, Point p) { return g.Apply(p); }

// Polar angle about the origin, normalized to [0, 2*pi). Angles within
// kGeoEps below 2*pi snap to 0.
double PolarAngle(Point p);

enum class Half { kMinus, kPlus };

struct Wedge {
  int fold = 2;    // M
  int sector = 0;  // m in [0, M)
  Half half = Half::kMinus;

  friend bool operator==(const Wedge&, const Wedge&) = default;
};

// Sector of `p` about the origin for an M-fold rotation. Sector m covers
// polar angles [m*2pi/M, (m+1)*2pi/M); its lower half up to and including the
// bisector is kMinus. Throws Error(kInvalidArgument) at the origin, where the
// angle is undefined (the center has the full group as stabilizer), and for
// M < 2.
Wedge ClassifyWedge(Point p, int fold);

}  // namespace symlife

#endif  // SYMLIFE_GEOMETRY_H_
