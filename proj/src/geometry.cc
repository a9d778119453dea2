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

#include "symlife/geometry.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "symlife/error.h"

namespace symlife {

bool IsFinite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double Norm(Point p) { return std::hypot(p.x, p.y); }

bool NearlyEqual(double a, double b, double eps) {
  return std::abs(a - b) <= eps * (1.0 + std::max(std::abs(a), std::abs(b)));
}

Isometry::Isometry(const Mat2& linear, Point shift)
    : linear_(linear), shift_(shift) {
  const Mat2 gram = linear * linear.Transposed();
  const bool orthogonal = std::abs(gram.a - 1.0) <= kOrthoEps &&
                          std::abs(gram.d - 1.0) <= kOrthoEps &&
                          std::abs(gram.b) <= kOrthoEps &&
                          std::abs(gram.c) <= kOrthoEps;
  if (!orthogonal || !IsFinite(shift)) {
    throw Error(ErrorCode::kInvalidArgument,
                "isometry linear part is not orthogonal");
  }
}

Isometry Isometry::Translation(Point shift) { return Isometry(Mat2{}, shift); }

Isometry Isometry::Rotation(double angle, Point center) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Mat2 r{c, -s, s, c};
  return Isometry(r, center - r * center);
}

Isometry Isometry::Reflection(double line_angle, Point through) {
  const double c = std::cos(2.0 * line_angle);
  const double s = std::sin(2.0 * line_angle);
  const Mat2 f{c, s, s, -c};
  return Isometry(f, through - f * through);
}

Isometry Isometry::Compose(const Isometry& other) const {
  Isometry out;
  out.linear_ = linear_ * other.linear_;
  out.shift_ = linear_ * other.shift_ + shift_;
  return out;
}

Isometry Isometry::Inverse() const {
  Isometry out;
  out.linear_ = linear_.Transposed();
  out.shift_ = -1.0 * (out.linear_ * shift_);
  return out;
}

double PolarAngle(Point p) {
  double theta = std::atan2(p.y, p.x);
  if (theta < 0.0) theta += kTwoPi;
  if (theta >= kTwoPi - kGeoEps) theta = 0.0;
  return theta;
}

Wedge ClassifyWedge(Point p, int fold) {
  if (fold < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "wedge fold count must be >= 2, got " + std::to_string(fold));
  }
  if (Norm(p) <= kGeoEps) {
    throw Error(ErrorCode::kInvalidArgument,
                "center point has full stabilizer: polar angle undefined");
  }
  const double span = kTwoPi / fold;
  const double theta = PolarAngle(p);
  int sector = static_cast<int>(std::floor(theta / span));
  // Angles on (or within tolerance below) a sector boundary start the next
  // sector.
  if ((sector + 1) * span - theta <= kGeoEps) ++sector;
  sector = std::clamp(sector, 0, fold);
  double offset = theta - sector * span;
  if (sector == fold) {
    sector = 0;
    offset = 0.0;
  }
  offset = std::max(offset, 0.0);
  const Half half = offset <= 0.5 * span + kGeoEps ? Half::kMinus : Half::kPlus;
  return Wedge{fold, sector, half};
}

}  // namespace symlife
