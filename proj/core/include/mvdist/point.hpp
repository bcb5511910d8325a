#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mvdist/scalar.hpp"

namespace mvdist {

/// A point (or direction) with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}

  std::size_t size() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& c) { return sgn(c) == 0; });
  }

  Point& operator+=(const Point& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Point& operator*=(const Scalar& t) {
    for (auto& c : coords_) c *= t;
    return *this;
  }

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, const Scalar& t) { return a *= t; }
  friend Point operator*(const Scalar& t, Point a) { return a *= t; }
  friend Point operator-(Point a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic order; the canonical vertex order of every polytope.
  friend bool operator<(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
  }

 private:
  std::vector<Scalar> coords_;
};

inline Scalar dot(const Point& a, const Point& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Scalar norm2(const Point& a) { return dot(a, a); }

inline Scalar distance2(const Point& a, const Point& b) {
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

/// Cross product of two 3-vectors.
inline Point cross(const Point& a, const Point& b) {
  return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Positive multiple of v with coprime integer coordinates; v must be nonzero.
Point primitive_direction(const Point& v);

std::vector<double> to_doubles(const Point& p);

}  // namespace mvdist
