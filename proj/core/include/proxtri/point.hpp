#pragma once

#include <compare>
#include <ostream>

#include "proxtri/rational.hpp"

namespace proxtri {

/// Exact planar point. A double approximation of each coordinate is cached
/// for the floating-point predicate filters; it never decides a result alone.
class Point {
 public:
  Point() : Point(Rational(0), Rational(0)) {}
  Point(Rational x, Rational y)
      : x_(std::move(x)), y_(std::move(y)), approx_x_(x_.get_d()), approx_y_(y_.get_d()) {}

  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  double approx_x() const noexcept { return approx_x_; }
  double approx_y() const noexcept { return approx_y_; }

  friend bool operator==(const Point& a, const Point& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

  /// Lexicographic order, x first.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (int c = cmp(a.x_, b.x_); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = cmp(a.y_, b.y_);
    if (c == 0) return std::strong_ordering::equal;
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Rational x_;
  Rational y_;
  double approx_x_;
  double approx_y_;
};

Rational squared_distance(const Point& a, const Point& b);

std::ostream& operator<<(std::ostream& os, const Point& p);

}  // namespace proxtri
