#pragma once

#include <cstddef>

#include "proxtri/point.hpp"

namespace proxtri {

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };
enum class CircleSide { Inside, On, Outside };

/// Sign of det(b - a, c - a), exact. A floating-point filter answers when its
/// error bound allows; otherwise the determinant is evaluated in rationals.
Orientation orientation(const Point& a, const Point& b, const Point& c);

/// Sign of the in-circle determinant: positive when d lies inside the circle
/// through a, b, c taken counterclockwise (negated for a clockwise triple).
int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& d);

/// Exact classification of d against the circle through a, b, c.
/// Throws NotCCW unless orientation(a, b, c) == CCW.
CircleSide in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d);

/// In-circle sign under symbolic perturbation of the lifted coordinate
/// |p|^2 + eps^(rank): the point with the smallest index gets the largest
/// perturbation. Never zero when a, b, c are not collinear. The indices
/// must be distinct.
int incircle_sign_perturbed(const Point& a, std::size_t ia, const Point& b, std::size_t ib,
                            const Point& c, std::size_t ic, const Point& d, std::size_t id);

/// Unfiltered rational evaluations, exposed for testing the filters.
int orientation_exact(const Point& a, const Point& b, const Point& c);
int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d);

/// Counters for how often the filters had to fall back to rationals.
struct PredicateStats {
  std::size_t orientation_calls = 0;
  std::size_t orientation_exact = 0;
  std::size_t incircle_calls = 0;
  std::size_t incircle_exact = 0;
};
PredicateStats predicate_stats();
void reset_predicate_stats();

}  // namespace proxtri
