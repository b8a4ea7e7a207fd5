#include "proxtri/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "proxtri/error.hpp"

namespace proxtri {
namespace {

thread_local PredicateStats stats;

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Bounds cover the rounding of the cached doubles (within one ulp of the
// rational) plus every subsequent floating-point operation. The constants
// are several times the worst-case operation count.
constexpr double kOrientBound = 32 * kUnitRoundoff;
constexpr double kIncircleBound = 128 * kUnitRoundoff;
// Below this the cached doubles may be subnormal and lose relative accuracy.
constexpr double kTinyMagnitude = 1e-200;

int sign_of(double v) { return (v > 0) - (v < 0); }

}  // namespace

Rational squared_distance(const Point& a, const Point& b) {
  Rational dx = a.x() - b.x();
  Rational dy = a.y() - b.y();
  return dx * dx + dy * dy;
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << to_exact_string(p.x()) << ", " << to_exact_string(p.y()) << ')';
}

int orientation_exact(const Point& a, const Point& b, const Point& c) {
  Rational det = (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
  return sgn(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& d) {
  Rational adx = a.x() - d.x(), ady = a.y() - d.y();
  Rational bdx = b.x() - d.x(), bdy = b.y() - d.y();
  Rational cdx = c.x() - d.x(), cdy = c.y() - d.y();
  Rational alift = adx * adx + ady * ady;
  Rational blift = bdx * bdx + bdy * bdy;
  Rational clift = cdx * cdx + cdy * cdy;
  Rational det = alift * (bdx * cdy - bdy * cdx) + blift * (cdx * ady - cdy * adx) +
                 clift * (adx * bdy - ady * bdx);
  return sgn(det);
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  ++stats.orientation_calls;
  const double ax = a.approx_x(), ay = a.approx_y();
  const double bx = b.approx_x(), by = b.approx_y();
  const double cx = c.approx_x(), cy = c.approx_y();
  const double left = (bx - ax) * (cy - ay);
  const double right = (by - ay) * (cx - ax);
  const double det = left - right;
  const double magnitude = (std::fabs(bx) + std::fabs(ax)) * (std::fabs(cy) + std::fabs(ay)) +
                           (std::fabs(by) + std::fabs(ay)) * (std::fabs(cx) + std::fabs(ax));
  if (std::isfinite(magnitude) && magnitude > kTinyMagnitude && std::fabs(det) > kOrientBound * magnitude) {
    return static_cast<Orientation>(sign_of(det));
  }
  ++stats.orientation_exact;
  return static_cast<Orientation>(orientation_exact(a, b, c));
}

int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& d) {
  ++stats.incircle_calls;
  const double dx = d.approx_x(), dy = d.approx_y();
  const double adx = a.approx_x() - dx, ady = a.approx_y() - dy;
  const double bdx = b.approx_x() - dx, bdy = b.approx_y() - dy;
  const double cdx = c.approx_x() - dx, cdy = c.approx_y() - dy;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdx * cdy - bdy * cdx) + blift * (cdx * ady - cdy * adx) +
                     clift * (adx * bdy - ady * bdx);

  const double fdx = std::fabs(dx), fdy = std::fabs(dy);
  const double Adx = std::fabs(a.approx_x()) + fdx, Ady = std::fabs(a.approx_y()) + fdy;
  const double Bdx = std::fabs(b.approx_x()) + fdx, Bdy = std::fabs(b.approx_y()) + fdy;
  const double Cdx = std::fabs(c.approx_x()) + fdx, Cdy = std::fabs(c.approx_y()) + fdy;
  const double magnitude = (Adx * Adx + Ady * Ady) * (Bdx * Cdy + Bdy * Cdx) +
                           (Bdx * Bdx + Bdy * Bdy) * (Cdx * Ady + Cdy * Adx) +
                           (Cdx * Cdx + Cdy * Cdy) * (Adx * Bdy + Ady * Bdx);
  if (std::isfinite(magnitude) && magnitude > kTinyMagnitude && std::fabs(det) > kIncircleBound * magnitude) {
    return sign_of(det);
  }
  ++stats.incircle_exact;
  return incircle_exact(a, b, c, d);
}

CircleSide in_circumcircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (orientation(a, b, c) != Orientation::CCW) {
    throw Error(ErrorCode::NotCCW, "in_circumcircle requires a counterclockwise triple");
  }
  const int s = incircle_sign(a, b, c, d);
  if (s > 0) return CircleSide::Inside;
  if (s < 0) return CircleSide::Outside;
  return CircleSide::On;
}

int incircle_sign_perturbed(const Point& a, std::size_t ia, const Point& b, std::size_t ib,
                            const Point& c, std::size_t ic, const Point& d, std::size_t id) {
  if (int s = incircle_sign(a, b, c, d); s != 0) return s;

  // The determinant is linear in each lifted coordinate. The coefficient of
  // a's lift is orient(b, c, d), cyclically for b and c, and d's is
  // -orient(a, b, c). The largest perturbation with a nonzero coefficient
  // decides the sign.
  struct Term {
    std::size_t index;
    int which;
  };
  std::array<Term, 4> terms{{{ia, 0}, {ib, 1}, {ic, 2}, {id, 3}}};
  std::sort(terms.begin(), terms.end(), [](const Term& l, const Term& r) { return l.index < r.index; });
  for (const Term& t : terms) {
    int coefficient = 0;
    switch (t.which) {
      case 0: coefficient = static_cast<int>(orientation(b, c, d)); break;
      case 1: coefficient = static_cast<int>(orientation(c, a, d)); break;
      case 2: coefficient = static_cast<int>(orientation(a, b, d)); break;
      default: coefficient = -static_cast<int>(orientation(a, b, c)); break;
    }
    if (coefficient != 0) return coefficient;
  }
  return 0;
}

PredicateStats predicate_stats() { return stats; }
void reset_predicate_stats() { stats = PredicateStats{}; }

}  // namespace proxtri
