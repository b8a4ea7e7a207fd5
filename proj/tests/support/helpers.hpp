#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "proxtri/delaunay.hpp"
#include "proxtri/error.hpp"
#include "proxtri/rational.hpp"

inline proxtri::Point P(long x, long y) { return proxtri::Point(proxtri::Rational(x), proxtri::Rational(y)); }

inline proxtri::Point P(int x, int y) { return P(static_cast<long>(x), static_cast<long>(y)); }

inline proxtri::Point P(const char* x, const char* y) {
  return proxtri::Point(*proxtri::try_parse_rational(x), *proxtri::try_parse_rational(y));
}

inline std::vector<proxtri::Point> pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<proxtri::Point> out;
  for (auto [x, y] : xy) out.push_back(P(x, y));
  return out;
}

inline proxtri::SiteSet sites(std::initializer_list<std::pair<long, long>> xy) { return proxtri::SiteSet(pts(xy)); }

#define CHECK_ERROR_CODE(expr, expected_code)                     \
  do {                                                           \
    bool thrown_ = false;                                        \
    try {                                                        \
      (void)(expr);                                              \
    } catch (const proxtri::Error& e_) {                         \
      thrown_ = true;                                            \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());    \
    }                                                            \
    CHECK_MESSAGE(thrown_, "expected " #expected_code);          \
  } while (false)

/// Random rational point on a grid of step 1/denominator inside [0, span).
inline proxtri::Point random_point(std::mt19937_64& rng, long span, long denominator = 1) {
  std::uniform_int_distribution<long> d(0, span * denominator - 1);
  proxtri::Rational x(d(rng), denominator), y(d(rng), denominator);
  x.canonicalize();
  y.canonicalize();
  return proxtri::Point(x, y);
}
