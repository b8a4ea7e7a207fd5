#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace proxtri {

/// Exact rational number. Every coordinate and every derived quantity
/// (circumcenters, intersection points, squared radii) is carried in this type.
using Rational = mpq_class;

/// Parses a decimal literal such as "-12", "3.25", ".5" or "1.5e-3" into the
/// exact rational it denotes. No binary floating-point intermediate is used.
std::optional<Rational> try_parse_decimal(std::string_view text);

/// Like try_parse_decimal but also accepts "p/q" fractions, which is how
/// non-terminating values are written back out.
std::optional<Rational> try_parse_rational(std::string_view text);

/// Exact textual form: a terminating decimal when the denominator has only
/// the prime factors 2 and 5, otherwise "p/q".
std::string to_exact_string(const Rational& value);

/// Nearest-double approximation for display and floating-point filters.
double to_double(const Rational& value);

/// Sign as -1, 0 or +1.
inline int sign(const Rational& value) { return sgn(value); }

}  // namespace proxtri
