#include "proxtri/rational.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

namespace proxtri {
namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long exponent) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 10, exponent);
  return out;
}

}  // namespace

std::optional<Rational> try_parse_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = text.substr(e + 1);
    text = text.substr(0, e);
    if (exp_text.empty()) return std::nullopt;
    bool exp_negative = false;
    if (exp_text.front() == '+' || exp_text.front() == '-') {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (exp_text.empty() || !all_digits(exp_text) || exp_text.size() > 6) return std::nullopt;
    long magnitude = 0;
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), magnitude);
    exponent = exp_negative ? -magnitude : magnitude;
  }

  std::string_view whole = text;
  std::string_view fraction;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    fraction = text.substr(dot + 1);
  }
  if (whole.empty() && fraction.empty()) return std::nullopt;
  if (!all_digits(whole) || !all_digits(fraction)) return std::nullopt;

  std::string digits;
  digits.reserve(whole.size() + fraction.size());
  digits.append(whole);
  digits.append(fraction);
  if (digits.empty()) return std::nullopt;

  mpz_class mantissa(digits, 10);
  exponent -= static_cast<long>(fraction.size());

  Rational out;
  if (exponent >= 0) {
    out = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    out = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    out.canonicalize();
  }
  if (negative) out = -out;
  return out;
}

std::optional<Rational> try_parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return try_parse_decimal(text);

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational out(mpz_class(std::string(num), 10), d);
  out.canonicalize();
  if (negative) out = -out;
  return out;
}

std::string to_exact_string(const Rational& value) {
  mpz_class den = value.get_den();
  unsigned long twos = 0;
  unsigned long fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return value.get_str(10);

  const unsigned long places = std::max(twos, fives);
  if (places == 0) return value.get_num().get_str(10);

  // value * 10^places is an integer.
  mpz_class scaled = value.get_num() * pow10(places) / value.get_den();
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.get_str(10);
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, 1, '.');
  if (negative) digits.insert(0, 1, '-');
  return digits;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace proxtri
