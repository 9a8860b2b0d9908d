#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "cake/error.hpp"

namespace cake {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" with optional leading '-'. Decimals and exponents are
// rejected so that files stay exact.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw DomainError("not an exact rational: '" + std::string(text) + "'");
  if (den.find_first_not_of('0') == std::string_view::npos)
    throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  Rational r(std::string(text), 10);
  r.canonicalize();
  return r;
}

// Always "p/q", integers included ("1/1", "0/1").
inline std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace cake
