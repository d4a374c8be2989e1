#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "causal_implicits/errors.hpp"

namespace causal_implicits {

using Rational = mpq_class;

/// "num/den" in lowest terms, or just "num" for integers.
inline std::string to_string(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return c.get_str();
}

/// Accepts "3", "-3/4" and plain decimals such as "0.125" or "1e-3".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("empty number");
  Rational q;
  if (s.find_first_of(".eE") == std::string::npos) {
    if (q.set_str(s, 10) != 0) throw InputError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
  }
  // Decimal notation: exact conversion of the written digits.
  std::size_t epos = s.find_first_of("eE");
  std::string mantissa = s.substr(0, epos);
  long exponent = 0;
  if (epos != std::string::npos) {
    try {
      exponent = std::stol(s.substr(epos + 1));
    } catch (const std::exception&) {
      throw InputError("malformed decimal '" + s + "'");
    }
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.erase(0, 1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_point) throw InputError("malformed decimal '" + s + "'");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("malformed decimal '" + s + "'");
    }
  }
  if (digits.empty()) throw InputError("malformed decimal '" + s + "'");
  mpz_class num(digits, 10);
  long scale = exponent - frac_digits;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational result = scale < 0 ? Rational(num, pow10) : Rational(num * pow10);
  result.canonicalize();
  return negative ? Rational(-result) : result;
}

}  // namespace causal_implicits
