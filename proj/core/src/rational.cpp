#include "odra/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace odra {

namespace {

Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// "123", "0.04", "1.5e-3" -> exact rational; throws on anything else.
Rational parse_decimal(const std::string& text) {
  std::string mantissa = text;
  long exponent = 0;
  auto epos = text.find_first_of("eE");
  if (epos != std::string::npos) {
    mantissa = text.substr(0, epos);
    const std::string expstr = text.substr(epos + 1);
    if (expstr.empty()) throw std::invalid_argument("malformed exponent in '" + text + "'");
    size_t idx = 0;
    exponent = std::stol(expstr, &idx);
    if (idx != expstr.size()) throw std::invalid_argument("malformed exponent in '" + text + "'");
  }
  std::string digits = mantissa;
  unsigned frac_digits = 0;
  auto dot = mantissa.find('.');
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    frac_digits = static_cast<unsigned>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) throw std::invalid_argument("malformed number '" + text + "'");
  Rational value(Integer(digits), pow10(frac_digits));
  if (exponent > 0)
    value *= Rational(pow10(static_cast<unsigned>(exponent)));
  else if (exponent < 0)
    value /= Rational(pow10(static_cast<unsigned>(-exponent)));
  return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.erase(s.begin());
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational value;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational '" + text + "'");
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    value = Rational(Integer(num), d);
  } else {
    value = parse_decimal(s);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  if (denominator(value) == 1)
    out << numerator(value);
  else
    out << numerator(value) << "/" << denominator(value);
  return out.str();
}

std::string rational_to_decimal(const Rational& value, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (value == 0) {
    std::string s = "0";
    if (significant_digits > 1) s += "." + std::string(significant_digits - 1, '0');
    return s;
  }
  const bool negative = value < 0;
  Rational v = negative ? Rational(-value) : value;

  // decimal exponent e with 10^e <= v < 10^(e+1)
  long e = 0;
  Rational probe = v;
  while (probe >= 10) {
    probe /= 10;
    ++e;
  }
  while (probe < 1) {
    probe *= 10;
    --e;
  }

  // round v * 10^(digits-1-e) to the nearest integer
  const long shift = significant_digits - 1 - e;
  Rational scaled = v;
  if (shift >= 0)
    scaled *= Rational(pow10(static_cast<unsigned>(shift)));
  else
    scaled /= Rational(pow10(static_cast<unsigned>(-shift)));
  Integer rounded = (numerator(scaled) * 2 + denominator(scaled)) / (denominator(scaled) * 2);

  std::string digits = rounded.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    // rounding carried over (e.g. 9.99 -> 10.0)
    ++e;
    digits.pop_back();
  }

  std::string out;
  if (e >= 0) {
    if (e + 1 >= static_cast<long>(digits.size())) {
      out = digits + std::string(e + 1 - digits.size(), '0');
    } else {
      out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
    }
  } else {
    out = "0." + std::string(-e - 1, '0') + digits;
  }
  return negative ? "-" + out : out;
}

double to_double(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace odra
