#ifndef HORACIRC_RATIONAL_HPP
#define HORACIRC_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace horacirc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Largest magnitude below which every integer is exactly representable
/// as a double (2^53).
inline const Int& float_exact_limit() {
  static const Int limit = Int(1) << 53;
  return limit;
}

inline bool fits_float_exact(const Rat& value) {
  return abs(value) <= Rat(float_exact_limit());
}

/// Rational-to-double conversion gated on magnitude, so oversized inputs
/// surface as an error instead of silently losing digits.
inline double to_double_checked(const Rat& value) {
  if (!fits_float_exact(value)) {
    throw std::domain_error("entries exceed float-exact range; use exact path");
  }
  return value.convert_to<double>();
}

/// Quotient of an exactly divisible pair. A nonzero remainder means a broken
/// invariant in the caller, not bad input.
inline Int exact_div(const Int& numerator, const Int& denominator, const char* context) {
  if (denominator == 0) {
    throw std::logic_error(std::string(context) + ": zero divisor");
  }
  Int quotient;
  Int remainder;
  divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw std::logic_error(std::string(context) + ": non-exact division");
  }
  return quotient;
}

inline std::string to_string(const Int& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

/// Prints as "n" for integers and "n/d" otherwise; round-trips through
/// parse_rational without loss.
inline std::string to_string(const Rat& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

namespace detail {

inline bool all_digits(const std::string& text, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  for (std::size_t i = begin; i < end; ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

inline std::string strip(const std::string& text) {
  std::size_t begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

}  // namespace detail

/// Accepts an optional sign followed by digits.
inline Int parse_integer(const std::string& text) {
  const std::string s = detail::strip(text);
  std::size_t begin = 0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) begin = 1;
  if (!detail::all_digits(s, begin, s.size())) {
    throw std::invalid_argument("malformed integer: '" + text + "'");
  }
  Int value(s.substr(begin));
  if (!s.empty() && s[0] == '-') value = -value;
  return value;
}

/// Accepts "i", "i/d" (d positive digits), or a plain decimal "i.f".
inline Rat parse_rational(const std::string& text) {
  const std::string s = detail::strip(text);
  const std::size_t slash = s.find('/');
  const std::size_t dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      if (dot != std::string::npos) throw std::invalid_argument("mixed forms");
      if (!detail::all_digits(s, slash + 1, s.size())) throw std::invalid_argument("bad denominator");
      const Int num = parse_integer(s.substr(0, slash));
      const Int den(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rat(num, den);
    }
    if (dot != std::string::npos) {
      if (!detail::all_digits(s, dot + 1, s.size())) throw std::invalid_argument("bad fraction digits");
      const Int whole = parse_integer(s.substr(0, dot));
      const std::string frac = s.substr(dot + 1);
      Int scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const bool negative = !s.empty() && s[0] == '-';
      const Int whole_magnitude = abs(whole);
      const Rat magnitude = Rat(whole_magnitude) + Rat(Int(frac), scale);
      return negative ? -magnitude : magnitude;
    }
    return Rat(parse_integer(s));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
}

inline std::vector<Rat> to_rationals(const std::vector<Int>& values) {
  std::vector<Rat> out;
  out.reserve(values.size());
  for (const Int& v : values) out.emplace_back(v);
  return out;
}

}  // namespace horacirc

#endif  // HORACIRC_RATIONAL_HPP
