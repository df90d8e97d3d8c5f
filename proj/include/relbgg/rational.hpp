#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relbgg {

/// Exact rational number. Expression templates are disabled so that `auto`
/// behaves like an ordinary value type.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

/// Converts an integral rational to a machine integer; throws when the value
/// is not an integer or does not fit.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw std::domain_error("rational " + q.str() + " is not an integer");
  BigInt n = boost::multiprecision::numerator(q);
  if (n > BigInt(INT64_MAX) || n < BigInt(INT64_MIN))
    throw std::overflow_error("integer " + n.str() + " does not fit in 64 bits");
  return n.convert_to<std::int64_t>();
}

/// "3", "-1/2".
inline std::string to_string(const Rational& q) { return q.str(); }

/// Parses "3", "-2", "1/2". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty number");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw std::invalid_argument("malformed number '" + s + "'");
    return Rational(BigInt(s[0] == '+' ? s.substr(1) : s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed number '" + s + "'");
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

}  // namespace relbgg
