#include "flowtype/rational.hpp"

#include "flowtype/errors.hpp"

namespace flowtype {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

} // namespace

Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) throw ParseError("bad rational: '" + text + "'");
    return Rat(boost::multiprecision::cpp_int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    throw ParseError("bad rational: '" + text + "'");
  boost::multiprecision::cpp_int d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  return Rat(boost::multiprecision::cpp_int(num), d);
}

std::string format_rational(const Rat& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

} // namespace flowtype
