#include "serendipity/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace serendipity {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_integer_token(num))
    throw std::invalid_argument("not a rational: '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("not a rational: '" + text + "'");
    const Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    Rational q(Integer(num), d);
    q.canonicalize();
    return q;
  }
  return Rational{Integer(num)};
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace serendipity
