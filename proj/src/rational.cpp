#include "poincare/rational.hpp"

#include <cctype>
#include <string>

#include "poincare/error.hpp"

namespace poincare {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw Error("malformed rational: '" + std::string(text) + "'");
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer numerator(n, 10);
  Integer denominator(std::string(den), 10);
  if (denominator == 0) throw Error("zero denominator: '" + std::string(text) + "'");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

}  // namespace poincare
