#include "evb/rational.hpp"

#include "evb/error.hpp"

#include <cctype>

namespace evb {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto num = text.substr(0, slash);
  if (!is_integer_literal(num)) throw InvalidInput("not a rational number: \"" + std::string(text) + "\"");
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  auto den = text.substr(slash + 1);
  if (!is_integer_literal(den)) throw InvalidInput("not a rational number: \"" + std::string(text) + "\"");
  Integer d = parse_integer(den);
  if (d == 0) throw InvalidInput("zero denominator: \"" + std::string(text) + "\"");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace evb
