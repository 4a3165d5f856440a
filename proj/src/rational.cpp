#include "modr/rational.hpp"

#include "modr/errors.hpp"

#include <algorithm>
#include <cctype>

namespace modr {

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  if (body.empty() ||
      !std::all_of(body.begin(), body.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError("malformed rational '" + std::string(whole) + "'");
  std::string text(digits);
  if (text.front() == '+')
    text.erase(0, 1);
  return Integer(text);
}

} // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw InputError("malformed rational '" + std::string(text) + "'");
  const Integer den = parse_integer(den_text, text);
  if (den == 0)
    throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational &value) { return value.str(); }

} // namespace modr
