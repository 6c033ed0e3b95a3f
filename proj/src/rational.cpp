#include "schroeter/rational.hpp"

#include <cctype>

#include "schroeter/error.hpp"

namespace schroeter {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw GeometryError(ErrorKind::ZeroDenominator, "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int parse_int(std::string_view text) {
  std::string_view s = trim(text);
  if (!is_integer_literal(s)) {
    throw GeometryError(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) {
    throw GeometryError(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return make_rat(num, den);
}

std::string to_string(const Rat& r) { return r.get_str(10); }
std::string to_string(const Int& i) { return i.get_str(10); }

}  // namespace schroeter
