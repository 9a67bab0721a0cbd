#include "branchinv/rational.hpp"

#include <cctype>

#include "branchinv/errors.hpp"

namespace branchinv {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Coefficient parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? "1" : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ) {
    throw BranchError(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  Integer d = to_integer(den);
  if (d == 0) throw BranchError(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Coefficient c(to_integer(num), d);
  c.canonicalize();
  return c;
}

std::string to_string(const Coefficient& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_integer(const Coefficient& c) { return c.get_den() == 1; }

}  // namespace branchinv
