#include "halfint/rational.hpp"

#include "halfint/errors.hpp"

namespace halfint {

std::string rational_to_string(const Rational& r) {
  return r.get_str();  // mpq prints num or num/den, already canonical
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  std::string s(text);
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) fail(Errc::ParseError, "bad character '" + std::string(1, c) + "' in rational '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0) fail(Errc::ParseError, "cannot parse rational '" + s + "'");
  if (r.get_den() == 0) fail(Errc::ParseError, "zero denominator in rational '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace halfint
