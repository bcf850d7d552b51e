#include "rho/rational.hpp"

#include <fmt/format.h>

#include <cctype>

namespace rho {

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    size_t i = from;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i >= to) return false;
    for (; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = is_int(text, 0, text.size());
  } else {
    ok = is_int(text, 0, slash) && is_int(text, slash + 1, text.size()) &&
         text.find('/', slash + 1) == std::string::npos;
  }
  if (!ok) throw Error(fmt::format("malformed rational '{}'", text));
  Rational q(text);
  if (q.get_den() == 0) throw Error(fmt::format("zero denominator in '{}'", text));
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace rho
