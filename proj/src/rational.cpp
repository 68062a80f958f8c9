#include "kbh/rational.hpp"

#include "kbh/errors.hpp"

#include <cctype>

namespace kbh {

Q parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational");
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool seen_slash = false, digits = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !seen_slash && digits) {
      seen_slash = true;
      digits = false;
    } else {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!digits) throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Q q;
  if (q.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (seen_slash && sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string format_rational(const Q& q) { return q.get_str(); }

}  // namespace kbh
