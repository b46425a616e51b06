#include "gpla/rational.hpp"

#include <cctype>

namespace gpla {

std::optional<Rat> parse_rat(const std::string& text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&](Int& out) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return true;
  };
  Int num, den = 1;
  if (!digits(num)) return std::nullopt;
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(p[i]);
  }
  out += ")";
  return out;
}

}  // namespace gpla
