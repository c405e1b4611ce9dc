#include "graphsep/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace graphsep {

std::string rat_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

} // namespace

Rational rat_from_string(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const Int num{std::string(num_part)};
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  std::string_view den_part = text.substr(slash + 1);
  if (!valid_integer_token(den_part)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const Int den{std::string(den_part)};
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

int sign(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

} // namespace graphsep
