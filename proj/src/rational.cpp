#include "semiclass/rational.hpp"

#include <cctype>

namespace semiclass {

std::string rat_to_string(const Rational& q) {
  return q.get_str();  // GMP canonical form is exactly "p" or "p/q"
}

Rational rat_from_string(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](std::size_t at, const std::string& msg) -> void {
    throw ParseError(at, "rational: " + msg + " at column " + std::to_string(at + 1));
  };
  if (n == 0) fail(0, "empty input");
  if (text[i] == '+' || text[i] == '-') ++i;
  std::size_t num_start = i;
  while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_start) fail(i, "expected digits");
  if (i < n && text[i] == '/') {
    ++i;
    std::size_t den_start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start) fail(i, "expected denominator digits");
    bool all_zero = true;
    for (std::size_t k = den_start; k < i; ++k)
      if (text[k] != '0') all_zero = false;
    if (all_zero) fail(den_start, "zero denominator");
  }
  if (i != n) fail(i, "unexpected character");

  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace semiclass
