#include "mtlwb/rational.hpp"

#include <algorithm>
#include <cctype>

#include "mtlwb/error.hpp"

namespace mtlwb {
namespace {

boost::multiprecision::cpp_int parse_natural(std::string_view digits, std::string_view whole) {
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(Errc::format_error, "malformed rational '" + std::string(whole) + "'");
  }
  return boost::multiprecision::cpp_int(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_natural(text, text));
  auto num = parse_natural(text.substr(0, slash), text);
  auto den = parse_natural(text.substr(slash + 1), text);
  if (den == 0) throw Error(Errc::format_error, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

std::vector<Rational> rational_grid(unsigned max_denominator) {
  if (max_denominator == 0) throw Error(Errc::invalid_parameter, "grid denominator must be positive");
  std::vector<Rational> out;
  for (unsigned q = 1; q <= max_denominator; ++q) {
    for (unsigned p = 0; p <= q; ++p) out.emplace_back(p, q);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mtlwb
