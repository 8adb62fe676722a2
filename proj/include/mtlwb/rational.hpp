#ifndef MTLWB_RATIONAL_HPP
#define MTLWB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace mtlwb {

/// Exact truth values. Chain labels and model cells are always rationals in [0,1].
using Rational = boost::multiprecision::cpp_rational;

/// Parses `p/q` or `p` (non-negative decimal integers, q > 0).
Rational parse_rational(std::string_view text);

/// Canonical text: `0`, `1`, `p/q` in lowest terms.
std::string to_string(const Rational& r);

/// Rationals p/q in [0,1] with 1 <= q <= max_denominator, sorted and unique.
std::vector<Rational> rational_grid(unsigned max_denominator);

}  // namespace mtlwb

#endif  // MTLWB_RATIONAL_HPP
