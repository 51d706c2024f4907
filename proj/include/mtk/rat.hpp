#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace mtk {

/// Exact rational scalar. All measure values, norms and integral bounds in
/// this library are rationals; there is no floating point anywhere, so every
/// identity and inequality is checked with zero tolerance.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders canonically: "n" when the denominator is 1, "n/d" otherwise.
std::string rat_str(const Rat& q);

/// Parses "n" or "n/d" (optional leading '-'). Decimal points are rejected,
/// input stays exact by construction.
Rat parse_rat(std::string_view text);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

/// 2^-n as an exact rational, n >= 0.
Rat dyadic(unsigned n);

} // namespace mtk
