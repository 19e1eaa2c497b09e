#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace flowtype {

// Exact rational arithmetic everywhere; no floats cross any public surface.
// Expression templates are off so arithmetic yields plain values that work
// with std::min/std::max and std::map keys.
using Rat = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parses "p/q" or "p" (optionally signed). Throws ParseError on junk or q == 0.
Rat parse_rational(const std::string& text);

// Lowest terms, "p/q" with the "/q" omitted when q == 1.
std::string format_rational(const Rat& value);

} // namespace flowtype
