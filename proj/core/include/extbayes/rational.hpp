#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace extbayes {

// Exact arbitrary-precision rational. Every probability in the engine is one
// of these; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Canonical serialization: "p/q" in lowest terms, or "k" when the value is
// an integer. This is the form used in all file formats and reports.
std::string rational_to_string(const Rational& r);

// Inverse of rational_to_string. Accepts an optional leading '-', an integer,
// or "p/q" with positive q. Throws ScenarioError on anything else.
Rational parse_rational(std::string_view text);

}  // namespace extbayes
