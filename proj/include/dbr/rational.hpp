#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dbr {

// Exact arithmetic only. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; nothing in
// this project is allowed to touch floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown on malformed inputs (files, CLI arguments, out-of-range indices).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rat parse_rat(const std::string& text);

// Renders as "p" or "p/q", matching the instance-file syntax.
std::string format_rat(const Rat& value);

Rat rat_factorial(int n);

} // namespace dbr
