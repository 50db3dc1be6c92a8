#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qsymp {

// Exact arbitrary-precision rationals; no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Renders "3", "-1/2", ... (denominator omitted when 1).
inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace qsymp
