#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace levy {

/// Arbitrary-precision signed integer. Census counts double every
/// subdivision step, so fixed-width counters overflow near depth 60;
/// everything that can grow uses BigInt from the start.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace levy
