#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace whalg {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

}  // namespace whalg
