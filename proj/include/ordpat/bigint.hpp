#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ordpat {

using BigInt = boost::multiprecision::cpp_int;

} // namespace ordpat
