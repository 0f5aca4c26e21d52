#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cluscol {

// The composed clustering bounds outgrow 64-bit integers even for small
// parameters, and every bound is exact: no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;

inline bool fitsInt64(const BigInt& x) {
    return x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max();
}

}  // namespace cluscol
