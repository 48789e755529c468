#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace trunclab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt factorial_exact(unsigned k) {
    BigInt out = 1;
    for (unsigned i = 2; i <= k; ++i) out *= i;
    return out;
}

inline BigInt binomial_exact(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (unsigned i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

}  // namespace trunclab
