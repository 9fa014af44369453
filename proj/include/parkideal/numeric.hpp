#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <vector>

namespace parkideal {

// All arithmetic in this library is exact: big integers and big rationals
// backed by GMP. No floating point anywhere. Expression templates are off:
// every operation yields a plain value, so deduced types never dangle.
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/** Exact integer power with the 0^0 = 1 convention. */
inline Int int_pow(Int base, unsigned long exp)
{
    Int result = 1;
    while (exp > 0)
    {
        if (exp & 1)
            result *= base;
        base *= base;
        exp >>= 1;
    }
    return result;
}

/** Binomial coefficient C(n, k), zero for k < 0 or k > n. */
inline Int binomial(long n, long k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i)
    {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

inline int sign_of(const Rat& x)
{
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

}  // namespace parkideal
