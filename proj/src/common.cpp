#include "dyckt/common.hpp"

namespace dyckt {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

Int factorial(int n)
{
    if (n < 0)
        throw IndexOutOfRange("factorial of negative argument");
    Int r = 1;
    for (int i = 2; i <= n; ++i)
        r = checked_mul(r, i);
    return r;
}

Int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r = checked_mul(r, n - k + i);
        r /= i;  // exact: r is a running binomial coefficient
    }
    return r;
}

}  // namespace dyckt
