#include "quot/rational.hpp"

#include "quot/errors.hpp"

namespace quot {

Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw Error("rat_parse: bad rational literal '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    return x.get_str();
}

Rat Ring<Rat>::inv(const Rat& x) {
    if (sgn(x) == 0)
        throw DivisionByNonUnit("rational inverse of zero");
    return Rat(1) / x;
}

Rat rat_pow(const Rat& x, long k) {
    if (k < 0)
        return rat_pow(Ring<Rat>::inv(x), -k);
    Rat acc(1), base = x;
    while (k > 0) {
        if (k & 1)
            acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rat binomial(long n, long k) {
    if (k < 0)
        return Rat(0);
    Rat acc(1);
    for (long i = 0; i < k; ++i) {
        acc *= Rat(n - i);
        acc /= Rat(i + 1);
    }
    return acc;
}

Rat factorial(long n) {
    Rat acc(1);
    for (long i = 2; i <= n; ++i)
        acc *= Rat(i);
    return acc;
}

} // namespace quot
