#pragma once

#include <vector>

#include "quot/series.hpp"

namespace quot {

// Dense polynomial in q, coefficient of q^i at index i, no trailing zeros.
using Poly = std::vector<Rat>;

long poly_degree(const Poly& p); // -1 for the zero polynomial
Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b); // monic gcd

// q^shift * num(q) / den(q), reduced, den(0) = 1.
struct RationalFn {
    Poly num, den;
    long shift = 0;
};

Series<Rat> expand(const RationalFn& fn, long trunc);

struct FitRequest {
    Series<Rat> series = Series<Rat>::zeroes(0, 1, Rat(0));
    long degNum = 0;
    long degDen = 0;
    long surplus = 5; // verification coefficients beyond the solve window
};

struct FitResult {
    bool found = false;
    RationalFn fn;             // valid when found
    long boundsNum = 0, boundsDen = 0; // echoed bounds (NoFit certificate)
};

// Exact fit with the lexicographically minimal (degDen, degNum) within the
// bounds; every provided coefficient (including the surplus window) must be
// reproduced. Throws InsufficientData when the window is too small.
FitResult fit_rational(const FitRequest& req);

// Multiplicity of (1 - q) in the reduced denominator.
long pole_order_at_one(const RationalFn& fn);

// True when the denominator is c (1 - q)^k.
bool all_poles_at_one(const RationalFn& fn);

} // namespace quot
