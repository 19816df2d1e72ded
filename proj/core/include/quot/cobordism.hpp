#pragma once

#include "quot/universal.hpp"

namespace quot {

// P_ell = (ell*h / g(ell*h)) * dh/dq, where h = reversion(g) solves q = h/g(h).
// ell = 1 recovers q * dh/dq shifted; ell = -1 enters the A-series.
Series<Jet> p_ell(const Series<Jet>& g, const Series<Jet>& h, long ell);

struct CobordismData {
    Series<Jet> h = UniversalBundle::unset(); // reversion: q = h/g(h)
    Series<Jet> P = UniversalBundle::unset(); // dh/dq
    Series<Jet> A = UniversalBundle::unset(); // (-1/q) P_{-1} / P^2
    Series<Jet> Z = UniversalBundle::unset(); // sw q^{-betaK} A^{K2-betaK}
};

// g must be a series in x with constant coefficient exactly 1; its higher
// coefficients may carry jets. Throws BadConstantTerm otherwise.
CobordismData cobordism_series(const Series<Jet>& g, long K2, long betaK, const Rat& sw,
                               long trunc);

// The closed form of the A-series for g = 1 + y x^2:
// A = (1 + s) s / 2 with s = sqrt(1 - 4 q^2 y).
Series<Jet> pontryagin_A(const Jet& y, long trunc);

} // namespace quot
